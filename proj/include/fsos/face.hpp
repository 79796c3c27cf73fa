// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_FACE_HPP
#define FSOS_FACE_HPP

#include <vector>

#include "fsos/bracket.hpp"
#include "fsos/params.hpp"

namespace fsos {

// A face carries four heights read clockwise from the north-west corner:
//
//      a --- b        W( a  b | u )
//      |     |           d  c
//      d --- c
//
// Heights are reals with integer differences; admissibility constrains the
// differences only, so a common real offset is allowed everywhere.
struct HeightQuad {
  double a, b, d, c;
};

// Level-1 face weight.  Inadmissible configurations give exactly 0.
Cplx face_weight1(const HeightQuad& q, Cplx u, const ModelParams& P);

// (k,1) fusion: the a->b top path is fixed (canonical staircase), the bottom
// path is summed.  `top_path` overrides the fixed path for the path
// independence checks; it lists the k-1 intermediate heights.
Cplx face_weight_k1(int k, const HeightQuad& q, Cplx u, const ModelParams& P,
                    const std::vector<double>* top_path = nullptr);

// (k,k) fusion: the b->c right path is fixed, the left column is summed.
Cplx face_weight_kk(int k, const HeightQuad& q, Cplx u, const ModelParams& P,
                    const std::vector<double>* right_path = nullptr);

// All admissible intermediate paths from h0 to h1 in `steps` unit steps.
std::vector<std::vector<double>> unit_paths(double h0, double h1, int steps);

// Maximum pairwise deviation of face_weight_k1 / face_weight_kk over all
// admissible fixed-path choices.
double k1_path_spread(int k, const HeightQuad& q, Cplx u, const ModelParams& P);
double kk_path_spread(int k, const HeightQuad& q, Cplx u, const ModelParams& P);

// Gauge signs s_a (integer heights): s_0 = +1, s_{a+1} = (-1)^a s_a.
int gauge_sign(long long a);

// g_a = s_a sqrt([a]) and G^{(k)}_{a,b} = g_a / (g_b (a,b)_k).
Cplx gauge_g(long long a, const ModelParams& P);
Cplx gauge_G(int k, long long a, long long b, const ModelParams& P);

// Residuals, all max-abs over the checked components.
double face_ybe_residual(int k, double a, double b, double c, double d, double e, double f,
                         Cplx u, Cplx v, const ModelParams& P);
double face_unitarity_residual(int k, double a, double b, double c, double d, Cplx u,
                               const ModelParams& P);
double face_crossing_residual(int k, long long a, long long b, long long c, long long d,
                              Cplx u, const ModelParams& P);
double face_reflection_residual(int k, double a, double b, double c, double d, Cplx u,
                                const ModelParams& P);

// |W(a+2r, ...)| = |W(a, ...)| for integer r (all four heights shifted).
double face_shift_2r_residual(int k, const HeightQuad& q, Cplx u, const ModelParams& P);

}  // namespace fsos

#endif
