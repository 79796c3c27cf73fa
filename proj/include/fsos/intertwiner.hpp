// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_INTERTWINER_HPP
#define FSOS_INTERTWINER_HPP

#include <vector>

#include "fsos/params.hpp"
#include "fsos/vertex.hpp"

namespace fsos {

// Intertwining vector components (|a-b| = 1):
//   psi_+(u)^a_b = theta0( ((a-b)u + a) / 2r | tau/2 )
//   psi_-(u)^a_b = theta3( ((a-b)u + a) / 2r | tau/2 )
Cplx psi(int eps, Cplx u, double a, double b, const ModelParams& P);

// Dual vector  psi*_eps(u)^a_b = -eps (a-b)/(2 [b][u]) C^2 psi_{-eps}(u-1)^a_b.
Cplx psi_star(int eps, Cplx u, double a, double b, const ModelParams& P);

// Second vector  psi'_eps(u)^a_b = [u][a]/([u-1][b]) psi_eps(u-2)^a_b.
Cplx psi_prime(int eps, Cplx u, double a, double b, const ModelParams& P);

// Fused components on the spin basis index e = (k - eps)/2.
// psi^{(k)}: height path a -> b fixed (canonical staircase unless given),
// spin strings summed.
Cplx psi_fused(int k, int e, Cplx u, double a, double b, const ModelParams& P,
               const std::vector<double>* path = nullptr);

// psi*^{(k)}: spin decomposition fixed (canonical: minus signs first unless
// given), height path a -> b summed.  `eps_list` lists eps_1..eps_k.
Cplx psi_star_fused(int k, int e, Cplx u, double b, double a, const ModelParams& P,
                    const std::vector<int>* eps_list = nullptr);

// psi'^{(k)}_eps(u)^a_b = [u+k-1][a]/([u-1][b]) psi^{(k)}_eps(u-2)^a_b.
Cplx psi_prime_fused(int k, int e, Cplx u, double a, double b, const ModelParams& P);

// Deviation of psi_fused across all admissible height paths, and of
// psi_star_fused across all spin decompositions.
double psi_fused_path_spread(int k, int e, Cplx u, double a, double b, const ModelParams& P);
double psi_star_fused_decomp_spread(int k, int e, Cplx u, double b, double a,
                                    const ModelParams& P);

// Vertex-face correspondence residuals (max over free spin components):
//   sum R^{(k,k)}(u-v) psi(u)^a_b psi(v)^b_c = sum_{b'} psi(v)^a_{b'} psi(u)^{b'}_c W(a,b;b',c)
// and the dual version with W(c,b';b,a).
double vertex_face_residual(int k, Cplx u, Cplx v, double a, double b, double c,
                            const ModelParams& P);
double vertex_face_dual_residual(int k, Cplx u, Cplx v, double a, double b, double c,
                                 const ModelParams& P);

// The six inversion relations; each returns a max-abs residual.
double inversion_ac_residual(Cplx u, double a, double b, double c, const ModelParams& P);
double inversion_eps_residual(Cplx u, double b, const ModelParams& P);
double inversion_prime_bc_residual(Cplx u, double a, double b, double c, const ModelParams& P);
double inversion_prime_eps_residual(Cplx u, double a, const ModelParams& P);
double fused_inversion_ac_residual(int k, Cplx u, double a, double b, double c,
                                   const ModelParams& P);
double fused_inversion_eps_residual(int k, Cplx u, double b, const ModelParams& P);
double fused_inversion_prime_bc_residual(int k, Cplx u, double a, double b, double c,
                                         const ModelParams& P);
double fused_inversion_prime_eps_residual(int k, Cplx u, double a, const ModelParams& P);

// C^2 pinned from the inversion relation sum_eps psi*_eps(u)^a_b psi_eps(u)^b_a = 1.
Cplx c2_from_inversion(Cplx u, double a, double b, const ModelParams& P);

// Crossing normalization: ratio
//   C^(k)(u) = psi*^{(k)}_eps(u)^a_b / ( G^{(k)}_{a,b} sum_{eps'} Q^{eps'}_eps psi^{(k)}_{eps'}(u-1)^a_b )
// asserted independent of (eps, a, b); returns the common value and the spread.
struct CrossPsiResult {
  Cplx value{};
  double spread = 0.0;  // max-abs deviation across probed (eps, a, b)
};
CrossPsiResult cross_psi_normalization(int k, Cplx u, const ModelParams& P,
                                       const std::vector<std::pair<long long, long long>>& heights,
                                       const Mat& Q);

}  // namespace fsos

#endif
