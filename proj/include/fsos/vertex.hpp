// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_VERTEX_HPP
#define FSOS_VERTEX_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "fsos/params.hpp"

namespace fsos {

using Mat = Eigen::MatrixXcd;

// Scalar normalization of the eight-vertex weights,
//   R0(u) = z^{-(r-1)/(2r)} *
//     (p q^2 z) (q^2 z) (p/z) (q^4/z) / [ (p q^2/z) (q^2/z) (p z) (q^4 z) ],
// each factor a (.; q^4, p)_inf double product, z = x^{2u}, q^2 = x^2.
Cplx r0_scalar(Cplx u, const ModelParams& P);

// Unnormalized k=1 weights (a, b, c, d), theta ratios at modulus tau/2.
std::array<Cplx, 4> r_weights(Cplx u, const ModelParams& P);

// k=1 R-matrix including R0, as a 4x4 matrix in the basis
// (++, +-, -+, --); column = incoming pair, row = outgoing pair.
Mat r_matrix(Cplx u, const ModelParams& P);

// Symmetrizer Pi_{1..k} on the 2^k-dimensional k-fold tensor space.
Mat symmetrizer(int k);

// Components of the k x k fused R-matrix on the spin basis
// eps = k, k-2, ..., -k (index i = (k - eps)/2).  Entry (e1, e2; f1, f2)
// is the coefficient R^{eps_1 eps_2}_{eps'_1 eps'_2} in
//   R (v_{eps1} (x) v_{eps2}) = sum R^{eps1 eps2}_{eps1' eps2'} v_{eps1'} (x) v_{eps2'}.
struct RTensor {
  int k = 1;
  std::vector<Cplx> a;  // (k+1)^4 entries

  RTensor() = default;
  explicit RTensor(int kk) : k(kk), a((kk + 1) * (kk + 1) * (kk + 1) * (kk + 1), Cplx(0)) {}
  int dim() const { return k + 1; }
  Cplx& at(int e1, int e2, int f1, int f2) {
    const int d = dim();
    return a[((e1 * d + e2) * d + f1) * d + f2];
  }
  Cplx at(int e1, int e2, int f1, int f2) const {
    const int d = dim();
    return a[((e1 * d + e2) * d + f1) * d + f2];
  }
  // Component matrix M(out, in), out = (f1, f2), in = (e1, e2).
  Mat matrix() const;
};

// k x k fusion of the R-matrix via symmetrizers acting on the 2^{2k}
// ambient space; extraction against the 1/k!-averaged basis.
RTensor fused_r(Cplx u, int k, const ModelParams& P);

// Residuals (max-abs over all components).
double ybe_residual(int k, Cplx u1, Cplx u2, Cplx u3, const ModelParams& P);
double unitarity_residual(int k, Cplx u, const ModelParams& P);

// R0 inversion relations: |R0(u)R0(-u) - 1| and |R0(u)R0(u+1) + [u+1]/[u]|.
double r0_inversion_residual(Cplx u, const ModelParams& P);
double r0_shift_residual(Cplx u, const ModelParams& P);

// Crossing conjugation matrix Q (dimension k+1).  Closed forms for k = 1, 2;
// for k >= 3 solved in least squares from the crossing relation at the given
// spectral points, normalized so the top-left entry is 1.
Mat q_cross_matrix(int k, const ModelParams& P,
                   const std::vector<Cplx>& solve_points = {});

// Crossing residual: (P R(u) P)^{t1} - (Q (x) id) R(-u-1) (Q^{-1} (x) id).
double crossing_residual(int k, Cplx u, const Mat& Q, const ModelParams& P);

// Principal-regime dominance: among the spin-exchange entries
// R^{e1,e2}_{e2,e1} (the diagonal after the flip), the alternating
// ground-state pairs e1 + e2 = k attain the maximal modulus.  Returns the
// worst margin max over the other exchange entries minus the ground minimum
// (<= tie_tol when the claim holds); for k = 1 also checks the sign pattern
// a > 0, b < 0, d > 0, c > a,|b|,d.
struct DominanceReport {
  bool ok = false;
  double margin = 0.0;        // max over non-ground entries minus ground minimum
  double ground_spread = 0.0; // max-min modulus across the ground family
  bool k1_signs_ok = true;
};
DominanceReport principal_regime_dominance(int k, double u, const ModelParams& P,
                                           double tie_tol = 1e-9);

}  // namespace fsos

#endif
