// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "fsos/bracket.hpp"
#include "fsos/params.hpp"

namespace fsos {

// Corner ordering used when the barred exchange weight is compared against
// the plain fused face weight: RowMajor reads the printed 2x2 height symbol
// rows-first, Transposed swaps the off-diagonal corners.  A one-time
// calibration at level 1 picks the ordering that satisfies the relation.
enum class WbarConvention { RowMajor, Transposed };

// Inversion-weighted symmetrization: sum over permutations sigma of
// f(v_sigma) weighted by prod over inversion pairs of
// [v_i - v_j - 1]/[v_i - v_j + 1] (arguments in permuted order).  Functions
// whose symmetrizations agree are interchangeable under the screening
// integrals, which is the equivalence the vanishing statements live in.
Cplx weak_symmetrize(const std::function<Cplx(const std::vector<Cplx>&)>& f,
                     const std::vector<Cplx>& v, const ModelParams& P);

// Tail-vertex integrand; vanishes weakly.  Both spectral families appear in
// the leading term: it carries the full product of exchange ratios in u1 as
// well as u2, which is what lets its v-poles cancel against the s-sum under
// symmetrization.  delta nudges the leading exchange denominator of the
// s-sum terms only, detaching those poles from their partners in the leading
// term (sensitivity knob; the response grows as the pole is approached).
// term_scale, if given, receives the largest constituent-term modulus.
Cplx i_lambda(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
              const ModelParams& P, SqrtMode mode = SqrtMode::Joint, double delta = 0.0,
              double* term_scale = nullptr);

// Barred exchange weight at the corner configuration (n, n+k; n+k-2s, n).
// Realized through its closed dressing of the L-matrix: a parity sign, a
// joint square-root of the corner-height brackets, a ratio of pairing
// symbols, and the spin-summed operator block at shifted spectral argument.
Cplx wbar(int k, double n, int s, Cplx u, const ModelParams& P,
          SqrtMode mode = SqrtMode::Joint);

// Vertex-vertex integrand; vanishes weakly.  delta nudges the leading
// exchange denominator of the s-sum terms only, as in i_lambda.
Cplx i_phi(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v, const ModelParams& P,
           SqrtMode mode = SqrtMode::Joint, double delta = 0.0, double* term_scale = nullptr);

// Cross-ratio residual of the relation "barred weight = (s-independent
// normalization) x plain fused face weight at the exchange corner":
// |wbar(s) W(corner 0) - wbar(0) W(corner s)| over the larger product.  The
// s = 0 case anchors the normalization, so it is informative only with a
// nonzero delta (which perturbs the probed barred weight's argument).  conv
// chooses the corner ordering of the plain weight; only one ordering can
// satisfy the relation, and the calibration records which.
double lw_proposition_residual(int k, double n, int s, Cplx u, const ModelParams& P,
                               SqrtMode mode = SqrtMode::Joint,
                               WbarConvention conv = WbarConvention::RowMajor,
                               double delta = 0.0);

// | i_phi(v|u1,u2) - dressed i_lambda(v|u1,-u2) | relative to scale.  The
// dressing mixes square roots from three different closed forms, so the
// relation is exact only where every bracket under a root is positive
// (heights n .. n+2k inside the principal window).
double proportionality_residual(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
                                const ModelParams& P, SqrtMode mode = SqrtMode::Joint);

// Residue t-sum that must vanish for every integer shift s >= 1; at s = 0
// all terms carry an exact zero factor.  Exactness requires the positive
// bracket window n in (2s, r - 2k).  delta knocks one falling-bracket
// argument; a large knock certifies the cancellation scale.
Cplx necessary_condition_sum(int k, double n, int s, const ModelParams& P,
                             SqrtMode mode = SqrtMode::Joint, double delta = 0.0);

// Weak-vanishing residual for either integrand: |S[I]| against the largest
// weighted constituent term.
struct WeakVanish {
  double residual = 0.0;  // |S[I]|
  double scale = 0.0;     // max over sigma of |W_sigma| * term scale of I(v_sigma)
  double relative() const { return scale > 0 ? residual / scale : residual; }
};

WeakVanish weak_vanish_lambda(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
                              const ModelParams& P, SqrtMode mode = SqrtMode::Joint,
                              double delta = 0.0);
WeakVanish weak_vanish_phi(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
                           const ModelParams& P, SqrtMode mode = SqrtMode::Joint,
                           double delta = 0.0);

}  // namespace fsos
