// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fsos/params.hpp"

namespace fsos {

// Two-row height quad for the L-matrix: top row (a,b) feeds the plain
// intertwiner, bottom row (c,d) the dual one.  e = (k - eps)/2 indexes the
// spin component.

// Single spin component, straight from the intertwiner product.
Cplx l_component(int k, int e, double a, double b, double c, double d, Cplx u,
                 const ModelParams& P);

// Spin-summed L-matrix from the defining intertwiner product.
Cplx l_def(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P);

// Closed level-1 evaluation (unit steps on both rows; zero if inadmissible).
Cplx l_closed1(double a, double b, double c, double d, Cplx u, const ModelParams& P);

// Product of level-1 factors with descending spectral shifts.  The top path is
// auxiliary (result is independent of it); the bottom path is summed.
Cplx l_fusion(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P,
              const std::vector<double>* top_path = nullptr);

double l_fusion_top_path_spread(int k, double a, double b, double c, double d, Cplx u,
                                const ModelParams& P);

// Closed evaluation: extremal row displacements use the product formulas,
// interior entries use the two-factor splitting recursion.
Cplx l_eval(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P);

// Alternative splitting (extreme-up block pulled off the left); cross-check
// for l_eval.
Cplx l_split_alt(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P);

// Margin by which the spin component e = ell dominates the others on the
// diagonal ground configuration (a=c=m+ell, b=d=m+k-ell).  Positive means the
// claimed component has the strictly largest modulus.
double l_max_weight_margin(int k, int ell, double m, Cplx u, const ModelParams& P,
                           int* argmax_e = nullptr);

}  // namespace fsos
