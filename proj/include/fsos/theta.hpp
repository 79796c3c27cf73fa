// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_THETA_HPP
#define FSOS_THETA_HPP

#include <vector>

#include "fsos/params.hpp"

namespace fsos {

// Jacobi theta functions in the "number theorist" normalization
//
//   theta1(u|tau) = 2 pt^{1/8} (pt;pt)_inf sin(pi u)
//                   prod_{n>=1} (1 - pt^n e^{2 pi i u})(1 - pt^n e^{-2 pi i u}),
//
// with pt = e^{2 pi i tau}, |pt| < 1.  The companions are the half-period
// shifts of theta1:
//
//   theta0(u|tau) = -i e^{i pi (u + tau/4)} theta1(u + tau/2   | tau)
//   theta2(u|tau) =                         theta1(u + 1/2     | tau)
//   theta3(u|tau) =    e^{i pi (u + tau/4)} theta1(u + (tau+1)/2 | tau)
//
// (theta0 is the function often written theta4.)  Products are truncated once
// the running factor differs from 1 by less than `floor`.
Cplx theta1(Cplx u, Cplx tau, double floor = 1e-14);
Cplx theta2(Cplx u, Cplx tau, double floor = 1e-14);
Cplx theta3(Cplx u, Cplx tau, double floor = 1e-14);
Cplx theta0(Cplx u, Cplx tau, double floor = 1e-14);

// Dispatch on index i in {0,1,2,3}.
Cplx theta_jacobi(int i, Cplx u, Cplx tau, double floor = 1e-14);

// Triple product  Theta_p(z) = (z;p)_inf (p/z;p)_inf (p;p)_inf,  |p| < 1, z != 0.
Cplx theta_triple(Cplx z, double p, double floor = 1e-14);

// Single-nome infinite product (z;p)_inf = prod_{n>=0} (1 - z p^n).
Cplx pochhammer(Cplx z, double p, double floor = 1e-14);

// Multi-nome product (z; p_1,...,p_m)_inf = prod_{n_1,...,n_m >= 0}
// (1 - z p_1^{n_1} ... p_m^{n_m}), truncated to n_1 + ... + n_m <= cutoff.
// Pass cutoff <= 0 to size the cutoff from the largest nome and `floor`.
Cplx multi_pochhammer(Cplx z, const std::vector<double>& nomes, int cutoff = 0,
                      double floor = 1e-14);

// q-integer [[n]]_x = (x^n - x^{-n}) / (x - x^{-1}).
double qint(int n, double x);

}  // namespace fsos

#endif
