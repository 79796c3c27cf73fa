// SPDX-License-Identifier: Apache-2.0
#ifndef FSOS_PARAMS_HPP
#define FSOS_PARAMS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace fsos {

using Cplx = std::complex<double>;

inline constexpr Cplx I_UNIT{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

// Model parameters for the fusion eight-vertex / SOS weight system.
//
// The crossing parameter x lies in (0,1), the restriction height r is a real
// number larger than k+2, and k >= 1 is the fusion level.  Derived values:
//
//   p      = x^{2r}          elliptic nome of the unstarred bracket
//   p_star = x^{2(r-k)}      elliptic nome of the starred bracket
//   tau    = -i*pi/(r ln x)  modular parameter, fixed so e^{-2 pi i/tau} = x^{2r}
//   C2     = C^2 with C = x^{-r/4} e^{-i pi/4} tau^{1/2}
//
// Note 0 < p < p_star < 1 (the starred nome is the larger one).
struct ModelParams {
  double x = 0.0;
  double r = 0.0;
  int k = 1;
  double tol = 1e-8;

  double p = 0.0;
  double p_star = 0.0;
  Cplx tau{};
  Cplx C2{};
  double series_floor = 0.0;  // series truncation floor (machine level)
  int series_cutoff = 0;      // smallest N with p^N < series_floor

  double r_star() const { return r - k; }
};

inline ModelParams make_params(double x, double r, int k, double tol = 1e-8) {
  if (!(x > 0.0 && x < 1.0)) throw std::domain_error("make_params: x must lie in (0,1)");
  if (k < 1) throw std::domain_error("make_params: k must be >= 1");
  if (!(r > k + 2)) throw std::domain_error("make_params: r must exceed k+2");
  if (!(tol > 0.0)) throw std::domain_error("make_params: tol must be positive");
  ModelParams P;
  P.x = x;
  P.r = r;
  P.k = k;
  P.tol = tol;
  P.p = std::pow(x, 2.0 * r);
  P.p_star = std::pow(x, 2.0 * (r - k));
  P.tau = -PI * I_UNIT / (r * std::log(x));
  const Cplx C = std::pow(x, -r / 4.0) * std::exp(-I_UNIT * PI / 4.0) * std::sqrt(P.tau);
  P.C2 = C * C;
  P.series_floor = 1e-15;  // truncation must sit at machine level, not at check level
  P.series_cutoff = static_cast<int>(std::ceil(std::log(P.series_floor) / std::log(P.p))) + 1;
  return P;
}

// x^z with real positive base via the real logarithm; entire in z.
inline Cplx cpow(double base, Cplx z) { return std::exp(z * std::log(base)); }

}  // namespace fsos

#endif
