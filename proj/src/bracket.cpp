// SPDX-License-Identifier: Apache-2.0
#include "fsos/bracket.hpp"

#include <cmath>
#include <stdexcept>

#include "fsos/theta.hpp"

namespace fsos {

Cplx bracket_s(Cplx u, double s, const ModelParams& P) {
  if (!(s > 0.0)) throw std::domain_error("bracket_s: s must be positive");
  // Fold by the exact quasi-periodicity [u + s] = -[u] so the triple product
  // is always evaluated with |Re u| <= s/2 (large arguments would overflow).
  const long long m = std::llround(u.real() / s);
  if (m != 0) u -= static_cast<double>(m) * s;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double nome = std::pow(P.x, 2.0 * s);
  const Cplx pre = cpow(P.x, u * u / s - u);
  return sign * pre * theta_triple(cpow(P.x, 2.0 * u), nome, P.series_floor);
}

Cplx bracket(Cplx u, const ModelParams& P) { return bracket_s(u, P.r, P); }

Cplx bracket_star(Cplx u, const ModelParams& P) { return bracket_s(u, P.r - P.k, P); }

Cplx bracket_falling(Cplx A, int M, const ModelParams& P) {
  if (M < 0) throw std::domain_error("bracket_falling: M must be >= 0");
  Cplx prod = 1.0;
  for (int j = 0; j < M; ++j) prod *= bracket(A - static_cast<double>(j), P);
  return prod;
}

Cplx bracket_range(Cplx A, int len, const ModelParams& P) {
  if (len < 0) throw std::domain_error("bracket_range: negative length");
  Cplx prod = 1.0;
  for (int t = 0; t < len; ++t) prod *= bracket(A + static_cast<double>(t), P);
  return prod;
}

Cplx bracket_binom(Cplx A, int B, const ModelParams& P) {
  if (B < 0) throw std::domain_error("bracket_binom: B must be >= 0");
  Cplx den = 1.0;
  for (int j = 1; j <= B; ++j) den *= bracket(static_cast<double>(j), P);
  return bracket_falling(A, B, P) / den;
}

Cplx bracket_sqrt(double a, const ModelParams& P) { return std::sqrt(bracket(a, P)); }

Cplx bracket_pairing(double a, double b, int M, const ModelParams& P, SqrtMode mode) {
  const double half = (a - b + M) / 2.0;
  const double hr = std::round(half);
  if (std::abs(half - hr) > 1e-9 || hr < -1e-9 || hr > M + 1e-9)
    throw std::domain_error("bracket_pairing: (a-b+M)/2 must be an integer in [0, M]");
  const int B = static_cast<int>(hr);
  const Cplx num = bracket_range(Cplx((a + b - M) / 2.0), M + 1, P);
  const Cplx binom = bracket_binom(Cplx(static_cast<double>(M)), B, P);
  const Cplx root = (mode == SqrtMode::Joint)
                        ? std::sqrt(bracket(a, P) * bracket(b, P))
                        : bracket_sqrt(a, P) * bracket_sqrt(b, P);
  return num / (binom * root);
}

}  // namespace fsos
