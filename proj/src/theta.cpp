// SPDX-License-Identifier: Apache-2.0
#include "fsos/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace fsos {

namespace {

constexpr int kMaxFactors = 20000;

}  // namespace

Cplx theta1(Cplx u, Cplx tau, double floor) {
  const Cplx pt = std::exp(2.0 * PI * I_UNIT * tau);
  const double apt = std::abs(pt);
  if (!(apt < 1.0)) throw std::domain_error("theta1: Im(tau) must be positive");
  const Cplx w = std::exp(2.0 * PI * I_UNIT * u);
  const Cplx winv = 1.0 / w;
  Cplx prod = 1.0;
  Cplx ptn = pt;
  const double wmax = std::max({std::abs(w), std::abs(winv), 1.0});
  int n = 1;
  while (std::abs(ptn) * wmax > floor) {
    prod *= (1.0 - ptn) * (1.0 - ptn * w) * (1.0 - ptn * winv);
    ptn *= pt;
    if (++n > kMaxFactors) throw std::runtime_error("theta1: product did not converge");
  }
  return 2.0 * std::exp(PI * I_UNIT * tau / 4.0) * std::sin(PI * u) * prod;
}

Cplx theta0(Cplx u, Cplx tau, double floor) {
  return -I_UNIT * std::exp(PI * I_UNIT * (u + tau / 4.0)) * theta1(u + tau / 2.0, tau, floor);
}

Cplx theta2(Cplx u, Cplx tau, double floor) { return theta1(u + 0.5, tau, floor); }

Cplx theta3(Cplx u, Cplx tau, double floor) {
  return std::exp(PI * I_UNIT * (u + tau / 4.0)) * theta1(u + (tau + 1.0) / 2.0, tau, floor);
}

Cplx theta_jacobi(int i, Cplx u, Cplx tau, double floor) {
  switch (i) {
    case 0: return theta0(u, tau, floor);
    case 1: return theta1(u, tau, floor);
    case 2: return theta2(u, tau, floor);
    case 3: return theta3(u, tau, floor);
    default: throw std::domain_error("theta_jacobi: index must be 0..3");
  }
}

Cplx pochhammer(Cplx z, double p, double floor) {
  if (!(std::abs(p) < 1.0)) throw std::domain_error("pochhammer: |p| must be < 1");
  Cplx prod = 1.0;
  Cplx term = z;
  int n = 0;
  while (std::abs(term) > floor) {
    prod *= 1.0 - term;
    term *= p;
    if (++n > kMaxFactors) throw std::runtime_error("pochhammer: did not converge");
  }
  return prod;
}

Cplx theta_triple(Cplx z, double p, double floor) {
  if (z == Cplx(0.0, 0.0)) throw std::domain_error("theta_triple: z must be nonzero");
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("theta_triple: p must lie in (0,1)");
  return pochhammer(z, p, floor) * pochhammer(p / z, p, floor) * pochhammer(p, p, floor);
}

Cplx multi_pochhammer(Cplx z, const std::vector<double>& nomes, int cutoff, double floor) {
  if (nomes.empty()) return 1.0 - z;
  double pmax = 0.0;
  for (double p : nomes) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("multi_pochhammer: nomes must lie in (0,1)");
    pmax = std::max(pmax, p);
  }
  if (cutoff <= 0) cutoff = static_cast<int>(std::ceil(std::log(floor) / std::log(pmax))) + 1;

  // Depth-first walk over multi-indices with sum(n_i) <= cutoff.
  Cplx prod = 1.0;
  const int m = static_cast<int>(nomes.size());
  std::vector<int> idx(m, 0);
  // Recursive lambda over dimension d with the partial monomial carried along.
  auto walk = [&](auto&& self, int d, int budget, Cplx mono) -> void {
    if (d == m - 1) {
      Cplx term = z * mono;
      for (int n = 0; n <= budget; ++n) {
        if (std::abs(term) <= floor) break;
        prod *= 1.0 - term;
        term *= nomes[d];
      }
      return;
    }
    Cplx scale = 1.0;
    for (int n = 0; n <= budget; ++n) {
      if (std::abs(z) * std::abs(mono * scale) <= floor) break;
      self(self, d + 1, budget - n, mono * scale);
      scale *= nomes[d];
    }
  };
  walk(walk, 0, cutoff, Cplx(1.0));
  return prod;
}

double qint(int n, double x) {
  if (x == 1.0 || x == -1.0) return static_cast<double>(n);
  return (std::pow(x, n) - std::pow(x, -n)) / (x - 1.0 / x);
}

}  // namespace fsos
