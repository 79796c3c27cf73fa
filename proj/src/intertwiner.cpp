// SPDX-License-Identifier: Apache-2.0
#include "fsos/intertwiner.hpp"

#include <cmath>
#include <stdexcept>

#include "fsos/bracket.hpp"
#include "fsos/face.hpp"
#include "fsos/theta.hpp"

namespace fsos {

namespace {

bool unit_step(double a, double b) { return std::abs(std::abs(a - b) - 1.0) < 1e-9; }

// Spin strings (eps_1..eps_k), eps_i = +-1, with a prescribed minus count.
std::vector<std::vector<int>> spin_strings(int k, int minus_count) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != minus_count) continue;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

Cplx psi(int eps, Cplx u, double a, double b, const ModelParams& P) {
  if (!unit_step(a, b)) throw std::domain_error("psi: |a-b| must be 1");
  const Cplx arg = ((a - b) * u + a) / (2.0 * P.r);
  const Cplx th = P.tau / 2.0;
  return eps > 0 ? theta0(arg, th, P.series_floor) : theta3(arg, th, P.series_floor);
}

Cplx psi_star(int eps, Cplx u, double a, double b, const ModelParams& P) {
  if (!unit_step(a, b)) throw std::domain_error("psi_star: |a-b| must be 1");
  const Cplx pref = -static_cast<double>(eps) * (a - b) /
                    (2.0 * bracket(Cplx(b), P) * bracket(u, P)) * P.C2;
  return pref * psi(-eps, u - 1.0, a, b, P);
}

Cplx psi_prime(int eps, Cplx u, double a, double b, const ModelParams& P) {
  const Cplx pref = bracket(u, P) * bracket(Cplx(a), P) /
                    (bracket(u - 1.0, P) * bracket(Cplx(b), P));
  return pref * psi(eps, u - 2.0, a, b, P);
}

Cplx psi_fused(int k, int e, Cplx u, double a, double b, const ModelParams& P,
               const std::vector<double>* path) {
  if (k == 1) return psi(k - 2 * e, u, a, b, P);
  std::vector<double> heights;
  heights.push_back(a);
  if (path) {
    for (double h : *path) heights.push_back(h);
  } else {
    const auto paths = unit_paths(a, b, k);
    if (paths.empty()) return 0.0;
    for (double h : paths.front()) heights.push_back(h);
  }
  heights.push_back(b);
  if (static_cast<int>(heights.size()) != k + 1)
    throw std::domain_error("psi_fused: path must list k-1 heights");

  Cplx total = 0.0;
  for (const auto& s : spin_strings(k, e)) {
    Cplx prod = 1.0;
    for (int j = 0; j < k; ++j)
      prod *= psi(s[j], u + static_cast<double>(k - 1 - j), heights[j], heights[j + 1], P);
    total += prod;
  }
  return total;
}

Cplx psi_star_fused(int k, int e, Cplx u, double b, double a, const ModelParams& P,
                    const std::vector<int>* eps_list) {
  if (k == 1) return psi_star(k - 2 * e, u, b, a, P);
  std::vector<int> eps;
  if (eps_list) {
    eps = *eps_list;
  } else {
    eps.assign(k, 1);
    for (int i = 0; i < e; ++i) eps[i] = -1;  // canonical: minus spins first
  }
  if (static_cast<int>(eps.size()) != k)
    throw std::domain_error("psi_star_fused: eps decomposition must have k entries");

  // Chain a -> c_1 -> ... -> c_{k-1} -> b; factor j carries spectral u+k-1-j
  // and heights (c_{j+1})^{sup}_{(c_j)}.
  Cplx total = 0.0;
  auto rec = [&](auto&& self, int j, double cprev, Cplx acc) -> void {
    if (j == k - 1) {
      if (!unit_step(cprev, b)) return;
      total += acc * psi_star(eps[j], u, b, cprev, P);
      return;
    }
    for (int s : {1, -1}) {
      const double cnext = cprev + s;
      self(self, j + 1, cnext,
           acc * psi_star(eps[j], u + static_cast<double>(k - 1 - j), cnext, cprev, P));
    }
  };
  rec(rec, 0, a, Cplx(1.0));
  return total;
}

Cplx psi_prime_fused(int k, int e, Cplx u, double a, double b, const ModelParams& P) {
  const Cplx pref = bracket(u + static_cast<double>(k - 1), P) * bracket(Cplx(a), P) /
                    (bracket(u - 1.0, P) * bracket(Cplx(b), P));
  return pref * psi_fused(k, e, u - 2.0, a, b, P);
}

double psi_fused_path_spread(int k, int e, Cplx u, double a, double b, const ModelParams& P) {
  const auto paths = unit_paths(a, b, k);
  if (paths.size() < 2) return 0.0;
  Cplx ref{};
  double spread = 0.0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Cplx v = psi_fused(k, e, u, a, b, P, &paths[i]);
    if (i == 0)
      ref = v;
    else
      spread = std::max(spread, std::abs(v - ref));
  }
  return spread;
}

double psi_star_fused_decomp_spread(int k, int e, Cplx u, double b, double a,
                                    const ModelParams& P) {
  const auto decomps = spin_strings(k, e);
  Cplx ref{};
  double spread = 0.0;
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    const Cplx v = psi_star_fused(k, e, u, b, a, P, &decomps[i]);
    if (i == 0)
      ref = v;
    else
      spread = std::max(spread, std::abs(v - ref));
  }
  return spread;
}

namespace {

using Vec = Eigen::VectorXcd;

Vec psi_pair_vec(int k, Cplx u, Cplx v, double a, double b, double c, const ModelParams& P,
                 bool dual) {
  const int d = k + 1;
  Vec x(d * d);
  for (int e1 = 0; e1 < d; ++e1)
    for (int e2 = 0; e2 < d; ++e2) {
      const Cplx f1 = dual ? psi_star_fused(k, e1, u, a, b, P) : psi_fused(k, e1, u, a, b, P);
      const Cplx f2 = dual ? psi_star_fused(k, e2, v, b, c, P) : psi_fused(k, e2, v, b, c, P);
      x(e1 * d + e2) = f1 * f2;
    }
  return x;
}

}  // namespace

double vertex_face_residual(int k, Cplx u, Cplx v, double a, double b, double c,
                            const ModelParams& P) {
  const int d = k + 1;
  const Mat R = fused_r(u - v, k, P).matrix();
  const Vec lhs = R * psi_pair_vec(k, u, v, a, b, c, P, false);
  Vec rhs = Vec::Zero(d * d);
  for (double bp = std::min(a, c) - k; bp <= std::max(a, c) + k + 0.5; bp += 1.0) {
    const Cplx w = face_weight_kk(k, {a, b, bp, c}, u - v, P);
    if (w == Cplx(0)) continue;
    for (int e1 = 0; e1 < d; ++e1)
      for (int e2 = 0; e2 < d; ++e2)
        rhs(e1 * d + e2) += psi_fused(k, e2, v, a, bp, P) * psi_fused(k, e1, u, bp, c, P) * w;
  }
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double vertex_face_dual_residual(int k, Cplx u, Cplx v, double a, double b, double c,
                                 const ModelParams& P) {
  const int d = k + 1;
  // The dual vectors contract against the incoming spin pair, so the weight
  // matrix acts through its transpose (invisible at level 1, where it is
  // symmetric).
  const Mat R = fused_r(u - v, k, P).matrix().transpose();
  const Vec lhs = R * psi_pair_vec(k, u, v, a, b, c, P, true);
  Vec rhs = Vec::Zero(d * d);
  for (double bp = std::min(a, c) - k; bp <= std::max(a, c) + k + 0.5; bp += 1.0) {
    const Cplx w = face_weight_kk(k, {c, bp, b, a}, u - v, P);
    if (w == Cplx(0)) continue;
    for (int e1 = 0; e1 < d; ++e1)
      for (int e2 = 0; e2 < d; ++e2)
        rhs(e1 * d + e2) +=
            psi_star_fused(k, e2, v, a, bp, P) * psi_star_fused(k, e1, u, bp, c, P) * w;
  }
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

double inversion_ac_residual(Cplx u, double a, double b, double c, const ModelParams& P) {
  Cplx sum = 0.0;
  for (int eps : {1, -1}) sum += psi_star(eps, u, a, b, P) * psi(eps, u, b, c, P);
  const double delta = std::abs(a - c) < 1e-9 ? 1.0 : 0.0;
  return std::abs(sum - delta);
}

double inversion_eps_residual(Cplx u, double b, const ModelParams& P) {
  double worst = 0.0;
  for (int ep : {1, -1})
    for (int e : {1, -1}) {
      Cplx sum = 0.0;
      for (int s : {1, -1}) {
        const double a = b + s;
        sum += psi_star(ep, u, a, b, P) * psi(e, u, b, a, P);
      }
      const double delta = (ep == e) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - delta));
    }
  return worst;
}

double inversion_prime_bc_residual(Cplx u, double a, double b, double c, const ModelParams& P) {
  Cplx sum = 0.0;
  for (int eps : {1, -1}) sum += psi_star(eps, u, a, b, P) * psi_prime(eps, u, c, a, P);
  const double delta = std::abs(b - c) < 1e-9 ? 1.0 : 0.0;
  return std::abs(sum - delta);
}

double inversion_prime_eps_residual(Cplx u, double a, const ModelParams& P) {
  double worst = 0.0;
  for (int ep : {1, -1})
    for (int e : {1, -1}) {
      Cplx sum = 0.0;
      for (int s : {1, -1}) {
        const double b = a + s;
        sum += psi_star(ep, u, a, b, P) * psi_prime(e, u, b, a, P);
      }
      const double delta = (ep == e) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - delta));
    }
  return worst;
}

double fused_inversion_ac_residual(int k, Cplx u, double a, double b, double c,
                                   const ModelParams& P) {
  Cplx sum = 0.0;
  for (int e = 0; e <= k; ++e)
    sum += psi_star_fused(k, e, u, a, b, P) * psi_fused(k, e, u, b, c, P);
  const double delta = std::abs(a - c) < 1e-9 ? 1.0 : 0.0;
  return std::abs(sum - delta);
}

double fused_inversion_eps_residual(int k, Cplx u, double b, const ModelParams& P) {
  double worst = 0.0;
  for (int ep = 0; ep <= k; ++ep)
    for (int e = 0; e <= k; ++e) {
      Cplx sum = 0.0;
      for (int t = 0; t <= k; ++t) {
        const double a = b + (k - 2 * t);
        sum += psi_star_fused(k, ep, u, a, b, P) * psi_fused(k, e, u, b, a, P);
      }
      const double delta = (ep == e) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - delta));
    }
  return worst;
}

double fused_inversion_prime_bc_residual(int k, Cplx u, double a, double b, double c,
                                         const ModelParams& P) {
  Cplx sum = 0.0;
  for (int e = 0; e <= k; ++e)
    sum += psi_star_fused(k, e, u, a, b, P) * psi_prime_fused(k, e, u, c, a, P);
  const double delta = std::abs(b - c) < 1e-9 ? 1.0 : 0.0;
  return std::abs(sum - delta);
}

double fused_inversion_prime_eps_residual(int k, Cplx u, double a, const ModelParams& P) {
  double worst = 0.0;
  for (int ep = 0; ep <= k; ++ep)
    for (int e = 0; e <= k; ++e) {
      Cplx sum = 0.0;
      for (int t = 0; t <= k; ++t) {
        const double b = a + (k - 2 * t);
        sum += psi_star_fused(k, ep, u, a, b, P) * psi_prime_fused(k, e, u, b, a, P);
      }
      const double delta = (ep == e) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - delta));
    }
  return worst;
}

Cplx c2_from_inversion(Cplx u, double a, double b, const ModelParams& P) {
  // sum_eps psi*_eps(u)^a_b psi_eps(u)^b_a = 1 with psi* expanded, C^2 factored out.
  Cplx sum = 0.0;
  for (int eps : {1, -1}) {
    const Cplx pref = -static_cast<double>(eps) * (a - b) /
                      (2.0 * bracket(Cplx(b), P) * bracket(u, P));
    sum += pref * psi(-eps, u - 1.0, a, b, P) * psi(eps, u, b, a, P);
  }
  return 1.0 / sum;
}

CrossPsiResult cross_psi_normalization(int k, Cplx u, const ModelParams& P,
                                       const std::vector<std::pair<long long, long long>>& heights,
                                       const Mat& Q) {
  CrossPsiResult res;
  bool first = true;
  for (const auto& [a, b] : heights) {
    const Cplx G = gauge_G(k, a, b, P);
    for (int e = 0; e <= k; ++e) {
      const Cplx num = psi_star_fused(k, e, u, static_cast<double>(a), static_cast<double>(b), P);
      Cplx den = 0.0;
      for (int ep = 0; ep <= k; ++ep)
        den += Q(ep, e) * psi_fused(k, ep, u - 1.0, static_cast<double>(a),
                                    static_cast<double>(b), P);
      den *= G;
      if (std::abs(den) < 1e-12) continue;
      const Cplx ratio = num / den;
      if (first) {
        res.value = ratio;
        first = false;
      } else {
        res.spread = std::max(res.spread, std::abs(ratio - res.value));
      }
    }
  }
  return res;
}

}  // namespace fsos
