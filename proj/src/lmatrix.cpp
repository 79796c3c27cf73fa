// SPDX-License-Identifier: Apache-2.0
#include "fsos/lmatrix.hpp"

#include <cmath>
#include <stdexcept>

#include "fsos/bracket.hpp"
#include "fsos/face.hpp"
#include "fsos/intertwiner.hpp"

namespace fsos {

namespace {

bool near_int(double v) { return std::abs(v - std::round(v)) < 1e-9; }

int step_dir(double from, double to) {
  const double d = to - from;
  if (std::abs(d - 1.0) < 1e-9) return 1;
  if (std::abs(d + 1.0) < 1e-9) return -1;
  return 0;
}

}  // namespace

Cplx l_component(int k, int e, double a, double b, double c, double d, Cplx u,
                 const ModelParams& P) {
  return psi_star_fused(k, e, u, d, c, P) * psi_fused(k, e, u, a, b, P);
}

Cplx l_def(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P) {
  Cplx sum = 0.0;
  for (int e = 0; e <= k; ++e) sum += l_component(k, e, a, b, c, d, u, P);
  return sum;
}

Cplx l_closed1(double a, double b, double c, double d, Cplx u, const ModelParams& P) {
  const int st = step_dir(a, b);
  const int sb = step_dir(c, d);
  if (st == 0 || sb == 0) return 0.0;
  const double m = a, n = c;
  const double sgn = static_cast<double>(sb);
  Cplx num;
  if (st == sb)
    num = bracket(u + sgn * (n - m) / 2.0, P) * bracket(Cplx((n + m) / 2.0), P);
  else
    num = bracket(u + sgn * (n + m) / 2.0, P) * bracket(Cplx((n - m) / 2.0), P);
  return num / (bracket(u, P) * bracket(Cplx(n), P));
}

Cplx l_fusion(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P,
              const std::vector<double>* top_path) {
  std::vector<double> tops;
  tops.push_back(a);
  if (top_path) {
    for (double h : *top_path) tops.push_back(h);
  } else {
    const auto paths = unit_paths(a, b, k);
    if (paths.empty()) return 0.0;
    for (double h : paths.front()) tops.push_back(h);
  }
  tops.push_back(b);
  if (static_cast<int>(tops.size()) != k + 1)
    throw std::domain_error("l_fusion: top path must list k-1 heights");

  Cplx total = 0.0;
  auto rec = [&](auto&& self, int j, double nprev, Cplx acc) -> void {
    if (j == k - 1) {
      const Cplx f = l_closed1(tops[j], tops[j + 1], nprev, d, u, P);
      if (f != Cplx(0)) total += acc * f;
      return;
    }
    for (int s : {1, -1}) {
      const double nnext = nprev + s;
      const Cplx f =
          l_closed1(tops[j], tops[j + 1], nprev, nnext, u + static_cast<double>(k - 1 - j), P);
      if (f != Cplx(0)) self(self, j + 1, nnext, acc * f);
    }
  };
  if (k == 1)
    total = l_closed1(a, b, c, d, u, P);
  else
    rec(rec, 0, c, Cplx(1.0));
  return total;
}

double l_fusion_top_path_spread(int k, double a, double b, double c, double d, Cplx u,
                                const ModelParams& P) {
  const auto paths = unit_paths(a, b, k);
  if (paths.size() < 2) return 0.0;
  Cplx ref{};
  double spread = 0.0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Cplx v = l_fusion(k, a, b, c, d, u, P, &paths[i]);
    if (i == 0)
      ref = v;
    else
      spread = std::max(spread, std::abs(v - ref));
  }
  return spread;
}

namespace {

// Extreme-up top row: b = a + k, bottom displacement k - 2j.
Cplx l_top_up(int k, double m, double n, int j, Cplx u, const ModelParams& P) {
  const Cplx num = bracket_binom(Cplx((n + m) / 2.0 + k - 1 - j), k - j, P) *
                   bracket_binom(Cplx((n - m) / 2.0), j, P) *
                   bracket_binom(-u + (n + m) / 2.0, j, P) *
                   bracket_binom(-u + (m - n) / 2.0, k - j, P);
  const Cplx den = bracket_binom(Cplx(static_cast<double>(n + k - 1 - 2 * j)), k - j, P) *
                   bracket_binom(Cplx(n + k - j), j, P) * bracket_binom(-u, k, P);
  return num / den;
}

// Extreme-down top row: b = a - k.
Cplx l_top_down(int k, double m, double n, int j, Cplx u, const ModelParams& P) {
  const Cplx num = bracket_binom(Cplx((n - m) / 2.0 + k - 1 - j), k - j, P) *
                   bracket_binom(Cplx((n + m) / 2.0), j, P) *
                   bracket_binom(-u + (n - m) / 2.0, j, P) *
                   bracket_binom(-u - (m + n) / 2.0, k - j, P);
  const Cplx den = bracket_binom(Cplx(static_cast<double>(n + k - 1 - 2 * j)), k - j, P) *
                   bracket_binom(Cplx(n + k - j), j, P) * bracket_binom(-u, k, P);
  return num / den;
}

// Extreme-up bottom row: d = c + k, top displacement k - 2j.
Cplx l_bot_up(int k, double m, double n, int j, Cplx u, const ModelParams& P) {
  // The first coefficient descends as j grows; it follows from the extreme-down
  // row via global height negation, which fixes the sign of the j-shift.
  const Cplx num = bracket_falling(Cplx((n + m) / 2.0 + k - 1 - j), k - j, P) *
                   bracket_falling(Cplx((n - m) / 2.0 - 1 + j), j, P) *
                   bracket_falling(-u + ((m - n) / 2.0 - j), k - j, P) *
                   bracket_falling(-u + (-(m + n) / 2.0 + j - k), j, P);
  const Cplx den = bracket_falling(Cplx(n + k - 1), k, P) * bracket_falling(-u, k, P);
  return num / den;
}

// Extreme-down bottom row: d = c - k.
Cplx l_bot_down(int k, double m, double n, int j, Cplx u, const ModelParams& P) {
  const Cplx num = bracket_falling(Cplx((n + m) / 2.0), j, P) *
                   bracket_falling(Cplx((n - m) / 2.0), k - j, P) *
                   bracket_falling(-u + ((m + n) / 2.0 - j), k - j, P) *
                   bracket_falling(-u + ((n - m) / 2.0 + j - k), j, P);
  const Cplx den = bracket_falling(Cplx(n), k, P) * bracket_falling(-u, k, P);
  return num / den;
}

}  // namespace

Cplx l_eval(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P) {
  if (k == 0) return (std::abs(a - b) < 1e-9 && std::abs(c - d) < 1e-9) ? 1.0 : 0.0;
  const double di = (b - a + k) / 2.0;  // top up-steps
  const double dj = (d - c + k) / 2.0;  // bottom up-steps
  if (!near_int(di) || !near_int(dj)) return 0.0;
  const int i = static_cast<int>(std::lround(di));
  const int jb = static_cast<int>(std::lround(dj));
  if (i < 0 || i > k || jb < 0 || jb > k) return 0.0;
  if (k == 1) return l_closed1(a, b, c, d, u, P);

  if (i == k) return l_top_up(k, a, c, k - jb, u, P);
  if (i == 0) return l_top_down(k, a, c, k - jb, u, P);
  if (jb == k) return l_bot_up(k, a, c, k - i, u, P);
  if (jb == 0) return l_bot_down(k, a, c, k - i, u, P);

  // interior: down-steps first on the top row, then an extreme-up level-i block
  const int j = jb;
  Cplx sum = 0.0;
  for (int l = std::max(0, i - j); l <= std::min(i, k - j); ++l) {
    const double mid_n = c - k + 2.0 * j - i + 2.0 * l;
    sum += l_eval(k - i, a, a - k + i, c, mid_n, u + static_cast<double>(i), P) *
           l_eval(i, a - k + i, b, mid_n, d, u, P);
  }
  return sum;
}

Cplx l_split_alt(int k, double a, double b, double c, double d, Cplx u, const ModelParams& P) {
  const double di = (b - a + k) / 2.0;
  const double dj = (d - c + k) / 2.0;
  if (!near_int(di) || !near_int(dj)) return 0.0;
  const int i = static_cast<int>(std::lround(di));
  const int j = static_cast<int>(std::lround(dj));
  if (i < 0 || i > k || j < 0 || j > k) return 0.0;
  if (i == 0 || i == k) return l_eval(k, a, b, c, d, u, P);
  // up-steps first on the top row, then an extreme-down level-(k-i) block
  Cplx sum = 0.0;
  for (int l = std::max(0, i + j - k); l <= std::min(i, j); ++l) {
    const double mid_n = c - i + 2.0 * l;
    sum += l_eval(i, a, a + i, c, mid_n, u + static_cast<double>(k - i), P) *
           l_eval(k - i, a + i, b, mid_n, d, u, P);
  }
  return sum;
}

double l_max_weight_margin(int k, int ell, double m, Cplx u, const ModelParams& P,
                           int* argmax_e) {
  const double a = m + ell;
  const double b = m + (k - ell);
  double claimed = 0.0, best_other = 0.0;
  int best_e = -1;
  double best_abs = -1.0;
  for (int e = 0; e <= k; ++e) {
    const double v = std::abs(l_component(k, e, a, b, a, b, u, P));
    if (v > best_abs) {
      best_abs = v;
      best_e = e;
    }
    if (e == ell)
      claimed = v;
    else
      best_other = std::max(best_other, v);
  }
  if (argmax_e) *argmax_e = best_e;
  return claimed - best_other;
}

}  // namespace fsos
