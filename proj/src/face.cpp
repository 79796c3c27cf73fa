// SPDX-License-Identifier: Apache-2.0
#include "fsos/face.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "fsos/theta.hpp"
#include "fsos/vertex.hpp"

namespace fsos {

namespace {

bool near_int(double v) { return std::abs(v - std::round(v)) < 1e-9; }

int step_of(double from, double to) {
  const double d = to - from;
  if (std::abs(d - 1.0) < 1e-9) return 1;
  if (std::abs(d + 1.0) < 1e-9) return -1;
  return 0;
}

struct R0Cache {
  const ModelParams& P;
  std::map<std::pair<double, double>, Cplx> vals;
  Cplx get(Cplx u) {
    const auto key = std::make_pair(u.real(), u.imag());
    auto it = vals.find(key);
    if (it != vals.end()) return it->second;
    const Cplx v = r0_scalar(u, P);
    vals.emplace(key, v);
    return v;
  }
};

Cplx w1(const HeightQuad& q, Cplx u, R0Cache& r0) {
  const ModelParams& P = r0.P;
  const int eb = step_of(q.a, q.b);
  const int ed = step_of(q.a, q.d);
  if (eb == 0 || ed == 0) return 0.0;
  const double n = q.a;
  if (eb == ed) {
    if (std::abs(q.c - (n + 2.0 * eb)) < 1e-9) return r0.get(u);
    if (std::abs(q.c - n) < 1e-9) {
      const Cplx num = bracket(Cplx(n) - static_cast<double>(eb) * u, P) * bracket(Cplx(1.0), P);
      return r0.get(u) * num / (bracket(Cplx(n), P) * bracket(1.0 + u, P));
    }
    return 0.0;
  }
  if (std::abs(q.c - n) < 1e-9) {
    const Cplx num = bracket(Cplx(n + eb), P) * bracket(u, P);
    return r0.get(u) * num / (bracket(Cplx(n), P) * bracket(1.0 + u, P));
  }
  return 0.0;
}

std::vector<double> staircase(double h0, double h1, int steps) {
  // Canonical fixed path: +1 steps first, then -1.
  const double diff = h1 - h0;
  const int ups = static_cast<int>(std::round((steps + diff) / 2.0));
  std::vector<double> mids;
  double h = h0;
  for (int i = 1; i < steps; ++i) {
    h += (i <= ups) ? 1.0 : -1.0;
    mids.push_back(h);
  }
  return mids;
}

bool admissible_k(double hi, double lo, int k) {
  const double d = hi - lo;
  if (!near_int(d)) return false;
  const long long di = static_cast<long long>(std::llround(d));
  return std::llabs(di) <= k && ((di + k) % 2 == 0);
}

Cplx face_k1_impl(int k, const HeightQuad& q, Cplx u, R0Cache& r0,
                  const std::vector<double>* top_path) {
  if (k == 1) return w1(q, u, r0);
  if (std::abs(std::abs(q.a - q.d) - 1.0) > 1e-9 || std::abs(std::abs(q.b - q.c) - 1.0) > 1e-9)
    return 0.0;
  if (!admissible_k(q.a, q.b, k)) return 0.0;
  std::vector<double> top = top_path ? *top_path : staircase(q.a, q.b, k);
  std::vector<double> tops;
  tops.reserve(k + 1);
  tops.push_back(q.a);
  for (double h : top) tops.push_back(h);
  tops.push_back(q.b);

  // Sum over bottom paths d -> c recursively, walking the row left to right.
  Cplx total = 0.0;
  auto rec = [&](auto&& self, int pos, double dcur, Cplx acc) -> void {
    if (acc == Cplx(0)) return;
    const Cplx uu = u + static_cast<double>(k - 1 - pos);
    if (pos == k - 1) {
      total += acc * w1({tops[pos], tops[pos + 1], dcur, q.c}, uu, r0);
      return;
    }
    for (int s : {1, -1}) {
      const double dnext = dcur + s;
      const Cplx w = w1({tops[pos], tops[pos + 1], dcur, dnext}, uu, r0);
      if (w != Cplx(0)) self(self, pos + 1, dnext, acc * w);
    }
  };
  rec(rec, 0, q.d, Cplx(1.0));
  return total;
}

Cplx face_kk_impl(int k, const HeightQuad& q, Cplx u, R0Cache& r0,
                  const std::vector<double>* right_path) {
  if (k == 1) return w1(q, u, r0);
  if (!admissible_k(q.a, q.b, k) || !admissible_k(q.d, q.c, k) || !admissible_k(q.a, q.d, k) ||
      !admissible_k(q.b, q.c, k))
    return 0.0;
  std::vector<double> right = right_path ? *right_path : staircase(q.b, q.c, k);
  std::vector<double> rights;
  rights.push_back(q.b);
  for (double h : right) rights.push_back(h);
  rights.push_back(q.c);

  Cplx total = 0.0;
  auto rec = [&](auto&& self, int row, double acur, Cplx acc) -> void {
    if (acc == Cplx(0)) return;
    const Cplx uu = u - static_cast<double>(k - 1 - row);
    if (row == k - 1) {
      total += acc * face_k1_impl(k, {acur, rights[row], q.d, rights[row + 1]}, uu, r0, nullptr);
      return;
    }
    for (int s : {1, -1}) {
      const double anext = acur + s;
      const Cplx w = face_k1_impl(k, {acur, rights[row], anext, rights[row + 1]}, uu, r0, nullptr);
      if (w != Cplx(0)) self(self, row + 1, anext, acc * w);
    }
  };
  rec(rec, 0, q.a, Cplx(1.0));
  return total;
}

}  // namespace

Cplx face_weight1(const HeightQuad& q, Cplx u, const ModelParams& P) {
  R0Cache r0{P, {}};
  return w1(q, u, r0);
}

Cplx face_weight_k1(int k, const HeightQuad& q, Cplx u, const ModelParams& P,
                    const std::vector<double>* top_path) {
  R0Cache r0{P, {}};
  return face_k1_impl(k, q, u, r0, top_path);
}

Cplx face_weight_kk(int k, const HeightQuad& q, Cplx u, const ModelParams& P,
                    const std::vector<double>* right_path) {
  R0Cache r0{P, {}};
  return face_kk_impl(k, q, u, r0, right_path);
}

std::vector<std::vector<double>> unit_paths(double h0, double h1, int steps) {
  std::vector<std::vector<double>> out;
  std::vector<double> cur;
  auto rec = [&](auto&& self, double h, int left) -> void {
    if (left == 1) {
      if (std::abs(std::abs(h1 - h) - 1.0) < 1e-9) out.push_back(cur);
      return;
    }
    for (int s : {1, -1}) {
      cur.push_back(h + s);
      self(self, h + s, left - 1);
      cur.pop_back();
    }
  };
  if (steps == 1) {
    if (std::abs(std::abs(h1 - h0) - 1.0) < 1e-9) out.push_back({});
    return out;
  }
  rec(rec, h0, steps);
  return out;
}

double k1_path_spread(int k, const HeightQuad& q, Cplx u, const ModelParams& P) {
  const auto paths = unit_paths(q.a, q.b, k);
  if (paths.empty()) return 0.0;
  double lo = 1e300, hi = 0.0;
  Cplx ref{};
  bool first = true;
  double spread = 0.0;
  for (const auto& path : paths) {
    const Cplx v = face_weight_k1(k, q, u, P, &path);
    if (first) {
      ref = v;
      first = false;
    } else {
      spread = std::max(spread, std::abs(v - ref));
    }
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  (void)lo;
  (void)hi;
  return spread;
}

double kk_path_spread(int k, const HeightQuad& q, Cplx u, const ModelParams& P) {
  const auto paths = unit_paths(q.b, q.c, k);
  if (paths.empty()) return 0.0;
  Cplx ref{};
  bool first = true;
  double spread = 0.0;
  for (const auto& path : paths) {
    const Cplx v = face_weight_kk(k, q, u, P, &path);
    if (first) {
      ref = v;
      first = false;
    } else {
      spread = std::max(spread, std::abs(v - ref));
    }
  }
  return spread;
}

int gauge_sign(long long a) {
  // s_0 = +1, s_{a+1} = (-1)^a s_a  =>  s_a = (-1)^{a(a-1)/2}
  const long long e = a * (a - 1) / 2;
  return (e % 2 == 0) ? 1 : -1;
}

Cplx gauge_g(long long a, const ModelParams& P) {
  return static_cast<double>(gauge_sign(a)) * std::sqrt(bracket(Cplx(static_cast<double>(a)), P));
}

Cplx gauge_G(int k, long long a, long long b, const ModelParams& P) {
  return gauge_g(a, P) /
         (gauge_g(b, P) * bracket_pairing(static_cast<double>(a), static_cast<double>(b), k, P));
}

double face_ybe_residual(int k, double a, double b, double c, double d, double e, double f,
                         Cplx u, Cplx v, const ModelParams& P) {
  Cplx lhs = 0.0, rhs = 0.0;
  const double glo = std::min({a, b, c, d, e, f}) - k;
  const double ghi = std::max({a, b, c, d, e, f}) + k;
  for (double g = glo; g <= ghi + 0.5; g += 1.0) {
    lhs += face_weight_kk(k, {a, b, f, g}, u, P) * face_weight_kk(k, {f, g, e, d}, v, P) *
           face_weight_kk(k, {b, c, g, d}, u - v, P);
    rhs += face_weight_kk(k, {a, g, f, e}, u - v, P) * face_weight_kk(k, {a, b, g, c}, v, P) *
           face_weight_kk(k, {g, c, e, d}, u, P);
  }
  return std::abs(lhs - rhs);
}

double face_unitarity_residual(int k, double a, double b, double c, double d, Cplx u,
                               const ModelParams& P) {
  Cplx sum = 0.0;
  for (double s = std::min(a, c) - k; s <= std::max(a, c) + k + 0.5; s += 1.0) {
    sum += face_weight_kk(k, {a, s, d, c}, -u, P) * face_weight_kk(k, {a, b, s, c}, u, P);
  }
  const double delta = (std::abs(b - d) < 1e-9) ? 1.0 : 0.0;
  return std::abs(sum - delta);
}

double face_crossing_residual(int k, long long a, long long b, long long c, long long d, Cplx u,
                              const ModelParams& P) {
  const Cplx lhs = face_weight_kk(
      k, {static_cast<double>(d), static_cast<double>(c), static_cast<double>(a),
          static_cast<double>(b)},
      u, P);
  const Cplx rhs = gauge_G(k, a, d, P) / gauge_G(k, b, c, P) *
                   face_weight_kk(k, {static_cast<double>(a), static_cast<double>(d),
                                      static_cast<double>(b), static_cast<double>(c)},
                                  -1.0 - u, P);
  return std::abs(lhs - rhs);
}

double face_reflection_residual(int k, double a, double b, double c, double d, Cplx u,
                                const ModelParams& P) {
  const Cplx lhs = face_weight_kk(k, {d, a, c, b}, u, P);
  const Cplx factor = bracket_pairing(a, b, k, P) * bracket_pairing(d, a, k, P) /
                      (bracket_pairing(d, c, k, P) * bracket_pairing(c, b, k, P));
  const Cplx rhs = factor * face_weight_kk(k, {d, c, a, b}, u, P);
  return std::abs(lhs - rhs);
}

double face_shift_2r_residual(int k, const HeightQuad& q, Cplx u, const ModelParams& P) {
  const double s = 2.0 * P.r;
  const Cplx w0 = face_weight_kk(k, q, u, P);
  const Cplx w1v = face_weight_kk(k, {q.a + s, q.b + s, q.d + s, q.c + s}, u, P);
  return std::abs(std::abs(w1v) - std::abs(w0));
}

}  // namespace fsos
