// SPDX-License-Identifier: Apache-2.0
#include "fsos/tail.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fsos/face.hpp"
#include "fsos/lmatrix.hpp"

namespace fsos {

namespace {

int parity_sign(int n) { return ((n % 2) + 2) % 2 == 0 ? 1 : -1; }

Cplx sqrt_ratio(Cplx num, Cplx den, SqrtMode mode) {
  return mode == SqrtMode::Joint ? std::sqrt(num / den) : std::sqrt(num) / std::sqrt(den);
}

// Shared permutation sweep: accumulate sum of w*f and max |w|*aux(f-call).
template <typename F>
void inversion_sweep(const std::vector<Cplx>& v, const ModelParams& P, F&& visit) {
  const int k = static_cast<int>(v.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<Cplx> vs(k);
    for (int i = 0; i < k; ++i) vs[i] = v[idx[i]];
    Cplx w = 1.0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (idx[i] > idx[j])
          w *= bracket(vs[i] - vs[j] - 1.0, P) / bracket(vs[i] - vs[j] + 1.0, P);
    visit(vs, w);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace

Cplx weak_symmetrize(const std::function<Cplx(const std::vector<Cplx>&)>& f,
                     const std::vector<Cplx>& v, const ModelParams& P) {
  Cplx total = 0.0;
  inversion_sweep(v, P, [&](const std::vector<Cplx>& vs, Cplx w) { total += w * f(vs); });
  return total;
}

Cplx i_lambda(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
              const ModelParams& P, SqrtMode mode, double delta, double* term_scale) {
  const double kd = k;
  Cplx first = static_cast<double>(parity_sign(k)) *
               sqrt_ratio(bracket(Cplx(n), P), bracket(Cplx(n + 2 * kd), P), mode) /
               bracket_pairing(n + kd, n + 2 * kd, k, P, mode);
  // The leading term needs the u1 exchange ratios as well as the u2 ones:
  // without them its pole in v_j at u1 + k/2 has no partner in the s-sum and
  // the symmetrized total cannot cancel.
  for (int j = 1; j <= k; ++j) {
    first *= bracket(u1 - v[j - 1] - kd / 2, P) / bracket(u1 - v[j - 1] + kd / 2, P);
    first *= bracket(-u2 - v[j - 1] + n - kd / 2 + (2.0 * j - 1.0), P) /
             bracket(-u2 - v[j - 1] - kd / 2, P);
  }
  double scale = std::abs(first);

  Cplx sum = 0.0;
  for (int s = 0; s <= k; ++s) {
    Cplx term = l_eval(k, n, n + kd - 2 * s, n + 2 * kd, n + kd, u1 + u2 + 1.0, P);
    term *= static_cast<double>(parity_sign(s)) *
            sqrt_ratio(bracket(Cplx(n + kd - 2 * s), P), bracket(Cplx(n + kd), P), mode) /
            bracket_pairing(n, n + kd - 2 * s, k, P, mode);
    // delta nudges only the sum side's leading exchange denominator, leaving
    // the stand-alone product intact, so their pole partners separate.
    for (int j = 1; j <= k - s; ++j)
      term *= bracket(u1 - v[j - 1] + n - kd / 2 + (2.0 * j - 1.0), P) /
              bracket(u1 - v[j - 1] + kd / 2 + (j == 1 ? delta : 0.0), P);
    for (int j = k - s + 1; j <= k; ++j)
      term *= bracket(-u2 - v[j - 1] + n - 3 * kd / 2 + (2.0 * j - 1.0), P) /
              bracket(-u2 - v[j - 1] - kd / 2, P);
    scale = std::max(scale, std::abs(term));
    sum += term;
  }
  if (term_scale) *term_scale = scale;
  return first - sum;
}

Cplx wbar(int k, double n, int s, Cplx u, const ModelParams& P, SqrtMode mode) {
  const double kd = k;
  Cplx w = static_cast<double>(parity_sign(k + s)) *
           sqrt_ratio(bracket(Cplx(n + 2 * kd), P) * bracket(Cplx(n + kd - 2 * s), P),
                      bracket(Cplx(n), P) * bracket(Cplx(n + kd), P), mode);
  w *= bracket_pairing(n + kd, n + 2 * kd, k, P, mode) /
       bracket_pairing(n, n + kd - 2 * s, k, P, mode);
  w *= l_eval(k, n, n + kd - 2 * s, n + 2 * kd, n + kd, u + 1.0, P);
  return w;
}

Cplx i_phi(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v, const ModelParams& P,
           SqrtMode mode, double delta, double* term_scale) {
  const double kd = k;
  Cplx first = 1.0;
  for (int j = 1; j <= k; ++j) {
    first *= bracket(u1 - v[j - 1] - kd / 2, P) / bracket(u1 - v[j - 1] + kd / 2, P);
    first *= bracket(u2 - v[j - 1] + n - kd / 2 + (2.0 * j - 1.0), P) /
             bracket(u2 - v[j - 1] + kd / 2, P);
  }
  double scale = std::abs(first);

  Cplx sum = 0.0;
  for (int s = 0; s <= k; ++s) {
    Cplx term = wbar(k, n, s, u1 - u2, P, mode);
    // delta nudges only the sum side's leading exchange denominator, leaving
    // the stand-alone product intact, so their pole partners separate.
    for (int j = 1; j <= k - s; ++j) {
      term *= bracket(u2 - v[j - 1] - kd / 2, P) /
              bracket(u2 - v[j - 1] + kd / 2 + (j == 1 ? delta : 0.0), P);
      term *= bracket(u1 - v[j - 1] + n - kd / 2 + (2.0 * j - 1.0), P) /
              bracket(u1 - v[j - 1] + kd / 2, P);
    }
    for (int j = k - s + 1; j <= k; ++j)
      term *= bracket(u2 - v[j - 1] + n - 3 * kd / 2 + (2.0 * j - 1.0), P) /
              bracket(u2 - v[j - 1] + kd / 2 + (j == 1 ? delta : 0.0), P);
    scale = std::max(scale, std::abs(term));
    sum += term;
  }
  if (term_scale) *term_scale = scale;
  return first - sum;
}

double lw_proposition_residual(int k, double n, int s, Cplx u, const ModelParams& P,
                               SqrtMode mode, WbarConvention conv, double delta) {
  const double kd = k;
  const auto plain = [&](int sp) {
    const HeightQuad quad = conv == WbarConvention::RowMajor
                                ? HeightQuad{n, n + kd, n + kd - 2 * sp, n}
                                : HeightQuad{n, n + kd - 2 * sp, n + kd, n};
    return face_weight_kk(k, quad, u, P);
  };
  // Cross-ratio form of "wbar(s)/plain(s) is independent of s", anchored at
  // the s = 0 corner where both orderings coincide.
  const Cplx lhs = wbar(k, n, s, u + delta, P, mode) * plain(0);
  const Cplx rhs = wbar(k, n, 0, u, P, mode) * plain(s);
  const double scale = std::max({1e-300, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

double proportionality_residual(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
                                const ModelParams& P, SqrtMode mode) {
  const double kd = k;
  const Cplx lhs = i_phi(k, n, u1, u2, v, P, mode);
  Cplx rhs = static_cast<double>(parity_sign(k)) *
             sqrt_ratio(bracket(Cplx(n + 2 * kd), P), bracket(Cplx(n), P), mode) *
             bracket_pairing(n + kd, n + 2 * kd, k, P, mode) *
             i_lambda(k, n, u1, -u2, v, P, mode);
  for (int j = 1; j <= k; ++j)
    rhs *= bracket(u2 - v[j - 1] - kd / 2, P) / bracket(u2 - v[j - 1] + kd / 2, P);
  const double scale = std::max({1e-300, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) / scale;
}

Cplx necessary_condition_sum(int k, double n, int s, const ModelParams& P, SqrtMode mode,
                             double delta) {
  const double kd = k;
  Cplx sum = 0.0;
  for (int t = 0; t <= k; ++t) {
    Cplx term = bracket_falling(Cplx(n + kd - s + delta), t, P) *
                bracket_falling(Cplx(static_cast<double>(s)), k - t, P) *
                bracket_falling(Cplx(2 * kd + n - 1 - s - t), k - t, P) *
                bracket_falling(Cplx(static_cast<double>(s + t - 1)), t, P);
    term *= static_cast<double>(parity_sign(s + t - k)) *
            sqrt_ratio(bracket(Cplx(n - 2 * s - 2 * t + 2 * kd), P), bracket(Cplx(n), P), mode);
    term /= bracket_pairing(n + kd - 2 * s, n + 2 * kd - 2 * s - 2 * t, k, P, mode);
    sum += term;
  }
  return sum;
}

WeakVanish weak_vanish_lambda(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
                              const ModelParams& P, SqrtMode mode, double delta) {
  WeakVanish out;
  Cplx total = 0.0;
  inversion_sweep(v, P, [&](const std::vector<Cplx>& vs, Cplx w) {
    double ts = 0.0;
    total += w * i_lambda(k, n, u1, u2, vs, P, mode, delta, &ts);
    out.scale = std::max(out.scale, std::abs(w) * ts);
  });
  out.residual = std::abs(total);
  return out;
}

WeakVanish weak_vanish_phi(int k, double n, Cplx u1, Cplx u2, const std::vector<Cplx>& v,
                           const ModelParams& P, SqrtMode mode, double delta) {
  WeakVanish out;
  Cplx total = 0.0;
  inversion_sweep(v, P, [&](const std::vector<Cplx>& vs, Cplx w) {
    double ts = 0.0;
    total += w * i_phi(k, n, u1, u2, vs, P, mode, delta, &ts);
    out.scale = std::max(out.scale, std::abs(w) * ts);
  });
  out.residual = std::abs(total);
  return out;
}

}  // namespace fsos
