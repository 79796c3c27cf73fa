// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fsos/bracket.hpp"
#include "fsos/tail.hpp"
#include "test_util.hpp"

using fsos::Cplx;
using fsos::SqrtMode;
using fsos::WbarConvention;

namespace {
// Desk-scale example configuration used throughout: level 1, height 4.3.
const fsos::ModelParams P1 = fsos::make_params(0.3, 5.7, 1);
const double kN = 4.3;
const Cplx kU1(-0.31, 0.02);
const Cplx kU2(-0.64, -0.015);
const std::vector<Cplx> kV{Cplx(-0.52, 0.01)};

constexpr SqrtMode kModes[] = {SqrtMode::Joint, SqrtMode::Split};
}  // namespace

TEST_CASE("symmetrization weights: constant function and an exact annihilation") {
  const std::vector<Cplx> v{Cplx(-0.3, 0.04), Cplx(-0.7, -0.06)};
  const Cplx one = fsos::weak_symmetrize([](const std::vector<Cplx>&) { return Cplx(1); }, v,
                                         P1);
  const Cplx w = fsos::bracket(v[1] - v[0] - 1.0, P1) / fsos::bracket(v[1] - v[0] + 1.0, P1);
  CHECK(close(one, 1.0 + w, 1e-12));

  // [v1 - v2 + 1] is weakly zero: the swap term contributes exactly -[v1-v2+1].
  const Cplx killed = fsos::weak_symmetrize(
      [&](const std::vector<Cplx>& vv) { return fsos::bracket(vv[0] - vv[1] + 1.0, P1); }, v,
      P1);
  CHECK(std::abs(killed) < 1e-12 * std::abs(fsos::bracket(v[0] - v[1] + 1.0, P1)));
}

TEST_CASE("tail-vertex integrand vanishes weakly at the example point") {
  for (SqrtMode m : kModes)
    CHECK(fsos::weak_vanish_lambda(1, kN, kU1, kU2, kV, P1, m).relative() < 1e-8);
}

TEST_CASE("vertex-vertex integrand vanishes weakly at the example point") {
  for (SqrtMode m : kModes)
    CHECK(fsos::weak_vanish_phi(1, kN, kU1, kU2, kV, P1, m).relative() < 1e-8);
}

TEST_CASE("barred weight is a fixed multiple of the plain exchange weight") {
  // Row-major corner ordering satisfies the relation; the transposed reading
  // must fail loudly, which is what the one-time calibration keys on.
  for (SqrtMode m : kModes) {
    CHECK(fsos::lw_proposition_residual(1, kN, 1, kU1, P1, m, WbarConvention::RowMajor)
          < 1e-8);
    CHECK(fsos::lw_proposition_residual(1, kN, 1, kU1, P1, m, WbarConvention::Transposed)
          > 1e-4);
  }
}

TEST_CASE("the two integrands are proportional inside the positive window") {
  // The dressing mixes three square-rooted closed forms, so the pointwise
  // relation needs every rooted bracket positive: heights n-1 .. n+2 must sit
  // inside (0, r).
  const double n = 3.1;
  for (SqrtMode m : kModes)
    CHECK(fsos::proportionality_residual(1, n, kU1, kU2, kV, P1, m) < 1e-8);
}

TEST_CASE("residue sum: null at shift 0, exact cancellation at every shift >= 1") {
  const fsos::ModelParams P = fsos::make_params(0.3, 9.0, 1);
  for (SqrtMode m : kModes) {
    // s = 0: every term carries an exact zero factor, perturbed or not.
    CHECK(std::abs(fsos::necessary_condition_sum(1, 3.5, 0, P, m)) < 1e-14);
    CHECK(std::abs(fsos::necessary_condition_sum(1, 3.5, 0, P, m, 0.31)) < 1e-14);
    // s >= 1 inside the positive window n in (2s, r-2): nontrivial terms that
    // cancel exactly; the knocked sum certifies the scale.
    for (int s : {1, 2}) {
      const double n = 2.0 * s + 1.5;
      const double mag = std::abs(fsos::necessary_condition_sum(1, n, s, P, m));
      const double broken = std::abs(fsos::necessary_condition_sum(1, n, s, P, m, 0.31));
      CHECK(broken > 1e-6);
      CHECK(mag / broken < 1e-8);
    }
  }
}

TEST_CASE("integrands expose a positive constituent-term scale") {
  double ts = 0.0;
  (void)fsos::i_lambda(1, kN, kU1, kU2, kV, P1, SqrtMode::Joint, 0.0, &ts);
  CHECK(ts > 0.0);
  double tp = 0.0;
  (void)fsos::i_phi(1, kN, kU1, kU2, kV, P1, SqrtMode::Joint, 0.0, &tp);
  CHECK(tp > 0.0);
}

TEST_CASE("a small spectral shift breaks the vanishing decisively") {
  const double delta = 1e-5;
  double best_lambda = 1e300, best_phi = 1e300;
  for (SqrtMode m : kModes) {
    best_lambda =
        std::min(best_lambda,
                 fsos::weak_vanish_lambda(1, kN, kU1, kU2, kV, P1, m, delta).relative());
    best_phi = std::min(
        best_phi, fsos::weak_vanish_phi(1, kN, kU1, kU2, kV, P1, m, delta).relative());
  }
  CHECK(best_lambda > 1e-6);
  CHECK(best_phi > 1e-6);
}

TEST_CASE("relative residual helper") {
  fsos::WeakVanish w;
  w.residual = 2.0;
  w.scale = 8.0;
  CHECK(w.relative() == doctest::Approx(0.25));
  w.scale = 0.0;
  CHECK(w.relative() == doctest::Approx(2.0));
}
