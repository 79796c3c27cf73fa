// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fsos/vertex.hpp"
#include "test_util.hpp"

using fsos::Cplx;
using fsos::Mat;

namespace {
const fsos::ModelParams P1 = fsos::make_params(0.3, 5.7, 1);
const fsos::ModelParams P2 = fsos::make_params(0.3, 5.7, 2);

// Anisotropy invariants of the weight quadruple: both are independent of the
// spectral parameter for a consistent elliptic parametrization.
std::pair<Cplx, Cplx> invariants(Cplx u) {
  const auto [a, b, c, d] = fsos::r_weights(u, P1);
  const Cplx delta = (a * a + b * b - c * c - d * d) / (2.0 * (a * b + c * d));
  const Cplx gamma = (a * b - c * d) / (a * b + c * d);
  return {delta, gamma};
}
}  // namespace

TEST_CASE("weight quadruple: initial condition and spectral invariants") {
  const auto [a0, b0, c0, d0] = fsos::r_weights(Cplx(0, 0), P1);
  CHECK(close(a0, Cplx(1, 0), 1e-12));
  CHECK(std::abs(b0) < 1e-12);
  CHECK(close(c0, Cplx(1, 0), 1e-12));
  CHECK(std::abs(d0) < 1e-12);

  const auto [dA, gA] = invariants(Cplx(-0.31, 0.02));
  const auto [dB, gB] = invariants(Cplx(-0.77, -0.04));
  const auto [dC, gC] = invariants(Cplx(0.43, 0.11));
  CHECK(close(dA, dB, 1e-10));
  CHECK(close(dA, dC, 1e-10));
  CHECK(close(gA, gB, 1e-10));
  CHECK(close(gA, gC, 1e-10));
}

TEST_CASE("weight matrix layout and the u = 0 permutation point") {
  const Cplx u(-0.41, 0.03);
  const auto [a, b, c, d] = fsos::r_weights(u, P1);
  const Cplx r0 = fsos::r0_scalar(u, P1);
  const Mat M = fsos::r_matrix(u, P1);
  CHECK(close(M(0, 0), r0 * a, 1e-13));
  CHECK(close(M(3, 3), r0 * a, 1e-13));
  CHECK(close(M(1, 1), r0 * b, 1e-13));
  CHECK(close(M(2, 2), r0 * b, 1e-13));
  CHECK(close(M(1, 2), r0 * c, 1e-13));
  CHECK(close(M(2, 1), r0 * c, 1e-13));
  CHECK(close(M(0, 3), r0 * d, 1e-13));
  CHECK(close(M(3, 0), r0 * d, 1e-13));
  CHECK(std::abs(M(0, 1)) + std::abs(M(0, 2)) + std::abs(M(1, 0)) + std::abs(M(1, 3)) +
            std::abs(M(2, 0)) + std::abs(M(2, 3)) + std::abs(M(3, 1)) +
            std::abs(M(3, 2)) ==
        0.0);

  const Mat M0 = fsos::r_matrix(Cplx(0, 0), P1);
  Mat swap = Mat::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK((M0 - swap).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("scalar factor identities at fixed points") {
  for (const Cplx u : {Cplx(-0.37, 0.01), Cplx(-0.62, -0.03)}) {
    CHECK(fsos::r0_inversion_residual(u, P1) < 1e-12);
    CHECK(fsos::r0_shift_residual(u, P1) < 1e-12);
  }
}

TEST_CASE("symmetrizer is an idempotent projector of rank k + 1") {
  for (int k : {2, 3}) {
    const Mat Pi = fsos::symmetrizer(k);
    CHECK((Pi * Pi - Pi).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(close(Pi.trace(), Cplx(k + 1, 0), 1e-12));
    // Invariant under reversing all spins.
    const int dim = 1 << k;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        CHECK(close(Pi(i, j), Pi(dim - 1 - i, dim - 1 - j), 1e-13));
  }
}

TEST_CASE("level-1 fusion reduces to the bare weight matrix") {
  const Cplx u(-0.53, 0.02);
  const fsos::RTensor T = fsos::fused_r(u, 1, P1);
  const Mat M = fsos::r_matrix(u, P1);
  for (int e1 = 0; e1 <= 1; ++e1)
    for (int e2 = 0; e2 <= 1; ++e2)
      for (int f1 = 0; f1 <= 1; ++f1)
        for (int f2 = 0; f2 <= 1; ++f2)
          CHECK(close(T.at(e1, e2, f1, f2), M(f1 * 2 + f2, e1 * 2 + e2), 1e-12));
}

TEST_CASE("RTensor::matrix lays entries out by output-major pairs") {
  const fsos::RTensor T = fsos::fused_r(Cplx(-0.4, 0.01), 2, P2);
  const Mat M = T.matrix();
  const int d = T.dim();
  for (int e1 = 0; e1 < d; ++e1)
    for (int e2 = 0; e2 < d; ++e2)
      for (int f1 = 0; f1 < d; ++f1)
        for (int f2 = 0; f2 < d; ++f2)
          CHECK(M(f1 * d + f2, e1 * d + e2) == T.at(e1, e2, f1, f2));
}

TEST_CASE("triangle and inversion residuals vanish at fixed points") {
  const Cplx u1(-0.31, 0.012), u2(-0.57, -0.02), u3(-0.83, 0.03);
  CHECK(fsos::ybe_residual(1, u1, u2, u3, P1) < 1e-10);
  CHECK(fsos::unitarity_residual(1, u1, P1) < 1e-10);
  CHECK(fsos::ybe_residual(2, u1, u2, u3, P2) < 1e-9);
  CHECK(fsos::unitarity_residual(2, u1, P2) < 1e-9);
}

TEST_CASE("crossing conjugator: closed forms") {
  const Mat Q1 = fsos::q_cross_matrix(1, P1);
  CHECK(Q1.rows() == 2);
  CHECK(close(Q1(0, 0), Cplx(0, 0), 1e-14));
  CHECK(close(Q1(1, 1), Cplx(0, 0), 1e-14));
  CHECK(close(Q1(0, 1), Cplx(0, -1), 1e-14));
  CHECK(close(Q1(1, 0), Cplx(0, 1), 1e-14));
  for (const Cplx u : {Cplx(-0.45, 0.02), Cplx(-0.71, -0.01)}) {
    CHECK(fsos::crossing_residual(1, u, Q1, P1) < 1e-9);
  }
  const Mat Q2 = fsos::q_cross_matrix(2, P2);
  CHECK(fsos::crossing_residual(2, Cplx(-0.52, 0.013), Q2, P2) < 1e-8);
}

TEST_CASE("principal regime: exchange entries dominate with the level-1 sign pattern") {
  for (double u : {-0.2, -0.5, -0.8}) {
    const fsos::DominanceReport rep1 = fsos::principal_regime_dominance(1, u, P1);
    CHECK(rep1.ok);
    CHECK(rep1.k1_signs_ok);
    const fsos::DominanceReport rep2 = fsos::principal_regime_dominance(2, u, P2);
    CHECK(rep2.ok);
  }
}
