// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fsos/bracket.hpp"
#include "fsos/intertwiner.hpp"
#include "fsos/theta.hpp"
#include "fsos/vertex.hpp"
#include "test_util.hpp"

using fsos::Cplx;

namespace {
const fsos::ModelParams P1 = fsos::make_params(0.3, 5.7, 1);
const fsos::ModelParams P2 = fsos::make_params(0.3, 5.7, 2);
const Cplx kU(-0.43, 0.03);
const Cplx kV(-0.67, -0.02);
}  // namespace

TEST_CASE("intertwining vector components and their companions") {
  const double a = 2.3, b = 1.3;
  const Cplx arg = ((a - b) * kU + a) / (2.0 * P1.r);
  CHECK(close(fsos::psi(1, kU, a, b, P1), fsos::theta0(arg, P1.tau / 2.0), 1e-13));
  CHECK(close(fsos::psi(-1, kU, a, b, P1), fsos::theta3(arg, P1.tau / 2.0), 1e-13));
  CHECK_THROWS_AS(fsos::psi(1, kU, 2.3, 4.3, P1), std::domain_error);

  const Cplx star_pref =
      -(a - b) / (2.0 * fsos::bracket(Cplx(b), P1) * fsos::bracket(kU, P1)) * P1.C2;
  CHECK(close(fsos::psi_star(1, kU, a, b, P1),
              star_pref * fsos::psi(-1, kU - 1.0, a, b, P1), 1e-13));

  const Cplx prime_pref = fsos::bracket(kU, P1) * fsos::bracket(Cplx(a), P1) /
                          (fsos::bracket(kU - 1.0, P1) * fsos::bracket(Cplx(b), P1));
  CHECK(close(fsos::psi_prime(1, kU, a, b, P1),
              prime_pref * fsos::psi(1, kU - 2.0, a, b, P1), 1e-13));
}

TEST_CASE("level-1 inversion relations at fixed points") {
  const double b = 1.6;
  CHECK(fsos::inversion_ac_residual(kU, b + 1, b, b + 1, P1) < 1e-10);
  CHECK(fsos::inversion_ac_residual(kU, b + 1, b, b - 1, P1) < 1e-10);
  CHECK(fsos::inversion_eps_residual(kU, b, P1) < 1e-10);
  CHECK(fsos::inversion_prime_bc_residual(kU, b, b + 1, b + 1, P1) < 1e-10);
  CHECK(fsos::inversion_prime_bc_residual(kU, b, b + 1, b - 1, P1) < 1e-10);
  CHECK(fsos::inversion_prime_eps_residual(kU, b, P1) < 1e-10);
}

TEST_CASE("fused inversion relations at fixed points") {
  const double b = 1.6;
  CHECK(fsos::fused_inversion_ac_residual(2, kU, b + 2, b, b + 2, P2) < 1e-9);
  CHECK(fsos::fused_inversion_ac_residual(2, kU, b + 2, b, b, P2) < 1e-9);
  CHECK(fsos::fused_inversion_eps_residual(2, kU, b, P2) < 1e-9);
  CHECK(fsos::fused_inversion_prime_bc_residual(2, kU, b, b + 2, b + 2, P2) < 1e-9);
  CHECK(fsos::fused_inversion_prime_eps_residual(2, kU, b, P2) < 1e-9);
}

TEST_CASE("fused vectors do not depend on the summed decomposition") {
  CHECK(fsos::psi_fused_path_spread(2, 1, kU, 3.3, 1.3, P2) < 1e-12);
  CHECK(fsos::psi_fused_path_spread(2, 1, kU, 1.3, 1.3, P2) < 1e-12);
  CHECK(fsos::psi_star_fused_decomp_spread(2, 1, kU, 3.3, 1.3, P2) < 1e-12);
}

TEST_CASE("vertex weights intertwine with height weights at fixed points") {
  CHECK(fsos::vertex_face_residual(1, kU, kV, 1.4, 2.4, 1.4, P1) < 1e-9);
  CHECK(fsos::vertex_face_residual(1, kU, kV, 1.4, 2.4, 3.4, P1) < 1e-9);
  CHECK(fsos::vertex_face_dual_residual(1, kU, kV, 1.4, 2.4, 1.4, P1) < 1e-9);
  CHECK(fsos::vertex_face_residual(2, kU, kV, 1.3, 3.3, 1.3, P2) < 1e-9);
  CHECK(fsos::vertex_face_dual_residual(2, kU, kV, 1.3, 3.3, 1.3, P2) < 1e-9);
}

TEST_CASE("normalization constant pinned by the inversion relations") {
  const Cplx c2a = fsos::c2_from_inversion(kU, 2.6, 1.6, P1);
  const Cplx c2b = fsos::c2_from_inversion(kV, 1.4, 2.4, P1);
  CHECK(close(std::abs(c2a), std::abs(P1.C2), 1e-10));
  CHECK(close(std::abs(c2b), std::abs(P1.C2), 1e-10));
  CHECK(close(std::abs(P1.C2), std::abs(std::pow(P1.x, -P1.r / 2.0) * P1.tau), 1e-12));
}

TEST_CASE("crossing normalization is uniform within a height-parity class") {
  const fsos::Mat Q1 = fsos::q_cross_matrix(1, P1);
  const fsos::CrossPsiResult even =
      fsos::cross_psi_normalization(1, kU, P1, {{3, 2}, {1, 2}, {5, 4}}, Q1);
  CHECK(even.spread / std::max(1.0, std::abs(even.value)) < 1e-9);
  const fsos::CrossPsiResult odd =
      fsos::cross_psi_normalization(1, kU, P1, {{2, 1}, {2, 3}, {4, 3}}, Q1);
  CHECK(odd.spread / std::max(1.0, std::abs(odd.value)) < 1e-9);
}
