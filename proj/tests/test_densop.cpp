// Copyright 2026 The qtp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qtp/densop.hpp"
#include "qtp/states.hpp"

using namespace qtp;
using densop::CMat;
using test::max_abs_diff;

TEST_CASE("fano_to_density basics", "[densop]") {
  SECTION("maximally mixed") {
    TwoQubitFano f;
    REQUIRE(max_abs_diff(densop::fano_to_density(f), 0.25 * densop::identity(4)) < 1e-15);
  }
  SECTION("corr = diag(1,1,-1) assembles the (|01>+|10>)/sqrt(2) projector") {
    TwoQubitFano f;
    f.corr = Vec3(1, 1, -1).asDiagonal();
    CMat expected = CMat::Zero(4, 4);
    expected(1, 1) = 0.5;
    expected(1, 2) = 0.5;
    expected(2, 1) = 0.5;
    expected(2, 2) = 0.5;
    REQUIRE(max_abs_diff(densop::fano_to_density(f), expected) < 1e-15);
  }
  SECTION("bell labels carry their printed correlation matrices") {
    REQUIRE(max_abs_diff(bell_corr(BellLabel::PhiPlus), -Mat3::Identity()) == 0.0);
    REQUIRE(max_abs_diff(bell_corr(BellLabel::PsiMinus), Mat3(Vec3(1, 1, -1).asDiagonal())) == 0.0);
    for (BellLabel label : {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
                            BellLabel::PsiMinus}) {
      const CMat rho = densop::fano_to_density(bell_state(label));
      REQUIRE(densop::is_positive(rho, 1e-12));
      REQUIRE(std::abs((rho * rho - rho).cwiseAbs().maxCoeff()) < 1e-13);  // projector
    }
  }
}

TEST_CASE("fano round trip", "[densop]") {
  Rng rng = make_rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const TwoQubitFano f = random_fano(rng);
    const TwoQubitFano g = densop::density_to_fano(densop::fano_to_density(f));
    REQUIRE((f.r_a - g.r_a).cwiseAbs().maxCoeff() < 1e-13);
    REQUIRE((f.r_b - g.r_b).cwiseAbs().maxCoeff() < 1e-13);
    REQUIRE(max_abs_diff(f.corr, g.corr) < 1e-13);
  }
}

TEST_CASE("density_to_fano validation", "[densop]") {
  CMat rho = 0.25 * densop::identity(4);
  rho(0, 1) = std::complex<double>(0, 0.2);  // breaks hermiticity
  REQUIRE_THROWS_AS(densop::density_to_fano(rho), NotHermitian);
  REQUIRE_THROWS_AS(densop::density_to_fano(0.5 * densop::identity(4)), NotUnitTrace);
}

TEST_CASE("kron and partial_trace", "[densop]") {
  SECTION("identity products") {
    REQUIRE(max_abs_diff(densop::kron(densop::identity(2), densop::identity(2)),
                         densop::identity(4)) == 0.0);
  }
  SECTION("bell marginals are maximally mixed") {
    for (BellLabel label : {BellLabel::PhiPlus, BellLabel::PsiPlus}) {
      const CMat rho = densop::fano_to_density(bell_state(label));
      REQUIRE(max_abs_diff(densop::partial_trace(rho, 0), 0.5 * densop::identity(2)) < 1e-14);
      REQUIRE(max_abs_diff(densop::partial_trace(rho, 1), 0.5 * densop::identity(2)) < 1e-14);
    }
  }
  SECTION("partial trace of a product factorizes") {
    Rng rng = make_rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const CMat a = random_density(rng, 2);
      const CMat b = random_density(rng, 2);
      const CMat ab = densop::kron(a, b);
      REQUIRE(max_abs_diff(densop::partial_trace(ab, 0), b) < 1e-13);
      REQUIRE(max_abs_diff(densop::partial_trace(ab, 1), a) < 1e-13);
    }
  }
  SECTION("slot indexing on three qubits") {
    Rng rng = make_rng(19);
    const CMat a = random_density(rng, 2);
    const CMat b = random_density(rng, 2);
    const CMat c = random_density(rng, 2);
    const CMat abc = densop::kron(a, densop::kron(b, c));
    REQUIRE(max_abs_diff(densop::partial_trace(abc, 0), densop::kron(b, c)) < 1e-13);
    REQUIRE(max_abs_diff(densop::partial_trace(abc, 2), densop::kron(a, b)) < 1e-13);
    REQUIRE(max_abs_diff(densop::partial_trace(densop::partial_trace(abc, 0), 0), c) < 1e-13);
  }
  SECTION("dimension checks") {
    REQUIRE_THROWS_AS(densop::partial_trace(densop::identity(2), 0), DimensionMismatch);
    REQUIRE_THROWS_AS(densop::partial_trace(densop::identity(4), 2), DimensionMismatch);
  }
}

TEST_CASE("hermitian eigenvalues", "[densop]") {
  SECTION("werner spectra: (1-p)/4 three-fold and (1+3p)/4") {
    const CMat rho = densop::fano_to_density(werner_state(BellLabel::PhiPlus, 1.0 / 3.0));
    const Eigen::VectorXd ev = densop::hermitian_eigenvalues(rho);
    for (int k = 0; k < 3; ++k) REQUIRE(ev[k] == Catch::Approx(1.0 / 6.0).margin(1e-13));
    REQUIRE(ev[3] == Catch::Approx(0.5).margin(1e-13));

    const CMat lower =
        densop::fano_to_density(werner_state(BellLabel::PhiPlus, -1.0 / 3.0));
    const Eigen::VectorXd evl = densop::hermitian_eigenvalues(lower);
    REQUIRE(evl[0] == Catch::Approx(0.0).margin(1e-13));
    for (int k = 1; k < 4; ++k) REQUIRE(evl[k] == Catch::Approx(1.0 / 3.0).margin(1e-13));
  }
  SECTION("residual property") {
    Rng rng = make_rng(29);
    const CMat rho = random_density(rng, 8);
    Eigen::SelfAdjointEigenSolver<CMat> es(rho);
    for (int k = 0; k < 8; ++k) {
      const double res = (rho * es.eigenvectors().col(k) -
                          es.eigenvalues()[k] * es.eigenvectors().col(k))
                             .norm();
      REQUIRE(res < 1e-10);
    }
  }
}

TEST_CASE("is_positive", "[densop]") {
  SECTION("bell projector is positive") {
    REQUIRE(densop::is_positive(densop::fano_to_density(bell_state(BellLabel::PsiMinus)), 1e-12));
  }
  SECTION("corr = identity with zero marginals is not a state") {
    TwoQubitFano f;
    f.corr = Mat3::Identity();
    const Eigen::VectorXd ev = densop::hermitian_eigenvalues(densop::fano_to_density(f));
    REQUIRE(ev[0] == Catch::Approx(-0.5).margin(1e-13));
    REQUIRE(ev[3] == Catch::Approx(0.5).margin(1e-13));
    REQUIRE_FALSE(densop::is_positive(densop::fano_to_density(f), 1e-10));
  }
  SECTION("werner boundary p = -1/3") {
    const CMat rho = densop::fano_to_density(werner_state(BellLabel::PhiPlus, -1.0 / 3.0));
    REQUIRE(densop::is_positive(rho, 1e-12));
  }
}

TEST_CASE("choi_of_affine", "[densop]") {
  SECTION("identity channel gives a bell-proportional PSD choi") {
    const AffineChannel id;
    const CMat choi = densop::choi_of_affine(id);
    CMat expected = CMat::Zero(4, 4);
    expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
    REQUIRE(max_abs_diff(choi, expected) < 1e-14);
    REQUIRE(densop::is_positive(choi, 1e-12));
  }
  SECTION("s^(1/4) with s = 1 is the identity channel") {
    const AffineChannel ch{std::pow(1.0, 0.25) * Mat3::Identity(), Vec3::Zero()};
    REQUIRE(max_abs_diff(densop::choi_of_affine(ch), densop::choi_of_affine(AffineChannel{})) <
            1e-14);
  }
  SECTION("lambda = 2 identity is not PSD") {
    const AffineChannel ch{2.0 * Mat3::Identity(), Vec3::Zero()};
    REQUIRE_FALSE(densop::is_positive(densop::choi_of_affine(ch), 1e-10));
  }
}

TEST_CASE("unitary lift of rotations", "[densop]") {
  Rng rng = make_rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Rotation r = random_rotation(rng);
    const Mat2c u = densop::unitary_from_rotation(r);
    REQUIRE(max_abs_diff(CMat(u * u.adjoint()), densop::identity(2)) < 1e-12);
    REQUIRE(u.trace().real() >= -1e-12);
    REQUIRE(max_abs_diff(rotation_from_unitary(u).matrix(), r.matrix()) < 1e-9);
  }
  SECTION("half-turn rotations") {
    for (const SignMatrix& b : SignMatrix::all()) {
      const Mat2c u = densop::unitary_from_rotation(b.rotation());
      REQUIRE(max_abs_diff(rotation_from_unitary(u).matrix(), b.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("positivity differential against the closed-form system", "[densop]") {
  // Every physical Fano state accepted by the closed-form fast path must be
  // accepted by the oracle and vice versa; exercised at scale in the
  // acceptance suite, spot-checked here.
  Rng rng = make_rng(43);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Vec3 r_d(unif(rng), unif(rng), unif(rng));
    const Vec3 r_c = 0.8 * uniform_ball(rng);
    if (r_d[0] * r_d[1] * r_d[2] == 0.0) continue;
    TwoQubitFano f;
    f.r_a = r_c;
    f.corr = r_d.asDiagonal();
    const double min_eig =
        densop::hermitian_eigenvalues(densop::fano_to_density(f)).minCoeff();
    if (std::abs(min_eig) <= 1e-10) continue;  // boundary band excluded
    REQUIRE(positivity_rb_zero(r_d, r_c) == (min_eig > 0.0));
    ++checked;
  }
  REQUIRE(checked > 1500);
}
