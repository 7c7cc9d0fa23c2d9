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
using test::max_abs_diff;

TEST_CASE("qubit state invariant", "[states]") {
  REQUIRE_NOTHROW(QubitState(Vec3(0, 0, 1)));
  REQUIRE_NOTHROW(QubitState(Vec3::Zero()));
  REQUIRE_THROWS_AS(QubitState(Vec3(0, 0, 1.01)), InvalidState);
}

TEST_CASE("bell states", "[states]") {
  REQUIRE(max_abs_diff(bell_state(BellLabel::PhiPlus).corr, -Mat3::Identity()) == 0.0);
  REQUIRE(max_abs_diff(bell_state(BellLabel::PhiMinus).corr, Mat3(Vec3(-1, 1, 1).asDiagonal())) == 0.0);
  REQUIRE(max_abs_diff(bell_state(BellLabel::PsiPlus).corr, Mat3(Vec3(1, -1, 1).asDiagonal())) == 0.0);
  REQUIRE(max_abs_diff(bell_state(BellLabel::PsiMinus).corr, Mat3(Vec3(1, 1, -1).asDiagonal())) == 0.0);
  for (BellLabel label : {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
                          BellLabel::PsiMinus}) {
    const TwoQubitFano f = bell_state(label);
    REQUIRE(f.r_a.norm() == 0.0);
    REQUIRE(f.r_b.norm() == 0.0);
    REQUIRE(f.is_physical(1e-12));
  }
}

TEST_CASE("werner states", "[states]") {
  SECTION("endpoints") {
    REQUIRE(max_abs_diff(werner_state(BellLabel::PsiMinus, 1.0).corr,
                         bell_state(BellLabel::PsiMinus).corr) == 0.0);
    REQUIRE(werner_state(BellLabel::PhiPlus, 0.0).corr.cwiseAbs().maxCoeff() == 0.0);
  }
  SECTION("separability boundary stays physical") {
    REQUIRE(werner_state(BellLabel::PhiMinus, 1.0 / 3.0).is_physical(1e-12));
    REQUIRE(werner_state(BellLabel::PhiMinus, -1.0 / 3.0).is_physical(1e-12));
  }
  SECTION("window validation") {
    REQUIRE_THROWS_AS(werner_state(BellLabel::PhiPlus, 1.1), OutOfRange);
    REQUIRE_THROWS_AS(werner_state(BellLabel::PhiPlus, -0.4), OutOfRange);
  }
}

TEST_CASE("canonicalize", "[states]") {
  SECTION("bell states reduce to a unit bell diagonal") {
    for (BellLabel label : {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
                            BellLabel::PsiMinus}) {
      const CanonicalForm c = canonicalize(bell_state(label));
      REQUIRE((c.r_d.cwiseAbs() - Vec3(1, 1, 1)).cwiseAbs().maxCoeff() < 1e-13);
      REQUIRE(c.r_d[0] * c.r_d[1] * c.r_d[2] == Catch::Approx(-1.0).margin(1e-12));
    }
  }
  SECTION("reassembly property") {
    Rng rng = make_rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const TwoQubitFano f = random_fano(rng);
      const CanonicalForm c = canonicalize(f);
      const Mat3 rebuilt =
          c.o_a.matrix().transpose() * c.r_d.asDiagonal() * c.o_b.matrix();
      REQUIRE(max_abs_diff(rebuilt, f.corr) < 1e-12);
      REQUIRE((c.r_c_a - c.o_a * f.r_a).cwiseAbs().maxCoeff() < 1e-14);
      REQUIRE((c.r_c_b - c.o_b * f.r_b).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  SECTION("r_d is invariant under local rotations of the input") {
    Rng rng = make_rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      const TwoQubitFano f = random_fano(rng);
      const Rotation qa = random_rotation(rng);
      const Rotation qb = random_rotation(rng);
      TwoQubitFano g;
      g.r_a = qa * f.r_a;
      g.r_b = qb * f.r_b;
      g.corr = qa.matrix() * f.corr * qb.matrix().transpose();
      const Vec3 rd_f = canonicalize(f).r_d;
      const Vec3 rd_g = canonicalize(g).r_d;
      REQUIRE((rd_f - rd_g).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("f_poly", "[states]") {
  REQUIRE(f_poly(0, 0, 0) == 1.0);
  REQUIRE(f_poly(1, 1, -1) == 0.0);
  REQUIRE(f_poly(0.5, 0.5, 0.5) == Catch::Approx(-27.0 / 16.0).margin(1e-15));

  SECTION("product and determinant forms agree") {
    Rng rng = make_rng(37);
    std::uniform_real_distribution<double> unif(-1.5, 1.5);
    for (int trial = 0; trial < 5000; ++trial) {
      const double r1 = unif(rng), r2 = unif(rng), r3 = unif(rng);
      REQUIRE(f_poly(r1, r2, r3) == Catch::Approx(f_poly_det_form(r1, r2, r3)).margin(1e-12));
    }
  }
}

TEST_CASE("positivity_rb_zero", "[states]") {
  SECTION("bell diagonal is positive") {
    REQUIRE(positivity_rb_zero(Vec3(-1, -1, -1), Vec3::Zero()));
  }
  SECTION("corr = identity is not") {
    REQUIRE_FALSE(positivity_rb_zero(Vec3(1, 1, 1), Vec3::Zero()));
  }
  SECTION("singular diagonal is rejected") {
    REQUIRE_THROWS_AS(positivity_rb_zero(Vec3(0, 1, 1), Vec3::Zero()), SingularCorrelation);
  }
  SECTION("differential against the dense oracle") {
    Rng rng = make_rng(47);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      Vec3 r_d(unif(rng), unif(rng), unif(rng));
      Vec3 r_c = uniform_ball(rng);
      if (r_d[0] * r_d[1] * r_d[2] == 0.0) continue;
      TwoQubitFano f;
      f.r_a = r_c;
      f.corr = r_d.asDiagonal();
      const double min_eig =
          densop::hermitian_eigenvalues(densop::fano_to_density(f)).minCoeff();
      if (std::abs(min_eig) <= 1e-10) continue;
      REQUIRE(positivity_rb_zero(r_d, r_c) == (min_eig > 0.0));
      ++checked;
    }
    REQUIRE(checked > 9000);
  }
}
