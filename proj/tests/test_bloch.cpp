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
#include "qtp/bloch.hpp"

using namespace qtp;
using test::max_abs_diff;

TEST_CASE("rotation_from_unitary on generators", "[bloch]") {
  const std::complex<double> i(0, 1);

  SECTION("identity") {
    Mat2c u = Mat2c::Identity();
    REQUIRE(max_abs_diff(rotation_from_unitary(u).matrix(), Mat3::Identity()) < 1e-14);
  }
  SECTION("pauli X conjugates to diag(1,-1,-1)") {
    Mat2c u;
    u << 0, 1, 1, 0;
    Mat3 expected = Vec3(1, -1, -1).asDiagonal();
    REQUIRE(max_abs_diff(rotation_from_unitary(u).matrix(), expected) < 1e-14);
  }
  SECTION("hadamard swaps x and z, flips y") {
    Mat2c u;
    u << 1, 1, 1, -1;
    u /= std::sqrt(2.0);
    Mat3 expected;
    expected << 0, 0, 1, 0, -1, 0, 1, 0, 0;
    REQUIRE(max_abs_diff(rotation_from_unitary(u).matrix(), expected) < 1e-14);
  }
  SECTION("global phase is irrelevant") {
    Rng rng = make_rng(7);
    const Mat2c u = random_unitary2(rng);
    const Mat2c v = std::exp(i * 0.7312) * u;
    REQUIRE(max_abs_diff(rotation_from_unitary(u).matrix(),
                         rotation_from_unitary(v).matrix()) < 1e-13);
  }
  SECTION("non-unitary input is rejected") {
    Mat2c u = Mat2c::Identity() * 1.5;
    REQUIRE_THROWS_AS(rotation_from_unitary(u), NonUnitary);
  }
}

TEST_CASE("rotation_from_unitary is a homomorphism", "[bloch]") {
  Rng rng = make_rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat2c u1 = random_unitary2(rng);
    const Mat2c u2 = random_unitary2(rng);
    const Mat3 lhs = rotation_from_unitary(u1 * u2).matrix();
    const Mat3 rhs = rotation_from_unitary(u1).matrix() * rotation_from_unitary(u2).matrix();
    REQUIRE(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("sign matrices", "[bloch]") {
  Mat3 sum = Mat3::Zero();
  for (const SignMatrix& b : SignMatrix::all()) {
    const Mat3 m = b.matrix();
    REQUIRE(max_abs_diff(m * m.transpose(), Mat3::Identity()) == 0.0);
    REQUIRE(m.determinant() == 1.0);
    sum += m;
  }
  REQUIRE(sum.cwiseAbs().maxCoeff() == 0.0);
  REQUIRE_THROWS_AS(SignMatrix(0), OutOfRange);
  REQUIRE_THROWS_AS(SignMatrix(5), OutOfRange);
}

TEST_CASE("canonical_decompose on special matrices", "[bloch]") {
  SECTION("already canonical diagonal") {
    const Mat3 m = Vec3(1, 1, -1).asDiagonal();
    const CanonicalDecomposition d = canonical_decompose(m);
    REQUIRE(max_abs_diff(d.reconstruct(), m) < 1e-14);
    REQUIRE((d.d - Vec3(1, 1, -1)).cwiseAbs().maxCoeff() < 1e-14);
    REQUIRE(max_abs_diff(d.o_left.matrix(), Mat3::Identity()) < 1e-14);
    REQUIRE(max_abs_diff(d.o_right.matrix(), Mat3::Identity()) < 1e-14);
  }
  SECTION("minus identity") {
    const Mat3 m = -Mat3::Identity();
    const CanonicalDecomposition d = canonical_decompose(m);
    REQUIRE(max_abs_diff(d.reconstruct(), m) < 1e-13);
    // Signed SVD of -1: unit singular values, negative determinant.
    REQUIRE((d.d.cwiseAbs() - Vec3(1, 1, 1)).cwiseAbs().maxCoeff() < 1e-13);
    REQUIRE(d.d[0] * d.d[1] * d.d[2] == Catch::Approx(-1.0).margin(1e-12));
  }
}

TEST_CASE("canonical_decompose properties on random matrices", "[bloch]") {
  Rng rng = make_rng(23);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = unif(rng);
    const CanonicalDecomposition d = canonical_decompose(m);
    REQUIRE(max_abs_diff(d.reconstruct(), m) < 1e-12);
    REQUIRE(std::abs(d.d[0]) >= std::abs(d.d[1]));
    REQUIRE(std::abs(d.d[1]) >= std::abs(d.d[2]));
    REQUIRE(d.d[0] >= 0.0);
    REQUIRE(d.d[1] >= 0.0);
  }
}

TEST_CASE("canonical_decompose is deterministic under ties", "[bloch]") {
  const Mat3 m = Mat3::Identity();
  const CanonicalDecomposition d = canonical_decompose(m);
  REQUIRE(max_abs_diff(d.o_left.matrix(), Mat3::Identity()) < 1e-14);
  REQUIRE(max_abs_diff(d.o_right.matrix(), Mat3::Identity()) < 1e-14);
  REQUIRE((d.d - Vec3(1, 1, 1)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("simultaneous_diagonalizer", "[bloch]") {
  SECTION("identity pair") {
    const Rotation q = simultaneous_diagonalizer(Mat3::Identity(), Mat3::Identity());
    const Mat3 d = q.matrix() * Mat3::Identity() * q.matrix().transpose();
    REQUIRE(max_abs_diff(d, Mat3::Identity()) < 1e-12);
  }
  SECTION("already diagonal pair stays diagonal") {
    const Mat3 a = Vec3(1, 2, 3).asDiagonal();
    const Mat3 b = Vec3(4, 5, 6).asDiagonal();
    const Rotation q = simultaneous_diagonalizer(a, b);
    const Mat3 da = q.matrix() * a * q.matrix().transpose();
    const Mat3 db = q.matrix() * b * q.matrix().transpose();
    REQUIRE(max_abs_diff(da, Mat3(da.diagonal().asDiagonal())) < 1e-12);
    REQUIRE(max_abs_diff(db, Mat3(db.diagonal().asDiagonal())) < 1e-12);
  }
  SECTION("constructed commuting pairs, including degenerate spectra") {
    Rng rng = make_rng(31);
    std::uniform_real_distribution<double> unif(0.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
      const Rotation q0 = random_rotation(rng);
      Vec3 da(unif(rng), unif(rng), unif(rng));
      Vec3 db(unif(rng), unif(rng), unif(rng));
      if (trial % 3 == 0) da[1] = da[0];  // degenerate block in a
      const Mat3 a = q0.matrix().transpose() * da.asDiagonal() * q0.matrix();
      const Mat3 b = q0.matrix().transpose() * db.asDiagonal() * q0.matrix();
      const Rotation q = simultaneous_diagonalizer(a, b);
      const Mat3 ta = q.matrix() * a * q.matrix().transpose();
      const Mat3 tb = q.matrix() * b * q.matrix().transpose();
      REQUIRE(max_abs_diff(ta, Mat3(ta.diagonal().asDiagonal())) < 1e-10);
      REQUIRE(max_abs_diff(tb, Mat3(tb.diagonal().asDiagonal())) < 1e-10);
    }
  }
  SECTION("non-commuting pair is rejected") {
    Mat3 a = Vec3(1, 2, 3).asDiagonal();
    Mat3 b;
    b << 1, 1, 0, 1, 1, 0, 0, 0, 1;
    REQUIRE_THROWS_AS(simultaneous_diagonalizer(a, b), NotCommuting);
  }
}

TEST_CASE("rotation type invariants", "[bloch]") {
  Mat3 bad = Mat3::Identity();
  bad(0, 0) = 1.001;
  REQUIRE_THROWS_AS(Rotation(bad), NonRotation);
  Mat3 reflect = Vec3(1, 1, -1).asDiagonal();  // det -1
  REQUIRE_THROWS_AS(Rotation(reflect), NonRotation);
}
