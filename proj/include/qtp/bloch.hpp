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

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "qtp/errors.hpp"
#include "qtp/tolerances.hpp"

namespace qtp {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;

/// Proper rotation in SO(3). The constructor rejects matrices whose
/// orthogonality or determinant residual exceeds tol::EXACT.
class Rotation {
 public:
  explicit Rotation(const Mat3& m);

  static Rotation identity() { return Rotation(Mat3::Identity()); }

  const Mat3& matrix() const { return m_; }

  Rotation transposed() const;
  Rotation operator*(const Rotation& rhs) const;
  Vec3 operator*(const Vec3& v) const { return m_ * v; }

 private:
  Mat3 m_;
};

/// The four diagonal orthogonal matrices with determinant +1:
/// diag(1,1,1), diag(1,-1,-1), diag(-1,1,-1), diag(-1,-1,1).
/// They sum to the zero matrix exactly.
class SignMatrix {
 public:
  explicit SignMatrix(int index);

  int index() const { return index_; }
  Vec3 diagonal() const;
  Mat3 matrix() const { return diagonal().asDiagonal(); }
  Rotation rotation() const { return Rotation(matrix()); }

  static std::array<SignMatrix, 4> all();

 private:
  int index_;  // 1..4
};

/// Signed SVD m = o_left' * diag(d) * o_right with both factors proper
/// rotations, |d1| >= |d2| >= |d3|, any sign repair absorbed into d3.
struct CanonicalDecomposition {
  Rotation o_left;
  Vec3 d;
  Rotation o_right;

  Mat3 reconstruct() const {
    return o_left.matrix().transpose() * d.asDiagonal() * o_right.matrix();
  }
};

/// SO(3) image of a 2x2 unitary: u (n.sigma) u^dag = ((R n).sigma).
/// Global phase of u is irrelevant. Throws NonUnitary.
Rotation rotation_from_unitary(const Mat2c& u);

CanonicalDecomposition canonical_decompose(const Mat3& m);

/// One rotation q with q a q^T and q b q^T both diagonal. Requires the
/// symmetric inputs to commute within tol::COMMUTE; throws NotCommuting.
Rotation simultaneous_diagonalizer(const Mat3& a, const Mat3& b);

}  // namespace qtp
