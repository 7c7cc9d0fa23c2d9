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

#include "qtp/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qtp {

namespace {

using Complex = std::complex<double>;

const std::array<Mat2c, 3>& paulis2() {
  static const std::array<Mat2c, 3> sigma = [] {
    std::array<Mat2c, 3> s;
    s[0] << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
    s[1] << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    s[2] << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
    return s;
  }();
  return sigma;
}

}  // namespace

Rotation::Rotation(const Mat3& m) : m_(m) {
  const double ortho = (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = m.determinant();
  if (ortho > tol::EXACT || std::abs(det - 1.0) > tol::EXACT) {
    throw NonRotation("matrix is not a proper rotation");
  }
}

Rotation Rotation::transposed() const {
  Rotation r = *this;
  r.m_.transposeInPlace();
  return r;
}

Rotation Rotation::operator*(const Rotation& rhs) const {
  Rotation r = *this;
  r.m_ = m_ * rhs.m_;
  return r;
}

SignMatrix::SignMatrix(int index) : index_(index) {
  if (index < 1 || index > 4) {
    throw OutOfRange("sign matrix index must be in 1..4");
  }
}

Vec3 SignMatrix::diagonal() const {
  switch (index_) {
    case 1:
      return Vec3(1, 1, 1);
    case 2:
      return Vec3(1, -1, -1);
    case 3:
      return Vec3(-1, 1, -1);
    default:
      return Vec3(-1, -1, 1);
  }
}

std::array<SignMatrix, 4> SignMatrix::all() {
  return {SignMatrix(1), SignMatrix(2), SignMatrix(3), SignMatrix(4)};
}

Rotation rotation_from_unitary(const Mat2c& u) {
  const double residual = (u.adjoint() * u - Mat2c::Identity()).cwiseAbs().maxCoeff();
  if (residual > tol::EXACT) {
    throw NonUnitary("matrix is not unitary");
  }
  const auto& sigma = paulis2();
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = 0.5 * (sigma[i] * u * sigma[j] * u.adjoint()).trace().real();
    }
  }
  return Rotation(r);
}

namespace {

// Deterministic sign: make the first component of v with magnitude above
// 1e-12 positive, flipping the paired u column with it.
void fix_column_sign(Eigen::Matrix3d& u, Eigen::Matrix3d& v, int col) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(v(k, col)) > 1e-12) {
      if (v(k, col) < 0) {
        u.col(col) *= -1.0;
        v.col(col) *= -1.0;
      }
      return;
    }
  }
}

bool lex_greater(const Vec3& a, const Vec3& b) {
  for (int k = 0; k < 3; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

}  // namespace

CanonicalDecomposition canonical_decompose(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 u = svd.matrixU();
  Mat3 v = svd.matrixV();
  Vec3 s = svd.singularValues();  // descending, non-negative

  for (int c = 0; c < 3; ++c) fix_column_sign(u, v, c);

  // Ties between singular values are broken by descending lexicographic
  // order of the (sign-fixed) right singular vectors.
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (std::abs(s[a] - s[b]) > 1e-12) return s[a] > s[b];
    return lex_greater(v.col(a), v.col(b));
  });
  Mat3 up, vp;
  Vec3 sp;
  for (int c = 0; c < 3; ++c) {
    up.col(c) = u.col(order[c]);
    vp.col(c) = v.col(order[c]);
    sp[c] = s[order[c]];
  }

  // Improper factors are repaired by flipping their last column and
  // absorbing the sign into d3.
  double d3_sign = 1.0;
  if (up.determinant() < 0) {
    up.col(2) *= -1.0;
    d3_sign = -d3_sign;
  }
  if (vp.determinant() < 0) {
    vp.col(2) *= -1.0;
    d3_sign = -d3_sign;
  }
  sp[2] *= d3_sign;

  return CanonicalDecomposition{Rotation(up.transpose()), sp, Rotation(vp.transpose())};
}

Rotation simultaneous_diagonalizer(const Mat3& a, const Mat3& b) {
  const double comm = (a * b - b * a).cwiseAbs().maxCoeff();
  if (comm > tol::COMMUTE) {
    throw NotCommuting("inputs do not commute");
  }

  Eigen::SelfAdjointEigenSolver<Mat3> es_a(a);
  Mat3 q = es_a.eigenvectors();
  const Vec3 eval_a = es_a.eigenvalues();

  // Within (near-)degenerate eigenspaces of a, rotate the basis so that the
  // restriction of b becomes diagonal too.
  const double scale = std::max(1.0, eval_a.cwiseAbs().maxCoeff());
  int start = 0;
  while (start < 3) {
    int end = start + 1;
    while (end < 3 && std::abs(eval_a[end] - eval_a[start]) <= 1e-8 * scale) ++end;
    const int n = end - start;
    if (n > 1) {
      Eigen::MatrixXd block = q.middleCols(start, n).transpose() * b * q.middleCols(start, n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es_b(block);
      q.middleCols(start, n) = q.middleCols(start, n) * es_b.eigenvectors();
    }
    start = end;
  }

  if (q.determinant() < 0) q.col(2) *= -1.0;
  Rotation rot(q.transpose());

  const Mat3 da = rot.matrix() * a * rot.matrix().transpose();
  const Mat3 db = rot.matrix() * b * rot.matrix().transpose();
  const double off_a = (da - Mat3(da.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
  const double off_b = (db - Mat3(db.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
  if (off_a > tol::COMMUTE || off_b > tol::COMMUTE) {
    throw NotCommuting("simultaneous diagonalization residual too large");
  }
  return rot;
}

}  // namespace qtp
