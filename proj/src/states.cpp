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

#include "qtp/states.hpp"

#include <cmath>

#include "qtp/densop.hpp"

namespace qtp {

QubitState::QubitState(const Vec3& t) : t_(t) {
  if (!t.allFinite() || t.norm() > 1.0 + 1e-9) {
    throw InvalidState("Bloch vector leaves the unit ball");
  }
}

bool TwoQubitFano::is_physical(double tolerance) const {
  return densop::is_positive(densop::fano_to_density(*this), tolerance);
}

Vec3 bell_diag(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus:
      return Vec3(-1, -1, -1);
    case BellLabel::PhiMinus:
      return Vec3(-1, 1, 1);
    case BellLabel::PsiPlus:
      return Vec3(1, -1, 1);
    default:
      return Vec3(1, 1, -1);
  }
}

Mat3 bell_corr(BellLabel label) { return bell_diag(label).asDiagonal(); }

TwoQubitFano bell_state(BellLabel label) {
  TwoQubitFano f;
  f.corr = bell_corr(label);
  return f;
}

TwoQubitFano werner_state(BellLabel label, double p) {
  if (p < -1.0 / 3.0 || p > 1.0) {
    throw OutOfRange("Werner parameter outside [-1/3, 1]");
  }
  TwoQubitFano f;
  f.corr = p * bell_corr(label);
  return f;
}

CanonicalForm canonicalize(const TwoQubitFano& f) {
  CanonicalDecomposition d = canonical_decompose(f.corr);
  return CanonicalForm{d.d, d.o_left, d.o_right, d.o_left * f.r_a, d.o_right * f.r_b};
}

double f_poly(double r1, double r2, double r3) {
  return (1 - r1 - r2 - r3) * (1 - r1 + r2 + r3) * (1 + r1 - r2 + r3) * (1 + r1 + r2 - r3);
}

double f_poly_det_form(double r1, double r2, double r3) {
  const double det = r1 * r2 * r3;
  const double n2 = r1 * r1 + r2 * r2 + r3 * r3;
  const double adj2 = r2 * r2 * r3 * r3 + r1 * r1 * r3 * r3 + r1 * r1 * r2 * r2;
  return -8.0 * det + (n2 - 1.0) * (n2 - 1.0) - 4.0 * adj2;
}

bool positivity_rb_zero(const Vec3& r_d, const Vec3& r_c_a) {
  const double det = r_d[0] * r_d[1] * r_d[2];
  if (det == 0.0) {
    throw SingularCorrelation("diagonal correlation matrix is singular");
  }
  const double n2 = r_d.squaredNorm();
  const double rc2 = r_c_a.squaredNorm();
  const Vec3 rd_rc = r_d.cwiseProduct(r_c_a);

  const double first = -2.0 * det - (n2 - 1.0) - rc2;
  const double second = f_poly(r_d[0], r_d[1], r_d[2]) - 4.0 * rd_rc.squaredNorm() -
                        rc2 * (2.0 * (1.0 - n2) - rc2);
  return first >= 0.0 && second >= 0.0;
}

}  // namespace qtp
