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

#include "qtp/bloch.hpp"

namespace qtp {

/// One-qubit state as a Bloch vector, rho = (1/2)(1 + t.sigma).
class QubitState {
 public:
  explicit QubitState(const Vec3& t);

  const Vec3& t() const { return t_; }
  double norm() const { return t_.norm(); }

 private:
  Vec3 t_;
};

/// Two-qubit state in Fano form: marginal Bloch vectors plus the 3x3
/// correlation matrix. Positivity is not a construction invariant; POVM
/// candidates and scan-grid points may be non-physical. Use is_physical().
struct TwoQubitFano {
  Vec3 r_a = Vec3::Zero();
  Vec3 r_b = Vec3::Zero();
  Mat3 corr = Mat3::Zero();

  /// Dense-operator positivity check at the given eigenvalue tolerance.
  bool is_physical(double tolerance = tol::ORACLE) const;
};

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Correlation matrix of the Bell state with the given label:
/// -diag(1,1,1), diag(-1,1,1), diag(1,-1,1), diag(1,1,-1).
Mat3 bell_corr(BellLabel label);
Vec3 bell_diag(BellLabel label);

TwoQubitFano bell_state(BellLabel label);

/// Werner mixture with corr = p * bell_corr(label) and zero marginals.
/// Physical for -1/3 <= p <= 1; throws OutOfRange outside that window.
TwoQubitFano werner_state(BellLabel label, double p);

/// Local-rotation frame in which the correlation matrix is diagonal:
/// corr = o_a' * diag(r_d) * o_b, r_c_a = o_a * r_a, r_c_b = o_b * r_b.
struct CanonicalForm {
  Vec3 r_d;
  Rotation o_a;
  Rotation o_b;
  Vec3 r_c_a;
  Vec3 r_c_b;
};

CanonicalForm canonicalize(const TwoQubitFano& f);

/// Positivity of the canonical-frame state with r_b = 0, via the pair of
/// closed-form inequalities in (r_d, r_c_a). Requires det(diag(r_d)) != 0;
/// throws SingularCorrelation at an exactly singular diagonal.
bool positivity_rb_zero(const Vec3& r_d, const Vec3& r_c_a);

/// (1 - r1 - r2 - r3)(1 - r1 + r2 + r3)(1 + r1 - r2 + r3)(1 + r1 + r2 - r3)
double f_poly(double r1, double r2, double r3);

/// Equivalent determinant form -8 det + (|r_d|^2 - 1)^2 - 4 |adj(r_d)|^2.
double f_poly_det_form(double r1, double r2, double r3);

}  // namespace qtp
