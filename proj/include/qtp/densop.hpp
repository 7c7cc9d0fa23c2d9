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

#include "qtp/channels.hpp"
#include "qtp/states.hpp"

// Dense complex-operator oracle. Everything here works on explicit 2x2,
// 4x4 and 8x8 matrices; the Fano-form fast paths are tested against it.
// Pauli convention: sigma1 = X, sigma2 = Y, sigma3 = Z in their standard
// matrix forms. Subsystem slots are ordered (a-bar, a, b) for 8-dim
// objects; slot 0 is the leftmost Kronecker factor.
namespace qtp::densop {

using CMat = Eigen::MatrixXcd;

const CMat& pauli(int i);  // i in 1..3
CMat identity(int dim);

CMat kron(const CMat& a, const CMat& b);

/// Traces out the given slot (0 = leftmost factor) of a 4- or 8-dim
/// operator made of qubit factors.
CMat partial_trace(const CMat& rho, int slot);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const CMat& rho);

/// True iff the minimum eigenvalue is >= -tolerance.
bool is_positive(const CMat& rho, double tolerance);

/// Eq.-style Fano assembly: (1/4)(1 + r_a.sigma (x) 1 + 1 (x) r_b.sigma
/// + sum_ij corr_ij sigma_i (x) sigma_j). Positivity is not required.
CMat fano_to_density(const TwoQubitFano& f);

/// Inverse of fano_to_density. Throws NotHermitian / NotUnitTrace when the
/// input is not a valid density-operator candidate.
TwoQubitFano density_to_fano(const CMat& rho);

CMat density_from_bloch(const Vec3& t);
Vec3 bloch_from_density(const CMat& rho);

/// Choi matrix (input slot 0, output slot 1, trace 2 convention) of the
/// affine map t -> lambda t + v. The map is CPTP iff this is PSD and the
/// partial trace over the output slot is the identity.
CMat choi_of_affine(const AffineChannel& ch);

/// SU(2) lift of a rotation via axis-angle, fixed to non-negative trace.
Mat2c unitary_from_rotation(const Rotation& r);

/// Action of an affine map on an arbitrary 2x2 operator, extended
/// linearly from the Pauli basis. Valid for non-CP maps as well.
CMat apply_affine(const AffineChannel& ch, const CMat& op);

/// Linear-map oracle for apply_local: expands the 4x4 operator in the
/// product operator basis and pushes each factor through the channel.
CMat apply_local_oracle(const AffineChannel& ca, const AffineChannel& cb, const CMat& rho);

}  // namespace qtp::densop
