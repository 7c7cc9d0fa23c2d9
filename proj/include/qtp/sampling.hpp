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

#include <cstdint>
#include <random>

#include "qtp/densop.hpp"
#include "qtp/protocol.hpp"

// Seeded generators for states, measurements and whole protocols; used by
// the verification command and the differential test suites.
namespace qtp {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed);

/// Uniform point on the unit sphere (normalized Gaussian triple).
Vec3 uniform_sphere(Rng& rng);

/// Uniform point in the closed unit ball.
Vec3 uniform_ball(Rng& rng);

/// Haar-uniform rotation (unit quaternion).
Rotation random_rotation(Rng& rng);

/// Haar-uniform SU(2) element.
Mat2c random_unitary2(Rng& rng);

/// Ginibre-normalized random density matrix of the given dimension.
densop::CMat random_density(Rng& rng, int dim);

/// Fano form of a random physical two-qubit state.
TwoQubitFano random_fano(Rng& rng);

/// Random POVM: Ginibre seeds symmetrized through S^(-1/2) so the elements
/// resolve the identity exactly.
PovmSet random_povm(Rng& rng, int outcomes = 4);

/// Random valid protocol: physical resource, random POVM, Haar rotations.
Protocol random_protocol(Rng& rng, int outcomes = 4);

/// Random affine channel: contraction plus small translation; cptp_only
/// rejects samples whose Choi matrix is not PSD.
AffineChannel random_channel(Rng& rng, bool cptp_only);

}  // namespace qtp
