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

namespace qtp::tol {

// Tight tolerance for identities that hold to rounding error (closures,
// reconstructions, closed-form equalities).
inline constexpr double EXACT = 1e-12;

// Tolerance for comparisons against the dense-operator oracle
// (eigenvalue-based positivity, differential execution checks).
inline constexpr double ORACLE = 1e-10;

// Commutator residual accepted by the simultaneous diagonalizer.
inline constexpr double COMMUTE = 1e-10;

// Weights below this are rejected when building POVM elements.
inline constexpr double MIN_POVM_WEIGHT = 1e-14;

// Outcome probabilities below this are flagged as undefined outcomes.
inline constexpr double MIN_PROBABILITY = 1e-12;

// Probabilities below this indicate an invalid protocol object.
inline constexpr double NEGATIVE_PROBABILITY = -1e-9;

}  // namespace qtp::tol
