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

#include <array>
#include <vector>

#include "qtp/protocol.hpp"

namespace qtp {

struct AlignedOutcome {
  double weight;     // \bar{P}_m
  double s;          // alignment factor in (0, 1]
  Rotation o_abar;   // per-outcome rotation on the a-bar side
};

/// Data of an aligned protocol in the canonical frame: diagonal resource
/// correlations r_d, canonical marginal r_c_a, frame rotations, and the
/// per-outcome (weight, factor, rotation) triples. The outcome rotations
/// must satisfy || sum_m weight_m s_m o_abar_m' || <= 1e-12.
struct AlignedSpec {
  Vec3 r_d;
  Vec3 r_c_a = Vec3::Zero();
  Rotation o_a = Rotation::identity();
  Rotation o_b = Rotation::identity();
  std::vector<AlignedOutcome> outcomes;
};

/// Margins (left minus right) of the four positivity inequalities: the
/// resource pair in (r_d, r_c_a) and the POVM-state pair in (s, r_d, r_c_a).
struct FeasibilityReport {
  bool ok;
  std::array<double, 4> margins;
};

/// Positivity of the aligned resource and POVM states for the given
/// canonical data and factor s. Requires det(diag(r_d)) != 0 (throws
/// SingularCorrelation) and s in (0, 1] (throws OutOfRange).
FeasibilityReport feasibility(const Vec3& r_d, const Vec3& r_c_a, double s);

/// Builds the aligned protocol from canonical data. Throws Infeasible when
/// a positivity check fails and ClosureViolation when the outcome
/// rotations do not satisfy the closure constraint.
Protocol build_aligned(const AlignedSpec& spec);

/// Four-outcome deterministic protocol: equal weights 1/4, common factor
/// s, sign-matrix outcome rotations.
Protocol build_dqtp(const Vec3& r_d, const Vec3& r_c_a, double s);

double det_rd_sign(const AlignedSpec& spec);

/// alpha = (1 + sum_m weight_m s_m) / 2.
double fidelity_target(const std::vector<AlignedOutcome>& outcomes);

struct GridSpec {
  double min = -1.0;
  double max = 1.0;
  int steps = 101;
};

struct ScanRow {
  double r1, r2, r3;
  std::array<double, 4> margins;
  bool feasible;
};

/// Feasibility margins on a cubic (r1, r2, r3) grid. Nodes with a singular
/// diagonal are never feasible (no invertible POVM exists there). Only
/// feasible rows are returned unless include_infeasible is set. The scan
/// parallelizes over r1 slabs; row order is independent of threading.
std::vector<ScanRow> scan_region(double s, const Vec3& r_c_a, const GridSpec& grid,
                                 bool include_infeasible = false);

}  // namespace qtp
