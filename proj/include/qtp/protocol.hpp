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

#include <optional>
#include <vector>

#include "qtp/povm.hpp"

namespace qtp {

/// Per-outcome result of running a protocol: probability p = weight * g,
/// Bob's collapsed Bloch vector t_b and the corrected output t_out.
/// Outcomes with p below tol::MIN_PROBABILITY are flagged undefined
/// (t_b/t_out are 0/0 there) and must be skipped when averaging.
struct OutcomeRecord {
  int m = 0;
  double p = 0.0;
  double g = 0.0;
  Vec3 t_b = Vec3::Zero();
  Vec3 t_out = Vec3::Zero();
  bool defined = true;
};

/// Outcome-averaged affine action of a protocol: t -> c * t + v.
struct InducedChannel {
  Mat3 c;
  Vec3 v;
};

/// Resource state + POVM + one correction rotation per outcome.
/// Construction validates resource positivity (dense-operator check) and
/// POVM closure; execution assumes a valid object. unchecked() skips the
/// validation for trusted or deliberately invalid instances.
class Protocol {
 public:
  Protocol(TwoQubitFano resource, PovmSet povm, std::vector<Rotation> corrections);

  static Protocol unchecked(TwoQubitFano resource, PovmSet povm,
                            std::vector<Rotation> corrections);

  const TwoQubitFano& resource() const { return resource_; }
  const PovmSet& povm() const { return povm_; }
  const std::vector<Rotation>& corrections() const { return corrections_; }
  std::size_t outcomes() const { return corrections_.size(); }

 private:
  struct Unchecked {};
  Protocol(Unchecked, TwoQubitFano resource, PovmSet povm, std::vector<Rotation> corrections);

  TwoQubitFano resource_;
  PovmSet povm_;
  std::vector<Rotation> corrections_;
};

/// Bloch-vector fast path. Throws NegativeProbability when some outcome
/// probability falls below tol::NEGATIVE_PROBABILITY.
std::vector<OutcomeRecord> execute(const Protocol& p, const QubitState& in);

/// Dense-operator ground truth: builds rho_in (x) rho_ab on (a-bar, a, b),
/// applies E_m (x) 1, partial-traces to Bob and conjugates by the SU(2)
/// lift of the correction. Bloch outputs are lift-independent.
std::vector<OutcomeRecord> execute_oracle(const Protocol& p, const QubitState& in);

InducedChannel induced_channel(const Protocol& p);

/// Alignment factors s_m if the protocol aligns (t_m = s_m t for every
/// outcome and input) within tol; empty otherwise. Throws
/// SingularCorrelation when the marginal conditions hold but the resource
/// or a POVM correlation matrix is non-invertible.
std::optional<std::vector<double>> is_aligned(const Protocol& p, double tolerance = tol::ORACLE);

}  // namespace qtp
