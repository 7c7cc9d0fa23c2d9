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

#include <vector>

#include "qtp/states.hpp"

namespace qtp {

/// Weighted POVM state: the element operator is E_m = 4 * weight * state.
/// The Fano marginals of `state` live on (a-bar, a): r_a is omega^abar,
/// r_b is omega^a, corr is w_m.
struct PovmElement {
  PovmElement(double weight, TwoQubitFano state);

  double weight;
  TwoQubitFano state;
};

struct PovmSet {
  std::vector<PovmElement> elements;

  std::size_t size() const { return elements.size(); }
};

/// Residuals of the four closure conditions; all vanish iff the elements
/// assemble to a resolution of the identity.
struct ClosureReport {
  double weight_sum;    // |sum weights - 1|
  double marginal_a;    // ||sum w * omega^a||
  double marginal_abar; // ||sum w * omega^abar||
  double correlation;   // max-abs of sum w * w_m

  double max() const;
};

ClosureReport validate_closure(const PovmSet& s);

/// The Bell measurement: four weight-1/4 elements, one per Bell projector,
/// in BellLabel declaration order.
PovmSet bell_povm();

/// Dense-operator positivity of the element's POVM state.
bool element_positivity(const PovmElement& e);

}  // namespace qtp
