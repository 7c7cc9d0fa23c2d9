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

#include "qtp/povm.hpp"

#include <algorithm>
#include <cmath>

#include "qtp/densop.hpp"

namespace qtp {

PovmElement::PovmElement(double w, TwoQubitFano s) : weight(w), state(std::move(s)) {
  if (!(w >= tol::MIN_POVM_WEIGHT) || w > 1.0 + tol::EXACT) {
    throw OutOfRange("POVM weight outside (0, 1]");
  }
}

double ClosureReport::max() const {
  return std::max({weight_sum, marginal_a, marginal_abar, correlation});
}

ClosureReport validate_closure(const PovmSet& s) {
  double wsum = 0.0;
  Vec3 ma = Vec3::Zero();
  Vec3 mabar = Vec3::Zero();
  Mat3 c = Mat3::Zero();
  for (const auto& e : s.elements) {
    wsum += e.weight;
    mabar += e.weight * e.state.r_a;
    ma += e.weight * e.state.r_b;
    c += e.weight * e.state.corr;
  }
  return ClosureReport{std::abs(wsum - 1.0), ma.norm(), mabar.norm(), c.cwiseAbs().maxCoeff()};
}

PovmSet bell_povm() {
  PovmSet s;
  for (BellLabel label : {BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
                          BellLabel::PsiMinus}) {
    s.elements.emplace_back(0.25, bell_state(label));
  }
  return s;
}

bool element_positivity(const PovmElement& e) { return e.state.is_physical(tol::ORACLE); }

}  // namespace qtp
