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
#include <tuple>

#include "qtp/protocol.hpp"
#include "qtp/states.hpp"

namespace qtp {

/// One-qubit channel in affine form, acting as t -> lambda * t + v.
struct AffineChannel {
  Mat3 lambda = Mat3::Identity();
  Vec3 v = Vec3::Zero();

  /// Choi positivity plus trace preservation, at the oracle tolerance.
  bool is_cptp(double tolerance = tol::ORACLE) const;
};

/// Fano form of (eps_a (x) eps_b)[f]: marginals map through the channels,
/// corr -> La * corr * Lb' + (La r_a) v_b' + v_a (Lb r_b)' + v_a v_b'.
TwoQubitFano apply_local(const AffineChannel& ca, const AffineChannel& cb,
                         const TwoQubitFano& f);

/// lambda = q * identity, v = 0. CPTP for -1/3 <= q <= 1; throws OutOfRange
/// outside that window.
AffineChannel depolarizing(double q);

/// Closed-form CPTP test for a diagonal unital channel diag(l1,l2,l3):
/// |l1 + l2| <= 1 + l3 and |l1 - l2| <= 1 - l3.
bool diag_unital_cptp(const Vec3& lambda_diag);

struct NoiseResiduals {
  double matrix;       // || L_abar * L_a^2 * L_b - s * 1 ||
  double translation;  // || v_abar + s (L_a L_b)^-1 r_bell r_c_a ||
};

/// Residuals of the two conditions a diagonal channel triple must satisfy
/// to realize an aligned deterministic protocol with factor s. All lambda
/// matrices must be diagonal. Throws SingularChannel when L_a * L_b is
/// singular while r_c_a != 0.
NoiseResiduals noise_conditions(const AffineChannel& ch_abar, const AffineChannel& ch_a,
                                const AffineChannel& ch_b, double s, const Vec3& r_c_a,
                                BellLabel label = BellLabel::PhiPlus);

enum class WernerCase { CaseI, CaseII, UncorrelatedPoint, Infeasible };

struct WernerReport {
  WernerCase classification;
  double p_prime;     // s / p
  double polynomial;  // p^8 (p - s)^3 (p + 3s)
};

/// Feasibility of a Werner resource (parameter p) with Werner POVM states
/// (parameter p' = s/p) for an aligned deterministic protocol with factor
/// s: sign of p^8 (p-s)^3 (p+3s) within the physical windows. The point
/// p = sqrt(s) is the uncorrelated-noise solution.
WernerReport werner_feasible(double p, double s);

/// Diagonal channel triple (eps_abar, eps_a, eps_b) realizing an aligned
/// deterministic protocol as local noise on the perfect one. Empty when no
/// CPTP diagonal factorization is found. Throws NotAligned unless the
/// protocol is an aligned four-outcome DQTP in canonical frame.
std::optional<std::tuple<AffineChannel, AffineChannel, AffineChannel>>
decompose_perfect_plus_noise(const Protocol& p);

}  // namespace qtp
