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

#include "qtp/channels.hpp"

#include <array>
#include <cmath>

#include "qtp/densop.hpp"

namespace qtp {

namespace {

bool is_diagonal(const Mat3& m) {
  return (m - Mat3(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff() <= tol::EXACT;
}

}  // namespace

bool AffineChannel::is_cptp(double tolerance) const {
  const densop::CMat choi = densop::choi_of_affine(*this);
  if (!densop::is_positive(choi, tolerance)) return false;
  const densop::CMat reduced = densop::partial_trace(choi, 1);
  return (reduced - densop::identity(2)).cwiseAbs().maxCoeff() <= tolerance;
}

TwoQubitFano apply_local(const AffineChannel& ca, const AffineChannel& cb,
                         const TwoQubitFano& f) {
  TwoQubitFano out;
  const Vec3 la_ra = ca.lambda * f.r_a;
  const Vec3 lb_rb = cb.lambda * f.r_b;
  out.r_a = la_ra + ca.v;
  out.r_b = lb_rb + cb.v;
  out.corr = ca.lambda * f.corr * cb.lambda.transpose() + la_ra * cb.v.transpose() +
             ca.v * lb_rb.transpose() + ca.v * cb.v.transpose();
  return out;
}

AffineChannel depolarizing(double q) {
  if (q < -1.0 / 3.0 - tol::EXACT || q > 1.0 + tol::EXACT) {
    throw OutOfRange("depolarizing parameter outside [-1/3, 1]");
  }
  return AffineChannel{q * Mat3::Identity(), Vec3::Zero()};
}

bool diag_unital_cptp(const Vec3& l) {
  return std::abs(l[0] + l[1]) <= 1.0 + l[2] + tol::EXACT &&
         std::abs(l[0] - l[1]) <= 1.0 - l[2] + tol::EXACT;
}

NoiseResiduals noise_conditions(const AffineChannel& ch_abar, const AffineChannel& ch_a,
                                const AffineChannel& ch_b, double s, const Vec3& r_c_a,
                                BellLabel label) {
  if (!is_diagonal(ch_abar.lambda) || !is_diagonal(ch_a.lambda) || !is_diagonal(ch_b.lambda)) {
    throw InvalidState("noise conditions require diagonal channel matrices");
  }
  const Vec3 labar = ch_abar.lambda.diagonal();
  const Vec3 la = ch_a.lambda.diagonal();
  const Vec3 lb = ch_b.lambda.diagonal();

  const Vec3 matrix_lhs = labar.cwiseProduct(la).cwiseProduct(la).cwiseProduct(lb);
  const double matrix_residual = (matrix_lhs - Vec3::Ones()* s).cwiseAbs().maxCoeff();

  const Vec3 product = la.cwiseProduct(lb);
  Vec3 expected = Vec3::Zero();
  if (r_c_a.norm() > 0.0) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(product[i]) < tol::EXACT) {
        throw SingularChannel("lambda_a * lambda_b is singular with r_c_a != 0");
      }
      expected[i] = -s * bell_diag(label)[i] * r_c_a[i] / product[i];
    }
  }
  const double translation_residual = (ch_abar.v - expected).norm();
  return NoiseResiduals{matrix_residual, translation_residual};
}

WernerReport werner_feasible(double p, double s) {
  WernerReport report;
  report.p_prime = s / p;
  report.polynomial = std::pow(p, 8) * std::pow(p - s, 3) * (p + 3.0 * s);
  report.classification = WernerCase::Infeasible;

  const bool windows_ok = s > 0.0 && s <= 1.0 + tol::EXACT && p >= -1.0 / 3.0 - tol::EXACT &&
                          p <= 1.0 + tol::EXACT && p != 0.0;
  if (!windows_ok) return report;

  if (std::abs(p - std::sqrt(s)) < tol::EXACT) {
    report.classification = WernerCase::UncorrelatedPoint;
  } else if (p >= s - tol::EXACT) {
    report.classification = WernerCase::CaseI;
  } else if (p <= -3.0 * s + tol::EXACT) {
    report.classification = WernerCase::CaseII;
  }
  return report;
}

std::optional<std::tuple<AffineChannel, AffineChannel, AffineChannel>>
decompose_perfect_plus_noise(const Protocol& proto) {
  const auto factors = is_aligned(proto, tol::ORACLE);
  if (!factors) throw NotAligned("protocol does not align");
  if (factors->size() != 4) throw NotAligned("expected a four-outcome deterministic protocol");
  const double s = (*factors)[0];
  for (double f : *factors) {
    if (std::abs(f - s) > tol::ORACLE) throw NotAligned("alignment factors are not all equal");
  }
  if (!is_diagonal(proto.resource().corr)) {
    throw NotAligned("protocol is not in canonical frame");
  }

  const Vec3 r_d = proto.resource().corr.diagonal();
  const Vec3 r_c_a = proto.resource().r_a;

  // det(r_d) < 0 for aligned protocols, so the componentwise signs always
  // form one of the four Bell patterns; that fixes the reference state.
  Vec3 bell;
  Vec3 magnitude;
  for (int i = 0; i < 3; ++i) {
    bell[i] = r_d[i] < 0.0 ? -1.0 : 1.0;
    magnitude[i] = std::abs(r_d[i]);  // lambda_a_i * lambda_b_i
  }

  // Candidate magnitude profiles for lambda_a, then all 8 joint sign
  // patterns (+ first). The all-equal profile exists only on the
  // uncorrelated locus |r_d| = sqrt(s) * 1.
  std::vector<Vec3> profiles;
  if ((magnitude - Vec3::Ones() * std::sqrt(s)).cwiseAbs().maxCoeff() <= 1e-10) {
    profiles.push_back(Vec3::Ones() * std::pow(s, 0.25));
  }
  profiles.push_back(Vec3::Ones());
  profiles.push_back(magnitude.cwiseSqrt());
  profiles.push_back((s * magnitude.cwiseInverse()).cwiseSqrt());

  for (const Vec3& x : profiles) {
    for (int pattern = 0; pattern < 8; ++pattern) {
      Vec3 eps;
      for (int i = 0; i < 3; ++i) eps[i] = (pattern >> (2 - i)) & 1 ? -1.0 : 1.0;

      AffineChannel ch_a, ch_b, ch_abar;
      Vec3 la = eps.cwiseProduct(x);
      Vec3 lb = eps.cwiseProduct(magnitude.cwiseQuotient(x));
      Vec3 labar = eps.cwiseProduct(s * (magnitude.cwiseProduct(x)).cwiseInverse());
      ch_a.lambda = la.asDiagonal();
      ch_a.v = r_c_a;
      ch_b.lambda = lb.asDiagonal();
      ch_abar.lambda = labar.asDiagonal();
      // Translation from the correlation condition; the product
      // lambda_a * lambda_b = |r_d| is sign-pattern independent.
      ch_abar.v = -s * bell.cwiseProduct(r_c_a).cwiseQuotient(magnitude);

      if (ch_a.is_cptp() && ch_b.is_cptp() && ch_abar.is_cptp()) {
        return std::make_tuple(ch_abar, ch_a, ch_b);
      }
    }
  }
  return std::nullopt;
}

}  // namespace qtp
