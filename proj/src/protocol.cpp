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

#include "qtp/protocol.hpp"

#include <cmath>

#include "qtp/densop.hpp"

namespace qtp {

Protocol::Protocol(TwoQubitFano resource, PovmSet povm, std::vector<Rotation> corrections)
    : Protocol(Unchecked{}, std::move(resource), std::move(povm), std::move(corrections)) {
  if (corrections_.size() != povm_.size() || corrections_.empty()) {
    throw DimensionMismatch("one correction rotation per POVM element required");
  }
  if (!resource_.is_physical(tol::ORACLE)) {
    throw InvalidState("resource state is not positive");
  }
  if (validate_closure(povm_).max() > tol::EXACT) {
    throw ClosureViolation("POVM closure conditions violated");
  }
}

Protocol::Protocol(Unchecked, TwoQubitFano resource, PovmSet povm,
                   std::vector<Rotation> corrections)
    : resource_(std::move(resource)), povm_(std::move(povm)),
      corrections_(std::move(corrections)) {}

Protocol Protocol::unchecked(TwoQubitFano resource, PovmSet povm,
                             std::vector<Rotation> corrections) {
  return Protocol(Unchecked{}, std::move(resource), std::move(povm), std::move(corrections));
}

std::vector<OutcomeRecord> execute(const Protocol& p, const QubitState& in) {
  const TwoQubitFano& res = p.resource();
  const Vec3& t = in.t();
  std::vector<OutcomeRecord> records;
  records.reserve(p.outcomes());

  for (std::size_t m = 0; m < p.outcomes(); ++m) {
    const PovmElement& e = p.povm().elements[m];
    const Vec3& omega_abar = e.state.r_a;
    const Vec3& omega_a = e.state.r_b;
    const Mat3& w = e.state.corr;

    const double g = 1.0 + omega_a.dot(res.r_a) + (w * res.r_a + omega_abar).dot(t);
    const double prob = e.weight * g;
    if (prob < tol::NEGATIVE_PROBABILITY) {
      throw NegativeProbability("outcome probability below tolerance; invalid protocol");
    }

    OutcomeRecord rec;
    rec.m = static_cast<int>(m);
    rec.p = prob;
    rec.g = g;
    if (prob < tol::MIN_PROBABILITY) {
      rec.defined = false;
    } else {
      const Mat3 a = res.r_b * omega_abar.transpose() + res.corr.transpose() * w.transpose();
      const Vec3 kappa = res.r_b + res.corr.transpose() * omega_a;
      rec.t_b = (a * t + kappa) / g;
      rec.t_out = p.corrections()[m] * rec.t_b;
    }
    records.push_back(rec);
  }
  return records;
}

std::vector<OutcomeRecord> execute_oracle(const Protocol& p, const QubitState& in) {
  using densop::CMat;
  const CMat rho_total =
      densop::kron(densop::density_from_bloch(in.t()), densop::fano_to_density(p.resource()));
  const CMat eye2 = densop::identity(2);

  std::vector<OutcomeRecord> records;
  records.reserve(p.outcomes());
  for (std::size_t m = 0; m < p.outcomes(); ++m) {
    const PovmElement& e = p.povm().elements[m];
    const CMat element_op = 4.0 * e.weight * densop::fano_to_density(e.state);
    const CMat measured = densop::kron(element_op, eye2) * rho_total;
    const double prob = measured.trace().real();
    if (prob < tol::NEGATIVE_PROBABILITY) {
      throw NegativeProbability("outcome probability below tolerance; invalid protocol");
    }

    OutcomeRecord rec;
    rec.m = static_cast<int>(m);
    rec.p = prob;
    rec.g = prob / e.weight;
    if (prob < tol::MIN_PROBABILITY) {
      rec.defined = false;
    } else {
      CMat rho_b = densop::partial_trace(densop::partial_trace(measured, 0), 0) / prob;
      rec.t_b = densop::bloch_from_density(rho_b);
      const Mat2c u = densop::unitary_from_rotation(p.corrections()[m]);
      const CMat rho_out = u * rho_b * u.adjoint();
      rec.t_out = densop::bloch_from_density(rho_out);
    }
    records.push_back(rec);
  }
  return records;
}

InducedChannel induced_channel(const Protocol& p) {
  const TwoQubitFano& res = p.resource();
  Mat3 c = Mat3::Zero();
  Vec3 v = Vec3::Zero();
  for (std::size_t m = 0; m < p.outcomes(); ++m) {
    const PovmElement& e = p.povm().elements[m];
    const Mat3 a = res.r_b * e.state.r_a.transpose() + res.corr.transpose() * e.state.corr.transpose();
    const Vec3 kappa = res.r_b + res.corr.transpose() * e.state.r_b;
    c += e.weight * (p.corrections()[m].matrix() * a);
    v += e.weight * (p.corrections()[m].matrix() * kappa);
  }
  return InducedChannel{c, v};
}

std::optional<std::vector<double>> is_aligned(const Protocol& p, double tolerance) {
  const TwoQubitFano& res = p.resource();

  // (ii) r_b = 0 and omega_a = 0; (i) w_m r_a + omega_abar = 0.
  if (res.r_b.norm() > tolerance) return std::nullopt;
  for (const auto& e : p.povm().elements) {
    if (e.state.r_b.norm() > tolerance) return std::nullopt;
    if ((e.state.corr * res.r_a + e.state.r_a).norm() > tolerance) return std::nullopt;
  }

  // (iii) needs invertible correlation matrices.
  if (std::abs(res.corr.determinant()) < tol::EXACT) {
    throw SingularCorrelation("resource correlation matrix is singular");
  }
  for (const auto& e : p.povm().elements) {
    if (std::abs(e.state.corr.determinant()) < tol::EXACT) {
      throw SingularCorrelation("POVM correlation matrix is singular");
    }
  }

  const Mat3 r_inv_t = res.corr.transpose().inverse();
  std::vector<double> factors;
  factors.reserve(p.outcomes());
  for (std::size_t m = 0; m < p.outcomes(); ++m) {
    const PovmElement& e = p.povm().elements[m];
    const Mat3& rot = p.corrections()[m].matrix();
    const double s = (rot * res.corr.transpose() * e.state.corr.transpose()).trace() / 3.0;
    if (!(s > 0.0) || s > 1.0 + tolerance) return std::nullopt;
    const Mat3 expected = s * e.state.corr.transpose().inverse() * r_inv_t;
    if ((rot - expected).cwiseAbs().maxCoeff() > tolerance) return std::nullopt;
    factors.push_back(s);
  }
  return factors;
}

}  // namespace qtp
