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

#include "qtp/sampling.hpp"

#include <cmath>

namespace qtp {

namespace {

using Complex = std::complex<double>;

std::array<double, 4> unit_quaternion(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<double, 4> q;
  double norm2 = 0.0;
  do {
    for (double& c : q) c = gauss(rng);
    norm2 = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& c : q) c *= inv;
  return q;
}

}  // namespace

Rng make_rng(std::uint64_t seed) { return Rng(seed); }

Vec3 uniform_sphere(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec3 v;
  double norm = 0.0;
  do {
    v = Vec3(gauss(rng), gauss(rng), gauss(rng));
    norm = v.norm();
  } while (norm < 1e-12);
  return v / norm;
}

Vec3 uniform_ball(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return std::cbrt(unif(rng)) * uniform_sphere(rng);
}

Rotation random_rotation(Rng& rng) {
  const auto q = unit_quaternion(rng);
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Mat3 m;
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return Rotation(m);
}

Mat2c random_unitary2(Rng& rng) {
  const auto q = unit_quaternion(rng);
  Mat2c u;
  u << Complex(q[0], q[3]), Complex(q[2], q[1]), Complex(-q[2], q[1]), Complex(q[0], -q[3]);
  return u;
}

densop::CMat random_density(Rng& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  densop::CMat a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  densop::CMat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

TwoQubitFano random_fano(Rng& rng) { return densop::density_to_fano(random_density(rng, 4)); }

PovmSet random_povm(Rng& rng, int outcomes) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<densop::CMat> seeds;
  densop::CMat total = densop::CMat::Zero(4, 4);
  for (int m = 0; m < outcomes; ++m) {
    densop::CMat a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    seeds.push_back(a * a.adjoint());
    total += seeds.back();
  }

  Eigen::SelfAdjointEigenSolver<densop::CMat> es(total);
  const densop::CMat inv_sqrt = es.operatorInverseSqrt();

  PovmSet set;
  for (const auto& seed : seeds) {
    const densop::CMat element = inv_sqrt * seed * inv_sqrt;
    const double weight = 0.25 * element.trace().real();
    set.elements.emplace_back(weight, densop::density_to_fano(element / (4.0 * weight)));
  }
  return set;
}

Protocol random_protocol(Rng& rng, int outcomes) {
  TwoQubitFano resource = random_fano(rng);
  PovmSet povm = random_povm(rng, outcomes);
  std::vector<Rotation> corrections;
  corrections.reserve(outcomes);
  for (int m = 0; m < outcomes; ++m) corrections.push_back(random_rotation(rng));
  return Protocol(std::move(resource), std::move(povm), std::move(corrections));
}

AffineChannel random_channel(Rng& rng, bool cptp_only) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  while (true) {
    Mat3 lambda;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) lambda(i, j) = gauss(rng);
    // Scale into contraction range; CPTP rejection keeps the hit rate sane.
    lambda *= 0.5 / std::max(1.0, lambda.norm());
    AffineChannel ch{lambda, 0.3 * unif(rng) * uniform_sphere(rng)};
    if (!cptp_only || ch.is_cptp()) return ch;
  }
}

}  // namespace qtp
