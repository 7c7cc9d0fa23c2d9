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
#include <utility>
#include <variant>
#include <vector>

#include "qtp/protocol.hpp"

namespace qtp {

enum class Metric { Trace, Fidelity };

/// Mean and spread of an outcome-averaged distinguishability over the
/// uniform sphere of pure inputs. std_dev is the deviation of the function
/// itself; mc_error its standard error (0 for quadrature).
struct SphereAverage {
  double mean = 0.0;
  double std_dev = 0.0;
  double mc_error = 0.0;
  std::size_t samples = 0;
};

/// Uniform sphere sampling via normalized Gaussian triples. Sampling is
/// split into fixed partitions with independent streams derived from
/// (seed, partition index), so results do not depend on the thread count.
struct MonteCarloSampler {
  std::size_t n = 100000;
  std::uint64_t seed = 0;
};

/// Octahedrally symmetric quadrature; supported orders are 6, 26 and 74
/// points (exact for polynomial integrands of degree 3, 7 and 13).
struct LebedevSampler {
  int order = 26;
};

using Sampler = std::variant<MonteCarloSampler, LebedevSampler>;

/// Nodes and weights of the quadrature rule; weights sum to 1.
std::vector<std::pair<Vec3, double>> lebedev_nodes(int order);

double trace_distance(const QubitState& a, const QubitState& b);
double fidelity(const QubitState& a, const QubitState& b);

/// Outcome-weighted distinguishability sum_m P_m D(in, out_m) for one
/// input Bloch vector.
double dbar(const Protocol& p, const Vec3& t, Metric metric);

/// Closed-form average fidelity (1/2)(1 + tr(C)/3).
double avg_fidelity_closed(const InducedChannel& ch);

/// Closed-form fidelity deviation; throws NegativeVariance if the inner
/// expression falls below -1e-12 (numerical-bug signal).
double fidelity_deviation_closed(const InducedChannel& ch);

SphereAverage sphere_average(const Protocol& p, Metric metric, const Sampler& sampler);

/// <D_T> - (1 - <F>); non-negative up to sampling error for every valid
/// protocol, zero exactly for aligned ones.
double theorem1_gap(const Protocol& p, const Sampler& sampler);

}  // namespace qtp
