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

#include "qtp/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

namespace qtp {

namespace {

// 74-point octahedral rule: weights and node parameters solved from the
// seven invariant moment equations (exact through degree 13). The third
// class carries a negative weight; that is a property of this rule.
constexpr double k74_a1 = 5.130671797338464005130672e-04;
constexpr double k74_a2 = 1.660406956574203960963543e-02;
constexpr double k74_a3 = -2.958603896103896103896104e-02;
constexpr double k74_b1 = 2.657620708215946311184406e-02;
constexpr double k74_b1_l = 4.80384461415261400449761e-01;
constexpr double k74_d1 = 1.652217099371570916286363e-02;
constexpr double k74_d1_p = 3.207726489807764327003368e-01;

void add_vertices(std::vector<std::pair<Vec3, double>>& nodes, double w) {
  for (int i = 0; i < 3; ++i) {
    for (double s : {1.0, -1.0}) {
      Vec3 v = Vec3::Zero();
      v[i] = s;
      nodes.emplace_back(v, w);
    }
  }
}

void add_edge_midpoints(std::vector<std::pair<Vec3, double>>& nodes, double w) {
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          Vec3 v = Vec3::Zero();
          v[i] = si * r;
          v[j] = sj * r;
          nodes.emplace_back(v, w);
        }
      }
    }
  }
}

void add_cube_vertices(std::vector<std::pair<Vec3, double>>& nodes, double w) {
  const double r = 1.0 / std::sqrt(3.0);
  for (double sx : {1.0, -1.0})
    for (double sy : {1.0, -1.0})
      for (double sz : {1.0, -1.0}) nodes.emplace_back(Vec3(sx * r, sy * r, sz * r), w);
}

void add_llm(std::vector<std::pair<Vec3, double>>& nodes, double l, double w) {
  const double m = std::sqrt(1.0 - 2.0 * l * l);
  for (int pos_m = 0; pos_m < 3; ++pos_m) {
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        for (double sm : {1.0, -1.0}) {
          Vec3 v;
          int k = 0;
          const double ls[2] = {s1 * l, s2 * l};
          for (int i = 0; i < 3; ++i) v[i] = (i == pos_m) ? sm * m : ls[k++];
          nodes.emplace_back(v, w);
        }
      }
    }
  }
}

void add_pq0(std::vector<std::pair<Vec3, double>>& nodes, double p, double w) {
  const double q = std::sqrt(1.0 - p * p);
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& perm : perms) {
    for (double sp : {1.0, -1.0}) {
      for (double sq : {1.0, -1.0}) {
        const double base[3] = {sp * p, sq * q, 0.0};
        Vec3 v;
        for (int i = 0; i < 3; ++i) v[perm[i]] = base[i];
        nodes.emplace_back(v, w);
      }
    }
  }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int worker_count(std::size_t partitions) {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("QTP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  if (n == 0) n = 1;
  return static_cast<int>(std::min<std::size_t>(n, partitions));
}

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  // Chan et al. pairwise combination; applied in fixed partition order.
  void merge(const Moments& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count), nb = static_cast<double>(other.count);
    const double delta = other.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += other.m2 + delta * delta * na * nb / total;
    count += other.count;
  }
};

}  // namespace

std::vector<std::pair<Vec3, double>> lebedev_nodes(int order) {
  std::vector<std::pair<Vec3, double>> nodes;
  switch (order) {
    case 6:
      add_vertices(nodes, 1.0 / 6.0);
      break;
    case 26:
      add_vertices(nodes, 1.0 / 21.0);
      add_edge_midpoints(nodes, 4.0 / 105.0);
      add_cube_vertices(nodes, 9.0 / 280.0);
      break;
    case 74:
      add_vertices(nodes, k74_a1);
      add_edge_midpoints(nodes, k74_a2);
      add_cube_vertices(nodes, k74_a3);
      add_llm(nodes, k74_b1_l, k74_b1);
      add_pq0(nodes, k74_d1_p, k74_d1);
      break;
    default:
      throw OutOfRange("supported quadrature orders are 6, 26 and 74");
  }
  return nodes;
}

double trace_distance(const QubitState& a, const QubitState& b) {
  return 0.5 * (a.t() - b.t()).norm();
}

double fidelity(const QubitState& a, const QubitState& b) {
  const double pa = std::sqrt(std::max(0.0, 1.0 - a.t().squaredNorm()));
  const double pb = std::sqrt(std::max(0.0, 1.0 - b.t().squaredNorm()));
  return 0.5 * (1.0 + a.t().dot(b.t()) + pa * pb);
}

double dbar(const Protocol& p, const Vec3& t, Metric metric) {
  const QubitState in(t);
  double total = 0.0;
  for (const OutcomeRecord& rec : execute(p, in)) {
    if (!rec.defined) continue;
    const QubitState out(rec.t_out);
    total += rec.p * (metric == Metric::Trace ? trace_distance(in, out) : fidelity(in, out));
  }
  return total;
}

double avg_fidelity_closed(const InducedChannel& ch) {
  return 0.5 * (1.0 + ch.c.trace() / 3.0);
}

double fidelity_deviation_closed(const InducedChannel& ch) {
  const double tr = ch.c.trace();
  const double tr_c2 = (ch.c * ch.c).trace();
  const double tr_cct = (ch.c * ch.c.transpose()).trace();
  const double inner =
      0.25 * ((tr_c2 + tr * tr + tr_cct) / 15.0 - (tr / 3.0) * (tr / 3.0)) +
      ch.v.squaredNorm() / 12.0;
  if (inner < -1e-12) {
    throw NegativeVariance("squared fidelity deviation is negative");
  }
  return std::sqrt(std::max(0.0, inner));
}

SphereAverage sphere_average(const Protocol& p, Metric metric, const Sampler& sampler) {
  if (const auto* leb = std::get_if<LebedevSampler>(&sampler)) {
    const auto nodes = lebedev_nodes(leb->order);
    std::vector<double> values;
    values.reserve(nodes.size());
    double mean = 0.0;
    for (const auto& [t, w] : nodes) {
      values.push_back(dbar(p, t, metric));
      mean += w * values.back();
    }
    // Two-pass variance; the naive second-moment form loses the constant
    // integrand case to cancellation.
    double var = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double d = values[k] - mean;
      var += nodes[k].second * d * d;
    }
    SphereAverage out;
    out.mean = mean;
    out.std_dev = std::sqrt(std::max(0.0, var));
    out.mc_error = 0.0;
    out.samples = nodes.size();
    return out;
  }

  const auto& mc = std::get<MonteCarloSampler>(sampler);
  if (mc.n == 0) return SphereAverage{};
  const std::size_t partitions = mc.n >= 64 ? 64 : 1;
  std::vector<Moments> results(partitions);

  auto run_partition = [&](std::size_t k) {
    std::size_t count = mc.n / partitions + (k < mc.n % partitions ? 1 : 0);
    std::mt19937_64 rng(splitmix64(splitmix64(mc.seed) ^ (0xA0761D6478BD642FULL * (k + 1))));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Moments acc;
    while (count-- > 0) {
      Vec3 t(gauss(rng), gauss(rng), gauss(rng));
      double norm = t.norm();
      while (norm < 1e-12) {
        t = Vec3(gauss(rng), gauss(rng), gauss(rng));
        norm = t.norm();
      }
      acc.add(dbar(p, t / norm, metric));
    }
    results[k] = acc;
  };

  const int workers = worker_count(partitions);
  if (workers <= 1) {
    for (std::size_t k = 0; k < partitions; ++k) run_partition(k);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < partitions;
             k += static_cast<std::size_t>(workers)) {
          run_partition(k);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  Moments total;
  for (const Moments& part : results) total.merge(part);

  SphereAverage out;
  out.samples = total.count;
  out.mean = total.mean;
  out.std_dev = std::sqrt(std::max(0.0, total.m2 / static_cast<double>(total.count)));
  out.mc_error = total.count > 1
                     ? std::sqrt(total.m2 / static_cast<double>(total.count - 1)) /
                           std::sqrt(static_cast<double>(total.count))
                     : 0.0;
  return out;
}

double theorem1_gap(const Protocol& p, const Sampler& sampler) {
  const double avg_trace = sphere_average(p, Metric::Trace, sampler).mean;
  return avg_trace - (1.0 - avg_fidelity_closed(induced_channel(p)));
}

}  // namespace qtp
