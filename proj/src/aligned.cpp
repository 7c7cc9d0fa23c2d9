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

#include "qtp/aligned.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

#include "qtp/states.hpp"

namespace qtp {

namespace {

std::array<double, 4> inequality_margins(const Vec3& r_d, const Vec3& r_c_a, double s) {
  const double r1 = r_d[0], r2 = r_d[1], r3 = r_d[2];
  const double det = r1 * r2 * r3;
  const double n2 = r_d.squaredNorm();
  const double rc2 = r_c_a.squaredNorm();
  const Vec3 adj(r2 * r3, r1 * r3, r1 * r2);  // det * r_d^-1, valid at det = 0
  const double adj2 = adj.squaredNorm();
  const Vec3 rd_rc = r_d.cwiseProduct(r_c_a);
  const Vec3 adj_rc = adj.cwiseProduct(r_c_a);
  const Vec3 adj2_rc = adj.cwiseProduct(adj_rc);
  const double s2 = s * s;

  std::array<double, 4> m;
  // Resource pair.
  m[0] = -2.0 * det - (n2 - 1.0) - rc2;
  m[1] = f_poly(r1, r2, r3) - 4.0 * rd_rc.squaredNorm() - rc2 * (2.0 * (1.0 - n2) - rc2);
  // POVM pair, written in (s, adj, det) form (the r_d^-1 system scaled by
  // det^2 and det^4 respectively).
  const double u = s2 * adj2 - det * det;
  m[2] = -2.0 * s2 * s * det - u - s2 * adj_rc.squaredNorm();
  m[3] = -8.0 * s2 * s * det * det * det + u * u - 4.0 * s2 * s2 * det * det * n2 -
         4.0 * s2 * s2 * adj2_rc.squaredNorm() +
         s2 * adj_rc.squaredNorm() * (2.0 * u + s2 * adj_rc.squaredNorm());
  return m;
}

bool margins_ok(const std::array<double, 4>& m) {
  for (double v : m) {
    if (v < -tol::EXACT) return false;
  }
  return true;
}

void check_s(double s) {
  if (!(s > 0.0) || s > 1.0) throw OutOfRange("factor s must lie in (0, 1]");
}

int scan_workers() {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("QTP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

FeasibilityReport feasibility(const Vec3& r_d, const Vec3& r_c_a, double s) {
  check_s(s);
  if (r_d[0] * r_d[1] * r_d[2] == 0.0) {
    throw SingularCorrelation("diagonal correlation matrix is singular");
  }
  const auto m = inequality_margins(r_d, r_c_a, s);
  return FeasibilityReport{margins_ok(m), m};
}

Protocol build_aligned(const AlignedSpec& spec) {
  if (spec.outcomes.empty()) throw DimensionMismatch("aligned spec needs outcomes");
  if (spec.r_d[0] * spec.r_d[1] * spec.r_d[2] == 0.0) {
    throw SingularCorrelation("diagonal correlation matrix is singular");
  }

  double wsum = 0.0;
  Mat3 closure = Mat3::Zero();
  for (const auto& out : spec.outcomes) {
    check_s(out.s);
    wsum += out.weight;
    closure += out.weight * out.s * out.o_abar.matrix().transpose();
  }
  if (std::abs(wsum - 1.0) > tol::EXACT) {
    throw ClosureViolation("outcome weights do not sum to 1");
  }
  if (closure.cwiseAbs().maxCoeff() > tol::EXACT) {
    throw ClosureViolation("outcome rotations violate the closure constraint");
  }
  for (const auto& out : spec.outcomes) {
    if (!feasibility(spec.r_d, spec.r_c_a, out.s).ok) {
      throw Infeasible("positivity fails for an outcome factor");
    }
  }

  const Mat3 o_a = spec.o_a.matrix();
  const Mat3 o_b = spec.o_b.matrix();
  const Vec3 rd_inv = spec.r_d.cwiseInverse();

  TwoQubitFano resource;
  resource.r_a = o_a.transpose() * spec.r_c_a;
  resource.r_b = Vec3::Zero();
  resource.corr = o_a.transpose() * spec.r_d.asDiagonal() * o_b;

  PovmSet povm;
  std::vector<Rotation> corrections;
  corrections.reserve(spec.outcomes.size());
  for (const auto& out : spec.outcomes) {
    const Mat3 o_abar_t = out.o_abar.matrix().transpose();
    TwoQubitFano state;
    state.r_a = o_abar_t * (-out.s * rd_inv.cwiseProduct(spec.r_c_a));
    state.r_b = Vec3::Zero();
    state.corr = o_abar_t * (out.s * rd_inv.asDiagonal()) * o_a;
    povm.elements.emplace_back(out.weight, state);
    corrections.push_back(Rotation(o_abar_t * o_b));
  }
  return Protocol(std::move(resource), std::move(povm), std::move(corrections));
}

Protocol build_dqtp(const Vec3& r_d, const Vec3& r_c_a, double s) {
  AlignedSpec spec;
  spec.r_d = r_d;
  spec.r_c_a = r_c_a;
  for (const SignMatrix& b : SignMatrix::all()) {
    spec.outcomes.push_back(AlignedOutcome{0.25, s, b.rotation()});
  }
  return build_aligned(spec);
}

double det_rd_sign(const AlignedSpec& spec) { return spec.r_d[0] * spec.r_d[1] * spec.r_d[2]; }

double fidelity_target(const std::vector<AlignedOutcome>& outcomes) {
  double acc = 0.0;
  for (const auto& out : outcomes) acc += out.weight * out.s;
  return 0.5 * (1.0 + acc);
}

std::vector<ScanRow> scan_region(double s, const Vec3& r_c_a, const GridSpec& grid,
                                 bool include_infeasible) {
  check_s(s);
  if (grid.steps < 2) throw OutOfRange("grid needs at least 2 steps per axis");
  const double step = (grid.max - grid.min) / (grid.steps - 1);
  auto node = [&](int k) { return grid.min + step * k; };

  const int workers = std::min(scan_workers(), grid.steps);
  std::vector<std::vector<ScanRow>> slabs(grid.steps);

  auto run_slab = [&](int i) {
    const double r1 = node(i);
    std::vector<ScanRow>& rows = slabs[i];
    for (int j = 0; j < grid.steps; ++j) {
      const double r2 = node(j);
      for (int k = 0; k < grid.steps; ++k) {
        const double r3 = node(k);
        const auto margins = inequality_margins(Vec3(r1, r2, r3), r_c_a, s);
        const bool invertible = (r1 * r2 * r3) != 0.0;
        const bool feasible = invertible && margins_ok(margins);
        if (feasible || include_infeasible) {
          rows.push_back(ScanRow{r1, r2, r3, margins, feasible});
        }
      }
    }
  };

  if (workers <= 1) {
    for (int i = 0; i < grid.steps; ++i) run_slab(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < grid.steps; i += workers) run_slab(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ScanRow> out;
  for (auto& slab : slabs) {
    out.insert(out.end(), slab.begin(), slab.end());
  }
  return out;
}

}  // namespace qtp
