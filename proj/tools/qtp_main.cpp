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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "qtp/aligned.hpp"
#include "qtp/channels.hpp"
#include "qtp/densop.hpp"
#include "qtp/json_io.hpp"
#include "qtp/metrics.hpp"
#include "qtp/sampling.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitArgError = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitVerifyFailure = 4;

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm_utc;
  gmtime_r(&tt, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const json& parameters) {
  json manifest{{"command", command},
                {"parameters", parameters},
                {"tool_version", kVersion},
                {"timestamp", iso_timestamp()}};
  std::ofstream out(out_path + ".manifest.json");
  if (!out) throw qtp::Error("cannot write manifest for " + out_path);
  out << manifest.dump(2) << "\n";
}

qtp::Vec3 spherical(double norm, double theta, double phi) {
  return norm * qtp::Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta));
}

std::string werner_case_name(qtp::WernerCase c) {
  switch (c) {
    case qtp::WernerCase::CaseI:
      return "case_i";
    case qtp::WernerCase::CaseII:
      return "case_ii";
    case qtp::WernerCase::UncorrelatedPoint:
      return "uncorrelated";
    default:
      return "infeasible";
  }
}

struct ScanArgs {
  double s = 0.8;
  double rca_norm = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double min = -1.0;
  double max = 1.0;
  int steps = 101;
  bool all = false;
  std::string out;
};

int run_scan(const ScanArgs& a) {
  const qtp::Vec3 r_c_a = spherical(a.rca_norm, a.theta, a.phi);
  const auto rows =
      qtp::scan_region(a.s, r_c_a, qtp::GridSpec{a.min, a.max, a.steps}, a.all);

  std::ofstream out(a.out);
  if (!out) throw qtp::Error("cannot write " + a.out);
  out << "r1,r2,r3,margin_a5a,margin_a5b,margin_a5c,margin_a5d,feasible\n";
  for (const auto& row : rows) {
    out << fmt_double(row.r1) << ',' << fmt_double(row.r2) << ',' << fmt_double(row.r3);
    for (double m : row.margins) out << ',' << fmt_double(m);
    out << ',' << (row.feasible ? 1 : 0) << '\n';
  }
  write_manifest(a.out, "scan",
                 json{{"s", a.s},
                      {"rca_norm", a.rca_norm},
                      {"theta", a.theta},
                      {"phi", a.phi},
                      {"min", a.min},
                      {"max", a.max},
                      {"steps", a.steps},
                      {"all", a.all}});
  std::cout << "scan: " << rows.size() << " rows -> " << a.out << "\n";
  return 0;
}

struct WernerArgs {
  double p_min = -1.0 / 3.0;
  double p_max = 1.0;
  int p_steps = 200;
  double s_min = 0.005;
  double s_max = 1.0;
  int s_steps = 200;
  std::string out;
};

int run_werner(const WernerArgs& a) {
  if (a.p_min < -1.0 / 3.0 - 1e-12 || a.p_max > 1.0 + 1e-12 || a.p_steps < 2 ||
      a.s_min <= 0.0 || a.s_max > 1.0 + 1e-12 || a.s_steps < 2) {
    std::cerr << "werner: grid ranges must satisfy p in [-1/3, 1], s in (0, 1]\n";
    return kExitArgError;
  }
  std::ofstream out(a.out);
  if (!out) throw qtp::Error("cannot write " + a.out);
  out << "p,s,p_prime,polynomial_value,case\n";
  for (int i = 0; i < a.p_steps; ++i) {
    const double p = a.p_min + (a.p_max - a.p_min) * i / (a.p_steps - 1);
    for (int j = 0; j < a.s_steps; ++j) {
      const double s = a.s_min + (a.s_max - a.s_min) * j / (a.s_steps - 1);
      const qtp::WernerReport r = qtp::werner_feasible(p, s);
      out << fmt_double(p) << ',' << fmt_double(s) << ',' << fmt_double(r.p_prime) << ','
          << fmt_double(r.polynomial) << ',' << werner_case_name(r.classification) << '\n';
    }
  }
  write_manifest(a.out, "werner",
                 json{{"p_min", a.p_min},
                      {"p_max", a.p_max},
                      {"p_steps", a.p_steps},
                      {"s_min", a.s_min},
                      {"s_max", a.s_max},
                      {"s_steps", a.s_steps}});
  std::cout << "werner: " << a.p_steps * a.s_steps << " rows -> " << a.out << "\n";
  return 0;
}

struct EvalArgs {
  std::string protocol_file;
  std::string out;
  std::string averages;
  int quadrature = 26;
  std::size_t samples = 0;  // 0 means quadrature
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_eval(const EvalArgs& a) {
  qtp::Protocol proto = qtp::load_protocol(a.protocol_file);

  qtp::Sampler sampler = qtp::LebedevSampler{a.quadrature};
  json sampler_desc{{"kind", "lebedev"}, {"order", a.quadrature}};
  if (a.samples > 0) {
    if (!a.seed_set) {
      std::cerr << "eval: --samples requires --seed for reproducibility\n";
      return kExitArgError;
    }
    sampler = qtp::MonteCarloSampler{a.samples, a.seed};
    sampler_desc = json{{"kind", "monte_carlo"}, {"samples", a.samples}, {"seed", a.seed}};
  }

  const qtp::InducedChannel ch = qtp::induced_channel(proto);
  json report;
  report["protocol"] = a.protocol_file;
  report["avg_fidelity"] = qtp::avg_fidelity_closed(ch);
  report["fidelity_deviation"] = qtp::fidelity_deviation_closed(ch);
  report["theorem1_gap"] = qtp::theorem1_gap(proto, sampler);
  report["sampler"] = sampler_desc;

  json cj = json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cj.push_back(ch.c(i, j));
  report["induced_channel"] = json{{"c", cj}, {"v", json::array({ch.v[0], ch.v[1], ch.v[2]})}};

  const auto factors = qtp::is_aligned(proto);
  json aligned{{"is_aligned", factors.has_value()}};
  if (factors) aligned["factors"] = *factors;
  report["aligned"] = aligned;

  if (!a.averages.empty()) {
    std::ofstream avg(a.averages);
    if (!avg) throw qtp::Error("cannot write " + a.averages);
    avg << "protocol_id,metric,mean,std_dev,mc_error,samples,seed\n";
    const std::string id = std::filesystem::path(a.protocol_file).stem().string();
    for (auto [metric, name] : {std::pair{qtp::Metric::Trace, "trace"},
                                std::pair{qtp::Metric::Fidelity, "fidelity"}}) {
      const qtp::SphereAverage sa = qtp::sphere_average(proto, metric, sampler);
      avg << id << ',' << name << ',' << fmt_double(sa.mean) << ',' << fmt_double(sa.std_dev)
          << ',' << fmt_double(sa.mc_error) << ',' << sa.samples << ','
          << (a.samples > 0 ? std::to_string(a.seed) : "0") << '\n';
    }
    write_manifest(a.averages, "eval-averages",
                   json{{"protocol", a.protocol_file}, {"sampler", sampler_desc}});
  }

  if (a.out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(a.out);
    if (!out) throw qtp::Error("cannot write " + a.out);
    out << report.dump(2) << "\n";
    write_manifest(a.out, "eval",
                   json{{"protocol", a.protocol_file}, {"sampler", sampler_desc}});
  }
  return 0;
}

struct DqtpArgs {
  double s = 1.0;
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  bool r_set = false;
  double rca_norm = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  std::string out;
};

int run_make_dqtp(const DqtpArgs& a) {
  qtp::Vec3 r_d(a.r1, a.r2, a.r3);
  if (!a.r_set) {
    const double p = std::sqrt(a.s);  // Werner point for this fidelity
    r_d = p * qtp::bell_diag(qtp::BellLabel::PhiPlus);
  }
  const qtp::Vec3 r_c_a = spherical(a.rca_norm, a.theta, a.phi);
  qtp::Protocol proto = qtp::build_dqtp(r_d, r_c_a, a.s);
  qtp::save_protocol(proto, a.out);
  write_manifest(a.out, "make-dqtp",
                 json{{"s", a.s},
                      {"r_d", json::array({r_d[0], r_d[1], r_d[2]})},
                      {"rca_norm", a.rca_norm},
                      {"theta", a.theta},
                      {"phi", a.phi}});
  std::cout << "make-dqtp: wrote " << a.out << "\n";
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 12345;
  int n = 200;
  bool sabotage = false;
};

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;
};

int run_verify(const VerifyArgs& a) {
  std::vector<SuiteResult> results;
  qtp::Rng rng = qtp::make_rng(a.seed);

  {  // fast path vs dense-operator execution
    double worst = 0.0;
    for (int trial = 0; trial < a.n; ++trial) {
      const qtp::Protocol proto = qtp::random_protocol(rng);
      for (int rep = 0; rep < 5; ++rep) {
        const qtp::QubitState in(qtp::uniform_ball(rng));
        auto fast = qtp::execute(proto, in);
        const auto slow = qtp::execute_oracle(proto, in);
        if (a.sabotage && trial == 0 && rep == 0) fast[0].p += 1e-6;
        for (std::size_t m = 0; m < fast.size(); ++m) {
          worst = std::max(worst, std::abs(fast[m].p - slow[m].p));
          if (fast[m].defined && slow[m].defined) {
            worst = std::max(worst, (fast[m].t_out - slow[m].t_out).norm());
          }
        }
      }
    }
    results.push_back({"execute-vs-oracle", worst < 1e-10,
                       "max residual " + fmt_double(worst)});
  }

  {  // local channel action vs operator-basis oracle
    double worst = 0.0;
    for (int trial = 0; trial < a.n; ++trial) {
      const qtp::AffineChannel ca = qtp::random_channel(rng, false);
      const qtp::AffineChannel cb = qtp::random_channel(rng, false);
      const qtp::TwoQubitFano f = qtp::random_fano(rng);
      const auto lhs = qtp::densop::fano_to_density(qtp::apply_local(ca, cb, f));
      const auto rhs = qtp::densop::apply_local_oracle(ca, cb, qtp::densop::fano_to_density(f));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    results.push_back({"apply-local-vs-oracle", worst < 1e-12,
                       "max residual " + fmt_double(worst)});
  }

  {  // closed-form positivity vs eigenvalue oracle
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    int bad = 0, checked = 0;
    for (int trial = 0; trial < a.n * 10; ++trial) {
      const qtp::Vec3 r_d(unif(rng), unif(rng), unif(rng));
      const qtp::Vec3 r_c = qtp::uniform_ball(rng);
      if (r_d[0] * r_d[1] * r_d[2] == 0.0) continue;
      qtp::TwoQubitFano f;
      f.r_a = r_c;
      f.corr = r_d.asDiagonal();
      const double min_eig =
          qtp::densop::hermitian_eigenvalues(qtp::densop::fano_to_density(f)).minCoeff();
      if (std::abs(min_eig) <= 1e-10) continue;
      ++checked;
      if (qtp::positivity_rb_zero(r_d, r_c) != (min_eig > 0.0)) ++bad;
    }
    results.push_back({"positivity-vs-oracle", bad == 0,
                       std::to_string(checked) + " samples, " + std::to_string(bad) +
                           " disagreements"});
  }

  {  // aligned feasibility vs oracle positivity of resource + POVM states
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_real_distribution<double> us(0.05, 1.0);
    int bad = 0, checked = 0;
    for (int trial = 0; trial < a.n * 10; ++trial) {
      const qtp::Vec3 r_d(unif(rng), unif(rng), unif(rng));
      const qtp::Vec3 r_c = 0.5 * qtp::uniform_ball(rng);
      const double s = us(rng);
      const double det = r_d[0] * r_d[1] * r_d[2];
      if (det == 0.0) continue;
      qtp::TwoQubitFano resource;
      resource.r_a = r_c;
      resource.corr = r_d.asDiagonal();
      qtp::TwoQubitFano povm_state;
      povm_state.r_a = -s * r_d.cwiseInverse().cwiseProduct(r_c);
      povm_state.corr = qtp::Mat3(s * r_d.cwiseInverse().asDiagonal());
      const double e1 = qtp::densop::hermitian_eigenvalues(
                            qtp::densop::fano_to_density(resource))
                            .minCoeff();
      const double e2 = qtp::densop::hermitian_eigenvalues(
                            qtp::densop::fano_to_density(povm_state))
                            .minCoeff();
      if (std::abs(e1) <= 1e-10 || std::abs(e2) <= 1e-10) continue;
      ++checked;
      const bool oracle_ok = e1 > 0.0 && e2 > 0.0;
      if (qtp::feasibility(r_d, r_c, s).ok != oracle_ok) ++bad;
    }
    results.push_back({"feasibility-vs-oracle", bad == 0,
                       std::to_string(checked) + " samples, " + std::to_string(bad) +
                           " disagreements"});
  }

  {  // random POVMs resolve the identity
    double worst = 0.0;
    for (int trial = 0; trial < a.n; ++trial) {
      const qtp::PovmSet set = qtp::random_povm(rng);
      worst = std::max(worst, qtp::validate_closure(set).max());
      qtp::densop::CMat sum = qtp::densop::CMat::Zero(4, 4);
      for (const auto& e : set.elements) {
        sum += 4.0 * e.weight * qtp::densop::fano_to_density(e.state);
      }
      worst = std::max(worst, (sum - qtp::densop::identity(4)).cwiseAbs().maxCoeff());
    }
    results.push_back({"povm-closure", worst < 1e-12, "max residual " + fmt_double(worst)});
  }

  {  // seeded Monte Carlo agrees with the closed-form average fidelity
    const qtp::Protocol proto = qtp::random_protocol(rng);
    const double closed = qtp::avg_fidelity_closed(qtp::induced_channel(proto));
    bool ok = true;
    for (int rep = 0; rep < 3; ++rep) {
      const auto mc = qtp::sphere_average(proto, qtp::Metric::Fidelity,
                                          qtp::MonteCarloSampler{20000, a.seed + rep});
      if (std::abs(mc.mean - closed) >= 4.0 * mc.mc_error) ok = false;
    }
    results.push_back({"mc-vs-closed-fidelity", ok, "3 seeded runs within 4 sigma"});
  }

  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qubit teleportation protocols in the Bloch/Fano representation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "feasibility scan over (r1, r2, r3)");
  scan->add_option("--s", scan_args.s, "alignment factor in (0, 1]")->required();
  scan->add_option("--rca-norm", scan_args.rca_norm, "norm of r_c_a");
  scan->add_option("--theta", scan_args.theta, "polar angle of r_c_a (radians)");
  scan->add_option("--phi", scan_args.phi, "azimuthal angle of r_c_a (radians)");
  scan->add_option("--min", scan_args.min, "grid minimum per axis");
  scan->add_option("--max", scan_args.max, "grid maximum per axis");
  scan->add_option("--steps", scan_args.steps, "grid nodes per axis");
  scan->add_flag("--all", scan_args.all, "emit infeasible rows too");
  scan->add_option("--out", scan_args.out, "output CSV path")->required();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a protocol file");
  eval->add_option("protocol", eval_args.protocol_file, "protocol JSON file")->required();
  eval->add_option("--out", eval_args.out, "report JSON path (default stdout)");
  eval->add_option("--averages", eval_args.averages, "also write sphere-average CSV");
  eval->add_option("--quadrature", eval_args.quadrature, "quadrature order (6, 26, 74)");
  eval->add_option("--samples", eval_args.samples, "Monte Carlo samples (replaces quadrature)");
  eval->add_option("--seed", eval_args.seed, "Monte Carlo seed")
      ->each([&](const std::string&) { eval_args.seed_set = true; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the differential oracle suites");
  verify->add_option("--seed", verify_args.seed, "RNG seed");
  verify->add_option("--n", verify_args.n, "cases per suite")->check(CLI::PositiveNumber);
  verify->add_flag("--sabotage", verify_args.sabotage,
                   "inject a fault (harness self-test; must fail)");

  WernerArgs werner_args;
  auto* werner = app.add_subcommand("werner", "classify Werner-Werner protocols on a (p, s) grid");
  werner->add_option("--p-min", werner_args.p_min, "minimum p");
  werner->add_option("--p-max", werner_args.p_max, "maximum p");
  werner->add_option("--p-steps", werner_args.p_steps, "grid nodes in p");
  werner->add_option("--s-min", werner_args.s_min, "minimum s");
  werner->add_option("--s-max", werner_args.s_max, "maximum s");
  werner->add_option("--s-steps", werner_args.s_steps, "grid nodes in s");
  werner->add_option("--out", werner_args.out, "output CSV path")->required();

  DqtpArgs dqtp_args;
  auto* dqtp = app.add_subcommand("make-dqtp", "write a deterministic aligned protocol file");
  dqtp->add_option("--s", dqtp_args.s, "alignment factor in (0, 1]")->required();
  auto* r1 = dqtp->add_option("--r1", dqtp_args.r1, "resource diagonal r1");
  auto* r2 = dqtp->add_option("--r2", dqtp_args.r2, "resource diagonal r2");
  auto* r3 = dqtp->add_option("--r3", dqtp_args.r3, "resource diagonal r3");
  dqtp->add_option("--rca-norm", dqtp_args.rca_norm, "norm of r_c_a");
  dqtp->add_option("--theta", dqtp_args.theta, "polar angle of r_c_a (radians)");
  dqtp->add_option("--phi", dqtp_args.phi, "azimuthal angle of r_c_a (radians)");
  dqtp->add_option("--out", dqtp_args.out, "output protocol JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitArgError;
  }

  try {
    if (*scan) return run_scan(scan_args);
    if (*eval) return run_eval(eval_args);
    if (*verify) return run_verify(verify_args);
    if (*werner) return run_werner(werner_args);
    if (*dqtp) {
      dqtp_args.r_set = r1->count() > 0 || r2->count() > 0 || r3->count() > 0;
      return run_make_dqtp(dqtp_args);
    }
  } catch (const qtp::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgError;
  } catch (const qtp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
