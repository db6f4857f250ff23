// Copyright 2026 The fswap Authors
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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fswap/benchmarking.hpp"
#include "fswap/cli.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/eca.hpp"
#include "fswap/qaoa.hpp"
#include "fswap/scheduler.hpp"

namespace {

using namespace fswap;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Every applicable decomposition reproduces F_theta.
Outcome decomposition_soundness() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(20260101);
  const std::vector<GatesetConfig> sets{GatesetConfig::cz_only(), GatesetConfig::with_cs(), GatesetConfig::parse("cz,cphase"),
                                        GatesetConfig::parse("cz,csdg")};
  std::size_t checked = 0, bad = 0;
  auto check = [&](Family f, double theta) {
    ++checked;
    if (!fswap_equivalent(fswap_circuit(family_gates(f, theta)), theta, 1e-9)) ++bad;
  };
  for (int i = 0; i < 1000; ++i) {
    const double theta = rng.uniform(0, kTwoPi);
    check(Family::Qasm, theta);
    check(Family::Cz3, theta);
    check(Family::Cphase, theta);
    if (in_cs_region(theta)) {
      check(Family::Cs, theta);
      check(Family::Csdg, theta);
    }
    for (const auto& gs : sets) {
      ++checked;
      if (!fswap_equivalent(select_fswap(theta, gs), theta, 1e-9)) ++bad;
    }
  }
  for (double theta : {0.0, kPi}) check(Family::Swap, theta);
  for (double theta : {kPi / 2, -kPi / 2}) check(Family::Iswap, theta);
  const double dt = seconds_since(t0);
  o.require(bad == 0, std::to_string(bad) + " mismatches");
  o.require(dt < 10, "runtime " + num(dt) + " s");
  o.note(std::to_string(checked) + " circuits in " + num(dt) + " s");
  return o;
}

// 2. Gate counts of the named constructions.
Outcome gate_counts() {
  Outcome o;
  const CostReport h = cost_report(hadamard(true));
  o.require(h.x90_total == 1, "optimized H uses " + std::to_string(h.x90_total) + " X90");
  const CostReport sw = cost_report(swap_decomposition(true));
  const CostReport sw_std = cost_report(swap_decomposition(false));
  o.require(sw.x90_total == 6 && sw.two_qubit_counts.at(GateKind::CZ) == 3, "optimized SWAP counts");
  o.require(sw.x90_critical_path == 3, "optimized SWAP critical path " + std::to_string(sw.x90_critical_path));
  o.require(sw_std.x90_total == 12, "textbook SWAP uses " + std::to_string(sw_std.x90_total) + " X90");
  auto two_qubit = [](const CostReport& r) {
    int s = 0;
    for (const auto& [k, v] : r.two_qubit_counts) s += v;
    return s;
  };
  for (int sign : {1, -1}) o.require(two_qubit(cost_report(fswap_iswap(sign))) == 2, "iSWAP case gate count");
  for (double theta : {kPi / 4, kPi / 3, kPi / 2 + 0.2, 3 * kPi / 4, 5 * kPi / 4 + 0.1}) {
    for (bool dag : {false, true}) {
      const CostReport r = cost_report(fswap_cs(theta, dag));
      const auto cz = r.two_qubit_counts.count(GateKind::CZ) ? r.two_qubit_counts.at(GateKind::CZ) : 0;
      const GateKind k = dag ? GateKind::CSD : GateKind::CS;
      const auto cs = r.two_qubit_counts.count(k) ? r.two_qubit_counts.at(k) : 0;
      o.require(cz == 2 && cs == 1 && two_qubit(r) == 3, "CS region counts at theta=" + num(theta));
    }
  }
  o.require(cz_equivalent_cost(kPi / 4) == 2.5, "cz_equivalent_cost(pi/4) = " + num(cz_equivalent_cost(kPi / 4)));
  return o;
}

// 3. Best-first matches exhaustive enumeration.
Outcome scheduler_optimality() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0, runs = 0;
  auto compare = [&](int n, std::uint64_t seed) {
    const Program prog = qaoa_program(sample_sk_instance(n, derive_seed(seed, 0)), sample_qaoa_params(1, derive_seed(seed, 1), 0.5));
    for (const auto& gs : {GatesetConfig::cz_only(), GatesetConfig::with_cs()}) {
      const int want = exhaustive_program(prog, gs).x90_critical_path;
      for (const SchedulePolicy& pol : {SchedulePolicy::deterministic(), SchedulePolicy::seeded_with(seed)}) {
        ++runs;
        if (schedule_program(prog, gs, pol).x90_critical_path != want) ++bad;
      }
    }
  };
  for (std::uint64_t s = 0; s < 20; ++s) compare(2, 1000 + s);
  for (std::uint64_t s = 0; s < 10; ++s) compare(4, 2000 + s);
  const double dt = seconds_since(t0);
  o.require(bad == 0, std::to_string(bad) + " of " + std::to_string(runs) + " schedules above the minimum");
  o.require(dt < 60, "runtime " + num(dt) + " s");
  o.note(std::to_string(runs) + " schedules in " + num(dt) + " s");
  return o;
}

// 4. ECA members agree semantically and in cost.
Outcome eca_safety() {
  Outcome o;
  int bad_unitary = 0, bad_cost = 0, bad_tvd = 0;
  std::size_t distinct = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Program prog = qaoa_program(sample_sk_instance(4, derive_seed(3000 + s, 0)),
                                      sample_qaoa_params(1, derive_seed(3000 + s, 1), 0.5));
    const Ensemble e = generate_ensemble(prog, GatesetConfig::with_cs(), 20, derive_seed(3000 + s, 2));
    const Matrix u0 = circuit_unitary(e.members.front());
    const Distribution d0 = simulate_ideal(e.members.front());
    const auto x0 = cost_report(e.members.front()).x90_critical_path;
    const auto best = static_cast<std::size_t>(schedule_program(prog, GatesetConfig::with_cs()).x90_critical_path);
    if (x0 != best) ++bad_cost;
    for (const auto& c : e.members) {
      if (!unitary_equiv(circuit_unitary(c), u0, 1e-9)) ++bad_unitary;
      if (cost_report(c).x90_critical_path != x0) ++bad_cost;
      if (tvd(simulate_ideal(c), d0) >= 1e-9) ++bad_tvd;
    }
    distinct += distinct_members(e);
  }
  o.require(bad_unitary == 0, std::to_string(bad_unitary) + " members not unitary-equivalent");
  o.require(bad_cost == 0, std::to_string(bad_cost) + " members off the minimal cost");
  o.require(bad_tvd == 0, std::to_string(bad_tvd) + " members with ideal TVD >= 1e-9");
  o.note("mean distinct members " + num(static_cast<double>(distinct) / 20));
  return o;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// 5. ECA lowers the error under the default noise model.
Outcome eca_mitigation() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"sweep", "--n", "4", "--p", "1", "--instances", "20", "--m", "20", "--shots", "10000",
                             "--seed", "5000", "--jobs", "0"},
                            out, err);
  const double dt = seconds_since(t0);
  if (code != 0) {
    o.require(false, "sweep exited " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto rows = csv_rows(out.str());
  // Columns: instance, gamma, D_Std, D_Opt, D_ECA, exact_D_Std, exact_D_Opt, exact_D_ECA.
  int wins = 0, count = 0;
  double opt = 0, eca = 0, stdv = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] == "mean") continue;
    const double s = std::stod(rows[i][5]), a = std::stod(rows[i][6]), b = std::stod(rows[i][7]);
    stdv += s, opt += a, eca += b, ++count;
    wins += b < a;
  }
  o.require(count == 20, "expected 20 instances, got " + std::to_string(count));
  if (count == 0) return o;
  opt /= count, eca /= count, stdv /= count;
  o.require(eca < opt, "mean ECA TVD " + num(eca) + " not below optimized " + num(opt));
  o.require(wins * 10 >= count * 7, "win rate " + std::to_string(wins) + "/" + std::to_string(count));
  o.require(dt < 300, "runtime " + num(dt) + " s");
  o.note("mean exact TVD std " + num(stdv) + ", opt " + num(opt) + ", eca " + num(eca) + ", wins " +
         std::to_string(wins) + "/" + std::to_string(count) + ", " + num(dt) + " s");
  return o;
}

// 6. CB recovers an injected depolarizing error; interleaved-infidelity arithmetic.
Outcome cb_recovery() {
  Outcome o;
  const double e_F = 5e-3;
  NoiseModel noise;
  // Pair depolarizing with strength q has process infidelity q (d^2 - 1) / d^2.
  noise.depolarizing_2q[GateKind::CZ] = e_F * 16.0 / 15.0;
  CBConfig cfg;
  cfg.target_cycle = circuit_from_gates(2, {Gate::cz(0, 1)});
  cfg.seed = 6000;
  const CBReport rep = run_cb(cfg, noise);
  const double rel = std::abs(rep.e_T - e_F) / e_F;
  o.require(rel <= 0.10, "fitted e_T " + num(rep.e_T) + " vs injected process infidelity " + num(e_F) +
                             " (relative error " + num(rel) + ")");
  o.note("e_T / average infidelity " + num(rep.e_T / process_to_average_infidelity(e_F, 2)));

  const double cs_row = interleaved_infidelity(1 - 0.98e-2, 1 - 4.12e-3, 2);
  o.require(std::abs(cs_row - 4.3e-3) < 0.05e-3, "CS row e_T " + num(cs_row));
  // The SWAP-pair cycle spans four qubits.
  const double swap_row = interleaved_infidelity(1 - 6.3e-2, 1 - 9.6e-3, 4);
  o.require(std::abs(swap_row - 5.1e-2) < 0.05e-2, "SWAP-pair e_T " + num(swap_row));
  o.note("CS row " + num(cs_row) + ", SWAP-pair " + num(swap_row));
  return o;
}

// 7. TVD identities.
Outcome tvd_identities() {
  Outcome o;
  const Distribution p{2, {0.1, 0.2, 0.3, 0.4}};
  o.require(tvd(p, p) == 0.0, "tvd(p, p) != 0");
  o.require(std::abs(tvd(Distribution{2, {0.5, 0.5, 0, 0}}, Distribution{2, {0, 0, 0.25, 0.75}}) - 1.0) < 1e-12,
            "disjoint supports");
  o.require(std::abs(tvd(Distribution{2, {0.25, 0.25, 0.25, 0.25}}, Distribution{2, {1, 0, 0, 0}}) - 0.75) < 1e-12,
            "uniform vs point mass");
  Rng rng(7000);
  auto draw = [&] {
    Distribution d{3, std::vector<double>(8)};
    double s = 0;
    for (double& x : d.p) s += (x = rng.uniform());
    for (double& x : d.p) x /= s;
    return d;
  };
  int bad = 0;
  for (int t = 0; t < 100; ++t) {
    const Distribution a = draw(), b = draw(), c = draw();
    const double ab = tvd(a, b), ba = tvd(b, a), bc = tvd(b, c), ac = tvd(a, c);
    if (std::abs(ab - ba) > 1e-12 || ab < -1e-12 || ab > 1 + 1e-12 || ac > ab + bc + 1e-12 || tvd(a, a) > 1e-12) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " triples violate the metric axioms");
  return o;
}

// 8. Every command replays byte-identically from its manifest.
Outcome reproducibility() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fswap_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const std::string& f) { return (dir / f).string(); };
  std::ofstream(p("noise.json")) << R"({"x90_overrotation":[0.03],"depolarizing_2q":{"cz":0.004},"seed":11})";
  const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
      {"gen.json", {"gen", "--n", "4", "--p", "1", "--seed", "8000"}},
      {"compile.json", {"compile", "--instance", p("gen.json"), "--policy", "seeded", "--seed", "3"}},
      {"eca.json", {"eca", "--instance", p("gen.json"), "--m", "5", "--shots", "1000", "--seed", "4", "--noise",
                    p("noise.json")}},
      {"cb.json", {"cb", "--cycle", "cs:0-1", "--depths", "2,4,8", "--k", "4", "--randomizations", "3"}},
      {"sweep.csv", {"sweep", "--n", "3", "--instances", "3", "--m", "3", "--shots", "600", "--seed", "9", "--jobs",
                     "2"}},
  };
  for (auto [file, args] : runs) {
    args.push_back("--out");
    args.push_back(p(file));
    std::ostringstream out, err;
    if (cli::run(args, out, err) != 0) {
      o.require(false, args.front() + " failed: " + err.str());
      continue;
    }
    const std::string first = cli::read_file(p(file));
    fs::copy_file(p(file), p(file + ".orig"));
    fs::remove(p(file));
    if (cli::run({"rerun", p(file + ".orig")}, out, err) != 0) {
      o.require(false, "rerun of " + args.front() + " failed: " + err.str());
      continue;
    }
    o.require(fs::exists(p(file)) && cli::read_file(p(file)) == first, args.front() + " output differs on rerun");
  }
  fs::remove_all(dir);
  o.note(std::to_string(runs.size()) + " commands replayed");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"decomposition soundness", decomposition_soundness},
      {"gate-count claims", gate_counts},
      {"scheduler optimality", scheduler_optimality},
      {"ECA semantic safety", eca_safety},
      {"ECA mitigation", eca_mitigation},
      {"CB estimator recovery", cb_recovery},
      {"TVD identities", tvd_identities},
      {"reproducibility", reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
