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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fswap/benchmarking.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/eca.hpp"
#include "fswap/json_io.hpp"
#include "fswap/network.hpp"
#include "fswap/qaoa.hpp"
#include "fswap/simulator.hpp"

namespace fswap::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kInvariant = 2, kResource = 3 };

using io::json;

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io::FormatError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw io::FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Noise model named on the command line; empty path means the default.
struct NoiseSource {
  NoiseModel model = NoiseModel::desk_default();
  json hash = "default";

  static NoiseSource load(const std::string& path) {
    NoiseSource s;
    if (path.empty()) return s;
    const std::string text = read_file(path);
    try {
      s.model = io::noise_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw io::FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
    s.hash = "fnv1a64:" + hex64(fnv1a64(text));
    return s;
  }
};

/// Everything needed to rerun a command.
struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  json seeds = json::object();
  std::string gateset;
  json noise_hash = nullptr;

  json to_json() const {
    json j;
    j["command"] = command;
    j["argv"] = argv;
    j["seeds"] = seeds;
    j["gateset"] = gateset;
    j["noise_hash"] = noise_hash;
    j["version"] = kVersion;
    return j;
  }
};

/// Per-instance TVDs against the ideal distribution.
struct InstanceResult {
  double gamma0 = 0;
  std::string gammas;
  double d_std = 0, d_opt = 0, d_eca = 0;
  double x_std = 0, x_opt = 0, x_eca = 0;  // exact distributions, no shot noise
  Ensemble ensemble;
  Counts merged;
  std::vector<std::uint64_t> shots;
};

inline Distribution counts_distribution(const Counts& c) { return union_distribution({c}); }

/// Standard, optimized and ECA runs of one instance under `noise`.
inline InstanceResult evaluate_instance(const SKModel& model, const QAOAParams& params, const GatesetConfig& gs,
                                        std::size_t M, std::uint64_t master_seed, std::uint64_t S,
                                        const NoiseModel& noise, std::uint64_t sample_seed) {
  if (model.n > kMaxDensityQubits) throw ResourceError("noisy simulation is limited to 6 qubits");
  InstanceResult r;
  r.gamma0 = params.gamma.front();
  for (std::size_t k = 0; k < params.gamma.size(); ++k) r.gammas += (k ? ";" : "") + fmt(params.gamma[k]);

  const Program prog = qaoa_program(model, params);
  const Circuit opt = schedule_program(prog, gs).circuit;
  const Circuit std_c = build_standard_circuit(model, params);
  const Distribution ideal = simulate_ideal(opt);
  if (tvd(ideal, simulate_ideal(std_c)) > 1e-9) throw InvariantError("standard and optimized circuits disagree");

  r.ensemble = generate_ensemble(prog, gs, M, master_seed);
  r.shots = allocate_shots(S, M);
  std::vector<Counts> counts;
  std::vector<Distribution> exact;
  for (std::size_t k = 0; k < M; ++k) {
    exact.push_back(simulate_noisy(r.ensemble.members[k], noise));
    counts.push_back(sample_counts(exact.back(), r.shots[k], derive_seed(derive_seed(sample_seed, 1), k)));
  }
  const Distribution eca = union_distribution(counts);
  r.merged = Counts{model.n, S, {}};
  for (const auto& c : counts)
    for (const auto& [k, v] : c.hist) r.merged.hist[k] += v;

  const Distribution n_std = simulate_noisy(std_c, noise), n_opt = simulate_noisy(opt, noise);
  r.d_std = tvd(counts_distribution(sample_counts(n_std, S, derive_seed(sample_seed, 2))), ideal);
  r.d_opt = tvd(counts_distribution(sample_counts(n_opt, S, derive_seed(sample_seed, 3))), ideal);
  r.d_eca = tvd(eca, ideal);
  r.x_std = tvd(n_std, ideal);
  r.x_opt = tvd(n_opt, ideal);
  r.x_eca = tvd(mixture_distribution(exact, r.shots), ideal);
  return r;
}

/// Parses "cz:0-1,cs:2-3,x90:0,vz(0.5):1,cphase(1.2):0-1" into a cycle.
inline Circuit parse_cycle(const std::string& text, int n) {
  std::vector<Gate> gs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw io::FormatError("cycle entry '" + item + "' needs kind:qubits");
    std::string kind = item.substr(0, colon);
    double angle = 0;
    if (const auto lp = kind.find('('); lp != std::string::npos) {
      if (kind.back() != ')') throw io::FormatError("cycle entry '" + item + "' has an unterminated angle");
      try {
        angle = std::stod(kind.substr(lp + 1, kind.size() - lp - 2));
      } catch (const std::exception&) {
        throw io::FormatError("cycle entry '" + item + "' has a bad angle");
      }
      kind = kind.substr(0, lp);
    }
    auto k = gate_kind_from_name(kind);
    if (!k || *k == GateKind::MEASURE) throw io::FormatError("unknown gate '" + kind + "' in cycle");
    Gate g{*k, {}, 0};
    if (*k == GateKind::VZ || *k == GateKind::CPHASE) g.angle = normalize_angle(angle);
    std::stringstream qs(item.substr(colon + 1));
    std::string q;
    try {
      while (std::getline(qs, q, '-')) g.qubits.push_back(std::stoi(q));
    } catch (const std::exception&) {
      throw io::FormatError("cycle entry '" + item + "' has a bad qubit list");
    }
    gs.push_back(std::move(g));
  }
  if (gs.empty()) throw io::FormatError("empty cycle");
  try {
    return circuit_from_gates(n, gs);
  } catch (const InvariantError& e) {
    throw io::FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw io::FormatError(e.what());
  }
}

template <class T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      if constexpr (std::is_same_v<T, int>) out.push_back(std::stoi(item, &used));
      else out.push_back(item), used = item.size();
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw io::FormatError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

/// Command-line driver. Output goes to `out` unless --out names a file.
class Driver {
 public:
  Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    args_ = args;
    CLI::App app{"fermionic SWAP network compiler, simulator and benchmarks", "fswap"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* gen = app.add_subcommand("gen", "sample an SK instance and QAOA angles");
    gen->add_option("--n", n_, "qubits")->required();
    gen->add_option("--p", p_, "QAOA depth");
    gen->add_option("--seed", seed_, "master seed");
    gen->add_option("--cs-fraction", cs_fraction_, "share of gamma drawn from the CS region")
        ->check(CLI::Range(0.0, 1.0));
    add_out(gen);

    auto* compile = app.add_subcommand("compile", "compile an instance to native gates");
    add_instance(compile);
    add_gateset(compile);
    compile->add_option("--baseline", baseline_, "none or qasm")->check(CLI::IsMember({"none", "qasm"}));
    compile->add_option("--policy", policy_, "det or seeded (uses --seed)")->check(CLI::IsMember({"det", "seeded"}));
    compile->add_option("--seed", seed_, "scheduler seed");
    add_out(compile);

    auto* eca = app.add_subcommand("eca", "equivalent circuit averaging on one instance");
    add_instance(eca);
    add_gateset(eca);
    eca->add_option("--m", m_, "ensemble size");
    eca->add_option("--shots", shots_, "total shots");
    eca->add_option("--seed", seed_, "master seed");
    eca->add_option("--noise", noise_path_, "noise model JSON");
    add_out(eca);

    auto* cb = app.add_subcommand("cb", "cycle benchmarking of one cycle");
    cb->add_option("--n", n_cb_, "qubits");
    cb->add_option("--cycle", cycle_, "cycle, e.g. cz:0-1,cs:2-3");
    cb->add_option("--cycle-file", cycle_file_, "cycle as circuit JSON");
    cb->add_option("--depths", depths_, "comma-separated even depths");
    cb->add_option("--k", k_, "Pauli channels");
    cb->add_option("--randomizations", randomizations_, "twirl randomizations per depth");
    cb->add_option("--shots", cb_shots_, "shots per circuit, 0 for exact expectations");
    cb->add_option("--channels", channels_, "explicit channels, e.g. XI,ZZ");
    cb->add_option("--seed", seed_, "seed");
    cb->add_option("--noise", noise_path_, "noise model JSON");
    add_out(cb);

    auto* sweep = app.add_subcommand("sweep", "TVD of standard, optimized and ECA runs over instances");
    sweep->add_option("--n", n_, "qubits");
    sweep->add_option("--p", p_, "QAOA depth");
    sweep->add_option("--instances", instances_, "instance count");
    sweep->add_option("--cs-fraction", cs_fraction_, "share of gamma drawn from the CS region")
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--m", m_, "ensemble size");
    sweep->add_option("--shots", shots_, "total shots per circuit");
    sweep->add_option("--seed", seed_, "master seed");
    sweep->add_option("--noise", noise_path_, "noise model JSON");
    sweep->add_option("--jobs", jobs_, "worker threads, 0 for all cores");
    add_gateset(sweep);
    add_out(sweep);

    auto* rerun = app.add_subcommand("rerun", "repeat the run recorded in an output's manifest");
    rerun->add_option("file", rerun_file_, "JSON or CSV output")->required();

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    try {
      if (*gen) return cmd_gen();
      if (*compile) return cmd_compile();
      if (*eca) return cmd_eca();
      if (*cb) return cmd_cb();
      if (*sweep) return cmd_sweep();
      if (*rerun) return cmd_rerun();
    } catch (const ResourceError& e) {
      err_ << "resource limit: " << e.what() << "\n";
      return kResource;
    } catch (const InvariantError& e) {
      err_ << "invariant violation: " << e.what() << "\n";
      return kInvariant;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const json::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      err_ << "invariant violation: " << e.what() << "\n";
      return kInvariant;
    }
    return kUsage;
  }

 private:
  void add_out(CLI::App* a) { a->add_option("--out", out_path_, "output file (default stdout)"); }
  void add_instance(CLI::App* a) {
    a->add_option("--instance", instance_path_, "instance JSON from gen")->required();
    a->add_option("--params", params_path_, "QAOA angles JSON (default: taken from --instance)");
  }
  void add_gateset(CLI::App* a) { a->add_option("--gateset", gateset_, "native entanglers, e.g. cz or cz,cs,csdg"); }

  Manifest manifest(const std::string& command) const {
    Manifest m;
    m.command = command;
    m.argv = args_;
    m.gateset = gateset_;
    return m;
  }

  void load_instance(SKModel& model, QAOAParams& params) const {
    const json inst = read_json(instance_path_);
    model = io::sk_from_json(inst.contains("instance") ? inst.at("instance") : inst);
    if (params_path_.empty()) {
      if (!inst.contains("params")) throw io::FormatError("no QAOA angles: pass --params");
      params = io::params_from_json(inst.at("params"));
    } else {
      const json pj = read_json(params_path_);
      params = io::params_from_json(pj.contains("params") ? pj.at("params") : pj);
    }
  }

  int emit(const std::string& text) {
    if (out_path_.empty()) {
      out_ << text;
      return kOk;
    }
    std::ofstream f(out_path_, std::ios::binary);
    if (!f) throw io::FormatError("cannot write '" + out_path_ + "'");
    f << text;
    return kOk;
  }
  int emit(const json& j) { return emit(j.dump(2) + "\n"); }

  int cmd_gen() {
    if (n_ < 2) throw std::invalid_argument("--n must be at least 2");
    if (p_ < 1) throw std::invalid_argument("--p must be at least 1");
    const std::uint64_t s_inst = derive_seed(seed_, 0), s_par = derive_seed(seed_, 1);
    Manifest m = manifest("gen");
    m.gateset = "";
    m.seeds = {{"master", seed_}, {"instance", s_inst}, {"params", s_par}};
    json j;
    j["manifest"] = m.to_json();
    j["manifest"]["cs_fraction"] = cs_fraction_;
    j["instance"] = io::to_json(sample_sk_instance(n_, s_inst));
    j["params"] = io::to_json(sample_qaoa_params(p_, s_par, cs_fraction_));
    return emit(j);
  }

  int cmd_compile() {
    SKModel model;
    QAOAParams params;
    load_instance(model, params);
    const GatesetConfig gs = GatesetConfig::parse(gateset_);
    Manifest m = manifest("compile");
    const bool seeded = policy_ == "seeded";
    m.seeds = {{"scheduler", seeded ? json(seed_) : json(nullptr)}};
    json j;
    j["manifest"] = m.to_json();
    if (baseline_ == "qasm") {
      const Circuit c = build_standard_circuit(model, params);
      j["circuit"] = io::to_json(c);
      j["cost"] = io::to_json(cost_report(c));
      j["optimal"] = false;
      return emit(j);
    }
    const SchedulePolicy pol = seeded ? SchedulePolicy::seeded_with(seed_) : SchedulePolicy::deterministic();
    const ScheduleResult r = schedule_program(qaoa_program(model, params), gs, pol);
    j["circuit"] = io::to_json(r.circuit);
    j["cost"] = io::to_json(cost_report(r.circuit));
    j["optimal"] = r.optimal;
    return emit(j);
  }

  int cmd_eca() {
    SKModel model;
    QAOAParams params;
    load_instance(model, params);
    if (m_ < 1) throw std::invalid_argument("--m must be at least 1");
    if (shots_ < m_) throw std::invalid_argument("--shots must be at least --m");
    const GatesetConfig gs = GatesetConfig::parse(gateset_);
    const NoiseSource noise = NoiseSource::load(noise_path_);
    const InstanceResult r =
        evaluate_instance(model, params, gs, m_, seed_, shots_, noise.model, noise.model.seed);
    Manifest m = manifest("eca");
    m.seeds = {{"master", seed_}, {"noise", noise.model.seed}};
    m.noise_hash = noise.hash;
    json j;
    j["manifest"] = m.to_json();
    j["ensemble"] = io::to_json(r.ensemble);
    j["distinct_members"] = distinct_members(r.ensemble);
    j["shots_per_member"] = r.shots;
    j["merged_counts"] = io::to_json(r.merged);
    json rep;
    rep["gamma"] = params.gamma;
    rep["D_Std"] = r.d_std;
    rep["D_Opt"] = r.d_opt;
    rep["D_ECA"] = r.d_eca;
    rep["exact"] = {{"D_Std", r.x_std}, {"D_Opt", r.x_opt}, {"D_ECA", r.x_eca}};
    j["report"] = std::move(rep);
    return emit(j);
  }

  int cmd_cb() {
    CBConfig cfg;
    if (!cycle_file_.empty() && !cycle_.empty()) throw std::invalid_argument("give --cycle or --cycle-file, not both");
    if (!cycle_file_.empty()) cfg.target_cycle = io::circuit_from_json(read_json(cycle_file_));
    else cfg.target_cycle = parse_cycle(cycle_.empty() ? "cz:0-1" : cycle_, n_cb_);
    cfg.depths = parse_list<int>(depths_, "depth");
    cfg.K = k_;
    cfg.randomizations = randomizations_;
    cfg.shots = cb_shots_;
    cfg.seed = seed_;
    if (!channels_.empty()) cfg.channels = parse_list<std::string>(channels_, "channel");
    const NoiseSource noise = NoiseSource::load(noise_path_);
    const CBReport rep = run_cb(cfg, noise.model);
    Manifest m = manifest("cb");
    m.gateset = "";
    m.seeds = {{"twirl", seed_}, {"noise", noise.model.seed}};
    m.noise_hash = noise.hash;
    json j;
    j["manifest"] = m.to_json();
    j["cycle"] = io::to_json(cfg.target_cycle);
    const json body = io::to_json(rep);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return emit(j);
  }

  int cmd_sweep() {
    if (instances_ < 1) throw std::invalid_argument("--instances must be at least 1");
    if (n_ < 2) throw std::invalid_argument("--n must be at least 2");
    if (p_ < 1) throw std::invalid_argument("--p must be at least 1");
    if (m_ < 1 || shots_ < m_) throw std::invalid_argument("need --shots >= --m >= 1");
    const GatesetConfig gs = GatesetConfig::parse(gateset_);
    const NoiseSource noise = NoiseSource::load(noise_path_);
    std::vector<InstanceResult> rows(instances_);
    std::vector<std::exception_ptr> errors(instances_);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < instances_;) {
        try {
          const SKModel model = sample_sk_instance(n_, derive_seed(seed_, 3 * i));
          const QAOAParams params = sample_qaoa_params(p_, derive_seed(seed_, 3 * i + 1), cs_fraction_);
          rows[i] = evaluate_instance(model, params, gs, m_, derive_seed(seed_, 3 * i + 2), shots_, noise.model,
                                      derive_seed(noise.model.seed, i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::size_t jobs = jobs_ == 0 ? std::max(1U, std::thread::hardware_concurrency()) : jobs_;
    jobs = std::min(jobs, instances_);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    Manifest m = manifest("sweep");
    m.seeds = {{"master", seed_}, {"noise", noise.model.seed}};
    m.noise_hash = noise.hash;
    std::string csv = "# manifest " + m.to_json().dump() + "\n";
    csv += "instance,gamma,D_Std,D_Opt,D_ECA,exact_D_Std,exact_D_Opt,exact_D_ECA\n";
    double s[6] = {0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const double v[6] = {r.d_std, r.d_opt, r.d_eca, r.x_std, r.x_opt, r.x_eca};
      csv += std::to_string(i) + "," + r.gammas;
      for (int k = 0; k < 6; ++k) {
        csv += "," + fmt(v[k]);
        s[k] += v[k];
      }
      csv += "\n";
    }
    csv += "mean,";
    for (double x : s) csv += "," + fmt(x / static_cast<double>(rows.size()));
    csv += "\n";
    return emit(csv);
  }

  int cmd_rerun() {
    const std::string text = read_file(rerun_file_);
    json man;
    if (text.rfind("# manifest ", 0) == 0) {
      man = json::parse(text.substr(11, text.find('\n') - 11));
    } else {
      const json j = json::parse(text);
      if (!j.contains("manifest")) throw io::FormatError("no manifest in '" + rerun_file_ + "'");
      man = j.at("manifest");
    }
    if (man.value("version", "") != std::string(kVersion))
      throw io::FormatError("manifest was written by another version");
    const auto argv = man.at("argv").get<std::vector<std::string>>();
    if (!argv.empty() && argv.front() == "rerun") throw io::FormatError("manifest records a rerun");
    Driver inner(out_, err_);
    // The noise file must still hash to the recorded value.
    for (std::size_t i = 0; i + 1 < argv.size(); ++i)
      if (argv[i] == "--noise" && NoiseSource::load(argv[i + 1]).hash != man.at("noise_hash"))
        throw io::FormatError("noise file '" + argv[i + 1] + "' changed since the recorded run");
    return inner.run(argv);
  }

  std::ostream& out_;
  std::ostream& err_;
  std::vector<std::string> args_;

  int n_ = 0, p_ = 1, n_cb_ = 2;
  std::uint64_t seed_ = 0;
  double cs_fraction_ = 0.5;
  std::string out_path_, instance_path_, params_path_, gateset_ = "cz,cs,csdg", baseline_ = "none";
  std::string policy_ = "det";
  std::size_t m_ = 20, k_ = 16, randomizations_ = 10, instances_ = 20, jobs_ = 0;
  std::uint64_t shots_ = 10000, cb_shots_ = 0;
  std::string noise_path_, cycle_, cycle_file_, depths_ = "2,4,8,16,32", channels_, rerun_file_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return Driver(out, err).run(args);
}

}  // namespace fswap::cli
