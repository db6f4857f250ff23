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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fswap/benchmarking.hpp"
#include "fswap/circuit.hpp"
#include "fswap/eca.hpp"
#include "fswap/network.hpp"
#include "fswap/simulator.hpp"

namespace fswap::io {

using json = nlohmann::ordered_json;

/// Malformed input documents.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

inline GateKind kind_from(const std::string& s) {
  auto k = gate_kind_from_name(s);
  if (!k) throw FormatError("unknown gate '" + s + "'");
  return *k;
}

}  // namespace detail

// Circuits ------------------------------------------------------------------

inline json to_json(const Gate& g) {
  json j;
  j["g"] = std::string(gate_name(g.kind));
  j["q"] = g.qubits;
  if (g.kind == GateKind::VZ || g.kind == GateKind::CPHASE) j["angle"] = g.angle;
  return j;
}

inline json to_json(const Circuit& c) {
  json j;
  j["n"] = c.n;
  json ms = json::array();
  for (const auto& m : c.moments) {
    json mj = json::array();
    for (const auto& g : m) mj.push_back(to_json(g));
    ms.push_back(std::move(mj));
  }
  j["moments"] = std::move(ms);
  j["perm"] = c.perm;
  if (c.ring) j["ring"] = true;
  return j;
}

inline Circuit circuit_from_json(const json& j) {
  Circuit c(detail::get<int>(j, "n"));
  if (c.n < 1) throw FormatError("circuit: n must be positive");
  const json& ms = j.at("moments");
  if (!ms.is_array()) throw FormatError("circuit: moments must be an array");
  for (const auto& mj : ms) {
    if (!mj.is_array()) throw FormatError("circuit: each moment must be an array");
    Moment m;
    for (const auto& gj : mj) {
      Gate g;
      g.kind = detail::kind_from(detail::get<std::string>(gj, "g"));
      g.qubits = detail::get<std::vector<int>>(gj, "q");
      if (g.kind == GateKind::VZ || g.kind == GateKind::CPHASE) g.angle = normalize_angle(detail::get<double>(gj, "angle"));
      m.push_back(std::move(g));
    }
    c.moments.push_back(std::move(m));
  }
  if (j.contains("perm")) c.perm = detail::get<std::vector<int>>(j, "perm");
  if (j.contains("ring")) c.ring = detail::get<bool>(j, "ring");
  try {
    validate(c);
  } catch (const InvariantError& e) {
    throw FormatError(e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return c;
}

// Costs -----------------------------------------------------------------------

inline json to_json(const CostReport& r) {
  json j;
  j["x90_total"] = r.x90_total;
  j["x90_critical_path"] = r.x90_critical_path;
  json tq = json::object();
  for (const auto& [k, v] : r.two_qubit_counts) tq[std::string(gate_name(k))] = v;
  j["two_qubit_counts"] = std::move(tq);
  j["duration_ns"] = r.duration_ns;
  j["cz_equivalent_depth"] = r.cz_equivalent_depth;
  return j;
}

// Instances -------------------------------------------------------------------

inline json to_json(const SKModel& m) {
  json j;
  j["n"] = m.n;
  json js = json::array();
  for (int i = 0; i < m.n; ++i)
    for (int k = i + 1; k < m.n; ++k) js.push_back({i, k, m.coupling(i, k)});
  j["J"] = std::move(js);
  return j;
}

inline SKModel sk_from_json(const json& j) {
  const int n = detail::get<int>(j, "n");
  if (n < 2) throw FormatError("instance: n must be at least 2");
  SKModel m(n);
  for (const auto& e : j.at("J")) {
    if (!e.is_array() || e.size() != 3) throw FormatError("instance: couplings are [i, j, J] triples");
    const int a = e[0].get<int>(), b = e[1].get<int>(), v = e[2].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw FormatError("instance: coupling index out of range");
    m.set(a, b, v);
  }
  try {
    m.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("instance: ") + e.what());
  }
  return m;
}

inline json to_json(const QAOAParams& p) {
  json j;
  j["p"] = p.p;
  j["gamma"] = p.gamma;
  j["beta"] = p.beta;
  return j;
}

inline QAOAParams params_from_json(const json& j) {
  QAOAParams p{detail::get<int>(j, "p"), detail::get<std::vector<double>>(j, "gamma"),
               detail::get<std::vector<double>>(j, "beta")};
  try {
    p.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("params: ") + e.what());
  }
  return p;
}

// Ensembles and counts ------------------------------------------------------

inline json to_json(const Ensemble& e) {
  json j;
  j["master_seed"] = e.master_seed;
  j["seeds"] = e.seeds;
  json ms = json::array();
  for (const auto& c : e.members) ms.push_back(to_json(c));
  j["members"] = std::move(ms);
  j["cost"] = to_json(e.cost);
  return j;
}

inline json to_json(const Counts& c) {
  json j;
  j["shots"] = c.shots;
  json h = json::object();
  for (const auto& [k, v] : c.hist) h[k] = v;
  j["hist"] = std::move(h);
  return j;
}

inline Counts counts_from_json(const json& j) {
  Counts c;
  c.shots = detail::get<std::uint64_t>(j, "shots");
  const json& h = j.at("hist");
  if (!h.is_object()) throw FormatError("counts: hist must be an object");
  c.n = -1;
  for (const auto& [k, v] : h.items()) {
    if (c.n >= 0 && static_cast<int>(k.size()) != c.n) throw FormatError("counts: bitstring width mismatch");
    c.n = static_cast<int>(k.size());
    c.hist[k] = v.get<std::uint64_t>();
  }
  if (c.n < 0) c.n = 0;
  try {
    c.check();
    for (const auto& [k, v] : c.hist) bitstring_index(k);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return c;
}

inline json to_json(const Distribution& d) {
  json j = json::object();
  for (std::size_t i = 0; i < d.p.size(); ++i)
    if (d.p[i] != 0.0) j[bitstring(i, d.n)] = d.p[i];
  return j;
}

// Noise -----------------------------------------------------------------------

inline json to_json(const NoiseModel& m) {
  auto kind_map = [](const auto& mp) {
    json j = json::object();
    for (const auto& [k, v] : mp) j[std::string(gate_name(k))] = v;
    return j;
  };
  json j;
  j["x90_overrotation"] = m.x90_overrotation;
  j["x90_axis_tilt"] = m.x90_axis_tilt;
  j["ctrl_phase_error"] = kind_map(m.ctrl_phase_error);
  j["depolarizing"] = kind_map(m.depolarizing);
  j["depolarizing_2q"] = kind_map(m.depolarizing_2q);
  json r = json::array();
  for (const auto& x : m.readout) r.push_back({x[0], x[1]});
  j["readout_confusion"] = std::move(r);
  j["seed"] = m.seed;
  return j;
}

inline NoiseModel noise_from_json(const json& j) {
  static const std::array<const char*, 7> known{"x90_overrotation", "x90_axis_tilt", "ctrl_phase_error", "depolarizing",
                                                "depolarizing_2q", "readout_confusion", "seed"};
  if (!j.is_object()) throw FormatError("noise: expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* s : known) ok = ok || k == s;
    if (!ok) throw FormatError("noise: unknown field '" + k + "'");
  }
  NoiseModel m;
  if (j.contains("x90_overrotation")) m.x90_overrotation = detail::get<std::vector<double>>(j, "x90_overrotation");
  if (j.contains("x90_axis_tilt")) m.x90_axis_tilt = detail::get<std::vector<double>>(j, "x90_axis_tilt");
  if (j.contains("ctrl_phase_error"))
    for (const auto& [k, v] : j.at("ctrl_phase_error").items()) {
      const GateKind g = detail::kind_from(k);
      if (!is_two_qubit(g)) throw FormatError("noise: ctrl_phase_error applies to two-qubit gates");
      m.ctrl_phase_error[g] = v.get<std::vector<double>>();
    }
  if (j.contains("depolarizing"))
    for (const auto& [k, v] : j.at("depolarizing").items()) m.depolarizing[detail::kind_from(k)] = v.get<double>();
  if (j.contains("depolarizing_2q"))
    for (const auto& [k, v] : j.at("depolarizing_2q").items()) {
      const GateKind g = detail::kind_from(k);
      if (!is_two_qubit(g)) throw FormatError("noise: depolarizing_2q applies to two-qubit gates");
      m.depolarizing_2q[g] = v.get<double>();
    }
  if (j.contains("readout_confusion"))
    for (const auto& r : j.at("readout_confusion")) {
      if (!r.is_array() || r.size() != 2) throw FormatError("noise: readout entries are [P(0|0), P(1|1)]");
      m.readout.push_back({r[0].get<double>(), r[1].get<double>()});
    }
  if (j.contains("seed")) m.seed = detail::get<std::uint64_t>(j, "seed");
  try {
    m.check();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return m;
}

// Cycle benchmarking ----------------------------------------------------------

inline json to_json(const CBReport& r) {
  auto fits = [](const std::vector<DecayFit>& fs) {
    json a = json::array();
    for (const auto& f : fs) {
      json c;
      c["pauli"] = f.channel;
      c["A"] = f.A;
      c["p"] = f.p;
      c["residual"] = f.residual;
      a.push_back(std::move(c));
    }
    return a;
  };
  json j;
  j["e_D"] = r.e_D;
  j["e_I"] = r.e_I;
  j["e_T"] = r.e_T;
  j["e_T_negative"] = r.negative();
  j["channels"] = fits(r.dressed);
  j["reference_channels"] = fits(r.reference);
  return j;
}

}  // namespace fswap::io
