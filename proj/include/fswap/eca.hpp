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
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/network.hpp"
#include "fswap/rng.hpp"
#include "fswap/scheduler.hpp"
#include "fswap/simulator.hpp"

namespace fswap {

struct Ensemble {
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<Circuit> members;
  CostReport cost;

  std::size_t size() const { return members.size(); }
};

/// Order-sensitive structural key of a circuit: gate kinds, operands and
/// angles rounded to 1e-9.
inline std::string structural_key(const Circuit& c) {
  std::string s;
  for (const auto& m : c.moments) {
    for (const auto& g : m) {
      s += gate_name(g.kind);
      for (int q : g.qubits) s += ' ' + std::to_string(q);
      if (g.kind == GateKind::VZ || g.kind == GateKind::CPHASE)
        s += ' ' + std::to_string(static_cast<long long>(std::llround(g.angle * 1e9)));
      s += ';';
    }
    s += '|';
  }
  return s;
}

inline std::size_t distinct_members(const Ensemble& e) {
  std::set<std::string> keys;
  for (const auto& c : e.members) keys.insert(structural_key(c));
  return keys.size();
}

inline constexpr int kMaxRedraws = 32;

/// True when a and b act identically up to global phase on `trials` random
/// input states.
inline bool spot_check_equivalent(const Circuit& a, const Circuit& b, std::uint64_t seed, int trials = 3,
                                  double tol = 1e-9) {
  if (a.n != b.n) return false;
  Rng rng(seed);
  const std::size_t dim = std::size_t{1} << a.n;
  for (int t = 0; t < trials; ++t) {
    std::vector<cplx> x(dim);
    double norm = 0;
    for (auto& v : x) {
      v = {rng.normal(), rng.normal()};
      norm += std::norm(v);
    }
    for (auto& v : x) v /= std::sqrt(norm);
    std::vector<cplx> y = x;
    evolve_state(a, x);
    evolve_state(b, y);
    cplx overlap = 0;
    for (std::size_t i = 0; i < dim; ++i) overlap += std::conj(x[i]) * y[i];
    if (std::abs(std::abs(overlap) - 1.0) > tol) return false;
  }
  return true;
}

/// Member k is the program scheduled with the seeded policy derived from
/// (master_seed, k). Repeats are kept. When a member comes from the beam
/// fallback and misses the ensemble minimum, it is redrawn with seeds derived
/// from its own seed until it matches.
inline Ensemble generate_ensemble(const Program& prog, const GatesetConfig& gs, std::size_t M,
                                  std::uint64_t master_seed) {
  if (M < 1) throw std::invalid_argument("generate_ensemble: M must be at least 1");
  Ensemble e;
  e.master_seed = master_seed;
  std::vector<ScheduleResult> rs;
  for (std::size_t k = 0; k < M; ++k) {
    const std::uint64_t s = derive_seed(master_seed, k);
    e.seeds.push_back(s);
    rs.push_back(schedule_program(prog, gs, SchedulePolicy::seeded_with(s)));
  }
  int target = rs.front().x90_critical_path;
  for (const auto& r : rs) target = std::min(target, r.x90_critical_path);
  for (std::size_t k = 0; k < M; ++k) {
    for (int a = 1; rs[k].x90_critical_path != target; ++a) {
      if (a > kMaxRedraws) throw InvariantError("generate_ensemble: members differ in critical-path X90 count");
      const std::uint64_t s = derive_seed(derive_seed(master_seed, k), static_cast<std::uint64_t>(a));
      e.seeds[k] = s;
      rs[k] = schedule_program(prog, gs, SchedulePolicy::seeded_with(s));
    }
    e.members.push_back(rs[k].circuit);
  }
  e.cost = cost_report(e.members.front());
  bool same = true;
  if (prog.n <= 4) {
    const Matrix u0 = circuit_unitary(e.members.front());
    for (std::size_t k = 1; k < M && same; ++k) same = unitary_equiv(u0, circuit_unitary(e.members[k]));
  } else if (prog.n <= kMaxUnitaryQubits) {
    for (std::size_t k = 1; k < M && same; ++k)
      same = spot_check_equivalent(e.members.front(), e.members[k], master_seed + k);
  }
  if (!same) throw InvariantError("generate_ensemble: members are not unitary-equivalent");
  return e;
}

inline Ensemble generate_ensemble(int n, const std::vector<NetworkGate>& network, const GatesetConfig& gs,
                                  std::size_t M, std::uint64_t master_seed) {
  return generate_ensemble(network_program(n, network), gs, M, master_seed);
}

/// Floor share per member, remainder to the first S mod M members.
inline std::vector<std::uint64_t> allocate_shots(std::uint64_t S, std::uint64_t M) {
  if (M < 1 || S < M) throw std::invalid_argument("allocate_shots: need S >= M >= 1");
  std::vector<std::uint64_t> out(M, S / M);
  for (std::uint64_t k = 0; k < S % M; ++k) ++out[k];
  return out;
}

inline Distribution union_distribution(const std::vector<Counts>& counts) {
  if (counts.empty()) throw std::invalid_argument("union_distribution: empty list");
  const int n = counts.front().n;
  Distribution d{n, std::vector<double>(std::size_t{1} << n, 0.0)};
  std::uint64_t total = 0;
  for (const auto& c : counts) {
    if (c.n != n) throw std::invalid_argument("union_distribution: bit-width mismatch");
    c.check();
    total += c.shots;
    for (const auto& [k, v] : c.hist) d.p[bitstring_index(k)] += static_cast<double>(v);
  }
  if (total == 0) throw std::invalid_argument("union_distribution: no shots");
  for (double& x : d.p) x /= static_cast<double>(total);
  return d;
}

/// Shot-weighted mixture of exact member distributions: the expectation of
/// union_distribution over sampling.
inline Distribution mixture_distribution(const std::vector<Distribution>& ds, const std::vector<std::uint64_t>& shots) {
  if (ds.empty() || ds.size() != shots.size()) throw std::invalid_argument("mixture_distribution: size mismatch");
  Distribution d{ds.front().n, std::vector<double>(ds.front().p.size(), 0.0)};
  std::uint64_t total = 0;
  for (auto s : shots) total += s;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (ds[k].n != d.n) throw std::invalid_argument("mixture_distribution: bit-width mismatch");
    const double w = static_cast<double>(shots[k]) / static_cast<double>(total);
    for (std::size_t i = 0; i < d.p.size(); ++i) d.p[i] += w * ds[k].p[i];
  }
  return d;
}

}  // namespace fswap
