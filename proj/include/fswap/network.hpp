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

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/linalg.hpp"
#include "fswap/rng.hpp"

namespace fswap {

/// Sherrington-Kirkpatrick instance: all-to-all couplings J_ij in {+1, -1}.
struct SKModel {
  int n = 0;
  std::vector<std::vector<int>> J;  // symmetric, zero diagonal

  explicit SKModel(int nq = 0) : n(nq), J(static_cast<std::size_t>(nq), std::vector<int>(static_cast<std::size_t>(nq), 0)) {}

  int coupling(int i, int j) const { return J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  void set(int i, int j, int v) {
    J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    J[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  }

  /// Throws std::invalid_argument unless every pair has a +-1 coupling.
  void check() const {
    if (n < 2) throw std::invalid_argument("SK model needs n >= 2");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int v = coupling(i, j);
        if (i == j ? v != 0 : (v != 1 && v != -1) || v != coupling(j, i))
          throw std::invalid_argument("SK couplings must be symmetric and +-1");
      }
  }

  friend bool operator==(const SKModel&, const SKModel&) = default;
};

struct QAOAParams {
  int p = 0;
  std::vector<double> gamma;
  std::vector<double> beta;

  void check() const {
    if (p < 1) throw std::invalid_argument("QAOA depth must be >= 1");
    if (gamma.size() != static_cast<std::size_t>(p) || beta.size() != static_cast<std::size_t>(p))
      throw std::invalid_argument("QAOA angle lists must have length p");
  }

  friend bool operator==(const QAOAParams&, const QAOAParams&) = default;
};

/// One fermionic SWAP in a network. `pair` holds physical qubits (i, i+1).
struct NetworkGate {
  int step = 0;
  std::pair<int, int> pair;
  double theta = 0;
  std::pair<int, int> logical_pair;
};

struct NetworkLayout {
  std::vector<std::vector<std::pair<int, int>>> layers;
  std::vector<int> perm;
};

/// n alternating layers of neighbour pairs, starting with (0,1),(2,3),...
/// Layers with no pair (only possible for n = 2) are omitted.
inline NetworkLayout swap_network_layout(int n) {
  if (n < 2) throw std::invalid_argument("swap_network_layout: n must be >= 2");
  NetworkLayout l;
  for (int t = 0; t < n; ++t) {
    std::vector<std::pair<int, int>> layer;
    for (int i = t % 2; i + 1 < n; i += 2) layer.emplace_back(i, i + 1);
    if (!layer.empty()) l.layers.push_back(std::move(layer));
  }
  l.perm = reversal_perm(n);
  return l;
}

inline SKModel sample_sk_instance(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_sk_instance: n must be >= 2");
  SKModel m(n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, rng.bernoulli(0.5) ? 1 : -1);
  return m;
}

/// Each gamma lands in the controlled-S region (gamma mod pi in [pi/4, 3pi/4])
/// with probability `cs_fraction`; beta is uniform on [0, 2pi).
inline QAOAParams sample_qaoa_params(int p, std::uint64_t seed, double cs_fraction) {
  if (p < 1) throw std::invalid_argument("sample_qaoa_params: p must be >= 1");
  if (!(cs_fraction >= 0.0 && cs_fraction <= 1.0))
    throw std::invalid_argument("sample_qaoa_params: cs_fraction must lie in [0, 1]");
  Rng rng(seed);
  QAOAParams q;
  q.p = p;
  for (int k = 0; k < p; ++k) {
    const bool inside = rng.bernoulli(cs_fraction);
    double g;
    do g = rng.uniform(0, kTwoPi);
    while (in_cs_region(g) != inside);
    q.gamma.push_back(g);
    q.beta.push_back(rng.uniform(0, kTwoPi));
  }
  return q;
}

/// A circuit before decomposition: fixed single-qubit layers interleaved with
/// fermionic SWAPs. The scheduler turns it into native gates.
struct ProgramStep {
  std::vector<std::optional<Mat2>> layer;  // fixed layer when `gate` is empty
  std::optional<NetworkGate> gate;
};

struct Program {
  int n = 0;
  std::vector<ProgramStep> steps;
  std::vector<int> perm;
  bool measure = false;

  std::size_t gate_count() const {
    std::size_t c = 0;
    for (const auto& s : steps) c += s.gate.has_value();
    return c;
  }
  std::vector<NetworkGate> gates() const {
    std::vector<NetworkGate> g;
    for (const auto& s : steps)
      if (s.gate) g.push_back(*s.gate);
    return g;
  }
};

inline ProgramStep uniform_layer(int n, const Mat2& m) {
  return {std::vector<std::optional<Mat2>>(static_cast<std::size_t>(n), m), std::nullopt};
}

/// Appends one full network with theta = gamma * J for each logical pair met.
/// `where[p]` is the logical qubit at physical position p and is updated.
inline void append_network(Program& prog, const SKModel& model, double gamma, std::vector<int>& where,
                           int& step) {
  const NetworkLayout lay = swap_network_layout(model.n);
  for (const auto& layer : lay.layers) {
    for (const auto& [i, j] : layer) {
      const int a = where[static_cast<std::size_t>(i)], b = where[static_cast<std::size_t>(j)];
      NetworkGate g{step, {i, j}, gamma * model.coupling(a, b), {a, b}};
      prog.steps.push_back({{}, g});
      std::swap(where[static_cast<std::size_t>(i)], where[static_cast<std::size_t>(j)]);
    }
    ++step;
  }
}

inline std::vector<int> perm_from_positions(const std::vector<int>& where) {
  std::vector<int> perm(where.size());
  for (std::size_t p = 0; p < where.size(); ++p) perm[static_cast<std::size_t>(where[p])] = static_cast<int>(p);
  return perm;
}

/// Hadamard layer, then per stage a network and a mixer X rotation by
/// -2 beta, then measurement of every qubit.
inline Program qaoa_program(const SKModel& model, const QAOAParams& params) {
  model.check();
  params.check();
  Program prog;
  prog.n = model.n;
  std::vector<int> where(static_cast<std::size_t>(model.n));
  std::iota(where.begin(), where.end(), 0);
  prog.steps.push_back(uniform_layer(model.n, gates::hadamard()));
  int step = 0;
  for (int k = 0; k < params.p; ++k) {
    append_network(prog, model, params.gamma[static_cast<std::size_t>(k)], where, step);
    prog.steps.push_back(uniform_layer(model.n, gates::rx(-2.0 * params.beta[static_cast<std::size_t>(k)])));
  }
  prog.perm = perm_from_positions(where);
  prog.measure = true;
  return prog;
}

/// Program holding only fermionic SWAPs, in the given order.
inline Program network_program(int n, const std::vector<NetworkGate>& gs) {
  Program prog;
  prog.n = n;
  std::vector<int> where(static_cast<std::size_t>(n));
  std::iota(where.begin(), where.end(), 0);
  for (const auto& g : gs) {
    if (g.pair.second != g.pair.first + 1 || g.pair.first < 0 || g.pair.second >= n)
      throw std::invalid_argument("network gate on non-adjacent qubits");
    prog.steps.push_back({{}, g});
    std::swap(where[static_cast<std::size_t>(g.pair.first)], where[static_cast<std::size_t>(g.pair.second)]);
  }
  prog.perm = perm_from_positions(where);
  return prog;
}

/// Dense reference for a program: fixed layers and exact F_theta matrices
/// applied in order on the physical qubits.
inline Matrix program_unitary(const Program& prog) {
  if (prog.n > kMaxUnitaryQubits) throw ResourceError("program_unitary: more than 12 qubits");
  const std::size_t dim = std::size_t{1} << prog.n;
  Matrix u = Matrix::identity(dim);
  auto& v = u.mutable_data();
  for (const auto& s : prog.steps) {
    if (s.gate) {
      apply_2q_left(v, dim, prog.n, s.gate->pair.first, s.gate->pair.second, fswap_unitary(s.gate->theta));
    } else {
      for (int q = 0; q < prog.n; ++q)
        if (const auto& m = s.layer[static_cast<std::size_t>(q)]) apply_1q_left(v, dim, prog.n, q, *m);
    }
  }
  return u;
}

}  // namespace fswap
