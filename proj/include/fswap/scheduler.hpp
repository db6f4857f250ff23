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
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/linalg.hpp"
#include "fswap/network.hpp"
#include "fswap/rng.hpp"
#include "fswap/synthesis.hpp"

namespace fswap {

// ---------------------------------------------------------------------------
// Fragments and variants
// ---------------------------------------------------------------------------

/// A two-qubit gate list cut at its entanglers: segs[w][k] is the product of
/// single-qubit gates on local wire w between entangler k-1 and k.
struct Fragment {
  std::array<std::vector<Mat2>, 2> segs;
  std::vector<Gate> ents;
};

inline Fragment to_fragment(const std::vector<Gate>& gs) {
  Fragment f;
  f.segs[0].push_back(Mat2::identity());
  f.segs[1].push_back(Mat2::identity());
  for (const auto& g : gs) {
    if (is_two_qubit(g.kind)) {
      f.ents.push_back(g);
      f.segs[0].push_back(Mat2::identity());
      f.segs[1].push_back(Mat2::identity());
    } else {
      auto& s = f.segs[static_cast<std::size_t>(g.qubits[0])].back();
      s = single_qubit_matrix(g) * s;
    }
  }
  return f;
}

/// X90 critical path strictly between the first and last entangler.
inline int interior_x90(const Fragment& f) {
  int t0 = 0, t1 = 0;
  for (std::size_t k = 0; k < f.ents.size(); ++k) {
    t0 = t1 = std::max(t0, t1);
    if (k + 1 < f.ents.size()) {
      t0 += x90_cost(f.segs[0][k + 1]);
      t1 += x90_cost(f.segs[1][k + 1]);
    }
  }
  return std::max(t0, t1);
}

struct Variant {
  Family base_family = Family::Cz3;
  std::vector<int> symmetries;  // applied outermost first
  std::vector<Gate> gates;      // on local qubits 0 (lower) and 1
  Fragment fragment;
  int interior = 0;
  std::string cost_class;
};

namespace detail {

inline void pauli_x_on(std::vector<Gate>& g, int q) {
  g.push_back(Gate::x90(q));
  g.push_back(Gate::x90(q));
}

// Symmetries of F_theta, applied in the fixed order 5, 3, 2, 1, 4:
//   1: F = (X x X) F (X x X)
//   2: F_theta = (1 x X) F_{-theta} (X x 1)
//   3: F_theta = (Z x Z) F_{theta + pi}
//   4: qubit interchange
//   5: F_theta = (F_{-theta})^dagger
inline std::vector<Gate> build_with_symmetries(Family f, double theta, std::vector<int> syms) {
  auto take = [&](int s) {
    auto it = std::find(syms.begin(), syms.end(), s);
    if (it == syms.end()) return false;
    syms.erase(it);
    return true;
  };
  if (take(5)) return dagger_gates(build_with_symmetries(f, -theta, syms));
  if (take(3)) {
    std::vector<Gate> g = build_with_symmetries(f, theta + kPi, syms);
    g.push_back(Gate::vz(0, kPi));
    g.push_back(Gate::vz(1, kPi));
    return g;
  }
  if (take(2)) {
    std::vector<Gate> g;
    pauli_x_on(g, 0);
    append(g, build_with_symmetries(f, -theta, syms));
    pauli_x_on(g, 1);
    return g;
  }
  if (take(1)) {
    std::vector<Gate> g;
    pauli_x_on(g, 0);
    pauli_x_on(g, 1);
    append(g, build_with_symmetries(f, theta, syms));
    pauli_x_on(g, 0);
    pauli_x_on(g, 1);
    return g;
  }
  if (take(4)) {
    std::vector<Gate> g = build_with_symmetries(f, theta, syms);
    for (auto& x : g)
      if (!is_two_qubit(x.kind)) x.qubits[0] = 1 - x.qubits[0];
    return g;
  }
  return family_gates(f, theta);
}

inline std::string cost_class_key(const Fragment& f) {
  std::ostringstream os;
  for (const auto& e : f.ents) os << gate_name(e.kind) << '@' << std::lround(e.angle * 1e6) << ';';
  for (int w = 0; w < 2; ++w) {
    os << '|';
    for (const auto& s : f.segs[static_cast<std::size_t>(w)]) os << x90_cost(s);
  }
  return os.str();
}

}  // namespace detail

/// Equivalent decompositions of one fermionic SWAP generated by the
/// symmetries, one per cost class. The first entry is the plain family
/// circuit. Every entry is checked against F_theta.
inline std::vector<Variant> enumerate_variants(const NetworkGate& gate, const GatesetConfig& gs) {
  const Family fam = select_family(gate.theta, gs, gate.pair);
  std::vector<Family> bases{fam};
  std::optional<GateKind> cs_kind;
  if (fam == Family::Cs || fam == Family::Csdg) {
    bases = {fam, fam == Family::Cs ? Family::Csdg : Family::Cs};
    cs_kind = fam == Family::Cs ? GateKind::CS : GateKind::CSD;
  }
  const Matrix target = fswap_unitary(gate.theta);
  std::vector<Variant> out;
  std::set<std::string> seen;
  for (Family base : bases) {
    for (int size = 0; size <= 5; ++size) {
      for (int mask = 0; mask < 32; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != size) continue;
        std::vector<int> syms;
        for (int s : {5, 3, 2, 1, 4})
          if (mask & (1 << (s - 1))) syms.push_back(s);
        std::vector<Gate> g = detail::build_with_symmetries(base, gate.theta, syms);
        bool allowed = true;
        for (const auto& x : g) {
          if (x.kind == GateKind::CS || x.kind == GateKind::CSD) allowed &= cs_kind && x.kind == *cs_kind;
          if (x.kind == GateKind::CPHASE) allowed &= gs.has_cphase;
        }
        if (!allowed) continue;
        const Circuit c = fswap_circuit(g);
        if (!unitary_equiv(circuit_unitary(c), target))
          throw InvariantError("symmetry variant does not reproduce F_theta");
        Variant v;
        v.base_family = base;
        v.symmetries = syms;
        v.fragment = to_fragment(g);
        v.interior = interior_x90(v.fragment);
        v.cost_class = detail::cost_class_key(v.fragment);
        v.gates = std::move(g);
        if (seen.insert(v.cost_class).second) out.push_back(std::move(v));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compaction
// ---------------------------------------------------------------------------

/// Phase x in Z(x) that minimizes the X90 cost of L . Z(x) . P.
inline double free_phase(const Mat2& L, const Mat2& P) {
  const cplx A = L.m[0] * P.m[0], B = L.m[1] * P.m[2];
  const double a = std::abs(A), b = std::abs(B);
  const double s = 1.0 / std::sqrt(2.0);
  auto cost_at = [&](double x) { return x90_cost(L * gates::vz(x) * P); };
  if (b < 1e-12 || a < 1e-12) return 0.0;
  const int now = cost_at(0);
  if (now == 0) return 0.0;
  if (a + b >= 1.0 - 1e-12) return normalize_angle(std::arg(A) - std::arg(B));
  if (now == 1) return 0.0;
  if (std::abs(a - b) <= s && s <= a + b) {
    const double c = std::clamp((0.5 - a * a - b * b) / (2 * a * b), -1.0, 1.0);
    return normalize_angle(std::arg(A) - std::arg(B) + std::acos(c));
  }
  return 0.0;
}

struct WireState {
  Mat2 pending;
  int tx = 0;
  double tns = 0;
};

/// Streams single-qubit matrices and entanglers into native gates. Each wire
/// keeps an unflushed 2x2 matrix; before an entangler it is resynthesized with
/// the fewest X90 pulses and its trailing Z stays pending.
class Compactor {
 public:
  Compactor(int n, bool record, DurationMap durations = default_durations())
      : n_(n), record_(record), dur_(std::move(durations)), w_(static_cast<std::size_t>(n)) {}

  const std::vector<WireState>& wires() const { return w_; }

  int x90_depth() const {
    int m = 0;
    for (const auto& w : w_) m = std::max(m, w.tx);
    return m;
  }

  double duration() const {
    double m = 0;
    for (const auto& w : w_) m = std::max(m, w.tns);
    return m;
  }

  void apply_1q(int q, const Mat2& m) { wire(q).pending = m * wire(q).pending; }

  void apply_layer(const std::vector<std::optional<Mat2>>& layer) {
    for (int q = 0; q < n_; ++q)
      if (const auto& m = layer[static_cast<std::size_t>(q)]) apply_1q(q, *m);
  }

  void apply_entangler(Gate g) {
    const int a = g.qubits[0], b = g.qubits[1];
    flush(a);
    flush(b);
    const double start = std::max(wire(a).tns, wire(b).tns);
    const int sx = std::max(wire(a).tx, wire(b).tx);
    double d = dur_.at(g.kind);
    if (g.kind == GateKind::CPHASE) d *= cz_weight(g);
    wire(a).tns = wire(b).tns = start + d;
    wire(a).tx = wire(b).tx = sx;
    if (record_) gates_.push_back(std::move(g));
  }

  /// Fragment on physical qubits (a, b), local wire 0 -> a. With free_phases,
  /// Z(x_a) x Z(x_b) is inserted before it and Z(-x_b) x Z(-x_a) after it,
  /// which leaves F_theta unchanged; x is chosen to save pulses on entry.
  void apply_fragment(int a, int b, const Fragment& f, bool free_phases) {
    const std::array<int, 2> q{a, b};
    std::array<double, 2> x{0, 0};
    for (std::size_t w = 0; w < 2; ++w) {
      if (free_phases) x[w] = free_phase(f.segs[w][0], wire(q[w]).pending);
      apply_1q(q[w], f.segs[w][0] * gates::vz(x[w]));
    }
    for (std::size_t k = 0; k < f.ents.size(); ++k) {
      Gate e = f.ents[k];
      e.qubits = {std::min(a, b), std::max(a, b)};
      apply_entangler(std::move(e));
      for (std::size_t w = 0; w < 2; ++w) apply_1q(q[w], f.segs[w][k + 1]);
    }
    if (free_phases) {
      apply_1q(a, gates::vz(-x[1]));
      apply_1q(b, gates::vz(-x[0]));
    }
  }

  /// Flushes every wire, emitting the remaining phases explicitly.
  void finish() {
    for (int q = 0; q < n_; ++q) {
      flush(q);
      const double ph = std::arg(wire(q).pending.m[3]) - std::arg(wire(q).pending.m[0]);
      if (record_ && !angle_is_zero(ph)) gates_.push_back(Gate::vz(q, ph));
      wire(q).pending = Mat2::identity();
    }
  }

  const std::vector<Gate>& gates() const { return gates_; }

 private:
  WireState& wire(int q) { return w_[static_cast<std::size_t>(q)]; }

  void flush(int q) {
    WireState& s = wire(q);
    Resynthesis r = resynthesize(s.pending, q);
    s.tx += r.x90;
    s.tns += r.x90 * dur_.at(GateKind::X90);
    if (record_) gates_.insert(gates_.end(), r.gates.begin(), r.gates.end());
    s.pending = gates::vz(r.pending);
  }

  int n_;
  bool record_;
  DurationMap dur_;
  std::vector<WireState> w_;
  std::vector<Gate> gates_;
};

/// Drops virtual phases followed on their qubit only by diagonal gates before
/// a final measurement; they do not change the measured distribution.
inline std::vector<Gate> drop_phases_before_measurement(const std::vector<Gate>& gs, int n) {
  std::vector<bool> diagonal_tail(static_cast<std::size_t>(n), true);
  std::vector<bool> keep(gs.size(), true);
  for (std::size_t i = gs.size(); i-- > 0;) {
    const Gate& g = gs[i];
    if (g.kind == GateKind::VZ) keep[i] = !diagonal_tail[static_cast<std::size_t>(g.qubits[0])];
    else if (g.kind == GateKind::X90) diagonal_tail[static_cast<std::size_t>(g.qubits[0])] = false;
  }
  std::vector<Gate> out;
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (keep[i]) out.push_back(gs[i]);
  return out;
}

/// Resynthesizes every single-qubit run with the fewest X90 pulses and merges
/// the virtual phases. No run gains pulses, so the X90 critical path cannot grow.
/// Before a final measurement, phases that only commute into it are removed.
inline Circuit optimize_virtual_phases(const Circuit& c) {
  validate(c);
  Compactor k(c.n, true);
  bool measured = false;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MEASURE) {
      measured = true;
      continue;
    }
    if (is_two_qubit(g.kind)) k.apply_entangler(g);
    else k.apply_1q(g.qubits[0], single_qubit_matrix(g));
  }
  k.finish();
  CircuitBuilder b(c.n);
  b.set_perm(c.perm).set_ring(c.ring);
  if (measured) b.add_all(drop_phases_before_measurement(k.gates(), c.n)).add(Gate::measure_all(c.n));
  else b.add_all(k.gates());
  return merge_virtual_phases(b.build());
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

struct SchedulePolicy {
  bool seeded = false;
  std::uint64_t seed = 0;
  std::size_t beam = 0;                // > 0 forces a layered beam of this width
  std::size_t node_budget = 50'000;    // exact search expansions before the beam fallback
  std::size_t fallback_beam = 512;
  bool free_phases = true;

  static SchedulePolicy deterministic() { return {}; }
  static SchedulePolicy seeded_with(std::uint64_t s) {
    SchedulePolicy p;
    p.seeded = true;
    p.seed = s;
    return p;
  }
};

struct ScheduleResult {
  Circuit circuit;
  std::vector<std::size_t> choice;  // variant index per network gate
  int x90_critical_path = 0;
  double duration_ns = 0;
  std::size_t expanded = 0;
  bool optimal = true;  // false when the beam produced the result
};

/// Best-first search over per-gate variants of a program.
class Scheduler {
 public:
  Scheduler(Program prog, const GatesetConfig& gs, SchedulePolicy policy = {})
      : prog_(std::move(prog)), policy_(policy) {
    for (std::size_t s = 0; s < prog_.steps.size(); ++s) {
      if (!prog_.steps[s].gate) continue;
      gate_steps_.push_back(s);
      variants_.push_back(enumerate_variants(*prog_.steps[s].gate, gs));
      int best = std::numeric_limits<int>::max();
      for (const auto& v : variants_.back()) best = std::min(best, v.interior);
      min_interior_.push_back(best);
    }
  }

  const Program& program() const { return prog_; }
  const std::vector<std::vector<Variant>>& variants() const { return variants_; }
  std::size_t gate_count() const { return gate_steps_.size(); }

  /// State after the fixed layers preceding gate 0.
  Compactor initial() const {
    Compactor c(prog_.n, false);
    run_layers(c, 0, gate_count() == 0 ? prog_.steps.size() : gate_steps_[0]);
    if (gate_count() == 0) c.finish();
    return c;
  }

  /// Applies variant v of gate i and the fixed layers that follow it; after the
  /// last gate the wires are flushed.
  void advance(Compactor& c, std::size_t i, std::size_t v) const {
    const NetworkGate& g = *prog_.steps[gate_steps_[i]].gate;
    c.apply_fragment(g.pair.first, g.pair.second, variants_[i][v].fragment, policy_.free_phases);
    const std::size_t end = i + 1 < gate_count() ? gate_steps_[i + 1] : prog_.steps.size();
    run_layers(c, gate_steps_[i] + 1, end);
    if (i + 1 == gate_count()) c.finish();
  }

  /// Admissible estimate of the final X90 critical path from a state where
  /// gates [i, end) remain: remaining fragments cost at least their cheapest
  /// interior, and boundary runs are assumed free.
  int lower_bound(const Compactor& c, std::size_t i) const {
    std::vector<int> t;
    for (const auto& w : c.wires()) t.push_back(w.tx);
    for (std::size_t j = i; j < gate_count(); ++j) {
      const auto& p = prog_.steps[gate_steps_[j]].gate->pair;
      const int m = std::max(t[static_cast<std::size_t>(p.first)], t[static_cast<std::size_t>(p.second)]) +
                    min_interior_[j];
      t[static_cast<std::size_t>(p.first)] = t[static_cast<std::size_t>(p.second)] = m;
    }
    return t.empty() ? 0 : *std::max_element(t.begin(), t.end());
  }

  /// Replays a choice vector into a circuit and checks it against the
  /// dense reference when the register is small.
  ScheduleResult realize(const std::vector<std::size_t>& choice, std::size_t expanded = 0) const {
    Compactor c(prog_.n, true);
    run_layers(c, 0, gate_count() == 0 ? prog_.steps.size() : gate_steps_[0]);
    for (std::size_t i = 0; i < gate_count(); ++i) {
      const NetworkGate& g = *prog_.steps[gate_steps_[i]].gate;
      c.apply_fragment(g.pair.first, g.pair.second, variants_[i][choice[i]].fragment, policy_.free_phases);
      const std::size_t end = i + 1 < gate_count() ? gate_steps_[i + 1] : prog_.steps.size();
      run_layers(c, gate_steps_[i] + 1, end);
    }
    c.finish();
    CircuitBuilder b(prog_.n);
    b.set_perm(prog_.perm).add_all(c.gates());
    if (prog_.measure) b.add(Gate::measure_all(prog_.n));
    ScheduleResult r;
    r.circuit = b.build();
    r.choice = choice;
    const CostReport cr = cost_report(r.circuit);
    r.x90_critical_path = static_cast<int>(cr.x90_critical_path);
    r.duration_ns = cr.duration_ns;
    r.expanded = expanded;
    if (prog_.n <= 6 && !unitary_equiv(circuit_unitary(r.circuit), program_unitary(prog_)))
      throw InvariantError("scheduled circuit differs from the network product");
    return r;
  }

  ScheduleResult best_first() const {
    struct Node {
      Compactor state;
      std::size_t parent;
      std::size_t variant;
      std::size_t depth;
    };
    struct Entry {
      int f;
      std::size_t depth;
      double dur;
      std::uint64_t tie;
      std::size_t node;
    };
    // Lower f first, then deeper, then shorter, then tie order.
    auto worse = [](const Entry& x, const Entry& y) {
      if (x.f != y.f) return x.f > y.f;
      if (x.depth != y.depth) return x.depth < y.depth;
      if (x.dur != y.dur) return x.dur > y.dur;
      return x.tie > y.tie;
    };
    if (policy_.beam > 0) return beam_search(policy_.beam);
    Rng rng(policy_.seed);
    std::uint64_t counter = 0;
    auto tie = [&]() { return policy_.seeded ? rng.next() : counter++; };

    std::vector<Node> nodes;
    std::vector<Entry> open;
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    nodes.push_back({initial(), none, 0, 0});
    open.push_back({lower_bound(nodes[0].state, 0), 0, nodes[0].state.duration(), tie(), 0});
    std::size_t expanded = 0;
    while (!open.empty()) {
      std::pop_heap(open.begin(), open.end(), worse);
      const Entry e = open.back();
      open.pop_back();
      const std::size_t depth = nodes[e.node].depth;
      if (depth == gate_count()) {
        std::vector<std::size_t> choice(gate_count());
        for (std::size_t k = e.node; nodes[k].parent != none; k = nodes[k].parent)
          choice[nodes[k].depth - 1] = nodes[k].variant;
        return realize(choice, expanded);
      }
      if (++expanded > policy_.node_budget) return beam_search(policy_.fallback_beam);
      std::vector<std::size_t> order(variants_[depth].size());
      std::iota(order.begin(), order.end(), 0);
      if (policy_.seeded) rng.shuffle(order);
      for (std::size_t v : order) {
        Compactor c = nodes[e.node].state;
        advance(c, depth, v);
        nodes.push_back({std::move(c), e.node, v, depth + 1});
        const Node& nn = nodes.back();
        open.push_back({lower_bound(nn.state, depth + 1), depth + 1, nn.state.duration(), tie(), nodes.size() - 1});
        std::push_heap(open.begin(), open.end(), worse);
      }
    }
    throw std::logic_error("best-first search exhausted without a complete schedule");
  }

  /// Gate-by-gate beam keeping the `width` best states by (bound, duration,
  /// tie). Not guaranteed optimal.
  ScheduleResult beam_search(std::size_t width) const {
    struct Item {
      int f;
      double dur;
      std::uint64_t tie;
      Compactor state;
      std::vector<std::size_t> choice;
    };
    Rng rng(policy_.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uint64_t counter = 0;
    auto tie = [&]() { return policy_.seeded ? rng.next() : counter++; };
    auto better = [](const Item& x, const Item& y) {
      if (x.f != y.f) return x.f < y.f;
      if (x.dur != y.dur) return x.dur < y.dur;
      return x.tie < y.tie;
    };
    std::vector<Item> beam;
    beam.push_back({0, 0, 0, initial(), {}});
    std::size_t expanded = 0;
    for (std::size_t i = 0; i < gate_count(); ++i) {
      std::vector<Item> next;
      for (const auto& it : beam) {
        ++expanded;
        std::vector<std::size_t> order(variants_[i].size());
        std::iota(order.begin(), order.end(), 0);
        if (policy_.seeded) rng.shuffle(order);
        for (std::size_t v : order) {
          Item n{0, 0, tie(), it.state, it.choice};
          advance(n.state, i, v);
          n.f = lower_bound(n.state, i + 1);
          n.dur = n.state.duration();
          n.choice.push_back(v);
          next.push_back(std::move(n));
        }
      }
      std::sort(next.begin(), next.end(), better);
      if (next.size() > width) next.erase(next.begin() + static_cast<std::ptrdiff_t>(width), next.end());
      beam = std::move(next);
    }
    ScheduleResult r = realize(beam.front().choice, expanded);
    r.optimal = false;
    return r;
  }

  /// Number of complete variant assignments.
  double combinations() const {
    double c = 1;
    for (const auto& v : variants_) c *= static_cast<double>(v.size());
    return c;
  }

  /// Minimum over every assignment below gate i, starting from state c.
  /// Returns (x90 critical path, duration) and the choice suffix.
  std::pair<std::pair<int, double>, std::vector<std::size_t>> exhaustive_from(const Compactor& c,
                                                                                std::size_t i) const {
    if (i == gate_count()) return {{c.x90_depth(), c.duration()}, {}};
    std::pair<int, double> best{std::numeric_limits<int>::max(), 0};
    std::vector<std::size_t> best_choice;
    for (std::size_t v = 0; v < variants_[i].size(); ++v) {
      Compactor next = c;
      advance(next, i, v);
      auto [cost, suffix] = exhaustive_from(next, i + 1);
      if (cost < best) {
        best = cost;
        best_choice = {v};
        best_choice.insert(best_choice.end(), suffix.begin(), suffix.end());
      }
    }
    return {best, best_choice};
  }

 private:
  void run_layers(Compactor& c, std::size_t from, std::size_t to) const {
    for (std::size_t s = from; s < to; ++s)
      if (!prog_.steps[s].gate) c.apply_layer(prog_.steps[s].layer);
  }

  Program prog_;
  SchedulePolicy policy_;
  std::vector<std::size_t> gate_steps_;
  std::vector<std::vector<Variant>> variants_;
  std::vector<int> min_interior_;
};

inline constexpr double kMaxExhaustiveCombinations = 1e6;

inline ScheduleResult schedule_program(const Program& prog, const GatesetConfig& gs,
                                       SchedulePolicy policy = {}) {
  return Scheduler(prog, gs, policy).best_first();
}

inline ScheduleResult exhaustive_program(const Program& prog, const GatesetConfig& gs,
                                         SchedulePolicy policy = {}) {
  Scheduler s(prog, gs, policy);
  if (s.combinations() > kMaxExhaustiveCombinations)
    throw ResourceError("exhaustive_schedule: more than 1e6 variant combinations");
  auto [cost, choice] = s.exhaustive_from(s.initial(), 0);
  return s.realize(choice);
}

/// Schedules a bare network on n qubits.
inline Circuit schedule(int n, const std::vector<NetworkGate>& network, const GatesetConfig& gs,
                        SchedulePolicy policy = {}) {
  return schedule_program(network_program(n, network), gs, policy).circuit;
}

inline Circuit exhaustive_schedule(int n, const std::vector<NetworkGate>& network, const GatesetConfig& gs) {
  return exhaustive_program(network_program(n, network), gs).circuit;
}

}  // namespace fswap
