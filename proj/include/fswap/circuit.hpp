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
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fswap/linalg.hpp"

namespace fswap {

/// Thrown when a structural invariant (of a circuit, a decomposition, ...) is
/// violated. The CLI maps it to exit code 2.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an input exceeds a documented size bound. CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateKind { X90, VZ, CZ, CS, CSD, CPHASE, MEASURE };

inline constexpr std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::X90: return "x90";
    case GateKind::VZ: return "vz";
    case GateKind::CZ: return "cz";
    case GateKind::CS: return "cs";
    case GateKind::CSD: return "csdg";
    case GateKind::CPHASE: return "cphase";
    case GateKind::MEASURE: return "measure";
  }
  return "?";
}

inline std::optional<GateKind> gate_kind_from_name(std::string_view s) {
  for (GateKind k : {GateKind::X90, GateKind::VZ, GateKind::CZ, GateKind::CS, GateKind::CSD,
                     GateKind::CPHASE, GateKind::MEASURE})
    if (gate_name(k) == s) return k;
  return std::nullopt;
}

inline bool is_two_qubit(GateKind k) {
  return k == GateKind::CZ || k == GateKind::CS || k == GateKind::CSD || k == GateKind::CPHASE;
}

struct Gate {
  GateKind kind = GateKind::X90;
  std::vector<int> qubits;
  double angle = 0;  // VZ rotation or CPHASE conditional phase, in [0, 2pi)

  static Gate x90(int q) { return {GateKind::X90, {q}, 0}; }
  static Gate vz(int q, double a) { return {GateKind::VZ, {q}, normalize_angle(a)}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, {a, b}, 0}; }
  static Gate cs(int a, int b) { return {GateKind::CS, {a, b}, 0}; }
  static Gate csd(int a, int b) { return {GateKind::CSD, {a, b}, 0}; }
  static Gate cphase(int a, int b, double phi) {
    return {GateKind::CPHASE, {a, b}, normalize_angle(phi)};
  }
  static Gate measure_all(int n) {
    Gate g{GateKind::MEASURE, {}, 0};
    g.qubits.resize(static_cast<std::size_t>(n));
    std::iota(g.qubits.begin(), g.qubits.end(), 0);
    return g;
  }

  /// Conditional phase of a two-qubit gate.
  double conditional_phase() const {
    switch (kind) {
      case GateKind::CZ: return kPi;
      case GateKind::CS: return kPi / 2;
      case GateKind::CSD: return 3 * kPi / 2;
      case GateKind::CPHASE: return angle;
      default: throw std::logic_error("conditional_phase on a non-entangling gate");
    }
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

inline Mat2 single_qubit_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::X90: return gates::x90();
    case GateKind::VZ: return gates::vz(g.angle);
    default: throw std::logic_error("single_qubit_matrix on a multi-qubit gate");
  }
}

using Moment = std::vector<Gate>;

/// A timed sequence of native gates on a line of qubits. `perm[l]` is the
/// physical qubit holding logical qubit l after the circuit has run.
struct Circuit {
  int n = 0;
  std::vector<Moment> moments;
  std::vector<int> perm;
  bool ring = false;

  Circuit() = default;
  explicit Circuit(int nq) : n(nq), perm(static_cast<std::size_t>(nq)) {
    std::iota(perm.begin(), perm.end(), 0);
  }

  std::vector<Gate> gates() const {
    std::vector<Gate> out;
    for (const auto& m : moments) out.insert(out.end(), m.begin(), m.end());
    return out;
  }

  std::size_t gate_count() const {
    std::size_t c = 0;
    for (const auto& m : moments) c += m.size();
    return c;
  }

  bool measured() const {
    return !moments.empty() && moments.back().size() == 1 &&
           moments.back().front().kind == GateKind::MEASURE;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

inline bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

inline std::vector<int> compose_perm(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> r(first.size());
  for (std::size_t l = 0; l < first.size(); ++l)
    r[l] = then[static_cast<std::size_t>(first[l])];
  return r;
}

inline std::vector<int> reversal_perm(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = n - 1 - i;
  return r;
}

inline void check_operands(const Circuit& c, const Gate& g) {
  for (int q : g.qubits)
    if (q < 0 || q >= c.n) throw std::invalid_argument("gate operand out of range");
  if (g.kind == GateKind::MEASURE) return;
  const std::size_t want = is_two_qubit(g.kind) ? 2 : 1;
  if (g.qubits.size() != want) throw std::invalid_argument("wrong operand count for gate");
  if (want == 2) {
    const int a = g.qubits[0], b = g.qubits[1];
    if (a == b) throw std::invalid_argument("two-qubit gate operands must be distinct");
    const int d = std::abs(a - b);
    const bool adjacent = d == 1 || (c.ring && c.n > 2 && d == c.n - 1);
    if (!adjacent) throw std::invalid_argument("two-qubit gate on non-adjacent qubits");
  }
}

/// Throws std::invalid_argument when the circuit violates an IR invariant.
inline void validate(const Circuit& c) {
  if (c.n < 1) throw std::invalid_argument("circuit needs at least one qubit");
  if (c.perm.size() != static_cast<std::size_t>(c.n) || !is_permutation(c.perm))
    throw std::invalid_argument("circuit permutation is not a bijection");
  for (const auto& m : c.moments) {
    std::vector<bool> used(static_cast<std::size_t>(c.n), false);
    for (const auto& g : m) {
      check_operands(c, g);
      for (int q : g.qubits) {
        if (used[static_cast<std::size_t>(q)])
          throw std::invalid_argument("qubit appears twice in one moment");
        used[static_cast<std::size_t>(q)] = true;
      }
    }
  }
}

/// Appends gates in time order and packs them as-soon-as-possible into
/// moments. A measurement always lands in its own final moment.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int n) : c_(n), frontier_(static_cast<std::size_t>(n), 0) {}

  CircuitBuilder& add(Gate g) {
    check_operands(c_, g);
    if (g.kind == GateKind::MEASURE) {
      c_.moments.push_back({std::move(g)});
      std::fill(frontier_.begin(), frontier_.end(), c_.moments.size());
      return *this;
    }
    std::size_t slot = 0;
    for (int q : g.qubits) slot = std::max(slot, frontier_[static_cast<std::size_t>(q)]);
    if (slot >= c_.moments.size()) c_.moments.resize(slot + 1);
    for (int q : g.qubits) frontier_[static_cast<std::size_t>(q)] = slot + 1;
    c_.moments[slot].push_back(std::move(g));
    return *this;
  }

  CircuitBuilder& add_all(const std::vector<Gate>& gs) {
    for (const auto& g : gs) add(g);
    return *this;
  }

  CircuitBuilder& set_perm(std::vector<int> p) {
    c_.perm = std::move(p);
    return *this;
  }

  CircuitBuilder& set_ring(bool r) {
    c_.ring = r;
    return *this;
  }

  Circuit build() const { return c_; }

 private:
  Circuit c_;
  std::vector<std::size_t> frontier_;
};

inline Circuit circuit_from_gates(int n, const std::vector<Gate>& gs, std::vector<int> perm = {}) {
  CircuitBuilder b(n);
  b.add_all(gs);
  if (!perm.empty()) b.set_perm(std::move(perm));
  return b.build();
}

inline constexpr int kMaxUnitaryQubits = 12;

/// Physical unitary of the circuit: gates multiplied in execution order.
/// Measurement is terminal and contributes nothing. The permutation is part of
/// the physical action already (a circuit that swaps qubits has a SWAP-like
/// matrix); use logical_unitary() to undo the relabelling.
inline Matrix circuit_unitary(const Circuit& c) {
  if (c.n > kMaxUnitaryQubits) throw ResourceError("circuit_unitary: more than 12 qubits");
  validate(c);
  const std::size_t dim = std::size_t{1} << c.n;
  Matrix u = Matrix::identity(dim);
  auto& v = u.mutable_data();
  for (const auto& m : c.moments)
    for (const auto& g : m) {
      if (g.kind == GateKind::MEASURE) continue;
      if (is_two_qubit(g.kind))
        apply_cphase_left(v, dim, c.n, g.qubits[0], g.qubits[1], g.conditional_phase());
      else
        apply_1q_left(v, dim, c.n, g.qubits[0], single_qubit_matrix(g));
    }
  return u;
}

/// Permutation operator P with P|x> = |y>, where logical bit l of x is moved
/// to physical position perm[l] in y.
inline Matrix permutation_unitary(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  const std::size_t dim = std::size_t{1} << n;
  Matrix p(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int l = 0; l < n; ++l)
      if ((x >> qubit_shift(n, l)) & 1U)
        y |= std::size_t{1} << qubit_shift(n, perm[static_cast<std::size_t>(l)]);
    p(y, x) = 1;
  }
  return p;
}

/// Circuit action with output qubits relabelled back to logical order.
inline Matrix logical_unitary(const Circuit& c) {
  return permutation_unitary(c.perm).adjoint() * circuit_unitary(c);
}

/// Merges virtual Z rotations: adjacent VZ on a qubit are summed, VZ is
/// commuted forward through the diagonal entanglers, and rotations equal to
/// zero mod 2pi are dropped. X90 counts are untouched.
inline Circuit merge_virtual_phases(const Circuit& c) {
  validate(c);
  std::vector<double> pending(static_cast<std::size_t>(c.n), 0.0);
  CircuitBuilder out(c.n);
  out.set_perm(c.perm).set_ring(c.ring);
  auto flush = [&](int q) {
    double& a = pending[static_cast<std::size_t>(q)];
    if (!angle_is_zero(a)) out.add(Gate::vz(q, a));
    a = 0;
  };
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::VZ: pending[static_cast<std::size_t>(g.qubits[0])] += g.angle; break;
      case GateKind::X90:
        flush(g.qubits[0]);
        out.add(g);
        break;
      case GateKind::MEASURE:
        for (int q = 0; q < c.n; ++q) flush(q);
        out.add(g);
        break;
      default:
        // Diagonal entangler: pending phases commute through it.
        out.add(g);
        break;
    }
  }
  for (int q = 0; q < c.n; ++q) flush(q);
  return out.build();
}

using DurationMap = std::map<GateKind, double>;

/// Gate durations in ns. CPHASE(phi) scales its entry by |phi|/pi with phi
/// taken in (-pi, pi], so CPHASE(pi) costs the same as CZ.
inline DurationMap default_durations() {
  return {{GateKind::X90, 30.0}, {GateKind::VZ, 0.0},   {GateKind::CZ, 200.0},
          {GateKind::CS, 150.0}, {GateKind::CSD, 150.0}, {GateKind::CPHASE, 200.0},
          {GateKind::MEASURE, 0.0}};
}

/// Signed representative of an angle in (-pi, pi].
inline double signed_angle(double a) {
  double r = normalize_angle(a);
  return r > kPi ? r - kTwoPi : r;
}

struct CostReport {
  std::size_t x90_total = 0;
  std::size_t x90_critical_path = 0;
  std::map<GateKind, std::size_t> two_qubit_counts;
  double duration_ns = 0;
  double cz_equivalent_depth = 0;

  std::size_t two_qubit_total() const {
    std::size_t t = 0;
    for (const auto& [k, v] : two_qubit_counts) t += v;
    return t;
  }
  std::size_t count(GateKind k) const {
    auto it = two_qubit_counts.find(k);
    return it == two_qubit_counts.end() ? 0 : it->second;
  }
};

/// CZ-equivalent weight of an entangler: |conditional phase| / pi.
inline double cz_weight(const Gate& g) { return std::abs(signed_angle(g.conditional_phase())) / kPi; }

/// Counts and critical paths over the dependency DAG induced by shared qubits.
inline CostReport cost_report(const Circuit& c, const DurationMap& durations = default_durations()) {
  validate(c);
  CostReport r;
  const auto nq = static_cast<std::size_t>(c.n);
  std::vector<double> t_ns(nq, 0), t_cz(nq, 0);
  std::vector<std::size_t> t_x(nq, 0);
  for (const auto& g : c.gates()) {
    auto it = durations.find(g.kind);
    if (it == durations.end())
      throw std::invalid_argument("cost_report: no duration for gate kind " +
                                  std::string(gate_name(g.kind)));
    double dur = it->second;
    double czw = 0;
    std::size_t xw = 0;
    if (g.kind == GateKind::CPHASE) dur *= cz_weight(g);
    if (is_two_qubit(g.kind)) {
      czw = cz_weight(g);
      ++r.two_qubit_counts[g.kind];
    }
    if (g.kind == GateKind::X90) {
      xw = 1;
      ++r.x90_total;
    }
    double s_ns = 0, s_cz = 0;
    std::size_t s_x = 0;
    for (int q : g.qubits) {
      const auto i = static_cast<std::size_t>(q);
      s_ns = std::max(s_ns, t_ns[i]);
      s_cz = std::max(s_cz, t_cz[i]);
      s_x = std::max(s_x, t_x[i]);
    }
    for (int q : g.qubits) {
      const auto i = static_cast<std::size_t>(q);
      t_ns[i] = s_ns + dur;
      t_cz[i] = s_cz + czw;
      t_x[i] = s_x + xw;
    }
  }
  for (std::size_t i = 0; i < nq; ++i) {
    r.duration_ns = std::max(r.duration_ns, t_ns[i]);
    r.cz_equivalent_depth = std::max(r.cz_equivalent_depth, t_cz[i]);
    r.x90_critical_path = std::max(r.x90_critical_path, t_x[i]);
  }
  return r;
}

/// Concatenates b after a (same qubit count). Permutations compose.
inline Circuit concat(const Circuit& a, const Circuit& b) {
  if (a.n != b.n) throw std::invalid_argument("concat: qubit count mismatch");
  CircuitBuilder out(a.n);
  out.set_ring(a.ring || b.ring);
  out.add_all(a.gates());
  out.add_all(b.gates());
  out.set_perm(compose_perm(a.perm, b.perm));
  return out.build();
}

}  // namespace fswap
