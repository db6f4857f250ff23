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
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/linalg.hpp"
#include "fswap/synthesis.hpp"

namespace fswap {

/// Which controlled-phase gates are available besides CZ. `preference` picks
/// CS or CSD for a physical pair (lower index first) when both exist.
struct GatesetConfig {
  bool has_cs = false;
  bool has_csdg = false;
  bool has_cphase = false;
  std::map<std::pair<int, int>, GateKind> preference;

  static GatesetConfig cz_only() { return {}; }
  static GatesetConfig with_cs() { return {true, true, false, {}}; }

  bool cs_capable() const { return has_cs || has_csdg; }

  /// CS or CSD for the pair, or nullopt when neither is available.
  std::optional<GateKind> controlled_s_for(std::pair<int, int> pair) const {
    if (pair.first > pair.second) std::swap(pair.first, pair.second);
    auto it = preference.find(pair);
    if (it != preference.end()) {
      if (it->second == GateKind::CS && has_cs) return GateKind::CS;
      if (it->second == GateKind::CSD && has_csdg) return GateKind::CSD;
    }
    if (has_cs) return GateKind::CS;
    if (has_csdg) return GateKind::CSD;
    return std::nullopt;
  }

  /// Comma-separated gate names, e.g. "cz,cs,csdg". "cz" is implied.
  static GatesetConfig parse(const std::string& text) {
    GatesetConfig g;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "cz" || tok.empty()) continue;
      if (tok == "cs") g.has_cs = true;
      else if (tok == "csdg") g.has_csdg = true;
      else if (tok == "cphase") g.has_cphase = true;
      else throw std::invalid_argument("unknown gate in gateset: " + tok);
    }
    return g;
  }

  std::string to_string() const {
    std::string s = "cz";
    if (has_cs) s += ",cs";
    if (has_csdg) s += ",csdg";
    if (has_cphase) s += ",cphase";
    return s;
  }
};

/// The fermionic SWAP: swaps two qubits and multiplies the odd-parity
/// subspace by e^{i theta}.
inline Matrix fswap_unitary(double theta) {
  Matrix f(4);
  const cplx e = expi(theta);
  f(0, 0) = 1;
  f(1, 2) = e;
  f(2, 1) = e;
  f(3, 3) = 1;
  return f;
}

inline Matrix swap_matrix() { return fswap_unitary(0); }

inline double cz_equivalent_cost(double theta) {
  const double t = std::fmod(std::fmod(theta, kPi) + kPi, kPi);
  return 2.0 + 2.0 * std::abs(t - kPi / 2) / kPi;
}

inline bool near_angle(double theta, double target, double tol = 1e-9) {
  return angle_is_zero(theta - target, tol);
}

/// theta mod pi lies in [pi/4, 3pi/4].
inline bool in_cs_region(double theta, double tol = 1e-12) {
  const double t = std::fmod(std::fmod(theta, kPi) + kPi, kPi);
  return t >= kPi / 4 - tol && t <= 3 * kPi / 4 + tol;
}

struct FswapAngles {
  double theta = 0;
  double mu = 0;
  double lambda = 0;
  double nu = 0;
};

inline double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

/// Single-qubit corrections of the controlled-S decomposition. Defined for
/// theta mod pi in [pi/4, 3pi/4].
inline FswapAngles fswap_angles(double theta) {
  if (!in_cs_region(theta)) throw std::domain_error("fswap_angles: theta mod pi outside [pi/4, 3pi/4]");
  const double r2 = std::sqrt(2.0);
  FswapAngles a;
  a.theta = theta;
  a.mu = std::asin(clamp_unit(1.0 / (-r2 * std::sin(theta))));
  a.lambda = std::acos(clamp_unit(-r2 * std::cos(theta)));
  const double cot = std::cos(theta) / std::sin(theta);
  a.nu = -2.0 * std::acos(clamp_unit(std::sqrt(std::max(cot + 1.0, 0.0)) / r2));
  return a;
}

/// Decomposition families of the fermionic SWAP.
enum class Family { Swap, Iswap, Cz3, Cphase, Cs, Csdg, Qasm };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Swap: return "swap-opt";
    case Family::Iswap: return "iswap";
    case Family::Cz3: return "cz3";
    case Family::Cphase: return "cphase";
    case Family::Cs: return "cs";
    case Family::Csdg: return "csdg";
    case Family::Qasm: return "qasm";
  }
  return "?";
}

namespace detail {

inline void xx(std::vector<Gate>& g) {
  g.push_back(Gate::x90(0));
  g.push_back(Gate::x90(1));
}

inline void append(std::vector<Gate>& g, const std::vector<Gate>& h) { g.insert(g.end(), h.begin(), h.end()); }

inline std::vector<Gate> rx_gates(int q, double a) { return eq1_gates(q, synthesize_su2(gates::rx(a))); }

inline std::vector<Gate> hadamard_gates(int q, bool optimized) {
  if (optimized) return {Gate::vz(q, kPi / 2), Gate::x90(q), Gate::vz(q, kPi / 2)};
  return {Gate::x90(q), Gate::vz(q, kPi / 2), Gate::x90(q)};
}

// CX with control c and target t: H(t) CZ H(t), standard H.
inline std::vector<Gate> cx_gates(int c, int t) {
  std::vector<Gate> g = hadamard_gates(t, false);
  g.push_back(Gate::cz(std::min(c, t), std::max(c, t)));
  append(g, hadamard_gates(t, false));
  return g;
}

inline std::vector<Gate> swap_opt_gates() {
  std::vector<Gate> g;
  for (int k = 0; k < 3; ++k) {
    xx(g);
    g.push_back(Gate::cz(0, 1));
  }
  return g;
}

inline std::vector<Gate> swap_std_gates() {
  std::vector<Gate> g = cx_gates(0, 1);
  append(g, cx_gates(1, 0));
  append(g, cx_gates(0, 1));
  return g;
}

inline std::vector<Gate> qasm_gates(double theta) {
  std::vector<Gate> g = cx_gates(0, 1);
  append(g, cx_gates(1, 0));
  g.push_back(Gate::vz(1, theta));
  append(g, cx_gates(0, 1));
  return g;
}

inline std::vector<Gate> cz3_gates(double theta) {
  return {Gate::x90(1), Gate::cz(0, 1), Gate::x90(0), Gate::x90(1), Gate::cz(0, 1),
          Gate::vz(1, -theta), Gate::x90(0), Gate::x90(1), Gate::cz(0, 1), Gate::x90(1)};
}

inline std::vector<Gate> iswap_gates(int sign) {
  std::vector<Gate> g;
  xx(g);
  g.push_back(Gate::cz(0, 1));
  xx(g);
  g.push_back(Gate::cz(0, 1));
  xx(g);
  g.push_back(Gate::vz(0, sign * kPi / 2));
  g.push_back(Gate::vz(1, sign * kPi / 2));
  return g;
}

inline std::vector<Gate> cphase_gates(double theta) {
  std::vector<Gate> g;
  xx(g);
  g.push_back(Gate::cz(0, 1));
  xx(g);
  g.push_back(Gate::cz(0, 1));
  xx(g);
  const double phi = kPi - 2 * theta;
  if (near_angle(phi, kPi, 1e-12)) g.push_back(Gate::cz(0, 1));
  else if (!angle_is_zero(phi)) g.push_back(Gate::cphase(0, 1, phi));
  g.push_back(Gate::vz(0, theta));
  g.push_back(Gate::vz(1, theta));
  return g;
}

// Controlled-S construction for theta in [pi/4, 3pi/4] (mod 2pi). The other
// half of the region is reached through F_theta = (Z x Z) F_{theta + pi}.
inline std::vector<Gate> cs_gates_upper(double theta) {
  const FswapAngles a = fswap_angles(theta);
  std::vector<Gate> g = rx_gates(0, a.mu);
  g.push_back(Gate::x90(1));
  g.push_back(Gate::cz(0, 1));
  xx(g);
  g.push_back(Gate::cz(0, 1));
  g.push_back(Gate::vz(1, a.lambda));
  xx(g);
  g.push_back(Gate::cs(0, 1));
  g.push_back(Gate::vz(0, 5 * kPi / 4));
  g.push_back(Gate::vz(1, 5 * kPi / 4));
  append(g, rx_gates(1, a.nu));
  return g;
}

inline std::vector<Gate> cs_gates(double theta) {
  const double t = normalize_angle(theta);
  if (t <= kPi) return cs_gates_upper(t);
  std::vector<Gate> g = cs_gates_upper(t - kPi);
  g.push_back(Gate::vz(0, kPi));
  g.push_back(Gate::vz(1, kPi));
  return g;
}

}  // namespace detail

/// Inverse of a time-ordered gate list on any qubits. X90 is inverted as
/// VZ(pi) X90 VZ(pi); controlled phases are negated, so CS and CSD swap.
inline std::vector<Gate> dagger_gates(const std::vector<Gate>& gs) {
  std::vector<Gate> out;
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    const Gate& g = *it;
    switch (g.kind) {
      case GateKind::X90:
        out.push_back(Gate::vz(g.qubits[0], kPi));
        out.push_back(g);
        out.push_back(Gate::vz(g.qubits[0], kPi));
        break;
      case GateKind::VZ: out.push_back(Gate::vz(g.qubits[0], -g.angle)); break;
      case GateKind::CZ: out.push_back(g); break;
      case GateKind::CS: out.push_back(Gate::csd(g.qubits[0], g.qubits[1])); break;
      case GateKind::CSD: out.push_back(Gate::cs(g.qubits[0], g.qubits[1])); break;
      case GateKind::CPHASE: out.push_back(Gate::cphase(g.qubits[0], g.qubits[1], -g.angle)); break;
      case GateKind::MEASURE: throw std::invalid_argument("dagger_gates: measurement is not invertible");
    }
  }
  return out;
}

/// Gate list of a family on qubits (0, 1), before any validity check.
inline std::vector<Gate> family_gates(Family f, double theta) {
  switch (f) {
    case Family::Swap: {
      std::vector<Gate> g = detail::swap_opt_gates();
      if (near_angle(theta, kPi)) {
        g.push_back(Gate::vz(0, kPi));
        g.push_back(Gate::vz(1, kPi));
      } else if (!near_angle(theta, 0)) {
        throw std::domain_error("swap family requires theta in {0, pi}");
      }
      return g;
    }
    case Family::Iswap:
      if (near_angle(theta, kPi / 2)) return detail::iswap_gates(1);
      if (near_angle(theta, -kPi / 2)) return detail::iswap_gates(-1);
      throw std::domain_error("iswap family requires theta = +-pi/2");
    case Family::Cz3: return detail::cz3_gates(theta);
    case Family::Cphase: return detail::cphase_gates(theta);
    case Family::Cs: return detail::cs_gates(theta);
    case Family::Csdg: return dagger_gates(detail::cs_gates(-theta));
    case Family::Qasm: return detail::qasm_gates(theta);
  }
  throw std::logic_error("unknown family");
}

/// True when the two-qubit circuit acts as F_theta. The circuit's own matrix
/// already contains the exchange of the two qubits.
inline bool fswap_equivalent(const Circuit& c, double theta, double tol = 1e-9) {
  return c.n == 2 && unitary_equiv(circuit_unitary(c), fswap_unitary(theta), tol);
}

inline Circuit fswap_circuit(const std::vector<Gate>& gs) { return circuit_from_gates(2, gs, {1, 0}); }

inline Circuit checked_fswap(Family f, double theta) {
  Circuit c = fswap_circuit(family_gates(f, theta));
  if (!fswap_equivalent(c, theta))
    throw InvariantError("decomposition " + std::string(family_name(f)) +
                         " does not reproduce F_theta at theta=" + std::to_string(theta));
  return c;
}

inline Circuit hadamard(bool optimized) {
  return circuit_from_gates(1, detail::hadamard_gates(0, optimized));
}

inline Circuit swap_decomposition(bool optimized) {
  Circuit c = fswap_circuit(optimized ? detail::swap_opt_gates() : detail::swap_std_gates());
  if (!fswap_equivalent(c, 0)) throw InvariantError("SWAP decomposition check failed");
  return c;
}

inline Circuit fswap_qasm(double theta) { return checked_fswap(Family::Qasm, theta); }
inline Circuit fswap_cz3(double theta) { return checked_fswap(Family::Cz3, theta); }

inline Circuit fswap_iswap(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("fswap_iswap: sign must be +1 or -1");
  return checked_fswap(Family::Iswap, sign * kPi / 2);
}

inline Circuit fswap_cphase(double theta, const GatesetConfig& gs = {false, false, true, {}}) {
  if (!gs.has_cphase) throw std::invalid_argument("fswap_cphase: gateset lacks cphase");
  return checked_fswap(Family::Cphase, theta);
}

inline Circuit fswap_cs(double theta, bool use_dagger, const GatesetConfig& gs = GatesetConfig::with_cs()) {
  if (!in_cs_region(theta)) throw std::domain_error("fswap_cs: theta mod pi outside [pi/4, 3pi/4]");
  if (use_dagger ? !gs.has_csdg : !gs.has_cs)
    throw std::invalid_argument("fswap_cs: gateset lacks the requested controlled-S gate");
  return checked_fswap(use_dagger ? Family::Csdg : Family::Cs, theta);
}

/// Region logic: the family that select_fswap uses for theta on `pair`.
inline Family select_family(double theta, const GatesetConfig& gs, std::pair<int, int> pair = {0, 1}) {
  if (near_angle(theta, 0) || near_angle(theta, kPi)) return Family::Swap;
  if (near_angle(theta, kPi / 2) || near_angle(theta, -kPi / 2)) return Family::Iswap;
  if (in_cs_region(theta)) {
    if (auto k = gs.controlled_s_for(pair)) return *k == GateKind::CS ? Family::Cs : Family::Csdg;
  }
  if (gs.has_cphase) return Family::Cphase;
  return Family::Cz3;
}

inline Circuit select_fswap(double theta, const GatesetConfig& gs = {}, std::pair<int, int> pair = {0, 1}) {
  return checked_fswap(select_family(theta, gs, pair), theta);
}

}  // namespace fswap
