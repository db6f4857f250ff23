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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/linalg.hpp"

namespace fswap {

/// Angles of the single-qubit identity
///   u = Z(alpha - pi/2) . X90 . Z(pi - beta) . X90 . Z(gamma - pi/2)
/// up to global phase, where Z(a) = diag(1, e^{ia}).
struct EulerAngles {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

inline bool mat2_is_unitary(const Mat2& u, double tol = 1e-9) {
  const Mat2 p = u.adjoint() * u;
  return std::abs(p.m[0] - 1.0) < tol && std::abs(p.m[1]) < tol && std::abs(p.m[2]) < tol &&
         std::abs(p.m[3] - 1.0) < tol;
}

/// Global-phase-invariant equality of 2x2 unitaries.
inline bool mat2_equiv(const Mat2& a, const Mat2& b, double tol = 1e-9) {
  const cplx t = std::conj(a.m[0]) * b.m[0] + std::conj(a.m[1]) * b.m[1] +
                 std::conj(a.m[2]) * b.m[2] + std::conj(a.m[3]) * b.m[3];
  return std::abs(std::abs(t) - 2.0) < 2.0 * tol;
}

inline Mat2 eq1_product(const EulerAngles& e) {
  using namespace gates;
  return vz(e.alpha - kPi / 2) * x90() * vz(kPi - e.beta) * x90() * vz(e.gamma - kPi / 2);
}

inline EulerAngles synthesize_su2(const Mat2& u) {
  if (!mat2_is_unitary(u)) throw std::invalid_argument("synthesize_su2: input is not unitary");
  // Write u ~ Z(phi) Ry(beta) Z(lam); then alpha = phi + pi/2, gamma = lam - pi/2.
  const double a00 = std::abs(u.m[0]), a10 = std::abs(u.m[2]);
  const double beta = 2.0 * std::atan2(a10, a00);
  double phi = 0, lam = 0;
  constexpr double kTiny = 1e-12;
  if (a10 < kTiny) {
    phi = std::arg(u.m[3]) - std::arg(u.m[0]);
  } else if (a00 < kTiny) {
    phi = std::arg(u.m[2]) - std::arg(-u.m[1]);
  } else {
    phi = std::arg(u.m[2]) - std::arg(u.m[0]);
    lam = std::arg(-u.m[1]) - std::arg(u.m[0]);
  }
  return {normalize_angle(phi + kPi / 2), beta, normalize_angle(lam - kPi / 2)};
}

/// The five-gate sequence of synthesize_su2 on qubit q, in time order.
inline std::vector<Gate> eq1_gates(int q, const EulerAngles& e) {
  return {Gate::vz(q, e.gamma - kPi / 2), Gate::x90(q), Gate::vz(q, kPi - e.beta), Gate::x90(q),
          Gate::vz(q, e.alpha - kPi / 2)};
}

inline constexpr double kSynthTol = 1e-9;

/// Fewest X90 pulses that realize u together with virtual Z rotations.
inline int x90_cost(const Mat2& u) {
  if (std::abs(u.m[1]) < kSynthTol) return 0;
  if (std::abs(std::abs(u.m[0]) - 1.0 / std::sqrt(2.0)) < kSynthTol) return 1;
  return 2;
}

/// Minimal realization of u on one wire: u ~ Z(pending) . (product of gates).
/// The trailing diagonal is returned separately so callers can keep pushing
/// it through diagonal entanglers.
struct Resynthesis {
  std::vector<Gate> gates;
  double pending = 0;
  int x90 = 0;
};

inline Resynthesis resynthesize(const Mat2& u, int q) {
  Resynthesis r;
  r.x90 = x90_cost(u);
  if (r.x90 == 0) {
    r.pending = normalize_angle(std::arg(u.m[3]) - std::arg(u.m[0]));
    return r;
  }
  if (r.x90 == 1) {
    // u ~ Z(a) X90 Z(b) with a = arg(u10/u00) + pi/2 and b = arg(u01/u00) + pi/2.
    const double b = std::arg(u.m[1]) - std::arg(u.m[0]) + kPi / 2;
    const double a = std::arg(u.m[2]) - std::arg(u.m[0]) + kPi / 2;
    r.gates = {Gate::vz(q, b), Gate::x90(q)};
    r.pending = normalize_angle(a);
  } else {
    const EulerAngles e = synthesize_su2(u);
    r.gates = {Gate::vz(q, e.gamma - kPi / 2), Gate::x90(q), Gate::vz(q, kPi - e.beta),
               Gate::x90(q)};
    r.pending = normalize_angle(e.alpha - kPi / 2);
  }
  std::erase_if(r.gates, [](const Gate& g) { return g.kind == GateKind::VZ && angle_is_zero(g.angle); });
  return r;
}

/// Product of a time-ordered single-qubit gate list.
inline Mat2 run_matrix(const std::vector<Gate>& gs) {
  Mat2 m = Mat2::identity();
  for (const auto& g : gs) m = single_qubit_matrix(g) * m;
  return m;
}

}  // namespace fswap
