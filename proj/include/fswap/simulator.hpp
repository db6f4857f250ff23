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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/linalg.hpp"
#include "fswap/rng.hpp"

namespace fswap {

/// Probability of each computational basis state. Index bit (n-1-q) is qubit
/// q, so the bitstring of an index lists qubit 0 first.
struct Distribution {
  int n = 0;
  std::vector<double> p;

  double total() const {
    double s = 0;
    for (double x : p) s += x;
    return s;
  }
};

inline std::string bitstring(std::size_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q)
    if ((index >> qubit_shift(n, q)) & 1U) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

inline std::size_t bitstring_index(const std::string& s) {
  std::size_t x = 0;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bitstring must contain only 0 and 1");
    x = (x << 1) | static_cast<std::size_t>(ch == '1');
  }
  return x;
}

struct Counts {
  int n = 0;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> hist;

  void check() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : hist) {
      if (static_cast<int>(k.size()) != n) throw std::invalid_argument("counts: bitstring width mismatch");
      s += v;
    }
    if (s != shots) throw std::invalid_argument("counts: histogram does not sum to shots");
  }
};

/// Noise attached to native gates. Per-qubit and per-pair lists are indexed
/// by the qubit (pair lower qubit) modulo their length; an empty list means
/// no error of that kind.
struct NoiseModel {
  std::vector<double> x90_overrotation;
  std::vector<double> x90_axis_tilt;
  std::map<GateKind, std::vector<double>> ctrl_phase_error;
  std::map<GateKind, double> depolarizing;     // per qubit the gate touches
  std::map<GateKind, double> depolarizing_2q;  // joint channel on the pair
  std::vector<std::array<double, 2>> readout;  // {P(0|0), P(1|1)}
  std::uint64_t seed = 0;

  static NoiseModel ideal() { return {}; }

  /// Coherent over-rotation, tilt and conditional-phase errors with light
  /// depolarizing and per-qubit readout error.
  static NoiseModel desk_default() {
    NoiseModel m;
    m.x90_overrotation = {0.02};
    m.x90_axis_tilt = {0.01};
    m.ctrl_phase_error = {{GateKind::CZ, {0.05}},
                          {GateKind::CS, {0.025}},
                          {GateKind::CSD, {0.025}},
                          {GateKind::CPHASE, {0.05}}};
    m.depolarizing = {{GateKind::X90, 2.5e-4},
                      {GateKind::CZ, 2e-3},
                      {GateKind::CS, 2e-3},
                      {GateKind::CSD, 2e-3},
                      {GateKind::CPHASE, 2e-3}};
    m.readout = {{0.999, 0.990}, {0.995, 0.989}, {0.995, 0.979}, {0.995, 0.974}};
    return m;
  }

  void check() const {
    auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    for (const auto& [k, p] : depolarizing)
      if (!prob(p)) throw std::invalid_argument("noise: depolarizing probability outside [0, 1]");
    for (const auto& [k, p] : depolarizing_2q)
      if (!prob(p)) throw std::invalid_argument("noise: depolarizing probability outside [0, 1]");
    for (const auto& r : readout)
      if (!prob(r[0]) || !prob(r[1])) throw std::invalid_argument("noise: readout probability outside [0, 1]");
  }

  static double cycled(const std::vector<double>& v, int i) {
    return v.empty() ? 0.0 : v[static_cast<std::size_t>(i) % v.size()];
  }
  double depol(GateKind k) const {
    auto it = depolarizing.find(k);
    return it == depolarizing.end() ? 0.0 : it->second;
  }
  double depol_2q(GateKind k) const {
    auto it = depolarizing_2q.find(k);
    return it == depolarizing_2q.end() ? 0.0 : it->second;
  }
  /// Conditional phase actually executed for an entangler on `pair_low`.
  double noisy_phase(const Gate& g) const {
    const int low = std::min(g.qubits[0], g.qubits[1]);
    double err = 0;
    if (auto it = ctrl_phase_error.find(g.kind); it != ctrl_phase_error.end()) err = cycled(it->second, low);
    if (g.kind == GateKind::CPHASE) err *= std::abs(signed_angle(g.angle)) / kPi;
    return g.conditional_phase() + err;
  }
};

inline constexpr int kMaxDensityQubits = 6;

/// Applies the circuit's gates to a state vector in place.
inline void evolve_state(const Circuit& c, std::vector<cplx>& psi) {
  if (psi.size() != std::size_t{1} << c.n) throw std::invalid_argument("evolve_state: state size mismatch");
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MEASURE) continue;
    if (is_two_qubit(g.kind)) apply_cphase_left(psi, 1, c.n, g.qubits[0], g.qubits[1], g.conditional_phase());
    else apply_1q_left(psi, 1, c.n, g.qubits[0], single_qubit_matrix(g));
  }
}

inline Distribution simulate_ideal(const Circuit& c) {
  if (c.n > kMaxUnitaryQubits) throw ResourceError("simulate_ideal: more than 12 qubits");
  validate(c);
  const std::size_t dim = std::size_t{1} << c.n;
  std::vector<cplx> psi(dim, 0);
  psi[0] = 1;
  evolve_state(c, psi);
  Distribution d{c.n, std::vector<double>(dim)};
  for (std::size_t i = 0; i < dim; ++i) d.p[i] = std::norm(psi[i]);
  return d;
}

/// Dense density matrix with in-place channel application.
class DensityState {
 public:
  explicit DensityState(int n) : n_(n), dim_(std::size_t{1} << n), rho_(dim_) { rho_(0, 0) = 1; }

  int n() const { return n_; }
  const Matrix& matrix() const { return rho_; }

  void apply_1q(int q, const Mat2& g) {
    auto& v = rho_.mutable_data();
    apply_1q_left(v, dim_, n_, q, g);
    conj_transpose();
    apply_1q_left(v, dim_, n_, q, g);
    conj_transpose();
  }

  void apply_cphase(int a, int b, double phi) {
    const std::size_t ba = std::size_t{1} << qubit_shift(n_, a), bb = std::size_t{1} << qubit_shift(n_, b);
    const cplx ph = expi(phi), phc = std::conj(ph);
    for (std::size_t i = 0; i < dim_; ++i) {
      const bool ri = (i & ba) && (i & bb);
      for (std::size_t j = 0; j < dim_; ++j) {
        const bool rj = (j & ba) && (j & bb);
        if (ri && !rj) rho_(i, j) *= ph;
        else if (rj && !ri) rho_(i, j) *= phc;
      }
    }
  }

  /// rho -> (1 - p) rho + p (I/2 (x) Tr_q rho).
  void depolarize(int q, double p) {
    if (p <= 0) return;
    const std::size_t bit = std::size_t{1} << qubit_shift(n_, q);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i & bit) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j & bit) continue;
        const cplx a = rho_(i, j), d = rho_(i | bit, j | bit);
        const cplx half = 0.5 * (a + d);
        rho_(i, j) = (1 - p) * a + p * half;
        rho_(i | bit, j | bit) = (1 - p) * d + p * half;
        rho_(i, j | bit) *= (1 - p);
        rho_(i | bit, j) *= (1 - p);
      }
    }
  }

  /// rho -> (1 - p) rho + p (I/4 (x) Tr_ab rho).
  void depolarize_pair(int a, int b, double p) {
    if (p <= 0) return;
    const std::size_t ba = std::size_t{1} << qubit_shift(n_, a), bb = std::size_t{1} << qubit_shift(n_, b);
    const std::array<std::size_t, 4> off{0, bb, ba, ba | bb};
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i & (ba | bb)) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j & (ba | bb)) continue;
        cplx tr = 0;
        for (std::size_t k = 0; k < 4; ++k) tr += rho_(i | off[k], j | off[k]);
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t s = 0; s < 4; ++s) {
            cplx& x = rho_(i | off[r], j | off[s]);
            x = (1 - p) * x + (r == s ? p * 0.25 * tr : cplx{0});
          }
      }
    }
  }

  std::vector<double> probabilities() const {
    std::vector<double> p(dim_);
    for (std::size_t i = 0; i < dim_; ++i) p[i] = std::max(0.0, rho_(i, i).real());
    return p;
  }

  double trace() const { return rho_.trace().real(); }
  double purity() const { return (rho_ * rho_).trace().real(); }

 private:
  void conj_transpose() {
    for (std::size_t i = 0; i < dim_; ++i) {
      rho_(i, i) = std::conj(rho_(i, i));
      for (std::size_t j = i + 1; j < dim_; ++j) {
        const cplx t = rho_(i, j);
        rho_(i, j) = std::conj(rho_(j, i));
        rho_(j, i) = std::conj(t);
      }
    }
  }

  int n_;
  std::size_t dim_;
  Matrix rho_;
};

/// Applies one gate with its noise to a density state.
inline void apply_noisy_gate(DensityState& s, const Gate& g, const NoiseModel& noise) {
  switch (g.kind) {
    case GateKind::MEASURE: return;
    case GateKind::VZ: s.apply_1q(g.qubits[0], gates::vz(g.angle)); return;
    case GateKind::X90: {
      const int q = g.qubits[0];
      s.apply_1q(q, gates::tilted_rx(kPi / 2 + NoiseModel::cycled(noise.x90_overrotation, q),
                                     NoiseModel::cycled(noise.x90_axis_tilt, q)));
      s.depolarize(q, noise.depol(GateKind::X90));
      return;
    }
    default: {
      const int a = g.qubits[0], b = g.qubits[1];
      s.apply_cphase(a, b, noise.noisy_phase(g));
      s.depolarize(a, noise.depol(g.kind));
      s.depolarize(b, noise.depol(g.kind));
      s.depolarize_pair(a, b, noise.depol_2q(g.kind));
      return;
    }
  }
}

/// Applies per-qubit readout confusion to a distribution.
inline void apply_readout(Distribution& d, const NoiseModel& noise) {
  if (noise.readout.empty()) return;
  const std::size_t dim = d.p.size();
  for (int q = 0; q < d.n; ++q) {
    const auto& r = noise.readout[static_cast<std::size_t>(q) % noise.readout.size()];
    const std::size_t bit = std::size_t{1} << qubit_shift(d.n, q);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & bit) continue;
      const double p0 = d.p[i], p1 = d.p[i | bit];
      d.p[i] = r[0] * p0 + (1 - r[1]) * p1;
      d.p[i | bit] = (1 - r[0]) * p0 + r[1] * p1;
    }
  }
}

/// Final density state of a circuit under noise, before readout.
inline DensityState evolve_noisy(const Circuit& c, const NoiseModel& noise) {
  if (c.n > kMaxDensityQubits) throw ResourceError("simulate_noisy: more than 6 qubits");
  validate(c);
  noise.check();
  DensityState s(c.n);
  for (const auto& g : c.gates()) apply_noisy_gate(s, g, noise);
  return s;
}

inline Distribution simulate_noisy(const Circuit& c, const NoiseModel& noise) {
  const DensityState s = evolve_noisy(c, noise);
  Distribution d{c.n, s.probabilities()};
  const double t = d.total();
  for (double& x : d.p) x /= t;
  apply_readout(d, noise);
  return d;
}

/// Multinomial sample of `shots` outcomes.
inline Counts sample_counts(const Distribution& d, std::uint64_t shots, std::uint64_t seed) {
  if (std::abs(d.total() - 1.0) > 1e-6) throw std::invalid_argument("sample_counts: distribution not normalized");
  std::vector<double> cdf(d.p.size());
  double acc = 0;
  for (std::size_t i = 0; i < d.p.size(); ++i) cdf[i] = (acc += d.p[i]);
  Rng rng(seed);
  std::vector<std::uint64_t> bins(d.p.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = static_cast<std::size_t>(it - cdf.begin());
    if (k >= bins.size()) k = bins.size() - 1;
    while (d.p[k] == 0.0 && k > 0) --k;
    ++bins[k];
  }
  Counts c{d.n, shots, {}};
  for (std::size_t i = 0; i < bins.size(); ++i)
    if (bins[i]) c.hist[bitstring(i, d.n)] = bins[i];
  return c;
}

}  // namespace fswap
