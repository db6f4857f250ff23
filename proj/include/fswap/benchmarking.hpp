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
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/linalg.hpp"
#include "fswap/rng.hpp"
#include "fswap/simulator.hpp"

namespace fswap {

/// Total variation distance, half the L1 distance.
inline double tvd(const Distribution& p, const Distribution& q) {
  if (p.n != q.n || p.p.size() != q.p.size()) throw std::invalid_argument("tvd: width mismatch");
  double s = 0;
  for (std::size_t i = 0; i < p.p.size(); ++i) s += std::abs(p.p[i] - q.p[i]);
  return 0.5 * s;
}

// ---------------------------------------------------------------------------
// Pauli strings. Character q is the letter on qubit q.
// ---------------------------------------------------------------------------

inline void check_pauli(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n) throw std::invalid_argument("pauli string has wrong length");
  for (char ch : s)
    if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z')
      throw std::invalid_argument(std::string("invalid Pauli letter '") + ch + "'");
}

inline Mat2 pauli_letter(char ch) {
  switch (ch) {
    case 'X': return gates::pauli_x();
    case 'Y': return gates::pauli_y();
    case 'Z': return gates::pauli_z();
    default: return Mat2::identity();
  }
}

inline Matrix pauli_matrix(const std::string& s) {
  Matrix m = Matrix::identity(1);
  for (char ch : s) m = kron(m, to_matrix(pauli_letter(ch)));
  return m;
}

/// Index k in [0, 4^n) to a string, two bits per qubit, qubit 0 most
/// significant. 0 is the all-identity string.
inline std::string pauli_from_index(std::uint64_t k, int n) {
  static constexpr char letters[] = {'I', 'X', 'Y', 'Z'};
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int q = n - 1; q >= 0; --q) {
    s[static_cast<std::size_t>(q)] = letters[k & 3U];
    k >>= 2;
  }
  return s;
}

/// If m is c * P for a Pauli string P and |c| = 1, returns (P, c).
inline std::optional<std::pair<std::string, cplx>> as_pauli(const Matrix& m, int n, double tol = 1e-9) {
  const std::size_t d = m.dim();
  const std::uint64_t count = std::uint64_t{1} << (2 * n);
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::string s = pauli_from_index(k, n);
    const Matrix p = pauli_matrix(s);
    cplx t = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (p(i, j) != cplx{0}) t += std::conj(p(i, j)) * m(i, j);
    t /= static_cast<double>(d);
    if (std::abs(std::abs(t) - 1.0) < tol) return std::make_pair(s, t);
  }
  return std::nullopt;
}

/// Native gates for one Pauli letter on qubit q, up to global phase.
inline std::vector<Gate> pauli_gates(char ch, int q) {
  switch (ch) {
    case 'X': return {Gate::x90(q), Gate::x90(q)};
    case 'Y': return {Gate::vz(q, -kPi / 2), Gate::x90(q), Gate::x90(q), Gate::vz(q, kPi / 2)};
    case 'Z': return {Gate::vz(q, kPi)};
    default: return {};
  }
}

/// Rotates |0> into the +1 eigenstate of the letter.
inline std::vector<Gate> prep_gates(char ch, int q) {
  switch (ch) {
    case 'X': return detail::hadamard_gates(q, true);
    case 'Y': return {Gate::vz(q, kPi), Gate::x90(q), Gate::vz(q, kPi)};
    default: return {};
  }
}

/// Maps the letter's eigenbasis onto the computational basis.
inline std::vector<Gate> measure_basis_gates(char ch, int q) {
  switch (ch) {
    case 'X': return detail::hadamard_gates(q, true);
    case 'Y': return {Gate::x90(q)};
    default: return {};
  }
}

// ---------------------------------------------------------------------------
// Cycle benchmarking
// ---------------------------------------------------------------------------

struct CBConfig {
  Circuit target_cycle{2};
  std::vector<int> depths{2, 4, 8, 16, 32};
  std::size_t K = 16;
  std::size_t randomizations = 10;
  std::uint64_t shots = 0;  // 0 uses exact expectations
  std::uint64_t seed = 0;
  std::vector<std::string> channels;  // explicit channels override K sampling

  int n() const { return target_cycle.n; }

  void check() const {
    validate(target_cycle);
    if (target_cycle.n > 4) throw ResourceError("cycle benchmarking: more than 4 qubits");
    std::vector<int> id(static_cast<std::size_t>(target_cycle.n));
    std::iota(id.begin(), id.end(), 0);
    if (target_cycle.perm != id)
      throw std::invalid_argument("cycle benchmarking: target cycle must not permute qubits");
    if (depths.size() < 3) throw std::invalid_argument("cycle benchmarking: need at least three depths");
    for (int m : depths)
      if (m < 2 || m % 2 != 0) throw std::invalid_argument("cycle benchmarking: depths must be even and >= 2");
    const std::uint64_t full = std::uint64_t{1} << (2 * n());
    if (K < 1 || K > full) throw std::invalid_argument("cycle benchmarking: K outside [1, 4^n]");
    if (randomizations < 1) throw std::invalid_argument("cycle benchmarking: need at least one randomization");
    for (const auto& c : channels) check_pauli(c, n());
  }
};

struct DecayFit {
  std::string channel;
  double A = 0;
  double p = 0;
  double residual = 0;
};

/// One CB sequence together with what is needed to read its expectation.
struct CBSequence {
  Circuit circuit;
  bool clifford = true;
  std::string observable;  // measured Pauli after the correction layer
  double sign = 1;         // ideal expectation of `observable` is `sign`
  Matrix exact_observable; // non-Clifford cycles: V P V^dag on the final state
};

namespace detail {

inline Matrix gates_unitary(int n, const std::vector<Gate>& gs) { return circuit_unitary(circuit_from_gates(n, gs)); }

inline std::vector<Gate> cycle_gates(const Circuit& c) {
  std::vector<Gate> out;
  for (const auto& g : c.gates())
    if (g.kind != GateKind::MEASURE) out.push_back(g);
  return out;
}

}  // namespace detail

/// Builds one randomized CB sequence: preparation, m rounds of (Pauli twirl,
/// cycle), a Pauli correction that closes the frame, basis rotation and
/// measurement. `reference` leaves the cycle empty.
inline CBSequence build_cb_sequence(const CBConfig& cfg, const std::string& channel, int m, std::uint64_t seed,
                                    bool reference = false) {
  const int n = cfg.n();
  check_pauli(channel, n);
  if (channel.find_first_not_of('I') == std::string::npos)
    throw std::invalid_argument("cycle benchmarking: all-identity channel carries no signal");
  if (m < 0) throw std::invalid_argument("cycle benchmarking: negative depth");
  const std::vector<Gate> cycle = reference ? std::vector<Gate>{} : detail::cycle_gates(cfg.target_cycle);

  Rng rng(seed);
  std::vector<Gate> prep, body;
  for (int q = 0; q < n; ++q) detail::append(prep, prep_gates(channel[static_cast<std::size_t>(q)], q));
  for (int r = 0; r < m; ++r) {
    for (int q = 0; q < n; ++q) detail::append(body, pauli_gates("IXYZ"[rng.below(4)], q));
    detail::append(body, cycle);
  }

  const Matrix v = detail::gates_unitary(n, body);
  Matrix cm = Matrix::identity(std::size_t{1} << n);
  const Matrix c1 = detail::gates_unitary(n, cycle);
  for (int r = 0; r < m; ++r) cm = c1 * cm;

  CBSequence seq;
  const Matrix p = pauli_matrix(channel);
  const auto frame = as_pauli(v * cm.adjoint(), n);
  const auto image = as_pauli(cm * p * cm.adjoint(), n);
  if (frame && image) {
    // V = R C^m, so appending R undoes the twirl frame and leaves C^m.
    for (int q = 0; q < n; ++q) detail::append(body, pauli_gates(frame->first[static_cast<std::size_t>(q)], q));
    seq.observable = image->first;
    seq.sign = image->second.real() >= 0 ? 1.0 : -1.0;
    for (int q = 0; q < n; ++q)
      detail::append(body, measure_basis_gates(seq.observable[static_cast<std::size_t>(q)], q));
  } else {
    seq.clifford = false;
    seq.observable = channel;
    seq.exact_observable = v * p * v.adjoint();
  }
  std::vector<Gate> all = prep;
  detail::append(all, body);
  CircuitBuilder b(n);
  b.add_all(all).add(Gate::measure_all(n));
  seq.circuit = b.build();
  return seq;
}

inline Circuit build_cb_circuit(const CBConfig& cfg, const std::string& channel, int m, std::uint64_t seed,
                                bool reference = false) {
  return build_cb_sequence(cfg, channel, m, seed, reference).circuit;
}

/// Signed parity of the observable's support over a distribution.
inline double parity_expectation(const Distribution& d, const std::string& observable) {
  std::size_t mask = 0;
  for (int q = 0; q < d.n; ++q)
    if (observable[static_cast<std::size_t>(q)] != 'I') mask |= std::size_t{1} << qubit_shift(d.n, q);
  double e = 0;
  for (std::size_t i = 0; i < d.p.size(); ++i) e += (std::popcount(i & mask) % 2 ? -1.0 : 1.0) * d.p[i];
  return e;
}

/// Noisy expectation of a CB sequence, normalized so the ideal value is +1.
inline double cb_expectation(const CBSequence& seq, const NoiseModel& noise, std::uint64_t shots,
                             std::uint64_t shot_seed) {
  if (!seq.clifford) {
    if (shots > 0) throw std::invalid_argument("cycle benchmarking: shot sampling needs a Clifford cycle");
    const DensityState s = evolve_noisy(seq.circuit, noise);
    const Matrix& rho = s.matrix();
    cplx t = 0;
    for (std::size_t i = 0; i < rho.dim(); ++i)
      for (std::size_t j = 0; j < rho.dim(); ++j) t += rho(i, j) * seq.exact_observable(j, i);
    return t.real();
  }
  Distribution d = simulate_noisy(seq.circuit, noise);
  if (shots > 0) {
    const Counts c = sample_counts(d, shots, shot_seed);
    std::fill(d.p.begin(), d.p.end(), 0.0);
    for (const auto& [k, v] : c.hist) d.p[bitstring_index(k)] = static_cast<double>(v) / static_cast<double>(shots);
  }
  return seq.sign * parity_expectation(d, seq.observable);
}

/// Least-squares fit of A p^m: log-linear start, then Levenberg-Marquardt.
inline DecayFit fit_decay(const std::vector<std::pair<double, double>>& points) {
  std::vector<double> ms;
  for (const auto& [m, y] : points) ms.push_back(m);
  std::sort(ms.begin(), ms.end());
  if (std::unique(ms.begin(), ms.end()) - ms.begin() < 3) throw std::invalid_argument("fit_decay: need three distinct depths");
  bool any = false;
  for (const auto& [m, y] : points) any = any || y != 0.0;
  if (!any) throw std::invalid_argument("fit_decay: all expectations are zero");

  // Log-linear regression on |y|.
  double sx = 0, sy = 0, sxx = 0, sxy = 0, cnt = 0, ysum = 0;
  for (const auto& [m, y] : points) {
    ysum += y;
    if (std::abs(y) < 1e-300) continue;
    const double l = std::log(std::abs(y));
    sx += m, sy += l, sxx += m * m, sxy += m * l, cnt += 1;
  }
  double A = ysum >= 0 ? 1.0 : -1.0, p = 1.0;
  if (cnt >= 2 && cnt * sxx - sx * sx > 0) {
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / cnt;
    A *= std::exp(icpt);
    p = std::exp(slope);
  }
  p = std::clamp(p, 0.0, 1.0);

  auto sse = [&](double a, double b) {
    double s = 0;
    for (const auto& [m, y] : points) {
      const double r = a * std::pow(b, m) - y;
      s += r * r;
    }
    return s;
  };
  double lambda = 1e-3, cur = sse(A, p);
  for (int it = 0; it < 200 && cur > 0; ++it) {
    double jaa = 0, jap = 0, jpp = 0, ga = 0, gp = 0;
    for (const auto& [m, y] : points) {
      const double pm = std::pow(p, m);
      const double da = pm, dp = m == 0 ? 0.0 : A * m * std::pow(p, m - 1);
      const double r = A * pm - y;
      jaa += da * da, jap += da * dp, jpp += dp * dp, ga += da * r, gp += dp * r;
    }
    bool improved = false;
    while (lambda < 1e12) {
      const double a11 = jaa * (1 + lambda), a22 = jpp * (1 + lambda), det = a11 * a22 - jap * jap;
      if (det == 0) {
        lambda *= 10;
        continue;
      }
      const double dA = -(a22 * ga - jap * gp) / det, dP = -(a11 * gp - jap * ga) / det;
      const double nA = A + dA, nP = std::clamp(p + dP, 0.0, 1.0);
      const double nxt = sse(nA, nP);
      if (nxt < cur) {
        const double rel = (cur - nxt) / std::max(cur, 1e-300);
        A = nA, p = nP, cur = nxt, lambda = std::max(lambda / 10, 1e-12);
        improved = rel > 1e-15;
        break;
      }
      lambda *= 10;
    }
    if (!improved) break;
  }
  DecayFit f;
  f.A = A;
  f.p = p;
  f.residual = std::sqrt(cur / static_cast<double>(points.size()));
  return f;
}

/// Mean decay parameter over the fitted channels.
inline double process_fidelity(const std::vector<DecayFit>& fits) {
  if (fits.empty()) throw std::invalid_argument("process_fidelity: no fits");
  double s = 0;
  for (const auto& f : fits) s += f.p;
  return s / static_cast<double>(fits.size());
}

/// Target-cycle infidelity from dressed and reference fidelities:
/// ((d - 1) / d) (1 - F_D / F_I) with d = 2^n.
inline double interleaved_infidelity(double F_D, double F_I, int n) {
  if (F_I == 0.0) throw std::invalid_argument("interleaved_infidelity: F_I is zero");
  if (F_I < 0 || F_I > 1 || F_D < 0 || F_D > 1)
    throw std::invalid_argument("interleaved_infidelity: fidelities must lie in [0, 1]");
  const double d = std::ldexp(1.0, n);
  return (d - 1) / d * (1 - F_D / F_I);
}

/// Average gate infidelity from process infidelity: e_F d / (d + 1).
inline double process_to_average_infidelity(double e_F, int n) {
  const double d = std::ldexp(1.0, n);
  return e_F * d / (d + 1);
}

struct CBReport {
  double e_D = 0, e_I = 0, e_T = 0;
  std::vector<DecayFit> dressed, reference;
  bool negative() const { return e_T < 0; }
};

/// K distinct non-identity channels, sampled uniformly.
inline std::vector<std::string> sample_channels(int n, std::size_t K, std::uint64_t seed) {
  const std::uint64_t full = std::uint64_t{1} << (2 * n);
  std::vector<std::uint64_t> idx(full - 1);
  std::iota(idx.begin(), idx.end(), 1);
  Rng rng(seed);
  rng.shuffle(idx);
  idx.resize(std::min<std::size_t>(K, idx.size()));
  std::sort(idx.begin(), idx.end());
  std::vector<std::string> out;
  for (auto k : idx) out.push_back(pauli_from_index(k, n));
  return out;
}

inline std::vector<DecayFit> run_cb_campaign(const CBConfig& cfg, const NoiseModel& noise,
                                             const std::vector<std::string>& channels, bool reference) {
  std::vector<DecayFit> fits;
  for (std::size_t c = 0; c < channels.size(); ++c) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t di = 0; di < cfg.depths.size(); ++di) {
      double mean = 0;
      for (std::size_t r = 0; r < cfg.randomizations; ++r) {
        // Dressed and reference runs share twirl seeds.
        const std::uint64_t s = derive_seed(derive_seed(derive_seed(cfg.seed, c), di), r);
        const CBSequence seq = build_cb_sequence(cfg, channels[c], cfg.depths[di], s, reference);
        mean += cb_expectation(seq, noise, cfg.shots, derive_seed(s, reference ? 2 : 1));
      }
      pts.emplace_back(static_cast<double>(cfg.depths[di]), mean / static_cast<double>(cfg.randomizations));
    }
    DecayFit f = fit_decay(pts);
    f.channel = channels[c];
    fits.push_back(f);
  }
  return fits;
}

inline CBReport run_cb(const CBConfig& cfg, const NoiseModel& noise) {
  cfg.check();
  noise.check();
  const int n = cfg.n();
  const std::vector<std::string> channels =
      cfg.channels.empty() ? sample_channels(n, std::min<std::size_t>(cfg.K, (std::size_t{1} << (2 * n)) - 1), cfg.seed)
                           : cfg.channels;
  CBReport rep;
  rep.dressed = run_cb_campaign(cfg, noise, channels, false);
  rep.reference = run_cb_campaign(cfg, noise, channels, true);
  const double F_D = process_fidelity(rep.dressed), F_I = process_fidelity(rep.reference);
  rep.e_D = 1 - F_D;
  rep.e_I = 1 - F_I;
  rep.e_T = interleaved_infidelity(F_D, F_I, n);
  return rep;
}

}  // namespace fswap
