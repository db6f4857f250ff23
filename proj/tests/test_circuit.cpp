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

#include <gtest/gtest.h>

#include <random>

#include "fswap/circuit.hpp"
#include "fswap/decompositions.hpp"

namespace fswap {
namespace {

Circuit random_circuit(int n, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 5), wire(0, n - 1);
  std::uniform_real_distribution<double> ang(0, kTwoPi);
  CircuitBuilder b(n);
  for (int i = 0; i < len; ++i) {
    const int q = wire(rng);
    const int a = std::min(q, n - 2);
    switch (kind(rng)) {
      case 0: b.add(Gate::x90(q)); break;
      case 1:
      case 2: b.add(Gate::vz(q, ang(rng))); break;
      case 3: b.add(Gate::cz(a, a + 1)); break;
      case 4: b.add(Gate::cs(a, a + 1)); break;
      default: b.add(Gate::cphase(a, a + 1, ang(rng))); break;
    }
  }
  return b.build();
}

TEST(GateTest, VzAngleIsNormalized) {
  EXPECT_NEAR(Gate::vz(0, -kPi / 2).angle, 3 * kPi / 2, 1e-15);
  EXPECT_NEAR(Gate::vz(0, 5 * kPi).angle, kPi, 1e-12);
  EXPECT_GE(Gate::vz(0, -1e-18).angle, 0.0);
  EXPECT_LT(Gate::vz(0, -1e-18).angle, kTwoPi);
}

TEST(GateTest, NamesRoundTrip) {
  for (GateKind k : {GateKind::X90, GateKind::VZ, GateKind::CZ, GateKind::CS, GateKind::CSD,
                     GateKind::CPHASE, GateKind::MEASURE})
    EXPECT_EQ(gate_kind_from_name(gate_name(k)), k);
  EXPECT_FALSE(gate_kind_from_name("cnot").has_value());
}

TEST(CircuitTest, BuilderPacksAsap) {
  CircuitBuilder b(3);
  b.add(Gate::x90(0)).add(Gate::x90(2)).add(Gate::cz(0, 1)).add(Gate::x90(2));
  const Circuit c = b.build();
  ASSERT_EQ(c.moments.size(), 2u);
  EXPECT_EQ(c.moments[0].size(), 2u);
  EXPECT_EQ(c.moments[1].size(), 2u);
  EXPECT_NO_THROW(validate(c));
}

TEST(CircuitTest, RejectsBadOperands) {
  CircuitBuilder b(3);
  EXPECT_THROW(b.add(Gate::cz(0, 2)), std::invalid_argument);
  EXPECT_THROW(b.add(Gate::cz(1, 1)), std::invalid_argument);
  EXPECT_THROW(b.add(Gate::x90(3)), std::invalid_argument);
  CircuitBuilder r(3);
  r.set_ring(true);
  EXPECT_NO_THROW(r.add(Gate::cz(0, 2)));
}

TEST(CircuitTest, ValidateCatchesMomentCollisionAndBadPerm) {
  Circuit c(2);
  c.moments.push_back({Gate::x90(0), Gate::vz(0, 1.0)});
  EXPECT_THROW(validate(c), std::invalid_argument);
  Circuit d(2);
  d.perm = {0, 0};
  EXPECT_THROW(validate(d), std::invalid_argument);
}

TEST(UnitaryTest, SingleVz) {
  const Matrix u = circuit_unitary(circuit_from_gates(1, {Gate::vz(0, 0.4)}));
  EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 1) - expi(0.4)), 0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 1)), 0, 1e-15);
}

TEST(UnitaryTest, EmptyCircuitIsIdentity) {
  EXPECT_LT(circuit_unitary(Circuit(2)).max_abs_diff(Matrix::identity(4)), 1e-15);
}

TEST(UnitaryTest, RejectsTooManyQubits) { EXPECT_THROW(circuit_unitary(Circuit(13)), ResourceError); }

TEST(UnitaryTest, QubitZeroIsMostSignificant) {
  // X on qubit 0 of two maps |00> to |10> (index 2).
  const Matrix u = circuit_unitary(circuit_from_gates(2, {Gate::x90(0), Gate::x90(0)}));
  EXPECT_NEAR(std::abs(u(2, 0)), 1.0, 1e-12);
}

TEST(UnitaryTest, OptimizedSwapIsSwap) {
  EXPECT_TRUE(unitary_equiv(circuit_unitary(swap_decomposition(true)), swap_matrix()));
}

TEST(UnitaryTest, EquivIgnoresGlobalPhase) {
  std::mt19937_64 rng(3);
  const Matrix u = circuit_unitary(random_circuit(3, 30, rng));
  EXPECT_TRUE(unitary_equiv(u, expi(kPi / 7) * u));
  EXPECT_FALSE(unitary_equiv(Matrix::identity(4), swap_matrix()));
  EXPECT_THROW(unitary_equiv(Matrix::identity(4), Matrix::identity(2)), std::invalid_argument);
}

TEST(UnitaryTest, ControlledPhaseAliases) {
  const Matrix cz = circuit_unitary(circuit_from_gates(2, {Gate::cz(0, 1)}));
  const Matrix cp = circuit_unitary(circuit_from_gates(2, {Gate::cphase(0, 1, kPi)}));
  const Matrix cs = circuit_unitary(circuit_from_gates(2, {Gate::cs(0, 1)}));
  const Matrix cph = circuit_unitary(circuit_from_gates(2, {Gate::cphase(0, 1, kPi / 2)}));
  const Matrix csd = circuit_unitary(circuit_from_gates(2, {Gate::csd(0, 1)}));
  const Matrix cpm = circuit_unitary(circuit_from_gates(2, {Gate::cphase(0, 1, -kPi / 2)}));
  EXPECT_TRUE(unitary_equiv(cz, cp));
  EXPECT_TRUE(unitary_equiv(cs, cph));
  EXPECT_TRUE(unitary_equiv(csd, cpm));
  EXPECT_LT(cz.max_abs_diff(cphase_matrix(kPi)), 1e-15);
}

TEST(UnitaryTest, MomentOrderDoesNotMatter) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_circuit(4, 40, rng);
    const Matrix u = circuit_unitary(c);
    for (auto& m : c.moments) std::reverse(m.begin(), m.end());
    EXPECT_LT(circuit_unitary(c).max_abs_diff(u), 1e-12);
  }
}

TEST(UnitaryTest, PermutationUnitaryMovesBits) {
  const Matrix p = permutation_unitary({1, 0});
  EXPECT_LT(p.max_abs_diff(swap_matrix()), 1e-15);
  const Matrix r = permutation_unitary({2, 0, 1});
  // logical qubit 0 set (|100>) ends on physical qubit 2 (|001>).
  EXPECT_NEAR(std::abs(r(1, 4)), 1.0, 1e-15);
}

TEST(MergeTest, AnnihilatesOppositePhases) {
  const Circuit c = circuit_from_gates(1, {Gate::vz(0, kPi / 3), Gate::vz(0, -kPi / 3)});
  EXPECT_EQ(merge_virtual_phases(c).gate_count(), 0u);
}

TEST(MergeTest, CommutesThroughEntangler) {
  const Circuit c = circuit_from_gates(2, {Gate::vz(0, 0.3), Gate::cz(0, 1), Gate::vz(0, 0.5)});
  const std::vector<Gate> want{Gate::cz(0, 1), Gate::vz(0, 0.8)};
  EXPECT_EQ(merge_virtual_phases(c).gates(), want);
}

TEST(MergeTest, StandardHadamardPairIsIdentity) {
  CircuitBuilder b(1);
  b.add_all(hadamard(false).gates()).add_all(hadamard(false).gates());
  const Circuit m = merge_virtual_phases(b.build());
  EXPECT_TRUE(unitary_equiv(circuit_unitary(m), Matrix::identity(2)));
  EXPECT_EQ(cost_report(m).x90_total, 4u);
}

TEST(MergeTest, PreservesUnitaryOnRandomCircuits) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = random_circuit(3, 40, rng);
    const Circuit m = merge_virtual_phases(c);
    EXPECT_TRUE(unitary_equiv(circuit_unitary(m), circuit_unitary(c)));
    EXPECT_EQ(cost_report(m).x90_total, cost_report(c).x90_total);
    for (const auto& g : m.gates()) {
      if (g.kind == GateKind::VZ) {
        EXPECT_FALSE(angle_is_zero(g.angle));
      }
    }
  }
}

TEST(CostTest, EmptyCircuit) {
  const CostReport r = cost_report(Circuit(3));
  EXPECT_EQ(r.x90_total, 0u);
  EXPECT_EQ(r.x90_critical_path, 0u);
  EXPECT_EQ(r.two_qubit_total(), 0u);
  EXPECT_EQ(r.duration_ns, 0.0);
  EXPECT_EQ(r.cz_equivalent_depth, 0.0);
}

TEST(CostTest, OptimizedSwap) {
  const CostReport r = cost_report(swap_decomposition(true));
  EXPECT_EQ(r.x90_total, 6u);
  EXPECT_EQ(r.x90_critical_path, 3u);
  EXPECT_EQ(r.count(GateKind::CZ), 3u);
  EXPECT_DOUBLE_EQ(r.duration_ns, 3 * 30.0 + 3 * 200.0);
  EXPECT_DOUBLE_EQ(r.cz_equivalent_depth, 3.0);
}

TEST(CostTest, ThreeCzFermionicSwapByHand) {
  // Wire 1 carries X90 before the first CZ and after the last; wire 0 does not.
  // Critical path: 30 + 200 + 30 + 200 + 30 + 200 + 30 = 720 ns.
  const CostReport r = cost_report(fswap_cz3(1.1));
  EXPECT_EQ(r.x90_total, 6u);
  EXPECT_EQ(r.count(GateKind::CZ), 3u);
  EXPECT_EQ(r.x90_critical_path, 4u);
  EXPECT_DOUBLE_EQ(r.duration_ns, 720.0);
}

TEST(CostTest, CphaseDurationScalesWithAngle) {
  const CostReport r = cost_report(circuit_from_gates(2, {Gate::cphase(0, 1, kPi / 2)}));
  EXPECT_DOUBLE_EQ(r.duration_ns, 100.0);
  EXPECT_DOUBLE_EQ(r.cz_equivalent_depth, 0.5);
}

TEST(CostTest, UnknownDurationThrows) {
  DurationMap d = default_durations();
  d.erase(GateKind::CS);
  EXPECT_THROW(cost_report(circuit_from_gates(2, {Gate::cs(0, 1)}), d), std::invalid_argument);
}

TEST(CostTest, CriticalPathNeverExceedsTotal) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const CostReport r = cost_report(random_circuit(4, 50, rng));
    EXPECT_LE(r.x90_critical_path, r.x90_total);
    EXPECT_GE(r.duration_ns, 0.0);
  }
}

TEST(CircuitTest, ConcatComposesPermutations) {
  const Circuit s = swap_decomposition(true);
  const Circuit ss = concat(s, s);
  EXPECT_EQ(ss.perm, (std::vector<int>{0, 1}));
  EXPECT_TRUE(unitary_equiv(circuit_unitary(ss), Matrix::identity(4)));
  EXPECT_TRUE(unitary_equiv(logical_unitary(s), Matrix::identity(4)));
}

}  // namespace
}  // namespace fswap
