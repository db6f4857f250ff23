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

#include <set>

#include "fswap/network.hpp"
#include "fswap/qaoa.hpp"

namespace fswap {
namespace {

TEST(LayoutTest, FourQubits) {
  const NetworkLayout l = swap_network_layout(4);
  using P = std::pair<int, int>;
  const std::vector<std::vector<P>> want{{{0, 1}, {2, 3}}, {{1, 2}}, {{0, 1}, {2, 3}}, {{1, 2}}};
  EXPECT_EQ(l.layers, want);
  EXPECT_EQ(l.perm, (std::vector<int>{3, 2, 1, 0}));
}

TEST(LayoutTest, LogicalInteractionOrderForFourQubits) {
  SKModel m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m.set(i, j, 1);
  const Program p = qaoa_program(m, {1, {0.5}, {0.2}});
  std::vector<std::pair<int, int>> got;
  for (const auto& g : p.gates()) got.emplace_back(std::min(g.logical_pair.first, g.logical_pair.second),
                                                   std::max(g.logical_pair.first, g.logical_pair.second));
  const std::vector<std::pair<int, int>> want{{0, 1}, {2, 3}, {0, 3}, {1, 3}, {0, 2}, {1, 2}};
  EXPECT_EQ(got, want);
}

TEST(LayoutTest, TwoQubits) {
  const NetworkLayout l = swap_network_layout(2);
  ASSERT_EQ(l.layers.size(), 1u);
  EXPECT_EQ(l.layers[0], (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_EQ(l.perm, (std::vector<int>{1, 0}));
  EXPECT_THROW(swap_network_layout(1), std::invalid_argument);
}

TEST(LayoutTest, CoversEveryPairOnce) {
  for (int n = 2; n <= 9; ++n) {
    const NetworkLayout l = swap_network_layout(n);
    if (n > 2) {
      EXPECT_EQ(l.layers.size(), static_cast<std::size_t>(n));
    }
    std::vector<int> where(static_cast<std::size_t>(n));
    std::iota(where.begin(), where.end(), 0);
    std::set<std::pair<int, int>> seen;
    std::size_t total = 0;
    for (const auto& layer : l.layers)
      for (const auto& [i, j] : layer) {
        const int a = where[static_cast<std::size_t>(i)], b = where[static_cast<std::size_t>(j)];
        seen.emplace(std::min(a, b), std::max(a, b));
        ++total;
        std::swap(where[static_cast<std::size_t>(i)], where[static_cast<std::size_t>(j)]);
      }
    EXPECT_EQ(total, static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(seen.size(), total);
    EXPECT_EQ(perm_from_positions(where), l.perm);
  }
}

TEST(SamplingTest, SkDeterministicAndSigned) {
  EXPECT_EQ(sample_sk_instance(4, 7), sample_sk_instance(4, 7));
  const SKModel m = sample_sk_instance(4, 7);
  int count = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      EXPECT_TRUE(m.coupling(i, j) == 1 || m.coupling(i, j) == -1);
      EXPECT_EQ(m.coupling(i, j), m.coupling(j, i));
      ++count;
    }
  EXPECT_EQ(count, 6);
  EXPECT_NO_THROW(m.check());
}

TEST(SamplingTest, SkCouplingMeanIsZero) {
  double sum = 0;
  const int seeds = 10000;
  for (int s = 0; s < seeds; ++s) sum += sample_sk_instance(2, static_cast<std::uint64_t>(s)).coupling(0, 1);
  // Binomial: standard deviation of the sum is sqrt(seeds).
  EXPECT_LE(std::abs(sum), 3.0 * std::sqrt(seeds));
}

TEST(SamplingTest, ParamsRegionFraction) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    for (double g : sample_qaoa_params(3, s, 1.0).gamma) EXPECT_TRUE(in_cs_region(g));
    for (double g : sample_qaoa_params(3, s, 0.0).gamma) EXPECT_FALSE(in_cs_region(g));
  }
  int inside = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) inside += in_cs_region(sample_qaoa_params(1, s, 0.5).gamma[0]);
  EXPECT_LE(std::abs(inside - 500), 3.0 * std::sqrt(250.0));
  const QAOAParams q = sample_qaoa_params(2, 3, 0.5);
  for (double b : q.beta) EXPECT_TRUE(b >= 0 && b < kTwoPi);
  EXPECT_THROW(sample_qaoa_params(1, 0, 1.5), std::invalid_argument);
}

TEST(QaoaTest, TwoQubitStructure) {
  const SKModel m = sample_sk_instance(2, 1);
  const QAOAParams q{1, {0.3}, {0.9}};
  const Program p = qaoa_program(m, q);
  ASSERT_EQ(p.gate_count(), 1u);
  EXPECT_NEAR(p.gates()[0].theta, 0.3 * m.coupling(0, 1), 1e-15);
  const Circuit c = build_qaoa_circuit(m, q, GatesetConfig::cz_only());
  EXPECT_TRUE(c.measured());
  EXPECT_EQ(c.perm, (std::vector<int>{1, 0}));
  EXPECT_TRUE(unitary_equiv(circuit_unitary(c), program_unitary(p)));
}

TEST(QaoaTest, FourQubitTwoStages) {
  const SKModel m = sample_sk_instance(4, 5);
  const QAOAParams q = sample_qaoa_params(2, 5, 0.5);
  const Program p = qaoa_program(m, q);
  EXPECT_EQ(p.gate_count(), 12u);
  EXPECT_EQ(p.perm, (std::vector<int>{0, 1, 2, 3}));
  // The second stage meets the same logical pairs in the reversed frame.
  const auto gs = p.gates();
  EXPECT_EQ(gs[6].logical_pair, std::make_pair(3, 2));
  for (const auto& g : {GatesetConfig::cz_only(), GatesetConfig::with_cs()}) {
    const Circuit c = build_qaoa_circuit(m, q, g);
    EXPECT_TRUE(unitary_equiv(circuit_unitary(c), program_unitary(p)));
  }
  const Circuit s = build_standard_circuit(m, q);
  EXPECT_TRUE(unitary_equiv(circuit_unitary(s), program_unitary(p)));
}

TEST(QaoaTest, StageParityOfPermutation) {
  const SKModel m = sample_sk_instance(5, 2);
  for (int p = 1; p <= 3; ++p) {
    const Program prog = qaoa_program(m, sample_qaoa_params(p, 1, 0.5));
    EXPECT_EQ(prog.perm, (p % 2 ? reversal_perm(5) : std::vector<int>{0, 1, 2, 3, 4}));
  }
}

TEST(QaoaTest, RejectsMismatchedSizes) {
  const SKModel m = sample_sk_instance(3, 2);
  EXPECT_THROW(qaoa_program(m, {2, {0.1}, {0.2, 0.3}}), std::invalid_argument);
}

}  // namespace
}  // namespace fswap
