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

#include <algorithm>
#include <numeric>

#include "fswap/benchmarking.hpp"
#include "fswap/eca.hpp"
#include "fswap/qaoa.hpp"

namespace fswap {
namespace {

Program sample_program(int n, std::uint64_t seed) {
  return qaoa_program(sample_sk_instance(n, seed), sample_qaoa_params(1, seed + 1, 0.5));
}

TEST(EnsembleTest, SingleMember) {
  const Ensemble e = generate_ensemble(sample_program(4, 1), GatesetConfig::with_cs(), 1, 7);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.seeds.front(), derive_seed(7, 0));
  EXPECT_EQ(distinct_members(e), 1u);
}

TEST(EnsembleTest, RejectsEmpty) {
  EXPECT_THROW(generate_ensemble(sample_program(4, 1), GatesetConfig::with_cs(), 0, 7), std::invalid_argument);
}

TEST(EnsembleTest, MembersVaryButAgree) {
  const Program prog = sample_program(4, 2);
  const Ensemble e = generate_ensemble(prog, GatesetConfig::with_cs(), 20, 11);
  ASSERT_EQ(e.size(), 20u);
  EXPECT_GE(distinct_members(e), 2u);
  const Distribution ref = simulate_ideal(e.members.front());
  const int x90 = cost_report(e.members.front()).x90_critical_path;
  for (const auto& c : e.members) {
    EXPECT_LT(tvd(simulate_ideal(c), ref), 1e-9);
    EXPECT_EQ(cost_report(c).x90_critical_path, x90);
  }
}

TEST(EnsembleTest, NoisyMembersDiffer) {
  const Ensemble e = generate_ensemble(sample_program(4, 3), GatesetConfig::with_cs(), 20, 5);
  std::vector<Distribution> ds;
  for (const auto& c : e.members) ds.push_back(simulate_noisy(c, NoiseModel::desk_default()));
  double worst = 0;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) worst = std::max(worst, tvd(ds[i], ds[j]));
  EXPECT_GT(worst, 0.0);
}

TEST(EnsembleTest, DeterministicPerMasterSeed) {
  const Program prog = sample_program(4, 4);
  const Ensemble a = generate_ensemble(prog, GatesetConfig::with_cs(), 5, 99);
  const Ensemble b = generate_ensemble(prog, GatesetConfig::with_cs(), 5, 99);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.seeds, b.seeds);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(structural_key(a.members[k]), structural_key(b.members[k]));
}

TEST(EnsembleTest, NetworkOverload) {
  const std::vector<NetworkGate> net{{0, {0, 1}, 0.4, {0, 1}}, {1, {1, 2}, 1.3, {0, 2}}, {2, {0, 1}, 2.0, {1, 2}}};
  const Ensemble e = generate_ensemble(3, net, GatesetConfig::with_cs(), 6, 1);
  const Matrix u = circuit_unitary(e.members.front());
  for (const auto& c : e.members) EXPECT_TRUE(unitary_equiv(circuit_unitary(c), u));
}

TEST(SpotCheckTest, DetectsDifference) {
  Circuit a = circuit_from_gates(2, {Gate::cz(0, 1)});
  Circuit b = circuit_from_gates(2, {Gate::cs(0, 1)});
  EXPECT_TRUE(spot_check_equivalent(a, a, 1));
  EXPECT_FALSE(spot_check_equivalent(a, b, 1));
}

TEST(AllocateShotsTest, Examples) {
  EXPECT_EQ(allocate_shots(10000, 20), std::vector<std::uint64_t>(20, 500));
  EXPECT_EQ(allocate_shots(10, 3), (std::vector<std::uint64_t>{4, 3, 3}));
  EXPECT_EQ(allocate_shots(5, 5), std::vector<std::uint64_t>(5, 1));
  const auto v = allocate_shots(10007, 20);
  EXPECT_EQ(std::accumulate(v.begin(), v.end(), std::uint64_t{0}), 10007u);
}

TEST(AllocateShotsTest, Errors) {
  EXPECT_THROW(allocate_shots(3, 5), std::invalid_argument);
  EXPECT_THROW(allocate_shots(3, 0), std::invalid_argument);
}

TEST(UnionTest, Example) {
  Counts a{2, 4, {{"00", 3}, {"11", 1}}};
  Counts b{2, 4, {{"00", 1}, {"01", 3}}};
  const Distribution d = union_distribution({a, b});
  EXPECT_DOUBLE_EQ(d.p[0], 0.5);
  EXPECT_DOUBLE_EQ(d.p[1], 0.375);
  EXPECT_DOUBLE_EQ(d.p[3], 0.125);
}

TEST(UnionTest, MatchesConcatenatedSamples) {
  Distribution d1{2, {0.1, 0.2, 0.3, 0.4}}, d2{2, {0.7, 0.1, 0.1, 0.1}};
  const Counts a = sample_counts(d1, 300, 1), b = sample_counts(d2, 200, 2);
  std::map<std::string, double> merged;
  for (const Counts* c : {&a, &b})
    for (const auto& [k, v] : c->hist) merged[k] += static_cast<double>(v);
  const Distribution u = union_distribution({a, b});
  for (std::size_t i = 0; i < 4; ++i) {
    const auto it = merged.find(bitstring(i, 2));
    EXPECT_DOUBLE_EQ(u.p[i], it == merged.end() ? 0.0 : it->second / 500.0);
  }
}

TEST(UnionTest, Errors) {
  EXPECT_THROW(union_distribution({}), std::invalid_argument);
  Counts a{2, 1, {{"00", 1}}};
  Counts b{3, 1, {{"000", 1}}};
  EXPECT_THROW(union_distribution({a, b}), std::invalid_argument);
}

TEST(MixtureTest, WeightedAverage) {
  Distribution d1{1, {1, 0}}, d2{1, {0, 1}};
  const Distribution m = mixture_distribution({d1, d2}, {3, 1});
  EXPECT_DOUBLE_EQ(m.p[0], 0.75);
  EXPECT_DOUBLE_EQ(m.p[1], 0.25);
}

}  // namespace
}  // namespace fswap
