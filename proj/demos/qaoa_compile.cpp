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

// Compiles one 4-qubit QAOA instance three ways and compares the noisy
// output distributions against the ideal one.

#include <cstdio>

#include "fswap/benchmarking.hpp"
#include "fswap/eca.hpp"
#include "fswap/qaoa.hpp"

int main() {
  using namespace fswap;
  const SKModel model = sample_sk_instance(4, 7);
  const QAOAParams params = sample_qaoa_params(1, 8, 0.5);
  const NoiseModel noise = NoiseModel::desk_default();

  const Circuit standard = build_standard_circuit(model, params);
  const Circuit optimized = build_qaoa_circuit(model, params, GatesetConfig::with_cs());
  const Ensemble ensemble = generate_ensemble(qaoa_program(model, params), GatesetConfig::with_cs(), 10, 9);

  const Distribution ideal = simulate_ideal(optimized);
  std::vector<Distribution> members;
  for (const auto& c : ensemble.members) members.push_back(simulate_noisy(c, noise));
  const Distribution mixed =
      mixture_distribution(members, std::vector<std::uint64_t>(members.size(), 1));

  auto row = [&](const char* name, const Circuit& c, double d) {
    const CostReport r = cost_report(c);
    std::printf("%-10s x90 critical path %3zu  duration %6.0f ns  TVD %.4f\n", name, r.x90_critical_path,
                r.duration_ns, d);
  };
  row("standard", standard, tvd(simulate_noisy(standard, noise), ideal));
  row("optimized", optimized, tvd(simulate_noisy(optimized, noise), ideal));
  row("ensemble", ensemble.members.front(), tvd(mixed, ideal));
  std::printf("%zu distinct members of %zu\n", distinct_members(ensemble), ensemble.size());
  return 0;
}
