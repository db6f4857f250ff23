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

// Cycle benchmarking of a single CZ and a single CS under the default noise
// model.

#include <cstdio>

#include "fswap/benchmarking.hpp"

int main() {
  using namespace fswap;
  for (const Gate& g : {Gate::cz(0, 1), Gate::cs(0, 1)}) {
    CBConfig cfg;
    cfg.target_cycle = circuit_from_gates(2, {g});
    cfg.K = 8;
    cfg.randomizations = 5;
    cfg.seed = 1;
    const CBReport r = run_cb(cfg, NoiseModel::desk_default());
    std::printf("%-3s e_D %.3e  e_I %.3e  e_T %.3e\n", std::string(gate_name(g.kind)).c_str(), r.e_D, r.e_I, r.e_T);
    for (const auto& f : r.dressed) std::printf("    %s  A %.4f  p %.5f\n", f.channel.c_str(), f.A, f.p);
  }
  return 0;
}
