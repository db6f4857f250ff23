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

#include <vector>

#include "fswap/circuit.hpp"
#include "fswap/decompositions.hpp"
#include "fswap/network.hpp"
#include "fswap/scheduler.hpp"
#include "fswap/synthesis.hpp"

namespace fswap {

/// Full QAOA circuit for an SK instance, with every fermionic SWAP decomposed
/// and scheduled under `policy`.
inline Circuit build_qaoa_circuit(const SKModel& model, const QAOAParams& params, const GatesetConfig& gs,
                                  SchedulePolicy policy = {}) {
  return schedule_program(qaoa_program(model, params), gs, policy).circuit;
}

/// Unoptimized reference compilation: textbook CX-based fermionic SWAPs, the
/// two-pulse Hadamard and a five-gate mixer, with virtual phases merged.
inline Circuit build_standard_circuit(const SKModel& model, const QAOAParams& params) {
  const Program prog = qaoa_program(model, params);
  CircuitBuilder b(prog.n);
  for (const auto& s : prog.steps) {
    if (s.gate) {
      const auto [a, c] = s.gate->pair;
      for (Gate g : family_gates(Family::Qasm, s.gate->theta)) {
        if (is_two_qubit(g.kind)) g.qubits = {a, c};
        else g.qubits[0] = g.qubits[0] == 0 ? a : c;
        b.add(std::move(g));
      }
    } else {
      for (int q = 0; q < prog.n; ++q) {
        const auto& m = s.layer[static_cast<std::size_t>(q)];
        if (!m) continue;
        if (mat2_equiv(*m, gates::hadamard())) b.add_all(detail::hadamard_gates(q, false));
        else b.add_all(eq1_gates(q, synthesize_su2(*m)));
      }
    }
  }
  b.set_perm(prog.perm);
  b.add(Gate::measure_all(prog.n));
  return merge_virtual_phases(b.build());
}

}  // namespace fswap
