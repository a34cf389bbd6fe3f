// Copyright 2026 The ptqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTQG_SUITE_H
#define PTQG_SUITE_H

#include <string>
#include <vector>

#include "ptqg/circuit.h"

namespace ptqg {

struct NamedCircuit {
    std::string name;
    Circuit circuit;
};

/// Small circuits with known-correct feed-forward rules: linear chains of
/// 3-5 qubits, P1 assemblies (L=5) with one and two neighbor connections, a
/// single P2 arm with cherries and a small P2 assembly. All fit the tableau.
std::vector<NamedCircuit> builtin_suite();

/// Linear cluster 0-1-...-(n-1) with both ends kept as roots and every inner
/// qubit measured in X. n in [2, 5].
Circuit chain_circuit(size_t n);

}  // namespace ptqg

#endif
