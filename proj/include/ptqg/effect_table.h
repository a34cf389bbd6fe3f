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

#ifndef PTQG_EFFECT_TABLE_H
#define PTQG_EFFECT_TABLE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ptqg/circuit.h"

namespace ptqg {

/// Root residual in root-ordinal bit masks.
struct RootMasks {
    uint64_t z = 0;
    uint64_t x = 0;

    bool operator==(const RootMasks &) const = default;
};

/// Precomputed propagation of X and Z on every qubit to the roots, with
/// parity corrections folded in. Majority-rule inputs are kept symbolic so
/// several components can be combined before the vote is taken.
///
/// Equivalent to propagate_faults() restricted to the roots, but each
/// evaluation costs O(number of majority inputs touched) instead of a pass over
/// the circuit. Supports at most 64 roots.
class EffectTable {
   public:
    explicit EffectTable(const Circuit &c);

    struct Component {
        RootMasks masks;
        std::vector<uint32_t> votes;  // majority-rule inputs flipped, ascending
    };

    const Circuit &circuit() const {
        return *c_;
    }

    /// Sum of single-qubit Pauli components, resolved on demand.
    class Accumulator {
       public:
        explicit Accumulator(const EffectTable &table) : t_(&table) {
        }
        /// Pauli `p` ('I','X','Y','Z') on qubit q at event `event` with the
        /// FaultLocation timing convention.
        void add(size_t event, uint32_t q, char p);
        /// Pauli on both qubits of a CZ event.
        void add_pair(size_t event, char pa, char pb);
        /// Z directly on a root's final readout.
        void add_root_z(size_t ordinal);
        void add_root_x(size_t ordinal);
        RootMasks resolve() const;
        void clear();

       private:
        void toggle_vote(uint32_t m);
        void add_component(const Component &comp);
        const EffectTable *t_;
        RootMasks masks_;
        std::vector<uint32_t> votes_;
        std::vector<uint32_t> scratch_;
    };

    /// Resolved root residual of a single fault.
    RootMasks evaluate(size_t event, uint32_t q, char p) const;
    RootMasks evaluate_pair(size_t event, char pa, char pb) const;

   private:
    friend class Accumulator;
    const Component &x_suffix(size_t event, uint32_t q) const;

    const Circuit *c_;
    std::vector<Component> z_;
    std::vector<Component> x_base_;
    // x_suffix_[q][k] = XOR of z_[partner] over the CZs of q from index k on.
    std::vector<std::vector<Component>> x_suffix_;
    std::vector<RootMasks> rule_masks_;
    std::vector<std::vector<size_t>> majority_rules_of_;  // by measurement event
};

}  // namespace ptqg

#endif
