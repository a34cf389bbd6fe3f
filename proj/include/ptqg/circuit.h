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

#ifndef PTQG_CIRCUIT_H
#define PTQG_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptqg/pauli.h"

namespace ptqg {

enum class EventKind : uint8_t {
    kPrepPlus,
    kCZ,
    kMeasX,
    kMeasZ,
};

struct CircuitEvent {
    EventKind kind;
    uint32_t a;
    uint32_t b;  // second CZ qubit; unused otherwise
    bool succeeded;  // CZ only; a failed CZ applies no gate

    bool is_measurement() const {
        return kind == EventKind::kMeasX || kind == EventKind::kMeasZ;
    }
    bool operator==(const CircuitEvent &) const = default;
};

enum class RuleKind : uint8_t {
    /// byproduct applied iff the single listed outcome is -1.
    kParity,
    /// byproduct applied iff a strict majority of the listed outcomes are -1.
    /// Used for the indirect Z-measurement decoder (tip + cherries).
    kMajority,
};

/// Feed-forward correction. Byproducts act on root qubits only.
struct CorrectionRule {
    RuleKind kind;
    std::vector<size_t> measurements;  // event indices
    PauliOp byproduct;

    bool operator==(const CorrectionRule &) const = default;
};

struct CzPartner {
    size_t event;
    uint32_t partner;
};

class Circuit;

/// Accumulates events and rules, then validates them into an immutable Circuit.
class CircuitBuilder {
   public:
    explicit CircuitBuilder(size_t num_qubits);

    size_t prep_plus(uint32_t q);
    size_t cz(uint32_t a, uint32_t b, bool succeeded = true);
    size_t measure_x(uint32_t q);
    size_t measure_z(uint32_t q);
    void mark_root(uint32_t q);
    void add_parity_rule(size_t measurement_event, PauliOp byproduct);
    void add_majority_rule(std::vector<size_t> measurement_events, PauliOp byproduct);
    /// A stabilizer of the intended post-correction root state (+1 eigenvalue).
    void add_target(PauliOp stabilizer);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_events() const {
        return events_.size();
    }

    /// Throws CircuitError naming the offending event on any invariant violation.
    Circuit build() &&;

   private:
    friend class Circuit;
    size_t n_;
    std::vector<CircuitEvent> events_;
    std::vector<uint32_t> roots_;
    std::vector<CorrectionRule> rules_;
    std::vector<PauliOp> targets_;
};

/// Ordered preparation / CZ / measurement sequence plus feed-forward rules.
///
/// Invariants (checked by CircuitBuilder::build):
///  - every qubit is prepared exactly once, before any gate or measurement on it;
///  - every non-root qubit is measured exactly once and never touched afterwards;
///  - roots are never measured;
///  - rules reference measurement events and correct roots only.
class Circuit {
   public:
    Circuit() = default;

    size_t num_qubits() const {
        return n_;
    }
    std::span<const CircuitEvent> events() const {
        return events_;
    }
    std::span<const CorrectionRule> rules() const {
        return rules_;
    }
    std::span<const PauliOp> targets() const {
        return targets_;
    }
    /// Sorted ascending.
    std::span<const uint32_t> roots() const {
        return roots_;
    }
    bool is_root(size_t q) const {
        return root_ordinal_[q] != kNone;
    }
    /// Position of q in roots(), or kNone.
    size_t root_ordinal(size_t q) const {
        return root_ordinal_[q];
    }
    size_t measurement_event(size_t q) const {
        return meas_event_[q];
    }
    size_t prep_event(size_t q) const {
        return prep_event_[q];
    }
    /// Successful CZs on q in event order.
    std::span<const CzPartner> cz_partners(size_t q) const {
        return cz_partners_[q];
    }
    /// Indices into rules() that read measurement event m.
    std::span<const size_t> rules_reading(size_t m) const {
        return rules_by_meas_[m];
    }
    size_t num_measurements() const {
        return num_measurements_;
    }

    static constexpr size_t kNone = SIZE_MAX;

   private:
    friend class CircuitBuilder;
    size_t n_ = 0;
    std::vector<CircuitEvent> events_;
    std::vector<CorrectionRule> rules_;
    std::vector<PauliOp> targets_;
    std::vector<uint32_t> roots_;
    std::vector<size_t> root_ordinal_;
    std::vector<size_t> meas_event_;
    std::vector<size_t> prep_event_;
    std::vector<std::vector<CzPartner>> cz_partners_;
    std::vector<std::vector<size_t>> rules_by_meas_;
    size_t num_measurements_ = 0;
};

/// A single Pauli fault. Faults on preparations and CZs act immediately after
/// the event; faults on measurements act immediately before it.
struct FaultLocation {
    size_t event;
    PauliOp pauli;
};

struct FaultEffect {
    /// Measurement event indices whose outcome is inverted, ascending.
    std::vector<size_t> flipped_outcomes;
    /// Pauli left on the roots after all feed-forward corrections.
    PauliOp residual;

    bool operator==(const FaultEffect &) const = default;
};

/// Pushes the fault through every later CZ, records which measurements it
/// flips, and composes the byproducts those flips trigger with the part of the
/// fault that reaches the roots. Deterministic.
FaultEffect propagate_fault(const Circuit &c, const FaultLocation &f);

/// Joint effect of several simultaneous faults. Flips combine by symmetric
/// difference before the correction rules are evaluated, so majority rules see
/// the combined flip pattern.
FaultEffect propagate_faults(const Circuit &c, std::span<const FaultLocation> faults);

enum class RootFlip : uint8_t {
    kNone,
    kFlip,  // residual carries Z or Y: flips the root's X-basis readout
    kBenign,  // residual is X only
};

RootFlip root_flip_class(const Circuit &c, const FaultEffect &effect, size_t root, bool count_benign_as_flip = false);

/// Every single-fault location: X/Y/Z after each preparation, the 15
/// non-identity two-qubit Paulis after each successful CZ, X/Y/Z before each
/// measurement. With `include_failed_cz`, failed CZs get the 15 as well.
std::vector<FaultLocation> enumerate_single_faults(const Circuit &c, bool include_failed_cz = false);

/// Line-oriented text form:
///   QUBITS n
///   P q | CZ a b ok|fail | MX q | MZ q        (one event per line, in order)
///   ROOT q
///   CORR m -> Z q | X q ...
///   VOTE m1 m2 m3 -> Z q
///   TARGET X q | Z q ...
/// '#' starts a comment line.
std::string dump_circuit(const Circuit &c);
Circuit parse_circuit(std::string_view text);

}  // namespace ptqg

#endif
