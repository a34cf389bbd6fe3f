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

#ifndef PTQG_TABLEAU_H
#define PTQG_TABLEAU_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ptqg/circuit.h"
#include "ptqg/pauli.h"

namespace ptqg {

/// Aaronson-Gottesman stabilizer tableau (destabilizers, stabilizers and a
/// scratch row, all with tracked signs). Starts in |0...0>.
class Tableau {
   public:
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void h(size_t q);
    void cnot(size_t control, size_t target);
    void cz(size_t a, size_t b);
    /// Conjugates the state by a Pauli: flips the sign of every row that
    /// anticommutes with it.
    void apply_pauli(const PauliOp &p);

    bool is_deterministic_z(size_t q) const;
    /// Measures Z_q. If the outcome is random, `random_outcome` is used.
    /// Returns true for the -1 outcome.
    bool measure_z(size_t q, bool random_outcome);
    bool measure_x(size_t q, bool random_outcome);
    /// +1 or -1 when p has a definite value, 0 when the outcome is random.
    int expectation(const PauliOp &p) const;

    /// Given two tableaux that went through identical gates and differ only
    /// by a Pauli Q applied to one of them (`other` = Q * this), returns
    /// whether Q anticommutes with Z_q. Q is recovered from row-sign
    /// differences in the destabilizer/stabilizer basis.
    bool frame_anticommutes_z(const Tableau &other, size_t q) const;

   private:
    size_t n_;
    size_t words_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;

    bool x(size_t row, size_t q) const {
        return (xs_[row * words_ + (q >> 6)] >> (q & 63)) & 1;
    }
    bool z(size_t row, size_t q) const {
        return (zs_[row * words_ + (q >> 6)] >> (q & 63)) & 1;
    }
    void set_row_zero(size_t row);
    void copy_row(size_t dst, size_t src);
    // row h := row i * row h, with the phase tracked.
    void rowsum(size_t h, size_t i);
};

/// Hard limit on oracle size; the tableau is O(n^2) memory.
inline constexpr size_t kTableauQubitCap = 256;

struct OracleRun {
    /// Per event index; meaningful at measurement events. True = -1 outcome.
    std::vector<uint8_t> raw;
    /// Outcomes of the fault-free run driven by the same random stream.
    std::vector<uint8_t> reference;
    /// Value (+1/-1, 0 if indefinite) of each circuit target stabilizer after
    /// feed-forward corrections were applied from the raw outcomes.
    std::vector<int> corrected_targets;
    /// Same for the fault-free run; all +1 when the correction rules are right.
    std::vector<int> reference_targets;
};

/// Full stabilizer simulation of the circuit with the given faults injected.
/// The faulty run and a fault-free reference run are advanced in lockstep;
/// random outcomes of the faulty run are coupled to the reference through the
/// Pauli difference of the two states, so raw XOR reference is the set of
/// outcomes the faults invert. Throws ResourceError above kTableauQubitCap.
OracleRun tableau_simulate(const Circuit &c, std::span<const FaultLocation> faults, uint64_t seed);

struct Disagreement {
    FaultLocation location;
    std::string detail;
};

struct VerificationReport {
    size_t locations_checked = 0;
    std::vector<Disagreement> disagreements;

    bool ok() const {
        return disagreements.empty();
    }
};

/// Checks propagate_fault against tableau_simulate for every single-fault
/// location: the flip set must match exactly, and the residual must explain
/// the post-correction value of every target stabilizer.
VerificationReport verify_against_oracle(const Circuit &c, uint64_t seed);

}  // namespace ptqg

#endif
