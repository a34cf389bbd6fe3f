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

#include "ptqg/tableau.h"

#include <bit>
#include <stdexcept>

#include "ptqg/errors.h"
#include "ptqg/rng.h"

namespace ptqg {

Tableau::Tableau(size_t num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      xs_((2 * num_qubits + 1) * words_),
      zs_((2 * num_qubits + 1) * words_),
      signs_(2 * num_qubits + 1) {
    for (size_t q = 0; q < n_; q++) {
        xs_[q * words_ + (q >> 6)] |= uint64_t{1} << (q & 63);
        zs_[(q + n_) * words_ + (q >> 6)] |= uint64_t{1} << (q & 63);
    }
}

void Tableau::h(size_t q) {
    size_t w = q >> 6;
    uint64_t bit = uint64_t{1} << (q & 63);
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t &xw = xs_[row * words_ + w];
        uint64_t &zw = zs_[row * words_ + w];
        bool xb = xw & bit, zb = zw & bit;
        signs_[row] ^= xb & zb;
        if (xb != zb) {
            xw ^= bit;
            zw ^= bit;
        }
    }
}

void Tableau::cnot(size_t control, size_t target) {
    for (size_t row = 0; row < 2 * n_; row++) {
        bool xc = x(row, control), zc = z(row, control), xt = x(row, target), zt = z(row, target);
        signs_[row] ^= xc & zt & (xt ^ zc ^ 1);
        if (xc) {
            xs_[row * words_ + (target >> 6)] ^= uint64_t{1} << (target & 63);
        }
        if (zt) {
            zs_[row * words_ + (control >> 6)] ^= uint64_t{1} << (control & 63);
        }
    }
}

void Tableau::cz(size_t a, size_t b) {
    h(b);
    cnot(a, b);
    h(b);
}

void Tableau::apply_pauli(const PauliOp &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match tableau");
    }
    auto px = p.x_words(), pz = p.z_words();
    for (size_t row = 0; row < 2 * n_; row++) {
        uint64_t parity = 0;
        for (size_t w = 0; w < words_; w++) {
            parity ^= (xs_[row * words_ + w] & pz[w]) ^ (zs_[row * words_ + w] & px[w]);
        }
        signs_[row] ^= std::popcount(parity) & 1;
    }
}

void Tableau::set_row_zero(size_t row) {
    for (size_t w = 0; w < words_; w++) {
        xs_[row * words_ + w] = 0;
        zs_[row * words_ + w] = 0;
    }
    signs_[row] = 0;
}

void Tableau::copy_row(size_t dst, size_t src) {
    for (size_t w = 0; w < words_; w++) {
        xs_[dst * words_ + w] = xs_[src * words_ + w];
        zs_[dst * words_ + w] = zs_[src * words_ + w];
    }
    signs_[dst] = signs_[src];
}

void Tableau::rowsum(size_t h, size_t i) {
    // Exponent of i picked up when multiplying the single-qubit factors.
    int e = 2 * signs_[h] + 2 * signs_[i];
    for (size_t q = 0; q < n_; q++) {
        bool x1 = x(i, q), z1 = z(i, q), x2 = x(h, q), z2 = z(h, q);
        if (x1 && z1) {
            e += int(z2) - int(x2);
        } else if (x1) {
            e += int(z2) * (2 * int(x2) - 1);
        } else if (z1) {
            e += int(x2) * (1 - 2 * int(z2));
        }
    }
    e = ((e % 4) + 4) % 4;
    signs_[h] = e == 2;
    for (size_t w = 0; w < words_; w++) {
        xs_[h * words_ + w] ^= xs_[i * words_ + w];
        zs_[h * words_ + w] ^= zs_[i * words_ + w];
    }
}

bool Tableau::is_deterministic_z(size_t q) const {
    for (size_t row = n_; row < 2 * n_; row++) {
        if (x(row, q)) {
            return false;
        }
    }
    return true;
}

bool Tableau::measure_z(size_t q, bool random_outcome) {
    if (q >= n_) {
        throw std::invalid_argument("measured qubit out of range");
    }
    size_t p = 2 * n_;
    for (size_t row = n_; row < 2 * n_; row++) {
        if (x(row, q)) {
            p = row;
            break;
        }
    }
    if (p < 2 * n_) {
        for (size_t row = 0; row < 2 * n_; row++) {
            if (row != p && x(row, q)) {
                rowsum(row, p);
            }
        }
        copy_row(p - n_, p);
        set_row_zero(p);
        zs_[p * words_ + (q >> 6)] |= uint64_t{1} << (q & 63);
        signs_[p] = random_outcome;
        return random_outcome;
    }
    size_t scratch = 2 * n_;
    set_row_zero(scratch);
    for (size_t row = 0; row < n_; row++) {
        if (x(row, q)) {
            rowsum(scratch, row + n_);
        }
    }
    return signs_[scratch];
}

bool Tableau::measure_x(size_t q, bool random_outcome) {
    h(q);
    bool result = measure_z(q, random_outcome);
    h(q);
    return result;
}

int Tableau::expectation(const PauliOp &p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match tableau");
    }
    auto px = p.x_words(), pz = p.z_words();
    auto anticommutes = [&](size_t row) {
        uint64_t parity = 0;
        for (size_t w = 0; w < words_; w++) {
            parity ^= (xs_[row * words_ + w] & pz[w]) ^ (zs_[row * words_ + w] & px[w]);
        }
        return (std::popcount(parity) & 1) != 0;
    };
    for (size_t row = n_; row < 2 * n_; row++) {
        if (anticommutes(row)) {
            return 0;
        }
    }
    Tableau scratch_owner = *this;
    size_t scratch = 2 * n_;
    scratch_owner.set_row_zero(scratch);
    for (size_t row = 0; row < n_; row++) {
        if (anticommutes(row)) {
            scratch_owner.rowsum(scratch, row + n_);
        }
    }
    return scratch_owner.signs_[scratch] ? -1 : 1;
}

bool Tableau::frame_anticommutes_z(const Tableau &other, size_t q) const {
    // Z_q = prod_{i: d_i has x_q} s_i * prod_{j: s_j has x_q} d_j (up to phase),
    // and the sign difference of a row is the commutator of the frame with it.
    bool parity = false;
    for (size_t i = 0; i < n_; i++) {
        if (x(i, q)) {
            parity ^= signs_[i + n_] != other.signs_[i + n_];
        }
        if (x(i + n_, q)) {
            parity ^= signs_[i] != other.signs_[i];
        }
    }
    return parity;
}

namespace {

void apply_corrections(const Circuit &c, const std::vector<uint8_t> &outcomes, Tableau &t) {
    for (const CorrectionRule &rule : c.rules()) {
        size_t ones = 0;
        for (size_t m : rule.measurements) {
            ones += outcomes[m];
        }
        bool fire = rule.kind == RuleKind::kParity ? ones == 1 : 2 * ones > rule.measurements.size();
        if (fire) {
            t.apply_pauli(rule.byproduct);
        }
    }
}

}  // namespace

OracleRun tableau_simulate(const Circuit &c, std::span<const FaultLocation> faults, uint64_t seed) {
    size_t n = c.num_qubits();
    if (n > kTableauQubitCap) {
        throw ResourceError(
            "tableau oracle limited to " + std::to_string(kTableauQubitCap) + " qubits, circuit has " +
            std::to_string(n));
    }
    auto events = c.events();
    std::vector<std::vector<const PauliOp *>> faults_at(events.size());
    for (const FaultLocation &f : faults) {
        if (f.event >= events.size() || f.pauli.num_qubits() != n) {
            throw std::invalid_argument("fault location does not belong to this circuit");
        }
        faults_at[f.event].push_back(&f.pauli);
    }

    Tableau ideal(n);
    Tableau faulty(n);
    Rng rng(seed);
    OracleRun run;
    run.raw.assign(events.size(), 0);
    run.reference.assign(events.size(), 0);

    auto inject = [&](size_t i) {
        for (const PauliOp *p : faults_at[i]) {
            faulty.apply_pauli(*p);
        }
    };

    for (size_t i = 0; i < events.size(); i++) {
        const CircuitEvent &ev = events[i];
        switch (ev.kind) {
            case EventKind::kPrepPlus:
                ideal.h(ev.a);
                faulty.h(ev.a);
                inject(i);
                break;
            case EventKind::kCZ:
                if (ev.succeeded) {
                    ideal.cz(ev.a, ev.b);
                    faulty.cz(ev.a, ev.b);
                }
                inject(i);
                break;
            case EventKind::kMeasX:
            case EventKind::kMeasZ: {
                inject(i);
                bool basis_x = ev.kind == EventKind::kMeasX;
                if (basis_x) {
                    ideal.h(ev.a);
                    faulty.h(ev.a);
                }
                bool frame_flip = ideal.frame_anticommutes_z(faulty, ev.a);
                bool r = rng.bit();
                run.reference[i] = ideal.measure_z(ev.a, r);
                run.raw[i] = faulty.measure_z(ev.a, r ^ frame_flip);
                if (basis_x) {
                    ideal.h(ev.a);
                    faulty.h(ev.a);
                }
                break;
            }
        }
    }

    apply_corrections(c, run.reference, ideal);
    apply_corrections(c, run.raw, faulty);
    for (const PauliOp &t : c.targets()) {
        run.reference_targets.push_back(ideal.expectation(t));
        run.corrected_targets.push_back(faulty.expectation(t));
    }
    return run;
}

VerificationReport verify_against_oracle(const Circuit &c, uint64_t seed) {
    VerificationReport report;
    auto events = c.events();
    size_t k = 0;
    for (FaultLocation &loc : enumerate_single_faults(c)) {
        report.locations_checked++;
        FaultEffect predicted = propagate_fault(c, loc);
        OracleRun run = tableau_simulate(c, std::span<const FaultLocation>(&loc, 1), derive_seed(seed, k++));

        std::vector<size_t> observed;
        for (size_t i = 0; i < events.size(); i++) {
            if (events[i].is_measurement() && run.raw[i] != run.reference[i]) {
                observed.push_back(i);
            }
        }
        std::string detail;
        if (observed != predicted.flipped_outcomes) {
            detail += "flip set differs;";
        }
        for (size_t t = 0; t < run.corrected_targets.size(); t++) {
            if (run.reference_targets[t] != 1) {
                detail += " fault-free target " + std::to_string(t) + " not +1;";
                continue;
            }
            int expected = commutes(predicted.residual, c.targets()[t]) ? 1 : -1;
            if (run.corrected_targets[t] != expected) {
                detail += " target " + std::to_string(t) + " syndrome differs;";
            }
        }
        if (!detail.empty()) {
            report.disagreements.push_back({std::move(loc), std::move(detail)});
        }
    }
    return report;
}

}  // namespace ptqg
