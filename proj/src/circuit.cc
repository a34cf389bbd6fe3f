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

#include "ptqg/circuit.h"

#include <algorithm>
#include <stdexcept>

#include "ptqg/errors.h"

namespace ptqg {

namespace {

constexpr size_t kNoEvent = SIZE_MAX;

std::string q_str(size_t q) {
    return std::to_string(q);
}

bool touches(const CircuitEvent &ev, size_t q) {
    return ev.a == q || (ev.kind == EventKind::kCZ && ev.b == q);
}

}  // namespace

CircuitBuilder::CircuitBuilder(size_t num_qubits) : n_(num_qubits) {
}

size_t CircuitBuilder::prep_plus(uint32_t q) {
    events_.push_back({EventKind::kPrepPlus, q, 0, true});
    return events_.size() - 1;
}

size_t CircuitBuilder::cz(uint32_t a, uint32_t b, bool succeeded) {
    events_.push_back({EventKind::kCZ, a, b, succeeded});
    return events_.size() - 1;
}

size_t CircuitBuilder::measure_x(uint32_t q) {
    events_.push_back({EventKind::kMeasX, q, 0, true});
    return events_.size() - 1;
}

size_t CircuitBuilder::measure_z(uint32_t q) {
    events_.push_back({EventKind::kMeasZ, q, 0, true});
    return events_.size() - 1;
}

void CircuitBuilder::mark_root(uint32_t q) {
    roots_.push_back(q);
}

void CircuitBuilder::add_parity_rule(size_t measurement_event, PauliOp byproduct) {
    rules_.push_back({RuleKind::kParity, {measurement_event}, std::move(byproduct)});
}

void CircuitBuilder::add_majority_rule(std::vector<size_t> measurement_events, PauliOp byproduct) {
    rules_.push_back({RuleKind::kMajority, std::move(measurement_events), std::move(byproduct)});
}

void CircuitBuilder::add_target(PauliOp stabilizer) {
    targets_.push_back(std::move(stabilizer));
}

Circuit CircuitBuilder::build() && {
    Circuit c;
    c.n_ = n_;
    c.root_ordinal_.assign(n_, Circuit::kNone);
    c.meas_event_.assign(n_, kNoEvent);
    c.prep_event_.assign(n_, kNoEvent);
    c.cz_partners_.resize(n_);
    c.rules_by_meas_.resize(events_.size());

    std::sort(roots_.begin(), roots_.end());
    for (size_t k = 0; k < roots_.size(); k++) {
        if (roots_[k] >= n_) {
            throw CircuitError("root qubit " + q_str(roots_[k]) + " out of range", kNoEvent);
        }
        if (k > 0 && roots_[k] == roots_[k - 1]) {
            throw CircuitError("root qubit " + q_str(roots_[k]) + " listed twice", kNoEvent);
        }
        c.root_ordinal_[roots_[k]] = k;
    }

    auto check_live = [&](size_t q, size_t i) {
        if (q >= n_) {
            throw CircuitError("event " + q_str(i) + ": qubit " + q_str(q) + " out of range", i);
        }
        if (c.prep_event_[q] == kNoEvent) {
            throw CircuitError("event " + q_str(i) + ": qubit " + q_str(q) + " used before preparation", i);
        }
        if (c.meas_event_[q] != kNoEvent) {
            throw CircuitError("event " + q_str(i) + ": qubit " + q_str(q) + " used after measurement", i);
        }
    };

    for (size_t i = 0; i < events_.size(); i++) {
        const CircuitEvent &ev = events_[i];
        switch (ev.kind) {
            case EventKind::kPrepPlus:
                if (ev.a >= n_) {
                    throw CircuitError("event " + q_str(i) + ": qubit " + q_str(ev.a) + " out of range", i);
                }
                if (c.prep_event_[ev.a] != kNoEvent) {
                    throw CircuitError("event " + q_str(i) + ": qubit " + q_str(ev.a) + " prepared twice", i);
                }
                c.prep_event_[ev.a] = i;
                break;
            case EventKind::kCZ:
                if (ev.a == ev.b) {
                    throw CircuitError("event " + q_str(i) + ": CZ on a single qubit", i);
                }
                check_live(ev.a, i);
                check_live(ev.b, i);
                if (ev.succeeded) {
                    c.cz_partners_[ev.a].push_back({i, ev.b});
                    c.cz_partners_[ev.b].push_back({i, ev.a});
                }
                break;
            case EventKind::kMeasX:
            case EventKind::kMeasZ:
                check_live(ev.a, i);
                if (c.root_ordinal_[ev.a] != Circuit::kNone) {
                    throw CircuitError("event " + q_str(i) + ": root qubit " + q_str(ev.a) + " is measured", i);
                }
                c.meas_event_[ev.a] = i;
                c.num_measurements_++;
                break;
        }
    }
    for (size_t q = 0; q < n_; q++) {
        if (c.prep_event_[q] == kNoEvent) {
            throw CircuitError("qubit " + q_str(q) + " is never prepared", kNoEvent);
        }
        if (c.root_ordinal_[q] == Circuit::kNone && c.meas_event_[q] == kNoEvent) {
            throw CircuitError("non-root qubit " + q_str(q) + " is never measured", kNoEvent);
        }
    }

    auto check_on_roots = [&](const PauliOp &p, const std::string &what) {
        if (p.num_qubits() != n_) {
            throw CircuitError(what + " has wrong qubit count", kNoEvent);
        }
        for (size_t q : p.support()) {
            if (c.root_ordinal_[q] == Circuit::kNone) {
                throw CircuitError(what + " acts on non-root qubit " + q_str(q), kNoEvent);
            }
        }
    };

    std::vector<bool> in_vote(events_.size(), false);
    for (size_t r = 0; r < rules_.size(); r++) {
        const CorrectionRule &rule = rules_[r];
        if (rule.measurements.empty()) {
            throw CircuitError("correction rule " + q_str(r) + " reads no measurement", kNoEvent);
        }
        if (rule.kind == RuleKind::kParity && rule.measurements.size() != 1) {
            throw CircuitError("parity rule " + q_str(r) + " must read exactly one measurement", kNoEvent);
        }
        if (rule.kind == RuleKind::kMajority && rule.measurements.size() % 2 == 0) {
            throw CircuitError("majority rule " + q_str(r) + " needs an odd number of votes", kNoEvent);
        }
        for (size_t m : rule.measurements) {
            if (m >= events_.size() || !events_[m].is_measurement()) {
                throw CircuitError("correction rule " + q_str(r) + " reads non-measurement event " + q_str(m), m);
            }
            if (rule.kind == RuleKind::kMajority) {
                if (in_vote[m]) {
                    throw CircuitError("measurement " + q_str(m) + " belongs to two vote groups", m);
                }
                in_vote[m] = true;
            }
            c.rules_by_meas_[m].push_back(r);
        }
        check_on_roots(rule.byproduct, "byproduct of rule " + q_str(r));
    }
    for (size_t t = 0; t < targets_.size(); t++) {
        check_on_roots(targets_[t], "target " + q_str(t));
    }

    c.events_ = std::move(events_);
    c.rules_ = std::move(rules_);
    c.targets_ = std::move(targets_);
    c.roots_ = std::move(roots_);
    return c;
}

namespace {

void check_location(const Circuit &c, const FaultLocation &f) {
    if (f.event >= c.events().size()) {
        throw std::invalid_argument("fault event index " + q_str(f.event) + " out of range");
    }
    if (f.pauli.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("fault Pauli has wrong qubit count");
    }
    const CircuitEvent &ev = c.events()[f.event];
    if (f.pauli.is_identity()) {
        throw std::invalid_argument("fault at event " + q_str(f.event) + " is the identity");
    }
    for (size_t q : f.pauli.support()) {
        if (!touches(ev, q)) {
            throw std::invalid_argument(
                "fault at event " + q_str(f.event) + " acts on qubit " + q_str(q) + " outside the event");
        }
    }
}

// Pushes `frame` (placed at event `at`) through the rest of the circuit,
// toggling `flipped` for every measurement it inverts and clearing measured
// qubits from the frame.
void push_frame(const Circuit &c, size_t at, PauliOp &frame, std::vector<uint8_t> &flipped) {
    auto events = c.events();
    size_t start = events[at].is_measurement() ? at : at + 1;
    for (size_t i = start; i < events.size(); i++) {
        const CircuitEvent &ev = events[i];
        switch (ev.kind) {
            case EventKind::kPrepPlus:
                break;
            case EventKind::kCZ: {
                if (!ev.succeeded) {
                    break;
                }
                bool xa = frame.x(ev.a), xb = frame.x(ev.b);
                if (xa) {
                    frame.flip_z(ev.b);
                }
                if (xb) {
                    frame.flip_z(ev.a);
                }
                break;
            }
            case EventKind::kMeasX:
                flipped[i] ^= frame.z(ev.a);
                frame.set_x(ev.a, false);
                frame.set_z(ev.a, false);
                break;
            case EventKind::kMeasZ:
                flipped[i] ^= frame.x(ev.a);
                frame.set_x(ev.a, false);
                frame.set_z(ev.a, false);
                break;
        }
    }
}

FaultEffect finish(const Circuit &c, PauliOp residual, const std::vector<uint8_t> &flipped) {
    FaultEffect effect;
    for (size_t i = 0; i < flipped.size(); i++) {
        if (flipped[i]) {
            effect.flipped_outcomes.push_back(i);
        }
    }
    for (const CorrectionRule &rule : c.rules()) {
        size_t votes = 0;
        for (size_t m : rule.measurements) {
            votes += flipped[m];
        }
        bool fire = rule.kind == RuleKind::kParity ? votes == 1 : 2 * votes > rule.measurements.size();
        if (fire) {
            residual *= rule.byproduct;
        }
    }
    effect.residual = std::move(residual);
    return effect;
}

}  // namespace

FaultEffect propagate_fault(const Circuit &c, const FaultLocation &f) {
    return propagate_faults(c, std::span<const FaultLocation>(&f, 1));
}

FaultEffect propagate_faults(const Circuit &c, std::span<const FaultLocation> faults) {
    std::vector<uint8_t> flipped(c.events().size(), 0);
    PauliOp residual(c.num_qubits());
    for (const FaultLocation &f : faults) {
        check_location(c, f);
        PauliOp frame = f.pauli;
        push_frame(c, f.event, frame, flipped);
        // Whatever survives sits on unmeasured qubits, i.e. roots.
        residual *= frame;
    }
    return finish(c, std::move(residual), flipped);
}

RootFlip root_flip_class(const Circuit &c, const FaultEffect &effect, size_t root, bool count_benign_as_flip) {
    if (root >= c.num_qubits() || !c.is_root(root)) {
        throw std::invalid_argument("qubit " + q_str(root) + " is not a root");
    }
    if (effect.residual.num_qubits() != c.num_qubits()) {
        throw std::invalid_argument("fault effect does not belong to this circuit");
    }
    if (effect.residual.z(root)) {
        return RootFlip::kFlip;
    }
    if (effect.residual.x(root)) {
        return count_benign_as_flip ? RootFlip::kFlip : RootFlip::kBenign;
    }
    return RootFlip::kNone;
}

std::vector<FaultLocation> enumerate_single_faults(const Circuit &c, bool include_failed_cz) {
    static constexpr char kSingle[3] = {'X', 'Y', 'Z'};
    static constexpr char kPair[4] = {'I', 'X', 'Y', 'Z'};
    std::vector<FaultLocation> result;
    auto events = c.events();
    for (size_t i = 0; i < events.size(); i++) {
        const CircuitEvent &ev = events[i];
        if (ev.kind == EventKind::kCZ) {
            if (!ev.succeeded && !include_failed_cz) {
                continue;
            }
            for (int k = 1; k < 16; k++) {
                PauliOp p(c.num_qubits());
                p.set(ev.a, kPair[k & 3]);
                p.set(ev.b, kPair[k >> 2]);
                result.push_back({i, std::move(p)});
            }
        } else {
            for (char s : kSingle) {
                result.push_back({i, PauliOp::single(c.num_qubits(), ev.a, s)});
            }
        }
    }
    return result;
}

}  // namespace ptqg
