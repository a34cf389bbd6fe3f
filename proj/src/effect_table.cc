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

#include "ptqg/effect_table.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "ptqg/errors.h"

namespace ptqg {

namespace {

RootMasks masks_of(const Circuit &c, const PauliOp &p) {
    RootMasks m;
    auto roots = c.roots();
    for (size_t i = 0; i < roots.size(); i++) {
        if (p.z(roots[i])) {
            m.z |= uint64_t{1} << i;
        }
        if (p.x(roots[i])) {
            m.x |= uint64_t{1} << i;
        }
    }
    return m;
}

void sym_diff_into(std::vector<uint32_t> &acc, const std::vector<uint32_t> &other, std::vector<uint32_t> &scratch) {
    if (other.empty()) {
        return;
    }
    scratch.clear();
    std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(scratch));
    acc.swap(scratch);
}

void xor_into(EffectTable::Component &acc, const EffectTable::Component &other) {
    acc.masks.z ^= other.masks.z;
    acc.masks.x ^= other.masks.x;
    std::vector<uint32_t> scratch;
    sym_diff_into(acc.votes, other.votes, scratch);
}

}  // namespace

EffectTable::EffectTable(const Circuit &c) : c_(&c) {
    if (c.roots().size() > 64) {
        throw ResourceError("effect table supports at most 64 roots, circuit has " + std::to_string(c.roots().size()));
    }
    size_t n = c.num_qubits();
    auto events = c.events();
    auto rules = c.rules();

    rule_masks_.reserve(rules.size());
    for (const CorrectionRule &r : rules) {
        rule_masks_.push_back(masks_of(c, r.byproduct));
    }
    majority_rules_of_.assign(events.size(), {});
    for (size_t r = 0; r < rules.size(); r++) {
        if (rules[r].kind == RuleKind::kMajority) {
            for (size_t m : rules[r].measurements) {
                majority_rules_of_[m].push_back(r);
            }
        }
    }

    auto flip_of = [&](size_t m) {
        Component comp;
        bool symbolic = false;
        for (size_t r : c.rules_reading(m)) {
            if (rules[r].kind == RuleKind::kParity) {
                comp.masks.z ^= rule_masks_[r].z;
                comp.masks.x ^= rule_masks_[r].x;
            } else {
                symbolic = true;
            }
        }
        if (symbolic) {
            comp.votes.push_back(static_cast<uint32_t>(m));
        }
        return comp;
    };

    z_.resize(n);
    x_base_.resize(n);
    for (size_t q = 0; q < n; q++) {
        if (c.is_root(q)) {
            z_[q].masks.z = uint64_t{1} << c.root_ordinal(q);
            x_base_[q].masks.x = uint64_t{1} << c.root_ordinal(q);
            continue;
        }
        size_t m = c.measurement_event(q);
        if (events[m].kind == EventKind::kMeasX) {
            z_[q] = flip_of(m);
        } else {
            x_base_[q] = flip_of(m);
        }
    }

    x_suffix_.resize(n);
    for (size_t q = 0; q < n; q++) {
        auto partners = c.cz_partners(q);
        std::vector<Component> &suffix = x_suffix_[q];
        suffix.resize(partners.size() + 1);
        for (size_t k = partners.size(); k-- > 0;) {
            suffix[k] = suffix[k + 1];
            xor_into(suffix[k], z_[partners[k].partner]);
        }
    }
}

const EffectTable::Component &EffectTable::x_suffix(size_t event, uint32_t q) const {
    auto partners = c_->cz_partners(q);
    auto it = std::upper_bound(
        partners.begin(), partners.end(), event, [](size_t e, const CzPartner &p) { return e < p.event; });
    return x_suffix_[q][static_cast<size_t>(it - partners.begin())];
}

void EffectTable::Accumulator::add_component(const Component &comp) {
    masks_.z ^= comp.masks.z;
    masks_.x ^= comp.masks.x;
    sym_diff_into(votes_, comp.votes, scratch_);
}

void EffectTable::Accumulator::add(size_t event, uint32_t q, char p) {
    if (event >= t_->c_->events().size() || q >= t_->c_->num_qubits()) {
        throw std::invalid_argument("fault location out of range");
    }
    bool has_x = p == 'X' || p == 'Y';
    bool has_z = p == 'Z' || p == 'Y';
    if (!has_x && !has_z && p != 'I') {
        throw std::invalid_argument(std::string("unknown Pauli '") + p + "'");
    }
    if (has_x) {
        add_component(t_->x_base_[q]);
        add_component(t_->x_suffix(event, q));
    }
    if (has_z) {
        add_component(t_->z_[q]);
    }
}

void EffectTable::Accumulator::add_pair(size_t event, char pa, char pb) {
    const CircuitEvent &ev = t_->c_->events()[event];
    if (ev.kind != EventKind::kCZ) {
        throw std::invalid_argument("event " + std::to_string(event) + " is not a CZ");
    }
    add(event, ev.a, pa);
    add(event, ev.b, pb);
}

void EffectTable::Accumulator::add_root_z(size_t ordinal) {
    masks_.z ^= uint64_t{1} << ordinal;
}

void EffectTable::Accumulator::add_root_x(size_t ordinal) {
    masks_.x ^= uint64_t{1} << ordinal;
}

RootMasks EffectTable::Accumulator::resolve() const {
    RootMasks out = masks_;
    if (votes_.empty()) {
        return out;
    }
    auto rules = t_->c_->rules();
    // (rule, flipped inputs); a handful of entries at most.
    std::vector<std::pair<size_t, size_t>> counts;
    for (uint32_t m : votes_) {
        for (size_t r : t_->majority_rules_of_[m]) {
            auto it = std::find_if(counts.begin(), counts.end(), [r](const auto &e) { return e.first == r; });
            if (it == counts.end()) {
                counts.emplace_back(r, 1);
            } else {
                it->second++;
            }
        }
    }
    for (auto [r, k] : counts) {
        if (2 * k > rules[r].measurements.size()) {
            out.z ^= t_->rule_masks_[r].z;
            out.x ^= t_->rule_masks_[r].x;
        }
    }
    return out;
}

void EffectTable::Accumulator::clear() {
    masks_ = {};
    votes_.clear();
}

RootMasks EffectTable::evaluate(size_t event, uint32_t q, char p) const {
    Accumulator acc(*this);
    acc.add(event, q, p);
    return acc.resolve();
}

RootMasks EffectTable::evaluate_pair(size_t event, char pa, char pb) const {
    Accumulator acc(*this);
    acc.add_pair(event, pa, pb);
    return acc.resolve();
}

}  // namespace ptqg
