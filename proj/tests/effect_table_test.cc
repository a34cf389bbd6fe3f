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

#include <gtest/gtest.h>

#include "ptqg/errors.h"
#include "ptqg/protocol.h"
#include "ptqg/rng.h"
#include "ptqg/suite.h"

using namespace ptqg;

namespace {

RootMasks masks_of(const Circuit &c, const PauliOp &p) {
    RootMasks m;
    for (size_t i = 0; i < c.roots().size(); i++) {
        m.z |= uint64_t(p.z(c.roots()[i])) << i;
        m.x |= uint64_t(p.x(c.roots()[i])) << i;
    }
    return m;
}

void add_fault(EffectTable::Accumulator &acc, const Circuit &c, const FaultLocation &f) {
    const CircuitEvent &ev = c.events()[f.event];
    if (ev.kind == EventKind::kCZ) {
        acc.add_pair(f.event, f.pauli.at(ev.a), f.pauli.at(ev.b));
    } else {
        acc.add(f.event, ev.a, f.pauli.at(ev.a));
    }
}

Circuit random_region(Rng &rng) {
    Variant v = rng.bit() ? Variant::kP2 : Variant::kP1;
    int L = 4 + static_cast<int>(rng.below(8));
    int neighbors = 1 + static_cast<int>(rng.below(4));
    ArmGeometry geo;
    geo.cherries = 2 * static_cast<int>(rng.below(3));
    LeafAllocation alloc = allocate_leaves(L, 0.3 + 0.6 * rng.uniform(), neighbors, rng);
    return assemble(v, L, geo, alloc.leaves, neighbors).circuit;
}

}  // namespace

TEST(EffectTable, MatchesPropagationOnSuite) {
    for (const auto &nc : builtin_suite()) {
        EffectTable table(nc.circuit);
        for (const FaultLocation &f : enumerate_single_faults(nc.circuit, true)) {
            EffectTable::Accumulator acc(table);
            add_fault(acc, nc.circuit, f);
            EXPECT_EQ(acc.resolve(), masks_of(nc.circuit, propagate_fault(nc.circuit, f).residual)) << nc.name;
        }
    }
}

TEST(EffectTableProperty, SingleFaultsMatchPropagation) {
    Rng rng(51);
    for (int trial = 0; trial < 40; trial++) {
        Circuit c = random_region(rng);
        EffectTable table(c);
        for (const FaultLocation &f : enumerate_single_faults(c, true)) {
            const CircuitEvent &ev = c.events()[f.event];
            RootMasks fast = ev.kind == EventKind::kCZ ? table.evaluate_pair(f.event, f.pauli.at(ev.a), f.pauli.at(ev.b))
                                                       : table.evaluate(f.event, ev.a, f.pauli.at(ev.a));
            ASSERT_EQ(fast, masks_of(c, propagate_fault(c, f).residual)) << "trial " << trial << " event " << f.event;
        }
    }
}

TEST(EffectTableProperty, FaultSetsMatchPropagation) {
    Rng rng(52);
    for (int trial = 0; trial < 60; trial++) {
        Circuit c = random_region(rng);
        auto all = enumerate_single_faults(c);
        EffectTable table(c);
        for (int k = 0; k < 50; k++) {
            std::vector<FaultLocation> faults;
            size_t count = 1 + rng.below(6);
            for (size_t i = 0; i < count; i++) {
                faults.push_back(all[rng.below(all.size())]);
            }
            EffectTable::Accumulator acc(table);
            for (const FaultLocation &f : faults) {
                add_fault(acc, c, f);
            }
            ASSERT_EQ(acc.resolve(), masks_of(c, propagate_faults(c, faults).residual));
        }
    }
}

TEST(EffectTable, RootReadoutAndClear) {
    Circuit c = chain_circuit(3);
    EffectTable table(c);
    EffectTable::Accumulator acc(table);
    acc.add_root_z(1);
    acc.add_root_x(0);
    EXPECT_EQ(acc.resolve(), (RootMasks{0b10, 0b01}));
    acc.clear();
    EXPECT_EQ(acc.resolve(), RootMasks{});
}

TEST(EffectTable, RejectsBadInput) {
    Circuit c = chain_circuit(3);
    EffectTable table(c);
    EXPECT_THROW(table.evaluate(0, 0, 'Q'), std::invalid_argument);
    EXPECT_THROW(table.evaluate(99, 0, 'X'), std::invalid_argument);
    EXPECT_THROW(table.evaluate_pair(0, 'X', 'X'), std::invalid_argument);

    CircuitBuilder b(65);
    for (uint32_t q = 0; q < 65; q++) {
        b.prep_plus(q);
        b.mark_root(q);
    }
    Circuit wide = std::move(b).build();
    EXPECT_THROW(EffectTable{wide}, ResourceError);
}
