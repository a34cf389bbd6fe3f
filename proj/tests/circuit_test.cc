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

#include <gtest/gtest.h>

#include <algorithm>

#include "ptqg/errors.h"
#include "ptqg/protocol.h"
#include "ptqg/rng.h"
#include "ptqg/suite.h"

using namespace ptqg;

namespace {

// r - m - t with m measured in X and the rule "outcome -1 => Z on r and t".
Circuit three_chain_with_zz_rule() {
    CircuitBuilder b(3);
    for (uint32_t q = 0; q < 3; q++) {
        b.prep_plus(q);
    }
    b.cz(0, 1);
    b.cz(1, 2);
    size_t m = b.measure_x(1);
    b.mark_root(0);
    b.mark_root(2);
    b.add_parity_rule(m, PauliOp::from_string("Z_Z"));
    return std::move(b).build();
}

size_t expect_circuit_error(CircuitBuilder b) {
    try {
        std::move(b).build();
    } catch (const CircuitError &e) {
        return e.event_index;
    }
    ADD_FAILURE() << "build() did not throw";
    return 0;
}

Circuit random_assembly(Variant v, int L, Rng &rng, int neighbors) {
    for (;;) {
        LeafAllocation alloc = allocate_leaves(L, 0.6, neighbors, rng);
        if (!alloc.star_failed) {
            return assemble(v, L, ArmGeometry{}, alloc.leaves, neighbors).circuit;
        }
    }
}

}  // namespace

TEST(CircuitBuilder, AcceptsSimpleChain) {
    Circuit c = three_chain_with_zz_rule();
    EXPECT_EQ(c.num_qubits(), 3u);
    EXPECT_EQ(c.events().size(), 6u);
    EXPECT_EQ(c.num_measurements(), 1u);
    EXPECT_EQ(std::vector<uint32_t>(c.roots().begin(), c.roots().end()), (std::vector<uint32_t>{0, 2}));
    EXPECT_TRUE(c.is_root(2));
    EXPECT_FALSE(c.is_root(1));
    EXPECT_EQ(c.root_ordinal(2), 1u);
    EXPECT_EQ(c.measurement_event(1), 5u);
    EXPECT_EQ(c.measurement_event(0), Circuit::kNone);
    EXPECT_EQ(c.cz_partners(1).size(), 2u);
    EXPECT_EQ(c.rules_reading(5).size(), 1u);
}

TEST(CircuitBuilder, RejectsUseBeforePreparation) {
    CircuitBuilder b(2);
    b.prep_plus(0);
    b.cz(0, 1);
    EXPECT_EQ(expect_circuit_error(std::move(b)), 1u);
}

TEST(CircuitBuilder, RejectsDoublePreparation) {
    CircuitBuilder b(1);
    b.prep_plus(0);
    b.prep_plus(0);
    b.mark_root(0);
    EXPECT_EQ(expect_circuit_error(std::move(b)), 1u);
}

TEST(CircuitBuilder, RejectsUseAfterMeasurement) {
    CircuitBuilder b(2);
    b.prep_plus(0);
    b.prep_plus(1);
    b.measure_x(1);
    b.cz(0, 1);
    b.mark_root(0);
    EXPECT_EQ(expect_circuit_error(std::move(b)), 3u);
}

TEST(CircuitBuilder, RejectsMeasuredRoot) {
    CircuitBuilder b(1);
    b.prep_plus(0);
    b.measure_z(0);
    b.mark_root(0);
    EXPECT_EQ(expect_circuit_error(std::move(b)), 1u);
}

TEST(CircuitBuilder, RejectsUnmeasuredNonRoot) {
    CircuitBuilder b(2);
    b.prep_plus(0);
    b.prep_plus(1);
    b.mark_root(0);
    EXPECT_EQ(expect_circuit_error(std::move(b)), Circuit::kNone);
}

TEST(CircuitBuilder, RejectsSelfCz) {
    CircuitBuilder b(1);
    b.prep_plus(0);
    b.cz(0, 0);
    b.mark_root(0);
    EXPECT_EQ(expect_circuit_error(std::move(b)), 1u);
}

TEST(CircuitBuilder, RejectsBadRules) {
    {
        CircuitBuilder b(2);
        b.prep_plus(0);
        b.prep_plus(1);
        size_t m = b.measure_x(1);
        b.mark_root(0);
        b.add_parity_rule(m, PauliOp::from_string("_Z"));  // byproduct on a measured qubit
        expect_circuit_error(std::move(b));
    }
    {
        CircuitBuilder b(2);
        b.prep_plus(0);
        b.prep_plus(1);
        b.measure_x(1);
        b.mark_root(0);
        b.add_parity_rule(0, PauliOp::from_string("Z_"));  // reads a preparation
        expect_circuit_error(std::move(b));
    }
    {
        CircuitBuilder b(3);
        for (uint32_t q = 0; q < 3; q++) {
            b.prep_plus(q);
        }
        size_t m1 = b.measure_x(1), m2 = b.measure_x(2);
        b.mark_root(0);
        b.add_majority_rule({m1, m2}, PauliOp::from_string("Z__"));  // even vote
        expect_circuit_error(std::move(b));
    }
    {
        CircuitBuilder b(2);
        b.prep_plus(0);
        b.prep_plus(1);
        b.measure_x(1);
        b.mark_root(0);
        b.add_target(PauliOp::from_string("ZZ"));  // target on a measured qubit
        expect_circuit_error(std::move(b));
    }
}

TEST(CircuitBuilder, RejectsRootOutOfRange) {
    CircuitBuilder b(1);
    b.prep_plus(0);
    b.mark_root(4);
    EXPECT_EQ(expect_circuit_error(std::move(b)), Circuit::kNone);
}

TEST(PropagateFault, ZBeforeMeasureXFlipsIt) {
    Circuit c = three_chain_with_zz_rule();
    FaultEffect e = propagate_fault(c, {5, PauliOp::from_string("_Z_")});
    EXPECT_EQ(e.flipped_outcomes, (std::vector<size_t>{5}));
}

TEST(PropagateFault, XBeforeMeasureXDoesNothing) {
    Circuit c = three_chain_with_zz_rule();
    FaultEffect e = propagate_fault(c, {5, PauliOp::from_string("_X_")});
    EXPECT_TRUE(e.flipped_outcomes.empty());
    EXPECT_TRUE(e.residual.is_identity());
}

TEST(PropagateFault, ZAfterMiddlePreparationReachesBothEnds) {
    Circuit c = three_chain_with_zz_rule();
    FaultEffect e = propagate_fault(c, {1, PauliOp::from_string("_Z_")});
    EXPECT_EQ(e.flipped_outcomes, (std::vector<size_t>{5}));
    EXPECT_EQ(e.residual, PauliOp::from_string("Z_Z"));
}

TEST(PropagateFault, XOnRootSpreadsThroughLaterCz) {
    Circuit c = three_chain_with_zz_rule();
    // X on qubit 0 after its preparation passes CZ(0,1): Z lands on 1, flipping MX(1).
    FaultEffect e = propagate_fault(c, {0, PauliOp::from_string("X__")});
    EXPECT_EQ(e.flipped_outcomes, (std::vector<size_t>{5}));
    EXPECT_EQ(e.residual, PauliOp::from_string("Y_Z"));
}

TEST(PropagateFault, FailedCzDoesNotPropagate) {
    CircuitBuilder b(2);
    b.prep_plus(0);
    b.prep_plus(1);
    b.cz(0, 1, false);
    size_t m = b.measure_x(1);
    b.mark_root(0);
    b.add_parity_rule(m, PauliOp::from_string("Z_"));
    Circuit c = std::move(b).build();
    FaultEffect e = propagate_fault(c, {0, PauliOp::from_string("X_")});
    EXPECT_TRUE(e.flipped_outcomes.empty());
    EXPECT_EQ(e.residual, PauliOp::from_string("X_"));
}

TEST(PropagateFault, RejectsMalformedLocations) {
    Circuit c = three_chain_with_zz_rule();
    EXPECT_THROW(propagate_fault(c, {99, PauliOp::from_string("Z__")}), std::invalid_argument);
    EXPECT_THROW(propagate_fault(c, {1, PauliOp::from_string("Z__")}), std::invalid_argument);
    EXPECT_THROW(propagate_fault(c, {1, PauliOp::from_string("___")}), std::invalid_argument);
    EXPECT_THROW(propagate_fault(c, {1, PauliOp::from_string("Z")}), std::invalid_argument);
}

TEST(PropagateFault, MajorityRuleNeedsTwoFlips) {
    Circuit arm;
    for (auto &nc : builtin_suite()) {
        if (nc.name == "p2_arm") {
            arm = nc.circuit;
        }
    }
    ASSERT_EQ(arm.num_qubits(), 4u);
    // Events: P0 P1 P2 P3 CZ01 CZ12 CZ13 MZ1 MX2 MX3.
    FaultEffect one = propagate_fault(arm, {7, PauliOp::from_string("_X__")});
    EXPECT_EQ(one.flipped_outcomes, (std::vector<size_t>{7}));
    EXPECT_TRUE(one.residual.is_identity());
    FaultLocation f1{8, PauliOp::from_string("__Z_")}, f2{9, PauliOp::from_string("___Z")};
    std::vector<FaultLocation> both = {f1, f2};
    FaultEffect two = propagate_faults(arm, both);
    EXPECT_EQ(two.residual, PauliOp::from_string("Z___"));
}

TEST(RootFlipClass, ClassifiesResiduals) {
    Circuit c = three_chain_with_zz_rule();
    FaultEffect z{{}, PauliOp::from_string("Z__")};
    FaultEffect x{{}, PauliOp::from_string("X__")};
    FaultEffect y{{}, PauliOp::from_string("Y__")};
    FaultEffect none{{}, PauliOp::from_string("___")};
    EXPECT_EQ(root_flip_class(c, z, 0), RootFlip::kFlip);
    EXPECT_EQ(root_flip_class(c, y, 0), RootFlip::kFlip);
    EXPECT_EQ(root_flip_class(c, x, 0), RootFlip::kBenign);
    EXPECT_EQ(root_flip_class(c, x, 0, true), RootFlip::kFlip);
    EXPECT_EQ(root_flip_class(c, none, 0), RootFlip::kNone);
    EXPECT_THROW(root_flip_class(c, z, 1), std::invalid_argument);
    EXPECT_THROW(root_flip_class(c, z, 7), std::invalid_argument);
}

TEST(EnumerateSingleFaults, CountsLocations) {
    Circuit c = three_chain_with_zz_rule();
    // 3 preps x 3 + 2 CZ x 15 + 1 measurement x 3.
    EXPECT_EQ(enumerate_single_faults(c).size(), 42u);
    CircuitBuilder b(2);
    b.prep_plus(0);
    b.prep_plus(1);
    b.cz(0, 1, false);
    b.measure_z(1);
    b.mark_root(0);
    Circuit f = std::move(b).build();
    EXPECT_EQ(enumerate_single_faults(f).size(), 9u);
    EXPECT_EQ(enumerate_single_faults(f, true).size(), 24u);
}

TEST(PropagateFaultProperty, EffectsAreLinear) {
    Rng rng(21);
    for (int trial = 0; trial < 40; trial++) {
        Circuit c = random_assembly(trial % 2 ? Variant::kP2 : Variant::kP1, 5 + trial % 4, rng, 1 + trial % 4);
        auto faults = enumerate_single_faults(c);
        for (int k = 0; k < 30; k++) {
            const FaultLocation &a = faults[rng.below(faults.size())];
            const FaultLocation &b = faults[rng.below(faults.size())];
            FaultEffect ea = propagate_fault(c, a), eb = propagate_fault(c, b);
            std::vector<FaultLocation> pair = {a, b};
            FaultEffect both = propagate_faults(c, pair);
            std::vector<size_t> sym;
            std::set_symmetric_difference(ea.flipped_outcomes.begin(), ea.flipped_outcomes.end(),
                                          eb.flipped_outcomes.begin(), eb.flipped_outcomes.end(),
                                          std::back_inserter(sym));
            EXPECT_EQ(both.flipped_outcomes, sym);
            // Residuals compose unless a vote group saw flips from both faults.
            bool shared_vote = false;
            for (const CorrectionRule &r : c.rules()) {
                if (r.kind != RuleKind::kMajority) {
                    continue;
                }
                int from_a = 0, from_b = 0;
                for (size_t m : r.measurements) {
                    from_a += std::binary_search(ea.flipped_outcomes.begin(), ea.flipped_outcomes.end(), m);
                    from_b += std::binary_search(eb.flipped_outcomes.begin(), eb.flipped_outcomes.end(), m);
                }
                shared_vote |= from_a > 0 && from_b > 0;
            }
            if (!shared_vote) {
                EXPECT_EQ(both.residual, pauli_mul(ea.residual, eb.residual));
            }
        }
    }
}

TEST(PropagateFaultProperty, Deterministic) {
    Rng rng(22);
    Circuit c = random_assembly(Variant::kP2, 6, rng, 4);
    for (const FaultLocation &f : enumerate_single_faults(c)) {
        EXPECT_EQ(propagate_fault(c, f), propagate_fault(c, f));
    }
}

TEST(CircuitText, RoundTrips) {
    for (const auto &nc : builtin_suite()) {
        std::string text = dump_circuit(nc.circuit);
        Circuit back = parse_circuit(text);
        EXPECT_EQ(dump_circuit(back), text) << nc.name;
        EXPECT_EQ(back.num_qubits(), nc.circuit.num_qubits());
        EXPECT_EQ(back.rules().size(), nc.circuit.rules().size());
    }
}

TEST(CircuitText, ParsesHandWrittenCircuit) {
    Circuit c = parse_circuit(
        "# two-qubit cluster\n"
        "QUBITS 2\n"
        "P 0\n"
        "P 1\n"
        "CZ 0 1 ok\n"
        "MZ 1\n"
        "ROOT 0\n"
        "CORR 3 -> Z 0\n"
        "TARGET X 0\n");
    EXPECT_EQ(c.events().size(), 4u);
    EXPECT_EQ(c.rules().size(), 1u);
    EXPECT_EQ(c.targets().size(), 1u);
}

TEST(CircuitText, ReportsBadLines) {
    EXPECT_THROW(parse_circuit("P 0\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("QUBITS 2\nFOO 1\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("QUBITS 2\nCZ 0 1 maybe\n"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("QUBITS 1\nP 0\nROOT 0\nCORR 0 -> Q 0\n"), std::invalid_argument);
    try {
        parse_circuit("QUBITS 2\nP 0\nBAD\n");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}
