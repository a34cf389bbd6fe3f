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

#include "ptqg/suite.h"

#include <stdexcept>

#include "ptqg/protocol.h"

namespace ptqg {

Circuit chain_circuit(size_t n) {
    if (n < 2 || n > 5) {
        throw std::invalid_argument("chain length must be in [2, 5]");
    }
    CircuitBuilder b(n);
    for (uint32_t q = 0; q < n; q++) {
        b.prep_plus(q);
    }
    for (uint32_t q = 0; q + 1 < n; q++) {
        b.cz(q, q + 1);
    }
    std::vector<size_t> m(n, 0);
    for (uint32_t q = 1; q + 1 < n; q++) {
        m[q] = b.measure_x(q);
    }
    auto last = static_cast<uint32_t>(n - 1);
    b.mark_root(0);
    b.mark_root(last);
    auto op = [n](std::initializer_list<std::pair<uint32_t, char>> terms) {
        PauliOp p(n);
        for (auto [q, c] : terms) {
            p.set(q, c);
        }
        return p;
    };
    switch (n) {
        case 2:
            b.add_target(op({{0, 'X'}, {1, 'Z'}}));
            b.add_target(op({{0, 'Z'}, {1, 'X'}}));
            break;
        case 3:
            b.add_parity_rule(m[1], op({{0, 'X'}}));
            b.add_target(op({{0, 'X'}, {2, 'X'}}));
            b.add_target(op({{0, 'Z'}, {2, 'Z'}}));
            break;
        case 4:
            b.add_parity_rule(m[1], op({{last, 'Z'}}));
            b.add_parity_rule(m[2], op({{0, 'Z'}}));
            b.add_target(op({{0, 'X'}, {last, 'Z'}}));
            b.add_target(op({{0, 'Z'}, {last, 'X'}}));
            break;
        default:
            b.add_parity_rule(m[1], op({{0, 'X'}}));
            b.add_parity_rule(m[2], op({{0, 'Z'}}));
            b.add_parity_rule(m[3], op({{0, 'X'}}));
            b.add_target(op({{0, 'X'}, {last, 'X'}}));
            b.add_target(op({{0, 'Z'}, {last, 'Z'}}));
            break;
    }
    return std::move(b).build();
}

namespace {

Circuit p2_arm() {
    // root 0 - tip 1, cherries 2 and 3 on the tip; the arm is discarded.
    CircuitBuilder b(4);
    for (uint32_t q = 0; q < 4; q++) {
        b.prep_plus(q);
    }
    b.cz(0, 1);
    b.cz(1, 2);
    b.cz(1, 3);
    size_t z = b.measure_z(1);
    size_t x1 = b.measure_x(2);
    size_t x2 = b.measure_x(3);
    b.mark_root(0);
    b.add_majority_rule({z, x1, x2}, PauliOp::single(4, 0, 'Z'));
    b.add_target(PauliOp::single(4, 0, 'X'));
    return std::move(b).build();
}

}  // namespace

std::vector<NamedCircuit> builtin_suite() {
    std::vector<NamedCircuit> suite;
    for (size_t n = 3; n <= 5; n++) {
        suite.push_back({"chain" + std::to_string(n), chain_circuit(n)});
    }
    ArmGeometry geometry;
    std::vector<LeafOutcome> one = {
        {LeafLabel::kFailed, 0},
        {LeafLabel::kSuccess, 0},
        {LeafLabel::kRedundant, -1},
        {LeafLabel::kRedundant, -1},
        {LeafLabel::kRedundant, -1},
    };
    suite.push_back({"p1_L5_one_connection", assemble(Variant::kP1, 5, geometry, one, 1).circuit});
    std::vector<LeafOutcome> two = {
        {LeafLabel::kSuccess, 0},
        {LeafLabel::kFailed, 1},
        {LeafLabel::kSuccess, 1},
        {LeafLabel::kRedundant, -1},
        {LeafLabel::kRedundant, -1},
    };
    suite.push_back({"p1_L5_two_connections", assemble(Variant::kP1, 5, geometry, two, 2).circuit});
    suite.push_back({"p2_arm", p2_arm()});
    std::vector<LeafOutcome> p2 = {
        {LeafLabel::kFailed, 0},
        {LeafLabel::kSuccess, 0},
        {LeafLabel::kRedundant, -1},
        {LeafLabel::kRedundant, -1},
    };
    suite.push_back({"p2_L4_one_connection", assemble(Variant::kP2, 4, geometry, p2, 1).circuit});
    return suite;
}

}  // namespace ptqg
