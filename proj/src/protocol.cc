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

#include "ptqg/protocol.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ptqg/errors.h"

namespace ptqg {

std::string_view variant_name(Variant v) {
    return v == Variant::kP1 ? "p1" : "p2";
}

Variant parse_variant(std::string_view text) {
    if (text == "p1" || text == "P1") {
        return Variant::kP1;
    }
    if (text == "p2" || text == "P2") {
        return Variant::kP2;
    }
    throw std::invalid_argument("unknown protocol variant '" + std::string(text) + "'");
}

void ArmGeometry::validate() const {
    if (chain_length != 1) {
        throw std::invalid_argument("arm chain length must be 1, got " + std::to_string(chain_length));
    }
    if (cherries < 0 || cherries % 2 != 0) {
        throw std::invalid_argument(
            "cherries per tip must be a non-negative even number, got " + std::to_string(cherries));
    }
}

std::string ArmGeometry::str() const {
    return "chain" + std::to_string(chain_length) + "-cherries" + std::to_string(cherries);
}

bool ClusterGraph::is_connected() const {
    size_t n = num_qubits();
    if (n == 0) {
        return true;
    }
    std::vector<std::vector<uint32_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(n, false);
    std::vector<uint32_t> stack = {0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (uint32_t u : adj[v]) {
            if (!seen[u]) {
                seen[u] = true;
                count++;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

namespace {

void check_leaf_count(int L) {
    if (L < 4) {
        throw std::invalid_argument("a star needs at least 4 leaves, got L=" + std::to_string(L));
    }
}

// Appends one star (root first, then tip and cherries arm by arm).
void append_star(ClusterGraph &g, int L, int cherries, uint32_t star_id) {
    uint32_t root = static_cast<uint32_t>(g.num_qubits());
    g.roles.push_back(QubitRole::kRoot);
    g.owner.push_back(star_id);
    g.root = root;
    for (int i = 0; i < L; i++) {
        Arm arm;
        arm.tip = static_cast<uint32_t>(g.num_qubits());
        g.roles.push_back(QubitRole::kLeafTip);
        g.owner.push_back(star_id);
        g.edges.emplace_back(root, arm.tip);
        for (int c = 0; c < cherries; c++) {
            uint32_t q = static_cast<uint32_t>(g.num_qubits());
            g.roles.push_back(QubitRole::kCherry);
            g.owner.push_back(star_id);
            g.edges.emplace_back(arm.tip, q);
            arm.cherries.push_back(q);
        }
        g.arms.push_back(std::move(arm));
    }
}

}  // namespace

ClusterGraph build_star(int L) {
    check_leaf_count(L);
    ClusterGraph g;
    append_star(g, L, 0, 0);
    return g;
}

ClusterGraph build_extended_star(int L, const ArmGeometry &geometry) {
    check_leaf_count(L);
    geometry.validate();
    ClusterGraph g;
    append_star(g, L, geometry.cherries, 0);
    return g;
}

void ProtocolParams::validate() const {
    auto check = [](double p, const char *name, bool allow_zero, bool allow_one) {
        bool ok = std::isfinite(p) && (allow_zero ? p >= 0 : p > 0) && (allow_one ? p <= 1 : p < 1);
        if (!ok) {
            throw std::invalid_argument(std::string(name) + " out of range: " + std::to_string(p));
        }
    };
    check(p_s, "p_s", false, true);
    check(p_u, "p_u", true, false);
    check(p_P, "p_P", true, false);
    check(p_M, "p_M", true, false);
    check(p_f_target, "p_f_target", false, false);
    check_leaf_count(L);
    if (variant == Variant::kP2) {
        geometry.validate();
    }
}

std::string_view leaf_label_name(LeafLabel label) {
    switch (label) {
        case LeafLabel::kSuccess:
            return "SUCCESS";
        case LeafLabel::kFailed:
            return "FAILED";
        case LeafLabel::kRedundant:
            return "REDUNDANT";
    }
    return "?";
}

LeafAllocation allocate_leaves(int L, double p_s, int neighbor_count, Rng &rng) {
    if (neighbor_count < 1 || neighbor_count > 4) {
        throw std::invalid_argument("neighbor count must be in [1, 4]");
    }
    LeafAllocation result;
    int direction = 0;
    for (int i = 0; i < L; i++) {
        if (direction == neighbor_count) {
            result.leaves.push_back({LeafLabel::kRedundant, -1});
            continue;
        }
        // One shared trial per fusion attempt.
        if (rng.bernoulli(p_s)) {
            result.leaves.push_back({LeafLabel::kSuccess, direction});
            result.success_count++;
            direction++;
        } else {
            result.leaves.push_back({LeafLabel::kFailed, direction});
        }
    }
    result.star_failed = result.success_count < neighbor_count;
    return result;
}

namespace {

class AssemblyBuilder {
   public:
    AssemblyBuilder(Variant variant, int L, const ArmGeometry &geometry, int neighbor_count)
        : cherries_(variant == Variant::kP2 ? geometry.cherries : 0), stars_(neighbor_count + 1) {
        ClusterGraph region;
        for (int s = 0; s < stars_; s++) {
            append_star(region, L, cherries_, s);
            roots_.push_back(region.root);
            std::vector<Arm> arms(region.arms.end() - L, region.arms.end());
            arms_.push_back(std::move(arms));
        }
        graph_ = std::move(region);
        builder_.emplace(graph_.num_qubits());
        edges_.resize(stars_);
    }

    const ClusterGraph &graph() const {
        return graph_;
    }
    uint32_t root(int star) const {
        return roots_[star];
    }
    const Arm &arm(int star, int i) const {
        return arms_[star][i];
    }
    CircuitBuilder &circuit() {
        return *builder_;
    }

    void build_stars() {
        for (int s = 0; s < stars_; s++) {
            builder_->prep_plus(roots_[s]);
            for (const Arm &a : arms_[s]) {
                builder_->prep_plus(a.tip);
                for (uint32_t c : a.cherries) {
                    builder_->prep_plus(c);
                }
            }
        }
        for (int s = 0; s < stars_; s++) {
            for (const Arm &a : arms_[s]) {
                builder_->cz(roots_[s], a.tip);
                for (uint32_t c : a.cherries) {
                    builder_->cz(a.tip, c);
                }
            }
        }
    }

    /// Removes an arm: Z on the tip, X on its cherries, tip outcome decoded
    /// by majority when cherries exist.
    void discard(int star, int i) {
        const Arm &a = arms_[star][i];
        size_t n = graph_.num_qubits();
        size_t tip_m = builder_->measure_z(a.tip);
        PauliOp byproduct = PauliOp::single(n, roots_[star], 'Z');
        if (a.cherries.empty()) {
            builder_->add_parity_rule(tip_m, std::move(byproduct));
            return;
        }
        std::vector<size_t> votes = {tip_m};
        for (uint32_t c : a.cherries) {
            votes.push_back(builder_->measure_x(c));
        }
        builder_->add_majority_rule(std::move(votes), std::move(byproduct));
    }

    /// Fusion attempt between central arm i and arm i of neighbor `star`.
    void attempt(int star, int i, bool success) {
        const Arm &mine = arms_[0][i];
        const Arm &theirs = arms_[star][i];
        builder_->cz(mine.tip, theirs.tip, success);
        if (!success) {
            discard(0, i);
            discard(star, i);
            return;
        }
        size_t n = graph_.num_qubits();
        PauliOp on_central = PauliOp::single(n, roots_[0], 'Z');
        PauliOp on_neighbor = PauliOp::single(n, roots_[star], 'Z');
        // Bridge root0 - tip - tip' - root': a flip on one side lands on the
        // root across the bridge.
        for (uint32_t c : mine.cherries) {
            builder_->add_parity_rule(builder_->measure_z(c), on_neighbor);
        }
        for (uint32_t c : theirs.cherries) {
            builder_->add_parity_rule(builder_->measure_z(c), on_central);
        }
        builder_->add_parity_rule(builder_->measure_x(mine.tip), on_neighbor);
        builder_->add_parity_rule(builder_->measure_x(theirs.tip), on_central);
        edges_[0].push_back(star);
        edges_[star].push_back(0);
    }

    Circuit finish() {
        size_t n = graph_.num_qubits();
        for (int s = 0; s < stars_; s++) {
            builder_->mark_root(roots_[s]);
        }
        for (int s = 0; s < stars_; s++) {
            PauliOp t = PauliOp::single(n, roots_[s], 'X');
            for (int u : edges_[s]) {
                t.set_z(roots_[u], true);
            }
            builder_->add_target(std::move(t));
        }
        return std::move(*builder_).build();
    }

   private:
    int cherries_;
    int stars_;
    ClusterGraph graph_;
    std::vector<uint32_t> roots_;
    std::vector<std::vector<Arm>> arms_;
    std::optional<CircuitBuilder> builder_;
    std::vector<std::vector<int>> edges_;
};

}  // namespace

AssemblyRecord assemble(
    Variant variant, int L, const ArmGeometry &geometry, std::span<const LeafOutcome> leaves, int neighbor_count) {
    check_leaf_count(L);
    if (variant == Variant::kP2) {
        geometry.validate();
    }
    if (neighbor_count < 1 || neighbor_count > 4) {
        throw std::invalid_argument("neighbor count must be in [1, 4]");
    }
    if (leaves.size() != static_cast<size_t>(L)) {
        throw std::invalid_argument("leaf allocation size does not match L");
    }

    AssemblyBuilder b(variant, L, geometry, neighbor_count);
    AssemblyRecord rec;
    rec.variant = variant;
    rec.L = L;
    rec.geometry = geometry;
    rec.leaves.assign(leaves.begin(), leaves.end());

    size_t n = b.graph().num_qubits();
    rec.qubits.resize(n);
    for (size_t q = 0; q < n; q++) {
        rec.qubits[q] = {static_cast<int>(b.graph().owner[q]), -1, b.graph().roles[q], b.graph().owner[q] == 0, false};
    }
    for (int s = 0; s <= neighbor_count; s++) {
        for (int i = 0; i < L; i++) {
            const Arm &a = b.arm(s, i);
            rec.qubits[a.tip].arm = i;
            for (uint32_t c : a.cherries) {
                rec.qubits[c].arm = i;
            }
        }
    }
    auto mark_arm = [&](int star, int i, bool footprint, bool discarded) {
        const Arm &a = b.arm(star, i);
        rec.qubits[a.tip].footprint |= footprint;
        rec.qubits[a.tip].discarded |= discarded;
        for (uint32_t c : a.cherries) {
            rec.qubits[c].footprint |= footprint;
            rec.qubits[c].discarded |= discarded;
        }
    };

    b.build_stars();
    std::vector<std::vector<bool>> used(neighbor_count + 1, std::vector<bool>(L, false));
    for (int i = 0; i < L; i++) {
        const LeafOutcome &leaf = leaves[i];
        if (leaf.label == LeafLabel::kRedundant) {
            continue;
        }
        if (leaf.direction < 0 || leaf.direction >= neighbor_count) {
            throw std::invalid_argument("leaf " + std::to_string(i) + " targets an invalid direction");
        }
        int star = leaf.direction + 1;
        bool success = leaf.label == LeafLabel::kSuccess;
        b.attempt(star, i, success);
        used[star][i] = true;
        if (success) {
            rec.success_count++;
            mark_arm(star, i, true, false);
        } else {
            mark_arm(0, i, true, true);
        }
    }
    for (int i = 0; i < L; i++) {
        if (leaves[i].label == LeafLabel::kRedundant) {
            b.discard(0, i);
            mark_arm(0, i, true, true);
        }
    }
    // Neighbor arms facing away from the central star stand in for their own
    // connections outside the region.
    for (int s = 1; s <= neighbor_count; s++) {
        for (int i = 0; i < L; i++) {
            if (!used[s][i]) {
                b.discard(s, i);
            }
        }
    }
    rec.star_failed = rec.success_count < neighbor_count;
    rec.central_root = b.root(0);
    for (int s = 1; s <= neighbor_count; s++) {
        rec.neighbor_roots.push_back(b.root(s));
    }
    rec.circuit = b.finish();
    return rec;
}

AssemblyRecord sample_assembly(const ProtocolParams &params, Rng &rng, int neighbor_count) {
    params.validate();
    LeafAllocation alloc = allocate_leaves(params.L, params.p_s, neighbor_count, rng);
    return assemble(params.variant, params.L, params.geometry, alloc.leaves, neighbor_count);
}

std::string AssemblyRecord::to_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < leaves.size(); i++) {
        out << i << " " << leaf_label_name(leaves[i].label) << " " << leaves[i].direction << "\n";
    }
    return out.str();
}

double failure_probability(int L, double p_s) {
    if (L < 0) {
        throw std::invalid_argument("L must be non-negative");
    }
    if (!(p_s >= 0 && p_s <= 1)) {
        throw std::invalid_argument("p_s out of range");
    }
    if (L < 4) {
        return 1.0;
    }
    double total = 0;
    for (int k = 0; k <= 3; k++) {
        int rest = L - k;
        // Exact zeros first: 0 * log(0) would poison the log-domain sum.
        if ((k > 0 && p_s == 0) || (rest > 0 && p_s == 1)) {
            continue;
        }
        double log_term = std::lgamma(L + 1.0) - std::lgamma(k + 1.0) - std::lgamma(rest + 1.0);
        if (k > 0) {
            log_term += k * std::log(p_s);
        }
        if (rest > 0) {
            log_term += rest * std::log1p(-p_s);
        }
        total += std::exp(log_term);
    }
    return std::min(total, 1.0);
}

int min_leaves(double p_s, double p_f_max, int cap) {
    if (!(p_s > 0 && p_s <= 1)) {
        throw std::invalid_argument("p_s must be in (0, 1]");
    }
    if (!(p_f_max > 0 && p_f_max < 1)) {
        throw std::invalid_argument("p_f_max must be in (0, 1)");
    }
    for (int L = 4; L <= cap; L++) {
        if (failure_probability(L, p_s) < p_f_max) {
            return L;
        }
    }
    throw ResourceError("no L <= " + std::to_string(cap) + " reaches the failure target at p_s=" + std::to_string(p_s));
}

bool indirect_z_decode(bool z0, bool x1, bool x2) {
    return (int(z0) + int(x1) + int(x2)) >= 2;
}

}  // namespace ptqg
