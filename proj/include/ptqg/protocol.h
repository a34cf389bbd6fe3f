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

#ifndef PTQG_PROTOCOL_H
#define PTQG_PROTOCOL_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptqg/circuit.h"
#include "ptqg/rng.h"

namespace ptqg {

/// P1: plain star, discards by Z measurement. P2: extended star whose tips
/// carry cherries so a discarded tip's Z outcome is majority-voted.
enum class Variant : uint8_t {
    kP1,
    kP2,
};

std::string_view variant_name(Variant v);
/// Accepts "p1"/"P1"/"p2"/"P2".
Variant parse_variant(std::string_view text);

/// Arm shape of an extended star. Only single-qubit arms (root - tip) are
/// supported; `cherries` degree-1 qubits hang off each tip and must be even so
/// the vote over tip + cherries has odd size.
struct ArmGeometry {
    int chain_length = 1;
    int cherries = 2;

    void validate() const;
    std::string str() const;
    bool operator==(const ArmGeometry &) const = default;
};

enum class QubitRole : uint8_t {
    kRoot,
    kLeafTip,
    kCherry,
};

struct Arm {
    uint32_t tip;
    std::vector<uint32_t> cherries;
};

struct ClusterGraph {
    std::vector<QubitRole> roles;
    std::vector<uint32_t> owner;  // star id of each qubit
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    uint32_t root = 0;
    std::vector<Arm> arms;

    size_t num_qubits() const {
        return roles.size();
    }
    bool is_connected() const;
};

/// One root with L leaf tips (K_{1,L}). Throws std::invalid_argument for L < 4.
ClusterGraph build_star(int L);
/// Star whose every tip carries `geometry.cherries` degree-1 cherries.
ClusterGraph build_extended_star(int L, const ArmGeometry &geometry);

struct ProtocolParams {
    Variant variant = Variant::kP1;
    double p_s = 0.9;
    double p_u = 0.0;
    double p_P = 0.0;
    double p_M = 0.0;
    int L = 7;
    double p_f_target = 0.01;
    uint64_t seed = 0;
    ArmGeometry geometry;

    /// Throws std::invalid_argument when a probability or L is out of range.
    void validate() const;
};

enum class LeafLabel : uint8_t {
    kSuccess,
    kFailed,
    kRedundant,
};

std::string_view leaf_label_name(LeafLabel label);

struct LeafOutcome {
    LeafLabel label;
    int direction;  // neighbor the leaf was spent on; -1 when redundant
    bool operator==(const LeafOutcome &) const = default;
};

struct LeafAllocation {
    std::vector<LeafOutcome> leaves;
    int success_count = 0;
    bool star_failed = false;
};

/// Walks the L leaves in order. Each leaf is spent on the lowest-numbered
/// direction that is still unconnected and succeeds with probability p_s;
/// once every direction is connected the remaining leaves are redundant.
LeafAllocation allocate_leaves(int L, double p_s, int neighbor_count, Rng &rng);

/// Bookkeeping for one qubit of an assembly region.
struct QubitInfo {
    int star;  // 0 = central, 1 + d = neighbor in direction d
    int arm;  // -1 for roots
    QubitRole role;
    /// Belongs to the central star or to the partner half of one of its
    /// successful bridges.
    bool footprint;
    /// Belongs to a central arm that was discarded (failed or redundant).
    bool discarded;
};

struct AssemblyRecord {
    Variant variant = Variant::kP1;
    int L = 0;
    ArmGeometry geometry;
    std::vector<LeafOutcome> leaves;
    int success_count = 0;
    bool star_failed = false;
    Circuit circuit;
    uint32_t central_root = 0;
    std::vector<uint32_t> neighbor_roots;
    std::vector<QubitInfo> qubits;

    /// One line per leaf: "<index> <label> <direction>".
    std::string to_text() const;
};

/// Builds the assembly circuit for a central star and `neighbor_count`
/// neighbor stars (each with L arms) from a given leaf allocation. The k-th
/// attempt fuses central arm i with arm i of the targeted neighbor.
AssemblyRecord assemble(
    Variant variant, int L, const ArmGeometry &geometry, std::span<const LeafOutcome> leaves, int neighbor_count);

AssemblyRecord sample_assembly(const ProtocolParams &params, Rng &rng, int neighbor_count = 4);

/// Probability that fewer than four of L independent fusions succeed.
double failure_probability(int L, double p_s);

/// Smallest L >= 4 with failure_probability(L, p_s) < p_f_max. Throws
/// ResourceError when no L <= cap qualifies.
int min_leaves(double p_s, double p_f_max, int cap = 1000000);

/// Majority of the direct Z outcome and the two indirect estimates.
bool indirect_z_decode(bool z0, bool x1, bool x2);

}  // namespace ptqg

#endif
