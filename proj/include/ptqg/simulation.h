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

#ifndef PTQG_SIMULATION_H
#define PTQG_SIMULATION_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ptqg/analysis.h"
#include "ptqg/protocol.h"

namespace ptqg {

/// How single-qubit preparation and measurement faults are drawn.
enum class NoiseConvention : uint8_t {
    /// A faulty preparation leaves Z (|+> -> |->); a faulty measurement
    /// reports the opposite outcome.
    kFaceValue,
    /// X, Y, Z with probability p/3 each.
    kDepolarizing,
};

/// Which locations count toward the central star's p_r.
enum class Accounting : uint8_t {
    /// Locations on the central star and on the partner halves of its
    /// successful bridges, charged when they flip any root.
    kFootprint,
    /// Every location of the region, charged when it flips the central root.
    kPhysical,
};

std::string_view convention_name(NoiseConvention c);
NoiseConvention parse_convention(std::string_view text);
std::string_view accounting_name(Accounting a);
Accounting parse_accounting(std::string_view text);

struct EnumerationOptions {
    NoiseConvention convention = NoiseConvention::kFaceValue;
    Accounting accounting = Accounting::kFootprint;
    bool count_benign_as_flip = false;
    /// Give failed CZs the same 15-Pauli fault set as successful ones.
    bool depolarize_failed_cz = false;
};

/// Region a location is attributed to.
enum class Region : uint8_t {
    kRootSelf,
    kSuccessArms,
    kDiscardedLeaves,
};
inline constexpr size_t kNumRegions = 3;

/// Exact first-order tally for one assembly. Gate counts are in units of
/// p_u/15, preparation and measurement counts in units of p/3.
struct LocationTally {
    std::array<int64_t, kNumRegions> gate{};
    std::array<int64_t, kNumRegions> prep{};
    std::array<int64_t, kNumRegions> meas{};
    /// Flipping pairs of prep/measurement faults inside one discarded central
    /// arm, in units of p^2/9.
    int64_t discarded_pairs = 0;

    LocationTally &operator+=(const LocationTally &o);
};

inline constexpr int64_t kGateUnits = 15;
inline constexpr int64_t kSingleUnits = 3;

/// Enumerates every single fault location of the assembly (including the
/// root readouts) and tallies those that are charged to the central star.
LocationTally tally_single_faults(const AssemblyRecord &rec, const EnumerationOptions &options);

struct SamplingOptions {
    Variant variant = Variant::kP1;
    double p_s = 0.9;
    ArmGeometry geometry;
    size_t samples = 10000;
    uint64_t seed = 0;
    int workers = 1;
    int neighbor_count = 4;
    EnumerationOptions enumeration;
};

/// Per-L averages of one sampling run.
struct CoefficientPoint {
    int L = 0;
    /// p_r / p for each source at first order.
    double gate = 0;
    double prep = 0;
    double meas = 0;
    double gate_stderr = 0;
    /// First-order discarded-leaf parts: preparation plus measurement
    /// (p_P = p_M), and gates.
    double discarded_single_first_order = 0;
    double discarded_gate_first_order = 0;
    /// Second-order discarded-leaf coefficient (prep and measurement pairs).
    double discarded_second_order = 0;
    /// Fraction of draws that produced a failed star and were redrawn.
    double failed_draw_fraction = 0;
};

struct LinearFit {
    double a = 0;
    double b = 0;
    double r_squared = 0;
};

/// Least squares y = a + b x. Needs two distinct x values.
LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y);

struct CoefficientFit {
    SamplingOptions options;
    std::vector<CoefficientPoint> points;
    LinearFit gate;
    LinearFit prep;
    LinearFit meas;
    std::string geometry;
    std::vector<std::string> warnings;
};

/// Samples non-failed assemblies for each L and averages the exact
/// first-order tallies, then fits each source linearly in L.
CoefficientFit extract_coefficients(const SamplingOptions &options, const std::vector<int> &L_grid);

/// Single point of the above.
CoefficientPoint sample_coefficients(const SamplingOptions &options, int L);

struct CorrelationReport {
    SamplingOptions options;
    int L = 0;
    double p_u = 0;
    double p_P = 0;
    double p_M = 0;
    double independent = 0;
    double nearest = 0;
    double second_nearest = 0;
    double higher_order = 0;
    double ratio = 0;
};

/// Classifies every root-flipping single fault of the full region by the set
/// of roots it flips and averages the weighted probabilities over samples.
CorrelationReport classify_correlations(const SamplingOptions &options, int L, double p_u, double p_P, double p_M);

struct StarFailureCheck {
    size_t samples = 0;
    size_t failures = 0;
    double empirical = 0;
    double predicted = 0;
    double stderr_ = 0;
    double z = 0;
};

StarFailureCheck check_star_failures(int L, double p_s, size_t samples, uint64_t seed, int workers);

/// Random gate-fault sampling against the exhaustive first-order sum on the
/// same assemblies, central root only.
struct MonteCarloCheck {
    size_t samples = 0;
    double empirical = 0;
    double first_order = 0;
    double diff_stderr = 0;
    double z = 0;
};

MonteCarloCheck check_random_faults(const SamplingOptions &options, int L, double p_u);

}  // namespace ptqg

#endif
