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

#ifndef PTQG_ANALYSIS_H
#define PTQG_ANALYSIS_H

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptqg/protocol.h"

namespace ptqg {

/// Surface-code constants used as thresholds for the renormalized error.
inline constexpr double kSurfaceThresholdIndependent = 0.033;
inline constexpr double kSurfaceThresholdCorrelated = 0.0205;
inline constexpr double kSurfaceCorrelatedErrorRate = 0.0026;

enum class ErrorSource : uint8_t {
    kRootSelf,
    kSuccessArms,
    kDiscardedLeaves,
    kGateErrors,
    kPrep,
    kMeas,
};
inline constexpr size_t kNumErrorSources = 6;

std::string_view error_source_name(ErrorSource s);

struct RenormalizedError {
    double p_r = 0;
    /// Indexed by ErrorSource; sums to p_r.
    std::array<double, kNumErrorSources> breakdown{};

    double operator[](ErrorSource s) const {
        return breakdown[static_cast<size_t>(s)];
    }
};

/// Leading-order p_r when every component fails with the same rate p_u.
RenormalizedError p_r_independent(Variant variant, double p_u, int L);

/// Linear coefficient of p_r_independent as p_u -> 0 (5 + L for P1, 17 for P2).
int independent_linear_coefficient(Variant variant, int L);

/// Smallest L at which P2's leading-order p_r is no worse than P1's.
int independent_crossover_L();

/// p_r with separate gate, preparation and measurement rates. `memory` is
/// added to p_M.
RenormalizedError p_r_full(Variant variant, double p_u, double p_P, double p_M, int L, double memory = 0);

struct ThresholdOptions {
    double p_r_target = 0.02;
    double p_f_max = 0.01;
    /// Count detected star failures as undetected errors (p_r + p_f).
    bool add_failure = false;
    double memory = 0;
    /// Solve with p_P = p_M = 0 instead of p_P = p_M = p_u.
    bool gate_only = false;
};

struct ThresholdPoint {
    double p_s = 0;
    Variant variant = Variant::kP1;
    int L = 0;
    double p_f = 0;
    double p_u_threshold = 0;
    int iterations = 0;
};

inline constexpr double kBisectionUpper = 0.1;
inline constexpr double kBisectionTolerance = 1e-8;
inline constexpr int kBisectionMaxIterations = 200;

/// Throws InfeasibleThreshold when the target is not crossed in (0, 0.1].
ThresholdPoint threshold_pu(double p_s, Variant variant, const ThresholdOptions &options = {});

struct CurveEntry {
    std::optional<ThresholdPoint> point;
    double p_s = 0;
    Variant variant = Variant::kP1;
    std::string error;  // set when point is empty
};

/// One entry per (p_s, variant), p_s-major. Errors are recorded per entry.
std::vector<CurveEntry> threshold_curve(
    std::span<const double> p_s_grid, std::span<const Variant> variants, const ThresholdOptions &options = {});

/// Inclusive grid a:b:step. Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(std::string_view text);

}  // namespace ptqg

#endif
