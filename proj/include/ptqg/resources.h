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

#ifndef PTQG_RESOURCES_H
#define PTQG_RESOURCES_H

#include <string>
#include <string_view>
#include <vector>

namespace ptqg {

/// A positive count kept as log10 so values like 1e100 stay usable.
struct Count {
    double log10 = 0;

    /// Throws RangeError when the count does not fit in a double.
    double value() const;
    /// Mantissa in [1, 10).
    double mantissa() const;
    int exponent() const;
};

/// Expected gates to grow one star of L leaves: (L/p_s + L) / p_s^L.
Count r_star(int L, double p_s);

enum class LogBase {
    kTwo,
    kE,
    kTen,
};

std::string_view log_base_name(LogBase b);
LogBase parse_log_base(std::string_view text);

/// constant * (L / p_s^2) * (1/p_s)^{log L} for log-depth preparation.
Count r_star_improved(int L, double p_s, LogBase base = LogBase::kTwo, double constant = 1.0);

Count r_total(Count r_star_value, Count r_towc);

struct ResourceEstimate {
    int L = 0;
    double p_s = 0;
    Count r_towc;
    bool improved = false;
    LogBase base = LogBase::kTwo;
    Count r_star;
    Count r_star_improved;
    /// r_star (or r_star_improved when `improved`) times r_towc.
    Count r_total;
};

ResourceEstimate estimate_resources(int L, double p_s, double r_towc, bool improved, LogBase base = LogBase::kTwo);

struct OperatingPoint {
    double p_s = 0;
    double p_u = 0;
    double r_towc = 0;
    /// Where r_towc came from.
    std::string r_towc_source;
};

struct ComparisonRow {
    std::string scheme;
    double p_s = 0;
    double p_u = 0;
    int L = 0;  // 0 for cited rows
    double r_star_log10 = 0;  // NaN for cited rows
    double r_towc_log10 = 0;  // NaN for cited rows
    double r_total_log10 = 0;
    std::string source;
};

/// Typical gates per encoded operation on the topological layer.
inline constexpr double kTypicalRTowc = 1e7;
/// Value that turns R_star ~ 30 into R_tot ~ 1e5.
inline constexpr double kHighSuccessRTowc = 3.2e3;

/// Operating points used when none are given.
std::vector<OperatingPoint> default_operating_points();

/// One computed row per point (L from min_leaves at p_f < 1%), each followed
/// by the published totals of other schemes at the same p_s.
std::vector<ComparisonRow> comparison_table(const std::vector<OperatingPoint> &points);

}  // namespace ptqg

#endif
