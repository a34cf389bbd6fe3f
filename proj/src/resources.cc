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

#include "ptqg/resources.h"

#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptqg/errors.h"
#include "ptqg/protocol.h"

namespace ptqg {

double Count::value() const {
    if (log10 > DBL_MAX_10_EXP) {
        throw RangeError("count 10^" + std::to_string(log10) + " exceeds double range", log10);
    }
    return std::pow(10.0, log10);
}

int Count::exponent() const {
    return static_cast<int>(std::floor(log10));
}

double Count::mantissa() const {
    return std::pow(10.0, log10 - std::floor(log10));
}

namespace {

void check_inputs(int L, double p_s, int min_L) {
    if (L < min_L) {
        throw std::invalid_argument("L must be at least " + std::to_string(min_L));
    }
    if (!(p_s > 0 && p_s <= 1)) {
        throw std::invalid_argument("p_s must be in (0, 1]");
    }
}

}  // namespace

Count r_star(int L, double p_s) {
    check_inputs(L, p_s, 1);
    double l = static_cast<double>(L);
    // log10(L (1 + p_s) / p_s) - L log10(p_s)
    return {std::log10(l) + std::log10(1 + p_s) - std::log10(p_s) - l * std::log10(p_s)};
}

std::string_view log_base_name(LogBase b) {
    switch (b) {
        case LogBase::kTwo:
            return "2";
        case LogBase::kE:
            return "e";
        case LogBase::kTen:
            return "10";
    }
    return "?";
}

LogBase parse_log_base(std::string_view text) {
    if (text == "2") {
        return LogBase::kTwo;
    }
    if (text == "e") {
        return LogBase::kE;
    }
    if (text == "10") {
        return LogBase::kTen;
    }
    throw std::invalid_argument("log base must be 2, e or 10");
}

Count r_star_improved(int L, double p_s, LogBase base, double constant) {
    check_inputs(L, p_s, 2);
    if (!(constant > 0) || !std::isfinite(constant)) {
        throw std::invalid_argument("constant must be positive");
    }
    double l = static_cast<double>(L);
    double depth = base == LogBase::kTwo ? std::log2(l) : base == LogBase::kE ? std::log(l) : std::log10(l);
    return {std::log10(constant) + std::log10(l) - 2 * std::log10(p_s) - depth * std::log10(p_s)};
}

Count r_total(Count r_star_value, Count r_towc) {
    return {r_star_value.log10 + r_towc.log10};
}

ResourceEstimate estimate_resources(int L, double p_s, double r_towc, bool improved, LogBase base) {
    if (!(r_towc > 0) || !std::isfinite(r_towc)) {
        throw std::invalid_argument("r_towc must be positive");
    }
    ResourceEstimate est;
    est.L = L;
    est.p_s = p_s;
    est.r_towc = {std::log10(r_towc)};
    est.improved = improved;
    est.base = base;
    est.r_star = r_star(L, p_s);
    est.r_star_improved = r_star_improved(L, p_s, base);
    est.r_total = r_total(improved ? est.r_star_improved : est.r_star, est.r_towc);
    return est;
}

std::vector<OperatingPoint> default_operating_points() {
    return {
        {0.5, 2e-4, kTypicalRTowc, "typical"},
        {0.9, 2e-4, kHighSuccessRTowc, "back-solved"},
    };
}

namespace {

struct Citation {
    const char *scheme;
    double p_s;
    double r_total_log10;
};

constexpr Citation kCitations[] = {
    {"dawson", 0.5, 23},
    {"cho", 0.5, 18},
    {"goto", 0.9, 7},
};

}  // namespace

std::vector<ComparisonRow> comparison_table(const std::vector<OperatingPoint> &points) {
    std::vector<ComparisonRow> rows;
    double nan = std::numeric_limits<double>::quiet_NaN();
    for (const OperatingPoint &pt : points) {
        if (!(pt.p_u >= 0 && pt.p_u < 1)) {
            throw std::invalid_argument("p_u must be in [0, 1)");
        }
        int L = min_leaves(pt.p_s, 0.01);
        ResourceEstimate est = estimate_resources(L, pt.p_s, pt.r_towc, false);
        rows.push_back({"this", pt.p_s, pt.p_u, L, est.r_star.log10, est.r_towc.log10, est.r_total.log10,
                        "computed; r_towc " + pt.r_towc_source});
        for (const Citation &c : kCitations) {
            if (std::abs(c.p_s - pt.p_s) < 1e-12) {
                rows.push_back({c.scheme, pt.p_s, pt.p_u, 0, nan, nan, c.r_total_log10, "cited"});
            }
        }
    }
    return rows;
}

}  // namespace ptqg
