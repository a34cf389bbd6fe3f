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

#include "ptqg/analysis.h"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ptqg/errors.h"

namespace ptqg {

std::string_view error_source_name(ErrorSource s) {
    switch (s) {
        case ErrorSource::kRootSelf:
            return "ROOT_SELF";
        case ErrorSource::kSuccessArms:
            return "SUCCESS_ARMS";
        case ErrorSource::kDiscardedLeaves:
            return "DISCARDED_LEAVES";
        case ErrorSource::kGateErrors:
            return "GATE_ERRORS";
        case ErrorSource::kPrep:
            return "PREP";
        case ErrorSource::kMeas:
            return "MEAS";
    }
    return "?";
}

namespace {

void check_L(int L) {
    if (L < 4) {
        throw std::invalid_argument("L must be at least 4, got " + std::to_string(L));
    }
}

void check_rate(double p, const char *name) {
    if (!std::isfinite(p) || p < 0 || p > 1) {
        throw std::invalid_argument(std::string(name) + " must be a probability");
    }
}

void set(RenormalizedError &r, ErrorSource s, double v) {
    r.breakdown[static_cast<size_t>(s)] = v;
}

void total(RenormalizedError &r) {
    r.p_r = 0;
    for (double v : r.breakdown) {
        r.p_r += v;
    }
}

}  // namespace

RenormalizedError p_r_independent(Variant variant, double p_u, int L) {
    check_L(L);
    check_rate(p_u, "p_u");
    RenormalizedError r;
    set(r, ErrorSource::kRootSelf, p_u);
    if (variant == Variant::kP1) {
        set(r, ErrorSource::kSuccessArms, 4 * 2 * p_u);
        set(r, ErrorSource::kDiscardedLeaves, (L - 4) * p_u);
    } else {
        set(r, ErrorSource::kSuccessArms, 4 * 4 * p_u);
        set(r, ErrorSource::kDiscardedLeaves, (L - 4) * 3 * p_u * p_u);
    }
    total(r);
    return r;
}

int independent_linear_coefficient(Variant variant, int L) {
    check_L(L);
    return variant == Variant::kP1 ? 5 + L : 17;
}

int independent_crossover_L() {
    for (int L = 4;; L++) {
        if (independent_linear_coefficient(Variant::kP1, L) >= independent_linear_coefficient(Variant::kP2, L)) {
            return L;
        }
    }
}

RenormalizedError p_r_full(Variant variant, double p_u, double p_P, double p_M, int L, double memory) {
    check_L(L);
    check_rate(p_u, "p_u");
    check_rate(p_P, "p_P");
    check_rate(p_M, "p_M");
    check_rate(memory, "memory");
    p_M += memory;
    RenormalizedError r;
    set(r, ErrorSource::kRootSelf, p_P + p_M);
    if (variant == Variant::kP1) {
        set(r, ErrorSource::kGateErrors, (7.7 + 0.64 * L) * p_u);
        set(r, ErrorSource::kSuccessArms, 4 * 2 * (p_M + p_P));
        set(r, ErrorSource::kDiscardedLeaves, (L - 4) * p_M);
    } else {
        set(r, ErrorSource::kGateErrors, (11 + 0.90 * L) * p_u);
        set(r, ErrorSource::kSuccessArms, 4 * 2 * (2 * p_M + p_P));
        set(r, ErrorSource::kDiscardedLeaves, (L - 4) * (3 * p_M + p_P) * (p_M + p_P));
    }
    total(r);
    return r;
}

ThresholdPoint threshold_pu(double p_s, Variant variant, const ThresholdOptions &options) {
    if (!(p_s > 0 && p_s <= 1)) {
        throw std::invalid_argument("p_s must be in (0, 1]");
    }
    if (!(options.p_r_target > 0 && options.p_r_target < 1)) {
        throw std::invalid_argument("target must be in (0, 1)");
    }
    ThresholdPoint pt;
    pt.p_s = p_s;
    pt.variant = variant;
    pt.L = min_leaves(p_s, options.p_f_max);
    pt.p_f = failure_probability(pt.L, p_s);

    auto excess = [&](double p_u) {
        double side = options.gate_only ? 0 : p_u;
        double v = p_r_full(variant, p_u, side, side, pt.L, options.memory).p_r;
        if (options.add_failure) {
            v += pt.p_f;
        }
        return v - options.p_r_target;
    };
    if (excess(0) >= 0) {
        throw InfeasibleThreshold("target p_r is already exceeded at p_u = 0");
    }
    if (excess(kBisectionUpper) < 0) {
        throw InfeasibleThreshold("target p_r is not reached for p_u <= 0.1");
    }
    double lo = 0, hi = kBisectionUpper;
    int it = 0;
    // Keep halving past the p_u tolerance until p_r itself is pinned down.
    while (it < kBisectionMaxIterations) {
        double mid = 0.5 * (lo + hi);
        double f = excess(mid);
        it++;
        if (f < 0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < kBisectionTolerance && std::abs(excess(0.5 * (lo + hi))) < 1e-12) {
            break;
        }
        if (hi - lo <= 0x1p-60) {
            break;
        }
    }
    pt.p_u_threshold = 0.5 * (lo + hi);
    pt.iterations = it;
    return pt;
}

std::vector<CurveEntry> threshold_curve(
    std::span<const double> p_s_grid, std::span<const Variant> variants, const ThresholdOptions &options) {
    std::vector<CurveEntry> out;
    for (double p_s : p_s_grid) {
        for (Variant v : variants) {
            CurveEntry e;
            e.p_s = p_s;
            e.variant = v;
            try {
                e.point = threshold_pu(p_s, v, options);
            } catch (const std::exception &ex) {
                e.error = ex.what();
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace {

double parse_number(std::string_view text) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    size_t c1 = text.find(':');
    size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
        throw std::invalid_argument("grid must look like a:b:step, got '" + std::string(text) + "'");
    }
    double a = parse_number(text.substr(0, c1));
    double b = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    double step = parse_number(text.substr(c2 + 1));
    if (!(step > 0) || b < a) {
        throw std::invalid_argument("grid needs step > 0 and a <= b");
    }
    double span = (b - a) / step;
    if (span > 1e6) {
        throw std::invalid_argument("grid has too many points");
    }
    auto count = static_cast<size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (size_t i = 0; i < count; i++) {
        // Round away accumulated binary noise so 0.1:0.9:0.1 prints cleanly.
        double v = std::round((a + static_cast<double>(i) * step) * 1e12) / 1e12;
        out.push_back(v);
    }
    return out;
}

}  // namespace ptqg
