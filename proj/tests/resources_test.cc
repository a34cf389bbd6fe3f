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

#include <gtest/gtest.h>

#include <cmath>

#include "ptqg/errors.h"

using namespace ptqg;

namespace {

double direct_r_star(int L, double p_s) {
    return (L / p_s + L) / std::pow(p_s, L);
}

}  // namespace

TEST(RStar, Anchors) {
    EXPECT_NEAR(r_star(7, 0.9).value(), 30.9, 0.05);
    double v = r_star(17, 0.5).value();
    EXPECT_GE(v, 6.3e6);
    EXPECT_LE(v, 7.1e6);
    double big = r_star(97, 0.1).log10;
    EXPECT_GE(big, 99);
    EXPECT_LE(big, 101);
    double imp = r_star_improved(97, 0.1).log10;
    EXPECT_GE(imp, 10);
    EXPECT_LE(imp, 12);
    double tot = r_total(r_star(17, 0.5), Count{7}).log10;
    EXPECT_GE(tot, 13.5);
    EXPECT_LE(tot, 14.5);
}

TEST(RStar, CertainSuccess) {
    for (int L : {4, 9, 100}) {
        EXPECT_NEAR(r_star(L, 1).value(), 2.0 * L, 1e-9 * L);
        EXPECT_NEAR(r_star_improved(L, 1).value(), L, 1e-9 * L);
    }
}

TEST(RStarProperty, LogDomainMatchesDirect) {
    for (int L = 1; L <= 60; L += 7) {
        for (double p_s = 0.05; p_s <= 1.0; p_s += 0.07) {
            double direct = direct_r_star(L, p_s);
            EXPECT_NEAR(r_star(L, p_s).value() / direct, 1.0, 1e-12) << L << " " << p_s;
        }
    }
}

TEST(RStarProperty, Monotone) {
    for (double p_s : {0.1, 0.5, 0.9}) {
        for (int L = 4; L < 40; L++) {
            EXPECT_LT(r_star(L, p_s).log10, r_star(L + 1, p_s).log10);
        }
    }
    for (int L : {4, 20}) {
        for (double p_s = 0.1; p_s < 0.95; p_s += 0.05) {
            EXPECT_GT(r_star(L, p_s).log10, r_star(L, p_s + 0.05).log10);
        }
    }
}

TEST(RStarProperty, ImprovedNeverWorseAtLowSuccess) {
    for (int L = 4; L <= 120; L += 3) {
        double prev_gap = -1;
        for (double p_s = 0.5; p_s >= 0.05; p_s -= 0.05) {
            double gap = r_star(L, p_s).log10 - r_star_improved(L, p_s).log10;
            EXPECT_GE(gap, 0) << L << " " << p_s;
            EXPECT_GT(gap, prev_gap);
            prev_gap = gap;
        }
    }
}

TEST(RStarImproved, BasesAndConstant) {
    double b2 = r_star_improved(97, 0.1, LogBase::kTwo).log10;
    double be = r_star_improved(97, 0.1, LogBase::kE).log10;
    double b10 = r_star_improved(97, 0.1, LogBase::kTen).log10;
    EXPECT_GT(b2, be);
    EXPECT_GT(be, b10);
    EXPECT_NEAR(r_star_improved(97, 0.1, LogBase::kTwo, 100).log10, b2 + 2, 1e-12);
    EXPECT_THROW(r_star_improved(97, 0.1, LogBase::kTwo, 0), std::invalid_argument);
    EXPECT_EQ(parse_log_base("e"), LogBase::kE);
    EXPECT_EQ(log_base_name(LogBase::kTen), "10");
    EXPECT_THROW(parse_log_base("3"), std::invalid_argument);
}

TEST(Count, RangeAndParts) {
    Count c{400};
    EXPECT_THROW(c.value(), RangeError);
    EXPECT_EQ(c.exponent(), 400);
    EXPECT_NEAR(c.mantissa(), 1, 1e-12);
    Count d{std::log10(6.68e6)};
    EXPECT_EQ(d.exponent(), 6);
    EXPECT_NEAR(d.mantissa(), 6.68, 1e-9);
}

TEST(RStar, InvalidInputs) {
    EXPECT_THROW(r_star(0, 0.5), std::invalid_argument);
    EXPECT_THROW(r_star(5, 0), std::invalid_argument);
    EXPECT_THROW(r_star(5, 1.5), std::invalid_argument);
    EXPECT_THROW(estimate_resources(5, 0.5, 0, false), std::invalid_argument);
}

TEST(EstimateResources, TotalIsProduct) {
    ResourceEstimate e = estimate_resources(7, 0.9, 3.2e3, false);
    EXPECT_NEAR(e.r_total.value(), e.r_star.value() * 3.2e3, 1e-6);
    ResourceEstimate f = estimate_resources(97, 0.1, 1e7, true);
    EXPECT_NEAR(f.r_total.log10, f.r_star_improved.log10 + 7, 1e-12);
}

TEST(ComparisonTable, Rows) {
    EXPECT_TRUE(comparison_table({}).empty());
    auto rows = comparison_table(default_operating_points());
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0].scheme, "this");
    EXPECT_EQ(rows[0].L, 17);
    EXPECT_NEAR(rows[0].r_total_log10, 13.8, 0.1);
    EXPECT_EQ(rows[1].scheme, "dawson");
    EXPECT_TRUE(std::isnan(rows[1].r_star_log10));
    EXPECT_EQ(rows[3].scheme, "this");
    EXPECT_EQ(rows[3].L, 7);
    EXPECT_NEAR(rows[3].r_total_log10, 5.0, 0.1);
    EXPECT_EQ(rows[4].scheme, "goto");
    EXPECT_THROW(comparison_table({{0.5, 2, 1e7, "x"}}), std::invalid_argument);
}
