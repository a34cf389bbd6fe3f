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

#include "ptqg/ptqg.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

namespace {

struct ReportPtr {
    ptqg_report *r = nullptr;
    ~ReportPtr() {
        ptqg_report_free(r);
    }
};

struct CircuitPtr {
    ptqg_circuit *c = nullptr;
    ~CircuitPtr() {
        ptqg_circuit_free(c);
    }
};

}  // namespace

TEST(CApi, StarModel) {
    int L = 0;
    ASSERT_EQ(ptqg_min_leaves(0.5, 0.01, &L), PTQG_OK);
    EXPECT_EQ(L, 17);
    double pf = 0;
    ASSERT_EQ(ptqg_failure_probability(7, 0.9, &pf), PTQG_OK);
    EXPECT_NEAR(pf, 0.002728, 1e-6);
    EXPECT_EQ(ptqg_min_leaves(0, 0.01, &L), PTQG_ERR_INVALID_ARGUMENT);
    EXPECT_STRNE(ptqg_last_error(), "");
    EXPECT_EQ(ptqg_min_leaves(0.5, 0.01, nullptr), PTQG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ptqg_indirect_z_decode(1, 1, 0), 1);
    EXPECT_EQ(ptqg_indirect_z_decode(1, 0, 0), 0);
}

TEST(CApi, LastErrorClearsOnSuccess) {
    int L = 0;
    EXPECT_NE(ptqg_min_leaves(-1, 0.01, &L), PTQG_OK);
    EXPECT_STRNE(ptqg_last_error(), "");
    EXPECT_EQ(ptqg_min_leaves(0.5, 0.01, &L), PTQG_OK);
    EXPECT_STREQ(ptqg_last_error(), "");
}

TEST(CApi, StatusNames) {
    EXPECT_STRNE(ptqg_status_name(PTQG_OK), ptqg_status_name(PTQG_ERR_RANGE));
    EXPECT_STRNE(ptqg_version(), "");
    for (int i = 0; i < PTQG_NUM_SOURCES; i++) {
        EXPECT_NE(ptqg_source_name(i), nullptr);
    }
}

TEST(CApi, Renormalized) {
    ptqg_renorm a{}, b{};
    ASSERT_EQ(ptqg_renorm_independent(PTQG_P1, 1e-4, 12, &a), PTQG_OK);
    ASSERT_EQ(ptqg_renorm_independent(PTQG_P2, 1e-4, 12, &b), PTQG_OK);
    EXPECT_GT(a.p_r, 0);
    EXPECT_EQ(ptqg_independent_crossover_L(), 12);
    ptqg_renorm f{};
    ASSERT_EQ(ptqg_renorm_full(PTQG_P1, 1e-4, 1e-4, 1e-4, 7, 0, &f), PTQG_OK);
    double s = 0;
    for (double v : f.breakdown) {
        s += v;
    }
    EXPECT_GT(s, 0);
    EXPECT_EQ(ptqg_renorm_full(PTQG_P1, 2, 0, 0, 7, 0, &f), PTQG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Threshold) {
    ptqg_threshold_options o;
    ptqg_threshold_options_init(&o);
    EXPECT_DOUBLE_EQ(o.p_r_target, 0.02);
    ptqg_threshold_point pt{};
    ASSERT_EQ(ptqg_threshold(0.9, PTQG_P1, &o, &pt), PTQG_OK);
    EXPECT_EQ(pt.L, 7);
    EXPECT_GT(pt.p_u_threshold, 0);
    o.p_r_target = 1e-9;
    o.add_failure = 1;
    EXPECT_EQ(ptqg_threshold(0.9, PTQG_P1, &o, &pt), PTQG_ERR_INFEASIBLE);
}

TEST(CApi, SamplingReproducible) {
    ptqg_sampling_options o;
    ptqg_sampling_options_init(&o);
    o.samples = 100;
    o.seed = 3;
    ptqg_coefficient_point a{}, b{};
    ASSERT_EQ(ptqg_sample_coefficients(&o, 8, &a), PTQG_OK);
    o.workers = 4;
    ASSERT_EQ(ptqg_sample_coefficients(&o, 8, &b), PTQG_OK);
    EXPECT_EQ(a.gate, b.gate);
    EXPECT_EQ(a.meas, 13);
    EXPECT_EQ(ptqg_sample_coefficients(nullptr, 8, &a), PTQG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(ptqg_sample_coefficients(&o, 2, &a), PTQG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, FitLine) {
    double x[] = {1, 2, 3};
    double y[] = {2, 4, 6};
    ptqg_linear_fit f{};
    ASSERT_EQ(ptqg_fit_line(x, y, 3, &f), PTQG_OK);
    EXPECT_NEAR(f.b, 2, 1e-12);
    EXPECT_EQ(ptqg_fit_line(x, y, 1, &f), PTQG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Checks) {
    ptqg_mc_check m{};
    ASSERT_EQ(ptqg_check_star_failures(7, 0.9, 100000, 1, 2, &m), PTQG_OK);
    EXPECT_LT(std::abs(m.z), 4);
    ptqg_correlations c{};
    ptqg_sampling_options o;
    ptqg_sampling_options_init(&o);
    o.samples = 20;
    ASSERT_EQ(ptqg_classify_correlations(&o, 7, 6e-4, 6e-4, 6e-4, &c), PTQG_OK);
    EXPECT_LT(c.ratio, 0.1);
}

TEST(CApi, Resources) {
    double v = 0;
    ASSERT_EQ(ptqg_r_star_log10(7, 0.9, &v), PTQG_OK);
    EXPECT_NEAR(std::pow(10, v), 30.9, 0.05);
    ASSERT_EQ(ptqg_r_star_improved_log10(97, 0.1, 2, 1, &v), PTQG_OK);
    EXPECT_GT(v, 10);
    EXPECT_EQ(ptqg_r_star_improved_log10(97, 0.1, 3, 1, &v), PTQG_ERR_INVALID_ARGUMENT);
    ReportPtr r;
    EXPECT_EQ(ptqg_report_resources(1000, 0.01, 1e7, 0, 2, &r.r), PTQG_OK);
}

TEST(CApi, Circuits) {
    ASSERT_GE(ptqg_suite_size(), 5u);
    for (size_t i = 0; i < ptqg_suite_size(); i++) {
        CircuitPtr c;
        ASSERT_EQ(ptqg_suite_circuit(i, &c.c), PTQG_OK) << ptqg_suite_name(i);
        size_t checked = 0, bad = 0;
        EXPECT_EQ(ptqg_circuit_verify(c.c, 1, &checked, &bad), PTQG_OK);
        EXPECT_GT(checked, 0u);
        EXPECT_EQ(bad, 0u);
        CircuitPtr again;
        ASSERT_EQ(ptqg_circuit_parse(ptqg_circuit_text(c.c), &again.c), PTQG_OK);
        EXPECT_EQ(ptqg_circuit_num_events(again.c), ptqg_circuit_num_events(c.c));
    }
    CircuitPtr bad;
    EXPECT_EQ(ptqg_circuit_parse("QUBITS 1\nBOGUS\n", &bad.c), PTQG_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(bad.c, nullptr);
    int labels[] = {0, 1, 0, 0, 0};
    int dirs[] = {0, 1, 1, 2, 3};
    CircuitPtr a;
    ASSERT_EQ(ptqg_circuit_assemble(PTQG_P1, 5, 0, labels, dirs, 4, &a.c), PTQG_OK);
    EXPECT_GT(ptqg_circuit_num_qubits(a.c), 5u);
    labels[0] = 7;
    CircuitPtr z;
    EXPECT_EQ(ptqg_circuit_assemble(PTQG_P1, 5, 0, labels, dirs, 4, &z.c), PTQG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Reports) {
    ReportPtr r;
    ASSERT_EQ(ptqg_report_lmin(0.9, 0.01, &r.r), PTQG_OK);
    ASSERT_EQ(ptqg_report_num_rows(r.r), 1u);
    EXPECT_STREQ(ptqg_report_cell(r.r, 0, "L"), "7");
    EXPECT_EQ(ptqg_report_cell(r.r, 0, "nope"), nullptr);
    EXPECT_EQ(ptqg_report_cell(r.r, 5, "L"), nullptr);
    ASSERT_EQ(ptqg_report_set(r.r, "who", "test"), PTQG_OK);
    std::string csv = ptqg_report_render(r.r, PTQG_CSV);
    EXPECT_NE(csv.find("# who=test"), std::string::npos);
    std::string json = ptqg_report_render(r.r, PTQG_JSON);
    EXPECT_NE(json.find("\"provenance\""), std::string::npos);
    std::string data = ptqg_report_render_data(r.r, PTQG_CSV);
    EXPECT_EQ(data.rfind("p_s,", 0), 0u);

    ReportPtr cmp;
    ASSERT_EQ(ptqg_report_compare(nullptr, nullptr, nullptr, 0, &cmp.r), PTQG_OK);
    EXPECT_EQ(ptqg_report_num_rows(cmp.r), 5u);

    ReportPtr curve;
    double grid[] = {0.5, 0.9};
    ptqg_variant vs[] = {PTQG_P1, PTQG_P2};
    ptqg_threshold_options o;
    ptqg_threshold_options_init(&o);
    ASSERT_EQ(ptqg_report_threshold_curve(grid, 2, vs, 2, &o, &curve.r), PTQG_OK);
    EXPECT_EQ(ptqg_report_num_rows(curve.r), 4u);
    o.p_r_target = 1e-12;
    o.add_failure = 1;
    ReportPtr none;
    EXPECT_EQ(ptqg_report_threshold_curve(grid, 2, vs, 2, &o, &none.r), PTQG_ERR_INFEASIBLE);

    ReportPtr v;
    EXPECT_EQ(ptqg_report_verify(1, &v.r), PTQG_OK);
    EXPECT_EQ(ptqg_report_num_rows(v.r), ptqg_suite_size());
}

TEST(CApi, NullHandlesAreSafe) {
    ptqg_report_free(nullptr);
    ptqg_circuit_free(nullptr);
    EXPECT_EQ(ptqg_report_num_rows(nullptr), 0u);
    EXPECT_STREQ(ptqg_report_render(nullptr, PTQG_CSV), "");
    EXPECT_EQ(ptqg_report_set(nullptr, "a", "b"), PTQG_ERR_INVALID_ARGUMENT);
}
