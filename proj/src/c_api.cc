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

#include <cmath>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "ptqg/analysis.h"
#include "ptqg/circuit.h"
#include "ptqg/errors.h"
#include "ptqg/protocol.h"
#include "ptqg/report.h"
#include "ptqg/resources.h"
#include "ptqg/simulation.h"
#include "ptqg/suite.h"
#include "ptqg/tableau.h"

struct ptqg_circuit {
    ptqg::Circuit circuit;
    std::string text;
};

struct ptqg_report {
    ptqg::Report report;
    std::string rendered;
};

namespace {

thread_local std::string last_error;

constexpr const char *kVersion = "0.1.0";

template <typename Fn>
ptqg_status guard(Fn fn) {
    last_error.clear();
    try {
        return fn();
    } catch (const ptqg::InfeasibleThreshold &e) {
        last_error = e.what();
        return PTQG_ERR_INFEASIBLE;
    } catch (const ptqg::RangeError &e) {
        last_error = e.what();
        return PTQG_ERR_RANGE;
    } catch (const ptqg::ResourceError &e) {
        last_error = e.what();
        return PTQG_ERR_RANGE;
    } catch (const std::invalid_argument &e) {
        last_error = e.what();
        return PTQG_ERR_INVALID_ARGUMENT;
    } catch (const std::exception &e) {
        last_error = e.what();
        return PTQG_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PTQG_ERR_INTERNAL;
    }
}

template <typename T>
void need(const T *p, const char *name) {
    if (p == nullptr) {
        throw std::invalid_argument(std::string(name) + " must not be null");
    }
}

ptqg::Variant to_variant(ptqg_variant v) {
    if (v != PTQG_P1 && v != PTQG_P2) {
        throw std::invalid_argument("unknown variant");
    }
    return v == PTQG_P1 ? ptqg::Variant::kP1 : ptqg::Variant::kP2;
}

ptqg::LogBase to_base(int base) {
    switch (base) {
        case 2:
            return ptqg::LogBase::kTwo;
        case 10:
            return ptqg::LogBase::kTen;
        case 0:
            return ptqg::LogBase::kE;
        default:
            throw std::invalid_argument("log base must be 2, 10 or 0 (e)");
    }
}

ptqg::SamplingOptions to_sampling(const ptqg_sampling_options *o) {
    need(o, "options");
    ptqg::SamplingOptions s;
    s.variant = to_variant(o->variant);
    s.p_s = o->p_s;
    s.geometry.cherries = o->cherries;
    s.samples = o->samples;
    s.seed = o->seed;
    s.workers = o->workers;
    s.enumeration.convention = o->depolarizing ? ptqg::NoiseConvention::kDepolarizing
                                               : ptqg::NoiseConvention::kFaceValue;
    s.enumeration.accounting = o->physical_accounting ? ptqg::Accounting::kPhysical : ptqg::Accounting::kFootprint;
    s.enumeration.count_benign_as_flip = o->count_benign_as_flip != 0;
    s.enumeration.depolarize_failed_cz = o->depolarize_failed_cz != 0;
    if (s.workers < 1) {
        throw std::invalid_argument("workers must be at least 1");
    }
    return s;
}

ptqg::ThresholdOptions to_threshold(const ptqg_threshold_options *o) {
    ptqg::ThresholdOptions t;
    if (o != nullptr) {
        t.p_r_target = o->p_r_target;
        t.p_f_max = o->p_f_max;
        t.add_failure = o->add_failure != 0;
        t.memory = o->memory;
        t.gate_only = o->gate_only != 0;
    }
    return t;
}

std::string num(double v) {
    return ptqg::format_number(v);
}

std::string flag(bool v) {
    return v ? "true" : "false";
}

ptqg_report *new_report(const char *command) {
    auto r = std::make_unique<ptqg_report>();
    r->report.set("tool", std::string("ptqg ") + kVersion);
    r->report.set("command", command);
    return r.release();
}

void sampling_provenance(ptqg::Report &r, const ptqg::SamplingOptions &o) {
    r.set("variant", std::string(ptqg::variant_name(o.variant)));
    r.set("p_s", num(o.p_s));
    r.set("geometry", o.variant == ptqg::Variant::kP2 ? o.geometry.str() : "star");
    r.set("samples", std::to_string(o.samples));
    r.set("seed", std::to_string(o.seed));
    r.set("neighbors", std::to_string(o.neighbor_count));
    r.set("noise_convention", std::string(ptqg::convention_name(o.enumeration.convention)));
    r.set("accounting", std::string(ptqg::accounting_name(o.enumeration.accounting)));
    r.set("count_benign_as_flip", flag(o.enumeration.count_benign_as_flip));
    r.set("depolarize_failed_cz", flag(o.enumeration.depolarize_failed_cz));
}

void fill_renorm(const ptqg::RenormalizedError &e, ptqg_renorm *out) {
    out->p_r = e.p_r;
    for (size_t i = 0; i < ptqg::kNumErrorSources; i++) {
        out->breakdown[i] = e.breakdown[i];
    }
}

}  // namespace

extern "C" {

const char *ptqg_version(void) {
    return kVersion;
}

const char *ptqg_last_error(void) {
    return last_error.c_str();
}

const char *ptqg_status_name(ptqg_status status) {
    switch (status) {
        case PTQG_OK:
            return "ok";
        case PTQG_ERR_INVALID_ARGUMENT:
            return "invalid_argument";
        case PTQG_ERR_INFEASIBLE:
            return "infeasible";
        case PTQG_ERR_RANGE:
            return "range";
        case PTQG_ERR_VERIFICATION:
            return "verification_failed";
        case PTQG_ERR_INTERNAL:
            return "internal";
    }
    return "unknown";
}

ptqg_status ptqg_min_leaves(double p_s, double p_f_max, int *out_L) {
    return guard([&] {
        need(out_L, "out_L");
        *out_L = ptqg::min_leaves(p_s, p_f_max);
        return PTQG_OK;
    });
}

ptqg_status ptqg_failure_probability(int L, double p_s, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ptqg::failure_probability(L, p_s);
        return PTQG_OK;
    });
}

int ptqg_indirect_z_decode(int z0, int x1, int x2) {
    return ptqg::indirect_z_decode(z0 != 0, x1 != 0, x2 != 0) ? 1 : 0;
}

const char *ptqg_source_name(int index) {
    if (index < 0 || index >= PTQG_NUM_SOURCES) {
        return "";
    }
    return ptqg::error_source_name(static_cast<ptqg::ErrorSource>(index)).data();
}

ptqg_status ptqg_renorm_independent(ptqg_variant variant, double p_u, int L, ptqg_renorm *out) {
    return guard([&] {
        need(out, "out");
        fill_renorm(ptqg::p_r_independent(to_variant(variant), p_u, L), out);
        return PTQG_OK;
    });
}

ptqg_status ptqg_renorm_full(
    ptqg_variant variant, double p_u, double p_P, double p_M, int L, double memory, ptqg_renorm *out) {
    return guard([&] {
        need(out, "out");
        fill_renorm(ptqg::p_r_full(to_variant(variant), p_u, p_P, p_M, L, memory), out);
        return PTQG_OK;
    });
}

int ptqg_independent_crossover_L(void) {
    return ptqg::independent_crossover_L();
}

void ptqg_threshold_options_init(ptqg_threshold_options *opts) {
    if (opts == nullptr) {
        return;
    }
    ptqg::ThresholdOptions d;
    opts->p_r_target = d.p_r_target;
    opts->p_f_max = d.p_f_max;
    opts->add_failure = d.add_failure;
    opts->memory = d.memory;
    opts->gate_only = d.gate_only;
}

ptqg_status ptqg_threshold(
    double p_s, ptqg_variant variant, const ptqg_threshold_options *opts, ptqg_threshold_point *out) {
    return guard([&] {
        need(out, "out");
        ptqg::ThresholdPoint pt = ptqg::threshold_pu(p_s, to_variant(variant), to_threshold(opts));
        *out = {pt.p_s, variant, pt.L, pt.p_f, pt.p_u_threshold, pt.iterations};
        return PTQG_OK;
    });
}

void ptqg_sampling_options_init(ptqg_sampling_options *opts) {
    if (opts == nullptr) {
        return;
    }
    ptqg::SamplingOptions d;
    *opts = {PTQG_P1, d.p_s, d.geometry.cherries, d.samples, d.seed, 1, 0, 0, 0, 0};
}

ptqg_status ptqg_sample_coefficients(const ptqg_sampling_options *opts, int L, ptqg_coefficient_point *out) {
    return guard([&] {
        need(out, "out");
        ptqg::CoefficientPoint pt = ptqg::sample_coefficients(to_sampling(opts), L);
        *out = {pt.L,
                pt.gate,
                pt.gate_stderr,
                pt.prep,
                pt.meas,
                pt.discarded_single_first_order,
                pt.discarded_gate_first_order,
                pt.discarded_second_order,
                pt.failed_draw_fraction};
        return PTQG_OK;
    });
}

ptqg_status ptqg_fit_line(const double *x, const double *y, size_t n, ptqg_linear_fit *out) {
    return guard([&] {
        need(out, "out");
        need(x, "x");
        need(y, "y");
        ptqg::LinearFit f = ptqg::fit_line(std::vector<double>(x, x + n), std::vector<double>(y, y + n));
        *out = {f.a, f.b, f.r_squared};
        return PTQG_OK;
    });
}

ptqg_status ptqg_classify_correlations(
    const ptqg_sampling_options *opts, int L, double p_u, double p_P, double p_M, ptqg_correlations *out) {
    return guard([&] {
        need(out, "out");
        ptqg::CorrelationReport r = ptqg::classify_correlations(to_sampling(opts), L, p_u, p_P, p_M);
        *out = {r.independent, r.nearest, r.second_nearest, r.higher_order, r.ratio};
        return PTQG_OK;
    });
}

ptqg_status ptqg_check_star_failures(
    int L, double p_s, size_t samples, uint64_t seed, int workers, ptqg_mc_check *out) {
    return guard([&] {
        need(out, "out");
        ptqg::StarFailureCheck c = ptqg::check_star_failures(L, p_s, samples, seed, workers);
        *out = {c.samples, c.empirical, c.predicted, c.stderr_, c.z};
        return PTQG_OK;
    });
}

ptqg_status ptqg_check_random_faults(const ptqg_sampling_options *opts, int L, double p_u, ptqg_mc_check *out) {
    return guard([&] {
        need(out, "out");
        ptqg::MonteCarloCheck c = ptqg::check_random_faults(to_sampling(opts), L, p_u);
        *out = {c.samples, c.empirical, c.first_order, c.diff_stderr, c.z};
        return PTQG_OK;
    });
}

ptqg_status ptqg_r_star_log10(int L, double p_s, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ptqg::r_star(L, p_s).log10;
        return PTQG_OK;
    });
}

ptqg_status ptqg_r_star_improved_log10(int L, double p_s, int log_base, double constant, double *out) {
    return guard([&] {
        need(out, "out");
        *out = ptqg::r_star_improved(L, p_s, to_base(log_base), constant).log10;
        return PTQG_OK;
    });
}

ptqg_status ptqg_circuit_parse(const char *text, ptqg_circuit **out) {
    return guard([&] {
        need(text, "text");
        need(out, "out");
        *out = nullptr;
        auto c = std::make_unique<ptqg_circuit>();
        c->circuit = ptqg::parse_circuit(text);
        *out = c.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_circuit_assemble(ptqg_variant variant, int L, int cherries, const int *labels,
    const int *directions, int neighbor_count, ptqg_circuit **out) {
    return guard([&] {
        need(labels, "labels");
        need(directions, "directions");
        need(out, "out");
        *out = nullptr;
        if (L < 0) {
            throw std::invalid_argument("L must be non-negative");
        }
        std::vector<ptqg::LeafOutcome> leaves;
        for (int i = 0; i < L; i++) {
            if (labels[i] < 0 || labels[i] > 2) {
                throw std::invalid_argument("leaf label must be 0, 1 or 2");
            }
            leaves.push_back({static_cast<ptqg::LeafLabel>(labels[i]), directions[i]});
        }
        ptqg::ArmGeometry g;
        g.cherries = cherries;
        auto c = std::make_unique<ptqg_circuit>();
        c->circuit = ptqg::assemble(to_variant(variant), L, g, leaves, neighbor_count).circuit;
        *out = c.release();
        return PTQG_OK;
    });
}

namespace {

const std::vector<ptqg::NamedCircuit> &suite() {
    static const std::vector<ptqg::NamedCircuit> s = ptqg::builtin_suite();
    return s;
}

}  // namespace

size_t ptqg_suite_size(void) {
    return suite().size();
}

const char *ptqg_suite_name(size_t index) {
    return index < suite().size() ? suite()[index].name.c_str() : "";
}

ptqg_status ptqg_suite_circuit(size_t index, ptqg_circuit **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        if (index >= suite().size()) {
            throw std::invalid_argument("suite index out of range");
        }
        auto c = std::make_unique<ptqg_circuit>();
        c->circuit = suite()[index].circuit;
        *out = c.release();
        return PTQG_OK;
    });
}

size_t ptqg_circuit_num_qubits(const ptqg_circuit *c) {
    return c ? c->circuit.num_qubits() : 0;
}

size_t ptqg_circuit_num_events(const ptqg_circuit *c) {
    return c ? c->circuit.events().size() : 0;
}

const char *ptqg_circuit_text(ptqg_circuit *c) {
    if (c == nullptr) {
        return "";
    }
    c->text = ptqg::dump_circuit(c->circuit);
    return c->text.c_str();
}

ptqg_status ptqg_circuit_verify(
    const ptqg_circuit *c, uint64_t seed, size_t *locations_checked, size_t *disagreements) {
    return guard([&] {
        need(c, "circuit");
        ptqg::VerificationReport r = ptqg::verify_against_oracle(c->circuit, seed);
        if (locations_checked) {
            *locations_checked = r.locations_checked;
        }
        if (disagreements) {
            *disagreements = r.disagreements.size();
        }
        if (!r.ok()) {
            last_error = r.disagreements.front().detail;
            return PTQG_ERR_VERIFICATION;
        }
        return PTQG_OK;
    });
}

void ptqg_circuit_free(ptqg_circuit *c) {
    delete c;
}

ptqg_status ptqg_report_lmin(double p_s, double p_f_max, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        int L = ptqg::min_leaves(p_s, p_f_max);
        std::unique_ptr<ptqg_report> r(new_report("lmin"));
        r->report.header = {"p_s", "p_f_max", "L", "p_f"};
        r->report.add_row({num(p_s), num(p_f_max), std::to_string(L), num(ptqg::failure_probability(L, p_s))});
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_pf(int L, double p_s, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        double pf = ptqg::failure_probability(L, p_s);
        std::unique_ptr<ptqg_report> r(new_report("pf"));
        r->report.header = {"L", "p_s", "p_f"};
        r->report.add_row({std::to_string(L), num(p_s), num(pf)});
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_renorm(
    ptqg_variant variant, double p_u, double p_P, double p_M, int L, double memory, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        ptqg::Variant v = to_variant(variant);
        ptqg::RenormalizedError e = ptqg::p_r_full(v, p_u, p_P, p_M, L, memory);
        std::unique_ptr<ptqg_report> r(new_report("renorm"));
        r->report.set("variant", std::string(ptqg::variant_name(v)));
        r->report.set("p_u", num(p_u));
        r->report.set("p_P", num(p_P));
        r->report.set("p_M", num(p_M));
        r->report.set("L", std::to_string(L));
        r->report.set("memory", num(memory));
        r->report.set("coefficients", "analytic");
        r->report.header = {"source", "value"};
        for (size_t i = 0; i < ptqg::kNumErrorSources; i++) {
            r->report.add_row({std::string(ptqg::error_source_name(static_cast<ptqg::ErrorSource>(i))),
                               num(e.breakdown[i])});
        }
        r->report.add_row({"p_r", num(e.p_r)});
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_threshold_curve(const double *p_s, size_t n, const ptqg_variant *variants,
    size_t num_variants, const ptqg_threshold_options *opts, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        if (n == 0 || num_variants == 0) {
            throw std::invalid_argument("threshold curve needs at least one p_s and one variant");
        }
        need(p_s, "p_s");
        need(variants, "variants");
        std::vector<ptqg::Variant> vs;
        for (size_t i = 0; i < num_variants; i++) {
            vs.push_back(to_variant(variants[i]));
        }
        ptqg::ThresholdOptions t = to_threshold(opts);
        std::vector<double> grid(p_s, p_s + n);
        for (double v : grid) {
            if (!(v > 0 && v <= 1)) {
                throw std::invalid_argument("p_s grid values must be in (0, 1]");
            }
        }
        auto curve = ptqg::threshold_curve(grid, vs, t);
        std::unique_ptr<ptqg_report> r(new_report("threshold"));
        r->report.set("target", num(t.p_r_target));
        r->report.set("p_f_max", num(t.p_f_max));
        r->report.set("error_mode", t.gate_only ? "p_P=p_M=0" : "p_P=p_M=p_u");
        r->report.set("add_failure", flag(t.add_failure));
        r->report.set("memory", num(t.memory));
        r->report.set("coefficients", "analytic");
        r->report.header = {"p_s", "variant", "L", "p_f", "p_u_threshold"};
        size_t failures = 0;
        ptqg_status status = PTQG_OK;
        for (size_t i = 0; i < curve.size(); i++) {
            const auto &e = curve[i];
            std::string vname(ptqg::variant_name(e.variant));
            if (e.point) {
                r->report.add_row({num(e.p_s), vname, std::to_string(e.point->L), num(e.point->p_f),
                                   num(e.point->p_u_threshold)});
                continue;
            }
            failures++;
            r->report.add_row({num(e.p_s), vname, "", "", "nan"});
            r->report.note("error." + std::to_string(i), e.error);
        }
        if (failures == curve.size()) {
            last_error = curve.front().error;
            status = PTQG_ERR_INFEASIBLE;
        }
        *out = r.release();
        return status;
    });
}

ptqg_status ptqg_report_coefficients(const ptqg_sampling_options *opts, const int *L, size_t n, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        need(L, "L");
        *out = nullptr;
        ptqg::SamplingOptions s = to_sampling(opts);
        ptqg::CoefficientFit fit = ptqg::extract_coefficients(s, std::vector<int>(L, L + n));
        std::unique_ptr<ptqg_report> r(new_report("simulate coeffs"));
        sampling_provenance(r->report, s);
        r->report.header = {"L", "gate", "gate_stderr", "prep", "meas", "discarded_single_first_order",
                            "discarded_gate_first_order", "discarded_second_order", "failed_draw_fraction"};
        for (const auto &pt : fit.points) {
            r->report.add_row({std::to_string(pt.L), num(pt.gate), num(pt.gate_stderr), num(pt.prep), num(pt.meas),
                               num(pt.discarded_single_first_order), num(pt.discarded_gate_first_order),
                               num(pt.discarded_second_order), num(pt.failed_draw_fraction)});
        }
        auto put = [&](const std::string &name, const ptqg::LinearFit &f) {
            r->report.note("fit." + name + ".a", num(f.a));
            r->report.note("fit." + name + ".b", num(f.b));
            r->report.note("fit." + name + ".r_squared", num(f.r_squared));
        };
        put("gate", fit.gate);
        put("prep", fit.prep);
        put("meas", fit.meas);
        double a0 = s.variant == ptqg::Variant::kP1 ? 7.7 : 11.0;
        double b0 = s.variant == ptqg::Variant::kP1 ? 0.64 : 0.90;
        r->report.note("analytic.gate.a", num(a0));
        r->report.note("analytic.gate.b", num(b0));
        r->report.note("ratio.gate.a", num(fit.gate.a / a0));
        r->report.note("ratio.gate.b", num(fit.gate.b / b0));
        for (size_t i = 0; i < fit.warnings.size(); i++) {
            r->report.note("warning." + std::to_string(i), fit.warnings[i]);
        }
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_correlations(
    const ptqg_sampling_options *opts, int L, double p_u, double p_P, double p_M, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        ptqg::SamplingOptions s = to_sampling(opts);
        ptqg::CorrelationReport c = ptqg::classify_correlations(s, L, p_u, p_P, p_M);
        std::unique_ptr<ptqg_report> r(new_report("simulate correlations"));
        sampling_provenance(r->report, s);
        r->report.header = {"L", "p_u", "p_P", "p_M", "independent", "nearest", "second_nearest", "higher_order",
                            "ratio"};
        r->report.add_row({std::to_string(L), num(p_u), num(p_P), num(p_M), num(c.independent), num(c.nearest),
                           num(c.second_nearest), num(c.higher_order), num(c.ratio)});
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_verify(uint64_t seed, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        std::unique_ptr<ptqg_report> r(new_report("verify"));
        r->report.set("seed", std::to_string(seed));
        r->report.header = {"circuit", "qubits", "locations", "disagreements"};
        size_t bad = 0;
        for (const auto &nc : suite()) {
            ptqg::VerificationReport v = ptqg::verify_against_oracle(nc.circuit, seed);
            r->report.add_row({nc.name, std::to_string(nc.circuit.num_qubits()),
                               std::to_string(v.locations_checked), std::to_string(v.disagreements.size())});
            for (size_t i = 0; i < v.disagreements.size() && i < 5; i++) {
                r->report.note(nc.name + "." + std::to_string(i), v.disagreements[i].detail);
            }
            bad += v.disagreements.size();
        }
        r->report.note("total_disagreements", std::to_string(bad));
        *out = r.release();
        if (bad > 0) {
            last_error = std::to_string(bad) + " fault locations disagree with the tableau oracle";
            return PTQG_ERR_VERIFICATION;
        }
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_resources(int L, double p_s, double r_towc, int improved, int log_base, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        ptqg::LogBase base = to_base(log_base);
        ptqg::ResourceEstimate e = ptqg::estimate_resources(L, p_s, r_towc, improved != 0, base);
        std::unique_ptr<ptqg_report> r(new_report("resources"));
        r->report.set("log_base", std::string(ptqg::log_base_name(base)));
        r->report.set("improved", flag(improved != 0));
        r->report.set("constant", "1");
        r->report.header = {"L", "p_s", "r_towc_log10", "r_star_log10", "r_star_improved_log10", "r_total_log10",
                            "r_star", "r_total"};
        auto value = [](ptqg::Count c) {
            return c.log10 > 300 ? std::string("nan") : ptqg::format_number(c.value());
        };
        r->report.add_row({std::to_string(L), num(p_s), num(e.r_towc.log10), num(e.r_star.log10),
                           num(e.r_star_improved.log10), num(e.r_total.log10),
                           value(improved ? e.r_star_improved : e.r_star), value(e.r_total)});
        // Order of magnitude of the improved count under the other log bases.
        if (L >= 2) {
            for (ptqg::LogBase b : {ptqg::LogBase::kTwo, ptqg::LogBase::kE, ptqg::LogBase::kTen}) {
                r->report.note("improved_log10.base_" + std::string(ptqg::log_base_name(b)),
                               num(ptqg::r_star_improved(L, p_s, b).log10));
            }
        }
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_compare(
    const double *p_s, const double *p_u, const double *r_towc, size_t n, ptqg_report **out) {
    return guard([&] {
        need(out, "out");
        *out = nullptr;
        std::vector<ptqg::OperatingPoint> points;
        bool defaults = n == 0 && p_s == nullptr;
        if (defaults) {
            points = ptqg::default_operating_points();
        } else {
            if (n > 0) {
                need(p_s, "p_s");
                need(p_u, "p_u");
                need(r_towc, "r_towc");
            }
            for (size_t i = 0; i < n; i++) {
                points.push_back({p_s[i], p_u[i], r_towc[i], "user"});
            }
        }
        auto rows = ptqg::comparison_table(points);
        std::unique_ptr<ptqg_report> r(new_report("compare"));
        r->report.set("points", defaults ? "default" : "user");
        r->report.set("p_f_max", "0.01");
        r->report.header = {"scheme", "p_s", "p_u", "L", "r_star_log10", "r_towc_log10", "r_total_log10", "source"};
        for (const auto &row : rows) {
            r->report.add_row({row.scheme, num(row.p_s), num(row.p_u), row.L ? std::to_string(row.L) : "",
                               num(row.r_star_log10), num(row.r_towc_log10), num(row.r_total_log10), row.source});
        }
        *out = r.release();
        return PTQG_OK;
    });
}

ptqg_status ptqg_report_set(ptqg_report *r, const char *key, const char *value) {
    return guard([&] {
        need(r, "report");
        need(key, "key");
        need(value, "value");
        r->report.set(key, value);
        return PTQG_OK;
    });
}

size_t ptqg_report_num_rows(const ptqg_report *r) {
    return r ? r->report.rows.size() : 0;
}

const char *ptqg_report_cell(const ptqg_report *r, size_t row, const char *column) {
    if (r == nullptr || column == nullptr || row >= r->report.rows.size()) {
        return nullptr;
    }
    for (size_t i = 0; i < r->report.header.size(); i++) {
        if (r->report.header[i] == column) {
            return r->report.rows[row][i].c_str();
        }
    }
    return nullptr;
}

const char *ptqg_report_render(ptqg_report *r, ptqg_format format) {
    if (r == nullptr) {
        return "";
    }
    r->rendered = r->report.render(format == PTQG_JSON ? ptqg::Format::kJson : ptqg::Format::kCsv);
    return r->rendered.c_str();
}

const char *ptqg_report_render_data(ptqg_report *r, ptqg_format format) {
    if (r == nullptr) {
        return "";
    }
    r->rendered = r->report.render_data(format == PTQG_JSON ? ptqg::Format::kJson : ptqg::Format::kCsv);
    return r->rendered.c_str();
}

void ptqg_report_free(ptqg_report *r) {
    delete r;
}

}  // extern "C"
