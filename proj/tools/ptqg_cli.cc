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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ptqg/ptqg.h"

namespace {

constexpr uint64_t kDefaultSeed = 20100321;

struct Common {
    std::string format = "csv";
    std::string output;
    int workers = 0;
    std::optional<uint64_t> seed;
};

std::string json_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            default:
                out += c;
        }
    }
    return out;
}

int fail(int code, const std::string &kind, const std::string &message) {
    std::cerr << "{\"error\":\"" << kind << "\",\"exit_code\":" << code << ",\"message\":\"" << json_escape(message)
              << "\"}\n";
    return code;
}

int fail_status(ptqg_status s) {
    return fail(static_cast<int>(s), ptqg_status_name(s), ptqg_last_error());
}

uint64_t resolve_seed(const Common &c) {
    if (c.seed) {
        return *c.seed;
    }
    if (const char *env = std::getenv("PTQG_SEED")) {
        std::string text(env);
        size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != text.size()) {
            throw std::invalid_argument("PTQG_SEED is not an unsigned integer: '" + text + "'");
        }
        return v;
    }
    return kDefaultSeed;
}

int resolve_workers(const Common &c) {
    if (c.workers > 0) {
        return c.workers;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ptqg_variant variant_of(const std::string &s) {
    return s == "p2" ? PTQG_P2 : PTQG_P1;
}

// Renders the report, writes it and maps the builder status to an exit code.
int emit(const Common &c, ptqg_status status, ptqg_report *report) {
    if (report == nullptr) {
        return fail_status(status);
    }
    ptqg_format fmt = c.format == "json" ? PTQG_JSON : PTQG_CSV;
    const char *text = ptqg_report_render(report, fmt);
    int code = 0;
    if (c.output.empty()) {
        std::fputs(text, stdout);
        std::fflush(stdout);
    } else {
        std::ofstream out(c.output, std::ios::binary);
        out << text;
        if (!out) {
            ptqg_report_free(report);
            return fail(PTQG_ERR_INVALID_ARGUMENT, "io", "cannot write '" + c.output + "'");
        }
    }
    ptqg_report_free(report);
    if (status != PTQG_OK) {
        code = fail_status(status);
    }
    return code;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t colon = item.find(':');
        if (colon != std::string::npos) {
            // a:b:step over integers
            std::stringstream parts(item);
            std::string a, b, step;
            std::getline(parts, a, ':');
            std::getline(parts, b, ':');
            std::getline(parts, step, ':');
            int lo = std::stoi(a), hi = std::stoi(b), st = step.empty() ? 1 : std::stoi(step);
            if (st <= 0 || hi < lo) {
                throw std::invalid_argument("bad integer range '" + item + "'");
            }
            for (int v = lo; v <= hi; v += st) {
                out.push_back(v);
            }
        } else {
            out.push_back(std::stoi(item));
        }
    }
    return out;
}

std::vector<double> parse_double_grid(const std::string &text) {
    std::stringstream parts(text);
    std::string a, b, step, extra;
    std::getline(parts, a, ':');
    std::getline(parts, b, ':');
    std::getline(parts, step, ':');
    if (step.empty() || std::getline(parts, extra, ':')) {
        throw std::invalid_argument("grid must look like a:b:step, got '" + text + "'");
    }
    double lo = std::stod(a), hi = std::stod(b), st = std::stod(step);
    if (!(st > 0) || hi < lo) {
        throw std::invalid_argument("grid needs step > 0 and a <= b");
    }
    double span = (hi - lo) / st;
    if (span > 1e6) {
        throw std::invalid_argument("grid has too many points");
    }
    auto count = static_cast<size_t>(span + 1e-9) + 1;
    std::vector<double> out;
    for (size_t i = 0; i < count; i++) {
        out.push_back(std::round((lo + static_cast<double>(i) * st) * 1e12) / 1e12);
    }
    return out;
}

void add_common(CLI::App *sub, Common &c, bool sampling) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", c.output, "Write data to this file instead of stdout");
    if (sampling) {
        sub->add_option("--workers", c.workers, "Concurrent workers (default: all cores)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", c.seed, "Master seed (default: $PTQG_SEED or a fixed value)");
    }
}

struct SamplingFlags {
    std::string variant = "p1";
    double p_s = 0.9;
    size_t samples = 10000;
    int cherries = 2;
    std::string convention = "face-value";
    std::string accounting = "footprint";
    bool count_benign = false;
    bool depolarize_failed = false;
};

void add_sampling(CLI::App *sub, SamplingFlags &f) {
    sub->add_option("--variant", f.variant, "Protocol variant")->check(CLI::IsMember({"p1", "p2"}));
    sub->add_option("--ps", f.p_s, "Gate success probability")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--samples", f.samples, "Assemblies per point")->check(CLI::PositiveNumber);
    sub->add_option("--cherries", f.cherries, "Cherries per tip (p2)");
    sub->add_option("--convention", f.convention, "Prep/measurement fault convention")
        ->check(CLI::IsMember({"face-value", "depolarizing"}));
    sub->add_option("--accounting", f.accounting, "Which locations are charged to the star")
        ->check(CLI::IsMember({"footprint", "physical"}));
    sub->add_flag("--count-benign-as-flip", f.count_benign, "Count X-only root residuals as flips");
    sub->add_flag("--depolarize-failed-cz", f.depolarize_failed, "Give failed CZs the gate fault set");
}

ptqg_sampling_options sampling_options(const SamplingFlags &f, const Common &c) {
    ptqg_sampling_options o;
    ptqg_sampling_options_init(&o);
    o.variant = variant_of(f.variant);
    o.p_s = f.p_s;
    o.cherries = f.cherries;
    o.samples = f.samples;
    o.seed = resolve_seed(c);
    o.workers = resolve_workers(c);
    o.depolarizing = f.convention == "depolarizing";
    o.physical_accounting = f.accounting == "physical";
    o.count_benign_as_flip = f.count_benign;
    o.depolarize_failed_cz = f.depolarize_failed;
    return o;
}

int run(int argc, char **argv) {
    CLI::App app{"Fault-tolerant cluster-state construction with probabilistic two-qubit gates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ptqg_version());
    Common common;

    auto *lmin = app.add_subcommand("lmin", "Smallest leaf count with star-failure probability below a bound");
    double ps = 0.9, pf_max = 0.01;
    lmin->add_option("--ps", ps, "Gate success probability")->required();
    lmin->add_option("--pf-max", pf_max, "Maximum star-failure probability");
    add_common(lmin, common, false);

    auto *pf = app.add_subcommand("pf", "Probability that a star gets fewer than four connections");
    int L = 7;
    pf->add_option("--L", L, "Leaves per star")->required();
    pf->add_option("--ps", ps, "Gate success probability")->required();
    add_common(pf, common, false);

    auto *renorm = app.add_subcommand("renorm", "Renormalized root error with its breakdown");
    std::string variant = "p1";
    double pu = 0, pp = 0, pm = 0, memory = 0;
    renorm->add_option("--variant", variant)->check(CLI::IsMember({"p1", "p2"}));
    renorm->add_option("--pu", pu, "Unheralded gate error")->required();
    renorm->add_option("--pp", pp, "Preparation error");
    renorm->add_option("--pm", pm, "Measurement error");
    renorm->add_option("--L", L, "Leaves per star")->required();
    renorm->add_option("--memory", memory, "Memory error added to the measurement error");
    add_common(renorm, common, false);

    auto *threshold = app.add_subcommand("threshold", "Gate error giving the target renormalized error");
    std::optional<double> th_ps;
    std::string grid, th_variant = "both";
    ptqg_threshold_options th;
    ptqg_threshold_options_init(&th);
    bool add_failure = false, gate_only = false;
    auto *ps_opt = threshold->add_option("--ps", th_ps, "Gate success probability");
    auto *grid_opt = threshold->add_option("--grid", grid, "Inclusive p_s grid a:b:step");
    ps_opt->excludes(grid_opt);
    threshold->add_option("--variant", th_variant)->check(CLI::IsMember({"p1", "p2", "both"}));
    threshold->add_option("--target", th.p_r_target, "Target renormalized error");
    threshold->add_option("--pf-max", th.p_f_max, "Star-failure bound used to pick L");
    threshold->add_option("--memory", th.memory, "Memory error added to the measurement error");
    threshold->add_flag("--add-failure", add_failure, "Count star failures as undetected errors");
    threshold->add_flag("--gate-only", gate_only, "Set preparation and measurement errors to zero");
    add_common(threshold, common, false);

    auto *simulate = app.add_subcommand("simulate", "Sampling-based analyses of assembled regions");
    simulate->require_subcommand(1);
    SamplingFlags sf;
    auto *coeffs = simulate->add_subcommand("coeffs", "First-order coefficients fitted linearly in L");
    std::string l_grid = "4:20:2";
    coeffs->add_option("--L-grid", l_grid, "Leaf counts, as a list or a:b:step");
    add_sampling(coeffs, sf);
    add_common(coeffs, common, true);
    auto *corr = simulate->add_subcommand("correlations", "Classify root-flipping faults by the roots they hit");
    std::optional<int> corr_L;
    double cpu = 6e-4;
    std::optional<double> cpp, cpm;
    corr->add_option("--L", corr_L, "Leaves per star (default: smallest with p_f < 1%)");
    corr->add_option("--pu", cpu, "Unheralded gate error");
    corr->add_option("--pp", cpp, "Preparation error (default: --pu)");
    corr->add_option("--pm", cpm, "Measurement error (default: --pu)");
    add_sampling(corr, sf);
    add_common(corr, common, true);

    auto *verify = app.add_subcommand("verify", "Check fault propagation against the stabilizer tableau");
    add_common(verify, common, false);
    verify->add_option("--seed", common.seed, "Seed for random measurement outcomes");

    auto *resources = app.add_subcommand("resources", "Expected gate counts");
    double rtowc = 1e7;
    bool improved = false;
    std::string base = "2";
    resources->add_option("--L", L, "Leaves per star")->required();
    resources->add_option("--ps", ps, "Gate success probability")->required();
    resources->add_option("--rtowc", rtowc, "Gates per encoded operation on the topological layer");
    resources->add_flag("--improved", improved, "Use log-depth star preparation");
    resources->add_option("--log-base", base, "Log base of the improved depth")->check(CLI::IsMember({"2", "e", "10"}));
    add_common(resources, common, false);

    auto *compare = app.add_subcommand("compare", "Total resources against published schemes");
    std::vector<std::string> points;
    compare->add_option("--point", points, "Operating point p_s,p_u,r_towc (repeatable)");
    add_common(compare, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        return fail(PTQG_ERR_INVALID_ARGUMENT, "invalid_argument", e.what());
    }

    ptqg_report *report = nullptr;
    ptqg_status st = PTQG_OK;
    if (*lmin) {
        st = ptqg_report_lmin(ps, pf_max, &report);
    } else if (*pf) {
        st = ptqg_report_pf(L, ps, &report);
    } else if (*renorm) {
        st = ptqg_report_renorm(variant_of(variant), pu, pp, pm, L, memory, &report);
    } else if (*threshold) {
        std::vector<double> grid_values;
        if (th_ps) {
            grid_values = {*th_ps};
        } else if (!grid.empty()) {
            grid_values = parse_double_grid(grid);
        } else {
            return fail(PTQG_ERR_INVALID_ARGUMENT, "invalid_argument", "threshold needs --ps or --grid");
        }
        std::vector<ptqg_variant> vs;
        if (th_variant != "p2") {
            vs.push_back(PTQG_P1);
        }
        if (th_variant != "p1") {
            vs.push_back(PTQG_P2);
        }
        th.add_failure = add_failure;
        th.gate_only = gate_only;
        st = ptqg_report_threshold_curve(grid_values.data(), grid_values.size(), vs.data(), vs.size(), &th, &report);
    } else if (*coeffs) {
        std::vector<int> Ls = parse_int_list(l_grid);
        ptqg_sampling_options o = sampling_options(sf, common);
        st = ptqg_report_coefficients(&o, Ls.data(), Ls.size(), &report);
    } else if (*corr) {
        ptqg_sampling_options o = sampling_options(sf, common);
        int Lc = 0;
        if (corr_L) {
            Lc = *corr_L;
        } else if (ptqg_min_leaves(o.p_s, 0.01, &Lc) != PTQG_OK) {
            return fail_status(PTQG_ERR_INVALID_ARGUMENT);
        }
        st = ptqg_report_correlations(&o, Lc, cpu, cpp.value_or(cpu), cpm.value_or(cpu), &report);
    } else if (*verify) {
        st = ptqg_report_verify(resolve_seed(common), &report);
    } else if (*resources) {
        int b = base == "2" ? 2 : base == "10" ? 10 : 0;
        st = ptqg_report_resources(L, ps, rtowc, improved, b, &report);
    } else if (*compare) {
        std::vector<double> p_s, p_u, r;
        for (const std::string &p : points) {
            std::stringstream ss(p);
            std::string a, b, c, extra;
            if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ',') ||
                std::getline(ss, extra, ',')) {
                return fail(PTQG_ERR_INVALID_ARGUMENT, "invalid_argument", "--point needs p_s,p_u,r_towc");
            }
            p_s.push_back(std::stod(a));
            p_u.push_back(std::stod(b));
            r.push_back(std::stod(c));
        }
        st = points.empty() ? ptqg_report_compare(nullptr, nullptr, nullptr, 0, &report)
                            : ptqg_report_compare(p_s.data(), p_u.data(), r.data(), p_s.size(), &report);
    }
    return emit(common, st, report);
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument &e) {
        return fail(PTQG_ERR_INVALID_ARGUMENT, "invalid_argument", e.what());
    } catch (const std::out_of_range &e) {
        return fail(PTQG_ERR_INVALID_ARGUMENT, "invalid_argument", e.what());
    } catch (const std::exception &e) {
        return fail(PTQG_ERR_INTERNAL, "internal", e.what());
    }
}
