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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "ptqg/ptqg.h"

namespace {

using Json = nlohmann::json;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

int workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

// Runs the CLI and returns its stdout; exit status in *status.
std::string run_cli(const std::string &args, int *status) {
    std::string cmd = std::string("\"") + PTQG_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        *status = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    *status = pclose(pipe);
    return out;
}

Json cli_json(const std::string &args, Outcome &o) {
    int status = 0;
    std::string out = run_cli(args + " --format json", &status);
    o.require(status == 0, "cli exit status for '" + args + "'");
    try {
        return Json::parse(out);
    } catch (const Json::exception &) {
        o.require(false, "cli output for '" + args + "' is not JSON");
        return Json::object();
    }
}

double num(const Json &v) {
    return v.is_number() ? v.get<double>() : std::nan("");
}

bool within(double v, double ref, double rel) {
    return std::abs(v - ref) <= rel * ref;
}

ptqg_sampling_options sampling(ptqg_variant v, double p_s, size_t samples) {
    ptqg_sampling_options o;
    ptqg_sampling_options_init(&o);
    o.variant = v;
    o.p_s = p_s;
    o.samples = samples;
    o.seed = 20100321;
    o.workers = workers();
    return o;
}

void c1(Outcome &o) {
    const std::pair<double, int> cases[] = {{0.9, 7}, {0.5, 17}, {0.1, 97}};
    for (auto [p_s, want] : cases) {
        Json j = cli_json("lmin --ps " + std::to_string(p_s) + " --pf-max 0.01", o);
        int got = j.contains("data") && !j["data"].empty() ? j["data"][0]["L"].get<int>() : -1;
        o.detail << "p_s=" << p_s << " L=" << got << " ";
        o.require(got == want, "L for p_s=" + std::to_string(p_s));
    }
}

void c2(Outcome &o) {
    struct Case {
        double p_s;
        const char *variant;
        double want;
    };
    const Case cases[] = {{0.9, "p1", 6.0e-4}, {0.5, "p1", 4.0e-4}, {0.1, "p2", 1.6e-4}};
    for (const Case &c : cases) {
        Json j = cli_json("threshold --ps " + std::to_string(c.p_s) + " --variant " + c.variant, o);
        double got = j.contains("data") && !j["data"].empty() ? num(j["data"][0]["p_u_threshold"]) : std::nan("");
        o.detail << c.variant << "@" << c.p_s << "=" << got << " ";
        o.require(within(got, c.want, 0.05), std::string(c.variant) + " threshold");
    }
}

void c3(Outcome &o) {
    ptqg_threshold_options t;
    ptqg_threshold_options_init(&t);
    t.gate_only = 1;
    ptqg_threshold_point pt{};
    o.require(ptqg_threshold(0.9, PTQG_P1, &t, &pt) == PTQG_OK, ptqg_last_error());
    o.detail << "p_u=" << pt.p_u_threshold << " ";
    o.require(within(pt.p_u_threshold, 1.6e-3, 0.05), "gate-only threshold");
}

void c4(Outcome &o) {
    int L = ptqg_independent_crossover_L();
    o.detail << "crossover L=" << L << " ";
    o.require(L == 12, "independent crossover");
    auto start = std::chrono::steady_clock::now();
    Json j = cli_json("threshold --grid 0.05:0.95:0.05 --variant both", o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::map<double, std::array<double, 2>> curve;
    if (j.contains("data")) {
        for (const Json &row : j["data"]) {
            std::string v = row["variant"].get<std::string>();
            double thr = num(row["p_u_threshold"]);
            curve[num(row["p_s"])][v == "p1" || v == "P1" ? 0 : 1] = std::isnan(thr) ? 0 : thr;
        }
    }
    o.require(curve.size() == 19, "19 grid points");
    // d = P2 - P1; the crossing is where d changes sign, interpolated.
    double cross = std::nan("");
    double prev_ps = 0, prev_d = 0;
    bool first = true;
    for (const auto &[p_s, thr] : curve) {
        double d = thr[1] - thr[0];
        if (!first && prev_d > 0 && d <= 0) {
            cross = prev_ps + (p_s - prev_ps) * prev_d / (prev_d - d);
        }
        prev_ps = p_s;
        prev_d = d;
        first = false;
    }
    o.detail << "curves cross at p_s=" << cross << " (" << secs << " s) ";
    o.require(cross >= 0.3 && cross <= 0.5, "curve crossing in [0.3, 0.5]");
    o.require(secs < 5, "grid under 5 s");
}

void c5(Outcome &o) {
    double a = 0, b = 0, big = 0, imp = 0;
    o.require(ptqg_r_star_log10(7, 0.9, &a) == PTQG_OK, "r_star(7, 0.9)");
    o.require(ptqg_r_star_log10(17, 0.5, &b) == PTQG_OK, "r_star(17, 0.5)");
    o.require(ptqg_r_star_log10(97, 0.1, &big) == PTQG_OK, "r_star(97, 0.1)");
    o.require(ptqg_r_star_improved_log10(97, 0.1, 2, 1, &imp) == PTQG_OK, "improved(97, 0.1)");
    double ra = std::pow(10, a), rb = std::pow(10, b), tot = b + 7;
    o.detail << "r_star(7,0.9)=" << ra << " r_star(17,0.5)=" << rb << " log10 r_total=" << tot
             << " log10 r_star(97,0.1)=" << big << " improved=" << imp << " ";
    o.require(ra >= 29 && ra <= 32, "r_star(7, 0.9)");
    o.require(rb >= 6.3e6 && rb <= 7.1e6, "r_star(17, 0.5)");
    o.require(tot >= 13.5 && tot <= 14.5, "r_total");
    o.require(big >= 99 && big <= 101, "baseline (97, 0.1)");
    o.require(imp >= 10 && imp <= 12, "improved (97, 0.1)");
}

void c6(Outcome &o) {
    size_t total = 0, bad = 0;
    for (size_t i = 0; i < ptqg_suite_size(); i++) {
        ptqg_circuit *c = nullptr;
        if (ptqg_suite_circuit(i, &c) != PTQG_OK) {
            o.require(false, ptqg_last_error());
            continue;
        }
        size_t checked = 0, dis = 0;
        ptqg_status s = ptqg_circuit_verify(c, 1, &checked, &dis);
        o.require(s == PTQG_OK && checked > 0, std::string("verify ") + ptqg_suite_name(i));
        total += checked;
        bad += dis;
        ptqg_circuit_free(c);
    }
    o.detail << ptqg_suite_size() << " circuits, " << total << " locations, " << bad << " disagreements ";
    o.require(bad == 0, "oracle agreement");
}

void c7(Outcome &o) {
    for (int L : {4, 7, 17}) {
        for (double p_s : {0.5, 0.9}) {
            ptqg_sampling_options s = sampling(PTQG_P1, p_s, 500);
            ptqg_coefficient_point pt{};
            o.require(ptqg_sample_coefficients(&s, L, &pt) == PTQG_OK, ptqg_last_error());
            o.require(pt.meas == 5.0 + L, "meas coefficient at L=" + std::to_string(L));
            if (p_s == 0.9) {
                o.detail << "L=" << L << ":" << pt.meas << " ";
            }
        }
    }
}

void c8(Outcome &o) {
    int singles = 0, doubles = 0;
    for (int truth = 0; truth < 2; truth++) {
        for (int flips = 0; flips < 8; flips++) {
            int z0 = truth ^ (flips & 1), x1 = truth ^ ((flips >> 1) & 1), x2 = truth ^ ((flips >> 2) & 1);
            int weight = __builtin_popcount(flips);
            bool correct = ptqg_indirect_z_decode(z0, x1, x2) == truth;
            o.require(correct == (weight <= 1), "case truth=" + std::to_string(truth) + " flips=" + std::to_string(flips));
            singles += weight == 1 && correct;
            doubles += weight == 2 && !correct;
        }
    }
    o.detail << "single flips corrected " << singles << "/6, double flips fail " << doubles << "/6 ";
}

void c9(Outcome &o) {
    std::vector<double> xs, ys;
    ptqg_sampling_options s = sampling(PTQG_P1, 0.9, 10000);
    for (int L = 4; L <= 20; L += 2) {
        ptqg_coefficient_point pt{};
        o.require(ptqg_sample_coefficients(&s, L, &pt) == PTQG_OK, ptqg_last_error());
        xs.push_back(L);
        ys.push_back(pt.gate);
    }
    ptqg_linear_fit f{};
    o.require(ptqg_fit_line(xs.data(), ys.data(), xs.size(), &f) == PTQG_OK, ptqg_last_error());
    o.detail << "P1 gate fit a=" << f.a << " b=" << f.b << " R2=" << f.r_squared << " (ratio to 7.7, 0.64: "
             << f.a / 7.7 << ", " << f.b / 0.64 << ") ";
    o.require(f.r_squared >= 0.99, "linear fit");
    o.require(f.a >= 7.7 / 2 && f.a <= 7.7 * 2, "a within factor 2");
    o.require(f.b >= 0.64 / 2 && f.b <= 0.64 * 2, "b within factor 2");

    for (int L : {8, 14}) {
        ptqg_sampling_options s1 = sampling(PTQG_P1, 0.9, 2000);
        ptqg_sampling_options s2 = sampling(PTQG_P2, 0.9, 2000);
        ptqg_coefficient_point p1{}, p2{};
        o.require(ptqg_sample_coefficients(&s1, L, &p1) == PTQG_OK, ptqg_last_error());
        o.require(ptqg_sample_coefficients(&s2, L, &p2) == PTQG_OK, ptqg_last_error());
        o.detail << "L=" << L << " discarded first order P1=" << p1.discarded_single_first_order
                 << " P2=" << p2.discarded_single_first_order << " P2 second order=" << p2.discarded_second_order
                 << " ";
        o.require(p1.discarded_single_first_order > 0, "P1 discarded part first order");
        o.require(p2.discarded_single_first_order == 0, "P2 discarded part has no first order term");
        o.require(p2.discarded_second_order > 0, "P2 discarded part second order");
    }
}

void c10(Outcome &o) {
    const std::pair<double, double> points[] = {{0.9, 6e-4}, {0.5, 4e-4}};
    for (auto [p_s, p_u] : points) {
        int L = 0;
        ptqg_min_leaves(p_s, 0.01, &L);
        ptqg_sampling_options s = sampling(PTQG_P1, p_s, 10000);
        ptqg_correlations c{};
        o.require(ptqg_classify_correlations(&s, L, p_u, p_u, p_u, &c) == PTQG_OK, ptqg_last_error());
        o.detail << "(" << p_s << "," << p_u << ") second/independent=" << c.ratio << " ";
        o.require(c.ratio <= 0.1, "ratio at p_s=" + std::to_string(p_s));
    }
}

void c11(Outcome &o) {
    const std::pair<int, double> stars[] = {{7, 0.9}, {17, 0.5}};
    for (auto [L, p_s] : stars) {
        ptqg_mc_check m{};
        o.require(ptqg_check_star_failures(L, p_s, 1000000, 20100321, workers(), &m) == PTQG_OK, ptqg_last_error());
        o.detail << "star(" << L << "," << p_s << ") z=" << m.z << " ";
        o.require(std::abs(m.z) <= 3, "star failure rate");
    }
    ptqg_sampling_options s = sampling(PTQG_P1, 0.9, 20000);
    s.physical_accounting = 1;
    ptqg_mc_check m{};
    o.require(ptqg_check_random_faults(&s, 7, 1e-3, &m) == PTQG_OK, ptqg_last_error());
    o.detail << "random faults empirical=" << m.empirical << " first order=" << m.reference << " z=" << m.z << " ";
    o.require(std::abs(m.z) <= 3, "random fault sampling");
}

void c12(Outcome &o) {
    const std::string runs[] = {
        "simulate coeffs --samples 300 --L-grid 4:12:2 --seed 11",
        "simulate correlations --samples 300 --ps 0.5 --seed 11",
        "simulate coeffs --variant p2 --samples 200 --L-grid 4:8:1 --seed 12",
    };
    for (const std::string &args : runs) {
        for (const char *fmt : {"csv", "json"}) {
            int s1 = 0, s4 = 0;
            std::string a = run_cli(args + " --format " + fmt + " --workers 1", &s1);
            std::string b = run_cli(args + " --format " + fmt + " --workers 4", &s4);
            o.require(s1 == 0 && s4 == 0 && !a.empty(), "run '" + args + "'");
            o.require(a == b, "identical output for '" + args + "' (" + fmt + ")");
        }
    }
    o.detail << "3 runs x 2 formats compared ";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<void(Outcome &)>>> criteria = {
        {"minimal leaf counts", c1},
        {"threshold anchors", c2},
        {"gate-only threshold", c3},
        {"protocol crossover", c4},
        {"resource anchors", c5},
        {"oracle equivalence", c6},
        {"measurement-only first order", c7},
        {"decoder truth table", c8},
        {"coefficient extraction", c9},
        {"correlation ratio", c10},
        {"Monte Carlo consistency", c11},
        {"reproducibility across workers", c12},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception &e) {
            o.require(false, e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("%s %zu %s: %s(%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
