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

#include "ptqg/simulation.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "ptqg/effect_table.h"
#include "ptqg/errors.h"
#include "ptqg/rng.h"

namespace ptqg {

std::string_view convention_name(NoiseConvention c) {
    return c == NoiseConvention::kFaceValue ? "face-value" : "depolarizing";
}

NoiseConvention parse_convention(std::string_view text) {
    if (text == "face-value") {
        return NoiseConvention::kFaceValue;
    }
    if (text == "depolarizing") {
        return NoiseConvention::kDepolarizing;
    }
    throw std::invalid_argument("unknown noise convention '" + std::string(text) + "'");
}

std::string_view accounting_name(Accounting a) {
    return a == Accounting::kFootprint ? "footprint" : "physical";
}

Accounting parse_accounting(std::string_view text) {
    if (text == "footprint") {
        return Accounting::kFootprint;
    }
    if (text == "physical") {
        return Accounting::kPhysical;
    }
    throw std::invalid_argument("unknown accounting '" + std::string(text) + "'");
}

LocationTally &LocationTally::operator+=(const LocationTally &o) {
    for (size_t r = 0; r < kNumRegions; r++) {
        gate[r] += o.gate[r];
        prep[r] += o.prep[r];
        meas[r] += o.meas[r];
    }
    discarded_pairs += o.discarded_pairs;
    return *this;
}

namespace {

constexpr char kPaulis[4] = {'I', 'X', 'Y', 'Z'};

struct WeightedPauli {
    char p;
    int64_t weight;
};

std::vector<WeightedPauli> single_faults(NoiseConvention conv, char face_value) {
    if (conv == NoiseConvention::kFaceValue) {
        return {{face_value, kSingleUnits}};
    }
    return {{'X', 1}, {'Y', 1}, {'Z', 1}};
}

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index is
/// handled exactly once and writes only its own slot, so the caller's
/// in-order reduction is independent of the split.
template <typename Fn>
void parallel_for(size_t n, int workers, Fn fn) {
    size_t w = std::clamp<size_t>(workers < 1 ? 1 : static_cast<size_t>(workers), 1, std::max<size_t>(n, 1));
    if (w == 1) {
        for (size_t i = 0; i < n; i++) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (size_t t = 0; t < w; t++) {
        threads.emplace_back([&, t] {
            try {
                for (size_t i = t * n / w; i < (t + 1) * n / w; i++) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

constexpr int kMaxRedraws = 100000;

struct Draw {
    AssemblyRecord rec;
    int attempts = 0;
};

Draw draw_assembly(const SamplingOptions &o, int L, Rng &rng) {
    Draw d;
    for (int k = 0; k < kMaxRedraws; k++) {
        d.attempts++;
        LeafAllocation alloc = allocate_leaves(L, o.p_s, o.neighbor_count, rng);
        if (!alloc.star_failed) {
            d.rec = assemble(o.variant, L, o.geometry, alloc.leaves, o.neighbor_count);
            return d;
        }
    }
    throw ResourceError("could not draw a non-failed star at p_s=" + std::to_string(o.p_s) + ", L=" + std::to_string(L));
}

void check_sampling(const SamplingOptions &o, int L) {
    if (!(o.p_s > 0 && o.p_s <= 1)) {
        throw std::invalid_argument("p_s must be in (0, 1]");
    }
    if (L < 4) {
        throw std::invalid_argument("L must be at least 4");
    }
    if (o.samples == 0) {
        throw std::invalid_argument("samples must be positive");
    }
    if (o.variant == Variant::kP2) {
        o.geometry.validate();
    }
}

class Charger {
   public:
    Charger(const AssemblyRecord &rec, const EnumerationOptions &opt)
        : rec_(rec), opt_(opt), central_(rec.circuit.root_ordinal(rec.central_root)) {
    }

    bool flips(const RootMasks &m) const {
        uint64_t bits = m.z | (opt_.count_benign_as_flip ? m.x : 0);
        if (opt_.accounting == Accounting::kFootprint) {
            return bits != 0;
        }
        return (bits >> central_) & 1;
    }

    bool charged(uint32_t a, uint32_t b) const {
        if (opt_.accounting == Accounting::kPhysical) {
            return true;
        }
        return rec_.qubits[a].footprint || rec_.qubits[b].footprint;
    }

    Region region(uint32_t a, uint32_t b) const {
        if (rec_.qubits[a].discarded || rec_.qubits[b].discarded) {
            return Region::kDiscardedLeaves;
        }
        if (a == rec_.central_root && b == rec_.central_root) {
            return Region::kRootSelf;
        }
        return Region::kSuccessArms;
    }

   private:
    const AssemblyRecord &rec_;
    const EnumerationOptions &opt_;
    size_t central_;
};

}  // namespace

LocationTally tally_single_faults(const AssemblyRecord &rec, const EnumerationOptions &opt) {
    const Circuit &c = rec.circuit;
    EffectTable table(c);
    Charger ch(rec, opt);
    LocationTally t;
    EffectTable::Accumulator acc(table);
    auto events = c.events();
    for (size_t e = 0; e < events.size(); e++) {
        const CircuitEvent &ev = events[e];
        if (ev.kind == EventKind::kCZ) {
            if ((!ev.succeeded && !opt.depolarize_failed_cz) || !ch.charged(ev.a, ev.b)) {
                continue;
            }
            auto r = static_cast<size_t>(ch.region(ev.a, ev.b));
            for (int k = 1; k < 16; k++) {
                acc.clear();
                acc.add_pair(e, kPaulis[k & 3], kPaulis[k >> 2]);
                t.gate[r] += ch.flips(acc.resolve());
            }
            continue;
        }
        if (!ch.charged(ev.a, ev.a)) {
            continue;
        }
        auto r = static_cast<size_t>(ch.region(ev.a, ev.a));
        char face = ev.kind == EventKind::kMeasZ ? 'X' : 'Z';
        auto &bucket = ev.kind == EventKind::kPrepPlus ? t.prep : t.meas;
        for (auto [p, w] : single_faults(opt.convention, face)) {
            acc.clear();
            acc.add(e, ev.a, p);
            if (ch.flips(acc.resolve())) {
                bucket[r] += w;
            }
        }
    }
    for (uint32_t root : c.roots()) {
        if (!ch.charged(root, root)) {
            continue;
        }
        auto r = static_cast<size_t>(ch.region(root, root));
        size_t ord = c.root_ordinal(root);
        for (auto [p, w] : single_faults(opt.convention, 'Z')) {
            RootMasks m;
            if (p != 'Z') {
                m.x = uint64_t{1} << ord;
            }
            if (p != 'X') {
                m.z = uint64_t{1} << ord;
            }
            if (ch.flips(m)) {
                t.meas[r] += w;
            }
        }
    }

    // Pairs of single-qubit faults inside each discarded central arm.
    std::map<int, std::vector<std::pair<size_t, uint32_t>>> arms;
    for (size_t e = 0; e < events.size(); e++) {
        const CircuitEvent &ev = events[e];
        if (ev.kind != EventKind::kCZ && rec.qubits[ev.a].discarded) {
            arms[rec.qubits[ev.a].arm].emplace_back(e, ev.a);
        }
    }
    for (const auto &[arm, locs] : arms) {
        struct Loc {
            size_t e;
            uint32_t q;
            char p;
            int64_t w;
        };
        std::vector<Loc> faults;
        for (auto [e, q] : locs) {
            char face = events[e].kind == EventKind::kMeasZ ? 'X' : 'Z';
            for (auto [p, w] : single_faults(opt.convention, face)) {
                faults.push_back({e, q, p, w});
            }
        }
        for (size_t i = 0; i < faults.size(); i++) {
            for (size_t j = i + 1; j < faults.size(); j++) {
                if (faults[i].e == faults[j].e) {
                    continue;
                }
                acc.clear();
                acc.add(faults[i].e, faults[i].q, faults[i].p);
                acc.add(faults[j].e, faults[j].q, faults[j].p);
                if (ch.flips(acc.resolve())) {
                    t.discarded_pairs += faults[i].w * faults[j].w;
                }
            }
        }
    }
    return t;
}

LinearFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit needs at least two points");
    }
    double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit needs two distinct x values");
    }
    LinearFit f;
    f.b = sxy / sxx;
    f.a = my - f.b * mx;
    double ss_res = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double r = y[i] - (f.a + f.b * x[i]);
        ss_res += r * r;
    }
    f.r_squared = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
    return f;
}

CoefficientPoint sample_coefficients(const SamplingOptions &o, int L) {
    check_sampling(o, L);
    std::vector<LocationTally> tallies(o.samples);
    std::vector<int> attempts(o.samples);
    uint64_t seed = derive_seed(o.seed, static_cast<uint64_t>(L));
    parallel_for(o.samples, o.workers, [&](size_t i) {
        Rng rng(derive_seed(seed, i));
        Draw d = draw_assembly(o, L, rng);
        tallies[i] = tally_single_faults(d.rec, o.enumeration);
        attempts[i] = d.attempts;
    });

    auto n = static_cast<double>(o.samples);
    LocationTally sum;
    int64_t draws = 0;
    double gate_sq = 0;
    for (size_t i = 0; i < o.samples; i++) {
        sum += tallies[i];
        draws += attempts[i];
        double g = 0;
        for (int64_t v : tallies[i].gate) {
            g += static_cast<double>(v);
        }
        g /= kGateUnits;
        gate_sq += g * g;
    }
    auto total = [](const std::array<int64_t, kNumRegions> &a) {
        return static_cast<double>(a[0] + a[1] + a[2]);
    };
    constexpr auto kDisc = static_cast<size_t>(Region::kDiscardedLeaves);
    CoefficientPoint pt;
    pt.L = L;
    pt.gate = total(sum.gate) / kGateUnits / n;
    pt.prep = total(sum.prep) / kSingleUnits / n;
    pt.meas = total(sum.meas) / kSingleUnits / n;
    double var = std::max(0.0, gate_sq / n - pt.gate * pt.gate);
    pt.gate_stderr = o.samples > 1 ? std::sqrt(var / (n - 1)) : 0;
    pt.discarded_single_first_order = static_cast<double>(sum.prep[kDisc] + sum.meas[kDisc]) / kSingleUnits / n;
    pt.discarded_gate_first_order = static_cast<double>(sum.gate[kDisc]) / kGateUnits / n;
    pt.discarded_second_order = static_cast<double>(sum.discarded_pairs) / (kSingleUnits * kSingleUnits) / n;
    pt.failed_draw_fraction = static_cast<double>(draws - static_cast<int64_t>(o.samples)) / static_cast<double>(draws);
    return pt;
}

CoefficientFit extract_coefficients(const SamplingOptions &o, const std::vector<int> &L_grid) {
    std::set<int> distinct(L_grid.begin(), L_grid.end());
    if (distinct.size() < 5) {
        throw std::invalid_argument("coefficient extraction needs at least 5 distinct L values");
    }
    CoefficientFit fit;
    fit.options = o;
    fit.geometry = o.variant == Variant::kP2 ? o.geometry.str() : "star";
    if (o.samples < 1000) {
        fit.warnings.push_back(
            "only " + std::to_string(o.samples) + " samples per L; at least 1000 are needed for reliable coefficients");
    }
    std::vector<double> xs, g, pr, m;
    for (int L : distinct) {
        CoefficientPoint pt = sample_coefficients(o, L);
        xs.push_back(L);
        g.push_back(pt.gate);
        pr.push_back(pt.prep);
        m.push_back(pt.meas);
        fit.points.push_back(pt);
    }
    fit.gate = fit_line(xs, g);
    fit.prep = fit_line(xs, pr);
    fit.meas = fit_line(xs, m);
    return fit;
}

CorrelationReport classify_correlations(const SamplingOptions &o, int L, double p_u, double p_P, double p_M) {
    check_sampling(o, L);
    for (double p : {p_u, p_P, p_M}) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("error rates must be probabilities");
        }
    }
    // Per sample: independent, nearest, second-nearest, higher order.
    std::vector<std::array<double, 4>> per(o.samples);
    uint64_t seed = derive_seed(o.seed, static_cast<uint64_t>(L));
    bool benign = o.enumeration.count_benign_as_flip;
    parallel_for(o.samples, o.workers, [&](size_t i) {
        Rng rng(derive_seed(seed, i));
        Draw d = draw_assembly(o, L, rng);
        const Circuit &c = d.rec.circuit;
        EffectTable table(c);
        EffectTable::Accumulator acc(table);
        uint64_t central = uint64_t{1} << c.root_ordinal(d.rec.central_root);
        std::array<double, 4> cls{};
        auto classify = [&](const RootMasks &m, double w) {
            uint64_t bits = m.z | (benign ? m.x : 0);
            int k = std::popcount(bits);
            if (k == 0) {
                return;
            }
            if (k == 1) {
                cls[0] += w;
            } else if (k == 2) {
                cls[(bits & central) ? 1 : 2] += w;
            } else {
                cls[3] += w;
            }
        };
        auto events = c.events();
        for (size_t e = 0; e < events.size(); e++) {
            const CircuitEvent &ev = events[e];
            if (ev.kind == EventKind::kCZ) {
                if (!ev.succeeded && !o.enumeration.depolarize_failed_cz) {
                    continue;
                }
                for (int k = 1; k < 16; k++) {
                    acc.clear();
                    acc.add_pair(e, kPaulis[k & 3], kPaulis[k >> 2]);
                    classify(acc.resolve(), p_u / kGateUnits);
                }
                continue;
            }
            double p = ev.kind == EventKind::kPrepPlus ? p_P : p_M;
            char face = ev.kind == EventKind::kMeasZ ? 'X' : 'Z';
            for (auto [pauli, w] : single_faults(o.enumeration.convention, face)) {
                acc.clear();
                acc.add(e, ev.a, pauli);
                classify(acc.resolve(), p * static_cast<double>(w) / kSingleUnits);
            }
        }
        for (uint32_t root : c.roots()) {
            size_t ord = c.root_ordinal(root);
            for (auto [pauli, w] : single_faults(o.enumeration.convention, 'Z')) {
                RootMasks m;
                m.x = pauli != 'Z' ? uint64_t{1} << ord : 0;
                m.z = pauli != 'X' ? uint64_t{1} << ord : 0;
                classify(m, p_M * static_cast<double>(w) / kSingleUnits);
            }
        }
        per[i] = cls;
    });

    CorrelationReport rep;
    rep.options = o;
    rep.L = L;
    rep.p_u = p_u;
    rep.p_P = p_P;
    rep.p_M = p_M;
    std::array<double, 4> sum{};
    for (const auto &cls : per) {
        for (size_t k = 0; k < 4; k++) {
            sum[k] += cls[k];
        }
    }
    auto n = static_cast<double>(o.samples);
    rep.independent = sum[0] / n;
    rep.nearest = sum[1] / n;
    rep.second_nearest = sum[2] / n;
    rep.higher_order = sum[3] / n;
    rep.ratio = rep.independent > 0 ? rep.second_nearest / rep.independent : 0;
    return rep;
}

StarFailureCheck check_star_failures(int L, double p_s, size_t samples, uint64_t seed, int workers) {
    if (samples == 0) {
        throw std::invalid_argument("samples must be positive");
    }
    if (L < 4) {
        throw std::invalid_argument("L must be at least 4");
    }
    std::vector<uint8_t> failed(samples);
    parallel_for(samples, workers, [&](size_t i) {
        Rng rng(derive_seed(seed, i));
        failed[i] = allocate_leaves(L, p_s, 4, rng).star_failed;
    });
    StarFailureCheck chk;
    chk.samples = samples;
    for (uint8_t f : failed) {
        chk.failures += f;
    }
    auto n = static_cast<double>(samples);
    chk.empirical = static_cast<double>(chk.failures) / n;
    chk.predicted = failure_probability(L, p_s);
    chk.stderr_ = std::sqrt(chk.predicted * (1 - chk.predicted) / n);
    chk.z = chk.stderr_ > 0 ? (chk.empirical - chk.predicted) / chk.stderr_ : 0;
    return chk;
}

MonteCarloCheck check_random_faults(const SamplingOptions &o, int L, double p_u) {
    check_sampling(o, L);
    if (!(p_u > 0 && p_u < 1)) {
        throw std::invalid_argument("p_u must be in (0, 1)");
    }
    std::vector<std::pair<double, double>> per(o.samples);
    uint64_t seed = derive_seed(o.seed, static_cast<uint64_t>(L) ^ 0x5A5A5A5AULL);
    bool benign = o.enumeration.count_benign_as_flip;
    parallel_for(o.samples, o.workers, [&](size_t i) {
        Rng rng(derive_seed(seed, i));
        Draw d = draw_assembly(o, L, rng);
        const Circuit &c = d.rec.circuit;
        EffectTable table(c);
        EffectTable::Accumulator acc(table);
        size_t central = c.root_ordinal(d.rec.central_root);
        auto hit = [&](const RootMasks &m) {
            return (((m.z | (benign ? m.x : 0)) >> central) & 1) != 0;
        };
        int64_t exhaustive = 0;
        EffectTable::Accumulator noisy(table);
        auto events = c.events();
        for (size_t e = 0; e < events.size(); e++) {
            const CircuitEvent &ev = events[e];
            if (ev.kind != EventKind::kCZ || (!ev.succeeded && !o.enumeration.depolarize_failed_cz)) {
                continue;
            }
            for (int k = 1; k < 16; k++) {
                acc.clear();
                acc.add_pair(e, kPaulis[k & 3], kPaulis[k >> 2]);
                exhaustive += hit(acc.resolve());
            }
            if (rng.bernoulli(p_u)) {
                auto k = static_cast<int>(rng.below(15)) + 1;
                noisy.add_pair(e, kPaulis[k & 3], kPaulis[k >> 2]);
            }
        }
        per[i] = {hit(noisy.resolve()) ? 1.0 : 0.0, static_cast<double>(exhaustive) / kGateUnits * p_u};
    });
    MonteCarloCheck chk;
    chk.samples = o.samples;
    double sd = 0, sd2 = 0;
    for (auto [emp, first] : per) {
        chk.empirical += emp;
        chk.first_order += first;
        double diff = emp - first;
        sd += diff;
        sd2 += diff * diff;
    }
    auto n = static_cast<double>(o.samples);
    chk.empirical /= n;
    chk.first_order /= n;
    double mean = sd / n;
    double var = std::max(0.0, sd2 / n - mean * mean);
    chk.diff_stderr = o.samples > 1 ? std::sqrt(var / (n - 1)) : 0;
    chk.z = chk.diff_stderr > 0 ? mean / chk.diff_stderr : 0;
    return chk;
}

}  // namespace ptqg
