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

#ifndef PTQG_RNG_H
#define PTQG_RNG_H

#include <cstdint>
#include <random>

namespace ptqg {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed for sample `index` of a run with `master` seed. Depends only on the
/// pair, so results do not depend on how samples are split across workers.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// mt19937_64 with portable uniform/bernoulli draws (the std distributions
/// are implementation-defined, which would break cross-platform replay).
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next() {
        return engine_();
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) {
        // Rejection sampling keeps the result exactly uniform.
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    bool bit() {
        return (engine_() >> 63) != 0;
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace ptqg

#endif
