// Copyright 2026 The quditsim Authors
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

#ifndef QUDITSIM_RNG_H
#define QUDITSIM_RNG_H

#include <cstdint>

namespace quditsim {

/// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

/// SplitMix64 generator. Output is fully specified by the seed, so streams are
/// reproducible across platforms and standard libraries.
///
/// Substream k of seed s starts from state mix64(s ^ mix64(k + golden)), which
/// lets repetition k draw the same numbers no matter which thread runs it.
class SplitMix64 {
   public:
    using result_type = uint64_t;
    static constexpr uint64_t kGolden = UINT64_C(0x9E3779B97F4A7C15);

    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    static SplitMix64 substream(uint64_t seed, uint64_t index) {
        return SplitMix64(mix64(seed ^ mix64(index + kGolden)));
    }

    static constexpr uint64_t min() {
        return 0;
    }
    static constexpr uint64_t max() {
        return UINT64_MAX;
    }

    uint64_t operator()() {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), n > 0, without modulo bias.
    uint64_t below(uint64_t n) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = (*this)();
        } while (x >= limit);
        return x % n;
    }

   private:
    uint64_t state_;
};

/// A seed drawn from the system entropy source.
uint64_t entropy_seed();

}  // namespace quditsim

#endif
