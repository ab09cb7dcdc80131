// Copyright 2026 The qac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "qac/qubit.hpp"

namespace qac {

/// Counter-based generator: the k-th output is splitmix64(key + k * golden).
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) : key_(key) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(key_ + (++counter_) * kGolden); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Child seed for an independent stream (batch, restart, ...).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return CounterRng::mix(CounterRng::mix(seed) ^ (stream + 0x632be59bd9b4e019ULL));
}

/// Uniform direction on the sphere from a normalized Gaussian triple.
template <class Rng>
BlochVector haar_direction(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        const BlochVector g{normal(rng), normal(rng), normal(rng)};
        const double n = g.norm();
        if (n > 1e-12) return g * (1.0 / n);
    }
}

}  // namespace qac
