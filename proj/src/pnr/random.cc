// Copyright 2026 The pnr-discrimination Authors
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

#include "pnr/random.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pnr/numerics.h"

namespace pnr {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master_seed, uint64_t stream) {
    return splitmix64(splitmix64(master_seed) + splitmix64(stream ^ 0xD1B54A32D192ED03ULL));
}

Rng make_stream(uint64_t master_seed, uint64_t stream) {
    return Rng(derive_seed(master_seed, stream));
}

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool coin_flip(Rng &rng) {
    return (rng() >> 63) != 0;
}

double standard_normal(Rng &rng) {
    double u1 = 1.0 - uniform01(rng);  // (0, 1]
    double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

uint64_t poisson_inversion(Rng &rng, double mean) {
    double u = uniform01(rng);
    double p = std::exp(-mean);
    double cdf = p;
    uint64_t k = 0;
    // The bound guards against u landing in the rounding gap just below 1.
    while (u > cdf && k < 1000) {
        k++;
        p *= mean / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

// Hormann, "The transformed rejection method for generating Poisson random
// variables" (1993).
uint64_t poisson_ptrs(Rng &rng, double mean) {
    double slam = std::sqrt(mean);
    double loglam = std::log(mean);
    double b = 0.931 + 2.53 * slam;
    double a = -0.059 + 0.02483 * b;
    double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    double vr = 0.9277 - 3.6224 / (b - 2);
    while (true) {
        double u = uniform01(rng) - 0.5;
        double v = uniform01(rng);
        double us = 0.5 - std::abs(u);
        double k = std::floor((2 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr) {
            return static_cast<uint64_t>(k);
        }
        if (k < 0 || (us < 0.013 && v > us)) {
            continue;
        }
        double lhs = std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b);
        double rhs = -mean + k * loglam - log_factorial(static_cast<uint64_t>(k));
        if (lhs <= rhs) {
            return static_cast<uint64_t>(k);
        }
    }
}

}  // namespace

uint64_t poisson(Rng &rng, double mean) {
    if (!(mean >= 0) || std::isinf(mean)) {
        throw std::invalid_argument("poisson mean must be finite and non-negative");
    }
    if (mean == 0) {
        return 0;
    }
    if (mean < 10) {
        return poisson_inversion(rng, mean);
    }
    return poisson_ptrs(rng, mean);
}

}  // namespace pnr
