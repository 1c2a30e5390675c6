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

#ifndef PNR_RANDOM_H
#define PNR_RANDOM_H

#include <cstdint>
#include <random>

namespace pnr {

/// Random source used by every stochastic routine. One instance per worker.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
uint64_t splitmix64(uint64_t x);

/// Seed for the `stream`-th private generator derived from a master seed.
/// Counter based, so stream k is the same no matter how work is scheduled.
uint64_t derive_seed(uint64_t master_seed, uint64_t stream);

/// Generator for stream `stream` of `master_seed`.
Rng make_stream(uint64_t master_seed, uint64_t stream);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Fair coin.
bool coin_flip(Rng &rng);

/// Standard normal variate (Box-Muller, one draw per call).
double standard_normal(Rng &rng);

/// Poisson variate. Inversion below a mean of 10, transformed rejection
/// (PTRS) above.
uint64_t poisson(Rng &rng, double mean);

}  // namespace pnr

#endif
