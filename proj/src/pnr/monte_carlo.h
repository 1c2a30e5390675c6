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

#ifndef PNR_MONTE_CARLO_H
#define PNR_MONTE_CARLO_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pnr/phase_noise.h"
#include "pnr/random.h"
#include "pnr/receiver.h"
#include "pnr/shot_record.h"

namespace pnr {

/// Independent Poisson counts on both ports.
ShotRecord simulate_shot(const OutputMeans &means, Rng &rng);

/// Sign of n_c - n_d; a tie is settled by a fair coin drawn from `rng`.
Bit decide(const ShotRecord &shot, Rng &rng);

/// Error-rate statistics over bootstrap repetitions.
struct BootstrapResult {
    /// Mean of the per-repetition error fractions.
    double mean_error = 0;
    /// Standard deviation of the per-repetition error fractions (the
    /// bootstrap error bar of a single N_s-shot estimate).
    double std_error = 0;
    size_t n_shots_per_rep = 0;
    size_t n_reps = 0;

    /// std_error / sqrt(n_reps): uncertainty of mean_error itself.
    double standard_error_of_mean() const;
    bool operator==(const BootstrapResult &other) const = default;
};

/// Mean and sample standard deviation of per-repetition error fractions.
BootstrapResult summarize_repetitions(std::span<const double> error_fractions, size_t n_shots_per_rep);

struct ExperimentOptions {
    size_t n_shots = 1000;
    size_t n_reps = 100;
    uint64_t seed = 0;
    /// 0 uses every hardware thread. Results do not depend on this.
    size_t workers = 0;
};

/// Fresh shots for every repetition: each shot draws an equiprobable bit (or
/// per the receiver's prior), a noise phase from f and Poisson counts, and is
/// decided by the sign rule. Repetition r uses random stream r of the seed.
BootstrapResult run_experiment(const Receiver &receiver, const PhaseNoise &noise, const ExperimentOptions &options);

/// Resamples n_shots labelled records with replacement from `pool` for each
/// repetition and scores the sign rule against true_bit. Records without a
/// label are rejected with std::invalid_argument.
BootstrapResult bootstrap_error(std::span<const ShotRecord> pool, const ExperimentOptions &options);

/// Raw piezo scan: `n_positions` LO phases 2 pi k / n_positions, each with
/// `shots_per_position` unlabelled shots of the Bit::ONE fringe.
std::vector<ShotRecord> synthesize_piezo_scan(
    const DetectorCalibration &cal, size_t n_positions, size_t shots_per_position, uint64_t seed, size_t workers = 0);

}  // namespace pnr

#endif
