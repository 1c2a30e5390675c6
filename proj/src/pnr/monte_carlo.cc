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

#include "pnr/monte_carlo.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pnr/parallel.h"

namespace pnr {

ShotRecord simulate_shot(const OutputMeans &means, Rng &rng) {
    ShotRecord r;
    r.n_c = poisson(rng, means.mu_c);
    r.n_d = poisson(rng, means.mu_d);
    return r;
}

Bit decide(const ShotRecord &shot, Rng &rng) {
    if (shot.n_c > shot.n_d) {
        return Bit::ONE;
    }
    if (shot.n_c < shot.n_d) {
        return Bit::ZERO;
    }
    return coin_flip(rng) ? Bit::ONE : Bit::ZERO;
}

double BootstrapResult::standard_error_of_mean() const {
    return n_reps == 0 ? 0 : std_error / std::sqrt(static_cast<double>(n_reps));
}

BootstrapResult summarize_repetitions(std::span<const double> error_fractions, size_t n_shots_per_rep) {
    BootstrapResult out;
    out.n_reps = error_fractions.size();
    out.n_shots_per_rep = n_shots_per_rep;
    if (error_fractions.empty()) {
        return out;
    }
    double sum = 0;
    for (double e : error_fractions) {
        sum += e;
    }
    out.mean_error = sum / static_cast<double>(out.n_reps);
    if (out.n_reps > 1) {
        double ss = 0;
        for (double e : error_fractions) {
            ss += (e - out.mean_error) * (e - out.mean_error);
        }
        out.std_error = std::sqrt(ss / static_cast<double>(out.n_reps - 1));
    }
    return out;
}

namespace {

void check_sizes(const ExperimentOptions &options) {
    if (options.n_shots < 1 || options.n_reps < 1) {
        throw std::invalid_argument("n_shots and n_reps must both be at least 1");
    }
}

}  // namespace

BootstrapResult run_experiment(const Receiver &receiver, const PhaseNoise &noise, const ExperimentOptions &options) {
    check_sizes(options);
    double eta1 = prior_one(receiver);
    std::vector<double> fractions(options.n_reps, 0.0);
    parallel_for(options.n_reps, options.workers, [&](size_t rep) {
        Rng rng = make_stream(options.seed, rep);
        size_t wrong = 0;
        for (size_t k = 0; k < options.n_shots; k++) {
            Bit sent = uniform01(rng) < eta1 ? Bit::ONE : Bit::ZERO;
            double shift = sample(noise, rng);
            ShotRecord shot = simulate_shot(receiver_means(receiver, sent, shift), rng);
            if (decide(shot, rng) != sent) {
                wrong++;
            }
        }
        fractions[rep] = static_cast<double>(wrong) / static_cast<double>(options.n_shots);
    });
    return summarize_repetitions(fractions, options.n_shots);
}

BootstrapResult bootstrap_error(std::span<const ShotRecord> pool, const ExperimentOptions &options) {
    check_sizes(options);
    if (pool.empty()) {
        throw std::invalid_argument("bootstrap pool is empty");
    }
    for (const auto &r : pool) {
        if (!r.true_bit.has_value()) {
            throw std::invalid_argument("bootstrap pool holds an unlabelled record");
        }
    }
    std::vector<double> fractions(options.n_reps, 0.0);
    parallel_for(options.n_reps, options.workers, [&](size_t rep) {
        Rng rng = make_stream(options.seed, rep);
        size_t wrong = 0;
        for (size_t k = 0; k < options.n_shots; k++) {
            size_t idx = static_cast<size_t>(uniform01(rng) * static_cast<double>(pool.size()));
            idx = std::min(idx, pool.size() - 1);
            const ShotRecord &shot = pool[idx];
            if (decide(shot, rng) != *shot.true_bit) {
                wrong++;
            }
        }
        fractions[rep] = static_cast<double>(wrong) / static_cast<double>(options.n_shots);
    });
    return summarize_repetitions(fractions, options.n_shots);
}

std::vector<ShotRecord> synthesize_piezo_scan(
    const DetectorCalibration &cal, size_t n_positions, size_t shots_per_position, uint64_t seed, size_t workers) {
    if (n_positions < 2) {
        throw std::invalid_argument("a piezo scan needs at least 2 positions");
    }
    cal.validate();
    std::vector<ShotRecord> out(n_positions * shots_per_position);
    parallel_for(n_positions, workers, [&](size_t pos) {
        Rng rng = make_stream(seed, pos);
        double phase = 2 * std::numbers::pi * static_cast<double>(pos) / static_cast<double>(n_positions);
        OutputMeans means = calibrated_means(cal, Bit::ONE, phase, 0.0);
        for (size_t k = 0; k < shots_per_position; k++) {
            ShotRecord r = simulate_shot(means, rng);
            r.position_index = static_cast<uint32_t>(pos);
            r.phase_tag = phase;
            out[pos * shots_per_position + k] = r;
        }
    });
    return out;
}

}  // namespace pnr
