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

#include "pnr/cli/distributions.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "pnr/calibration.h"

using namespace pnr;

TEST(distributions, experiment_two_is_centred_on_mean_difference) {
    DistributionSpec spec;
    spec.receiver = CalibratedReceiver{experiment_two()};
    auto rows = compute_distribution(spec);
    double total = 0;
    double mean = 0;
    int64_t mode = 0;
    double peak = 0;
    for (const auto &r : rows) {
        total += r.skellam_pmf;
        mean += r.skellam_pmf * static_cast<double>(r.y);
        if (r.skellam_pmf > peak) {
            peak = r.skellam_pmf;
            mode = r.y;
        }
        ASSERT_FALSE(r.mc_frequency.has_value());
    }
    ASSERT_NEAR(total, 1.0, 1e-10);
    ASSERT_NEAR(mean, 13.0321 - 3.3489, 1e-8);
    ASSERT_NEAR(static_cast<double>(mode), 9.68, 1.0);
}

TEST(distributions, equal_means_are_symmetric) {
    DistributionSpec spec;
    spec.receiver = DiscriminationProblem{.beta = 1, .alpha = 1, .tau = 0.5, .phi = std::numbers::pi / 2};
    auto rows = compute_distribution(spec);
    ASSERT_EQ(rows.front().y, -rows.back().y);
    for (size_t k = 0; k < rows.size(); k++) {
        ASSERT_NEAR(rows[k].skellam_pmf, rows[rows.size() - 1 - k].skellam_pmf, 1e-15);
    }
}

TEST(distributions, mc_frequencies_within_multinomial_bound) {
    DistributionSpec spec;
    spec.receiver = CalibratedReceiver{experiment_one()};
    spec.noise = PhaseNoise::uniform(1.0);
    spec.mc_shots = 50000;
    spec.seed = 9;
    auto rows = compute_distribution(spec);
    double tv = 0;
    double pmf_total = 0;
    double freq_total = 0;
    for (const auto &r : rows) {
        tv += std::abs(*r.mc_frequency - r.skellam_pmf);
        pmf_total += r.skellam_pmf;
        freq_total += *r.mc_frequency;
    }
    tv /= 2;
    ASSERT_NEAR(pmf_total, 1.0, 1e-10);
    ASSERT_NEAR(freq_total, 1.0, 1e-12);
    double bins = static_cast<double>(rows.size());
    ASSERT_LT(tv, 3 * std::sqrt(bins / static_cast<double>(spec.mc_shots)));
    ASSERT_EQ(rows, compute_distribution(spec));
}

TEST(distributions, homodyne_overlay_is_a_unit_density) {
    for (auto noise : {PhaseNoise::none(), PhaseNoise::gaussian(0.5)}) {
        DistributionSpec spec;
        spec.receiver = CalibratedReceiver{experiment_two()};
        spec.noise = noise;
        auto rows = compute_distribution(spec);
        double total = 0;
        for (const auto &r : rows) {
            total += r.homodyne_overlay;
        }
        ASSERT_NEAR(total, 1.0, 1e-3);
    }
}

TEST(distributions, csv_round_trip) {
    DistributionSpec spec;
    spec.receiver = CalibratedReceiver{experiment_one()};
    spec.mc_shots = 500;
    auto rows = compute_distribution(spec);
    std::stringstream s;
    write_distribution(s, rows);
    ASSERT_EQ(read_distribution(s), rows);
    std::istringstream bad("y,p\n");
    ASSERT_THROW(read_distribution(bad), DataError);
}
