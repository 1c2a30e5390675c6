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
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

using namespace pnr;

TEST(random, streams_are_deterministic_and_distinct) {
    ASSERT_EQ(derive_seed(5, 3), derive_seed(5, 3));
    std::set<uint64_t> seeds;
    for (uint64_t s = 0; s < 1000; s++) {
        seeds.insert(derive_seed(42, s));
    }
    ASSERT_EQ(seeds.size(), 1000u);
    Rng a = make_stream(1, 2);
    Rng b = make_stream(1, 2);
    for (int k = 0; k < 10; k++) {
        ASSERT_EQ(a(), b());
    }
}

TEST(random, uniform_in_unit_interval) {
    Rng rng(1);
    for (int k = 0; k < 100000; k++) {
        double u = uniform01(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(random, poisson_zero_and_invalid_means) {
    Rng rng(3);
    for (int k = 0; k < 100; k++) {
        ASSERT_EQ(poisson(rng, 0), 0u);
    }
    ASSERT_THROW(poisson(rng, -1), std::invalid_argument);
    ASSERT_THROW(poisson(rng, INFINITY), std::invalid_argument);
}

// Chi-square goodness of fit against the exact pmf, bins with expectation
// below 5 pooled into the tails.
double poisson_chi_square(double mean, int n, uint64_t seed, int *dof) {
    Rng rng(seed);
    std::map<uint64_t, int> hist;
    for (int k = 0; k < n; k++) {
        hist[poisson(rng, mean)]++;
    }
    int top = static_cast<int>(mean + 12 * std::sqrt(mean) + 20);
    std::vector<double> expected;
    std::vector<double> observed;
    double e_acc = 0;
    double o_acc = 0;
    for (int k = 0; k <= top; k++) {
        double p = std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0));
        e_acc += p * n;
        o_acc += hist.count(static_cast<uint64_t>(k)) ? hist[static_cast<uint64_t>(k)] : 0;
        if (e_acc >= 5) {
            expected.push_back(e_acc);
            observed.push_back(o_acc);
            e_acc = 0;
            o_acc = 0;
        }
    }
    double chi = 0;
    for (size_t k = 0; k < expected.size(); k++) {
        chi += (observed[k] - expected[k]) * (observed[k] - expected[k]) / expected[k];
    }
    *dof = static_cast<int>(expected.size()) - 1;
    return chi;
}

TEST(random, poisson_distribution_both_regimes) {
    for (double mean : {0.5, 3.3, 9.8596, 10.0, 13.0321, 25.0, 120.0}) {
        int dof = 0;
        double chi = poisson_chi_square(mean, 200000, 77, &dof);
        // Mean + 5 sd of a chi-square with `dof` degrees of freedom.
        ASSERT_LT(chi, dof + 5 * std::sqrt(2.0 * dof)) << "mean=" << mean;
    }
}

TEST(random, poisson_sample_mean) {
    Rng rng(2024);
    const int n = 100000;
    const double mean = 9.8596;
    double sum = 0;
    for (int k = 0; k < n; k++) {
        sum += static_cast<double>(poisson(rng, mean));
    }
    ASSERT_NEAR(sum / n, mean, 3 * std::sqrt(mean / n));
}

TEST(random, standard_normal_moments) {
    Rng rng(8);
    const int n = 200000;
    double s1 = 0;
    double s2 = 0;
    for (int k = 0; k < n; k++) {
        double v = standard_normal(rng);
        s1 += v;
        s2 += v * v;
    }
    ASSERT_NEAR(s1 / n, 0, 4 / std::sqrt(static_cast<double>(n)));
    ASSERT_NEAR(s2 / n, 1, 4 * std::sqrt(2.0 / n));
}
