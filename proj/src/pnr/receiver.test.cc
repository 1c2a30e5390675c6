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

#include "pnr/receiver.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"

using namespace pnr;

TEST(receiver, ideal_means_constructive_interference) {
    DiscriminationProblem p{.beta = 1, .alpha = 1, .tau = 0.5, .phi = 0};
    auto m = poisson_means(p, Bit::ONE, 0);
    ASSERT_NEAR(m.mu_c, 2.0, 1e-15);
    ASSERT_EQ(m.mu_d, 0.0);
    auto z = poisson_means(p, Bit::ZERO, 0);
    ASSERT_EQ(z.mu_c, 0.0);
    ASSERT_NEAR(z.mu_d, 2.0, 1e-15);
}

TEST(receiver, ideal_means_quadrature_phase) {
    for (auto [alpha, beta] : {std::pair{1.0, 1.0}, std::pair{3.0, 0.4}, std::pair{0.2, 2.0}}) {
        DiscriminationProblem p{.beta = beta, .alpha = alpha, .tau = 0.5, .phi = std::numbers::pi / 2};
        for (Bit b : {Bit::ZERO, Bit::ONE}) {
            auto m = poisson_means(p, b, 0);
            ASSERT_NEAR(m.mu_c, (alpha * alpha + beta * beta) / 2, 1e-14);
            ASSERT_NEAR(m.mu_d, m.mu_c, 1e-14);
        }
    }
}

TEST(receiver, ideal_means_unbalanced_amplitudes) {
    DiscriminationProblem p{.beta = 1, .alpha = 2, .tau = 0.5, .phi = 0};
    auto m = poisson_means(p, Bit::ONE, 0);
    ASSERT_NEAR(m.mu_c, 4.5, 1e-14);
    ASSERT_NEAR(m.mu_d, 0.5, 1e-14);
}

TEST(receiver, ideal_means_phase_shift_substitution) {
    DiscriminationProblem p{.beta = 1.3, .alpha = 2.1, .tau = 0.3, .phi = 0.4};
    DiscriminationProblem q = p;
    q.phi = 0.4 - 0.25;
    auto a = poisson_means(p, Bit::ONE, 0.25);
    auto b = poisson_means(q, Bit::ONE, 0);
    ASSERT_DOUBLE_EQ(a.mu_c, b.mu_c);
    ASSERT_DOUBLE_EQ(a.mu_d, b.mu_d);
    // Total photon number is conserved by the beam splitter.
    ASSERT_NEAR(a.mu_c + a.mu_d, 1.3 * 1.3 + 2.1 * 2.1, 1e-13);
}

TEST(receiver, calibrated_means_experiment_presets) {
    auto m1 = calibrated_means(experiment_one(), Bit::ONE, 0, 0);
    ASSERT_NEAR(m1.mu_c, 9.8596, 1e-12);
    ASSERT_NEAR(m1.mu_d, 1.0, 1e-12);
    auto m2 = calibrated_means(experiment_two(), Bit::ONE, 0, 0);
    ASSERT_NEAR(m2.mu_c, 13.0321, 1e-12);
    ASSERT_NEAR(m2.mu_d, 3.3489, 1e-12);
    auto z1 = calibrated_means(experiment_one(), Bit::ZERO, 0, 0);
    ASSERT_NEAR(z1.mu_c, 0.7744, 1e-12);
    ASSERT_NEAR(z1.mu_d, 9.8596, 1e-12);
}

TEST(receiver, calibrated_means_at_quadrature) {
    for (auto cal : {experiment_one(), experiment_two(), DetectorCalibration{1, 2, 3, 4}}) {
        for (Bit b : {Bit::ZERO, Bit::ONE}) {
            auto m = calibrated_means(cal, b, std::numbers::pi / 2, 0);
            ASSERT_NEAR(m.mu_c, cal.a_c * cal.a_c + cal.b_c * cal.b_c, 1e-12);
            ASSERT_NEAR(m.mu_d, cal.a_d * cal.a_d + cal.b_d * cal.b_d, 1e-12);
        }
    }
}

TEST(receiver, bit_zero_is_pi_shifted_fringe) {
    auto cal = experiment_two();
    for (double phi = -3; phi < 3; phi += 0.21) {
        auto zero = calibrated_means(cal, Bit::ZERO, phi, 0);
        auto one = calibrated_means(cal, Bit::ONE, phi + std::numbers::pi, 0);
        ASSERT_NEAR(zero.mu_c, one.mu_c, 1e-12);
        ASSERT_NEAR(zero.mu_d, one.mu_d, 1e-12);
    }
}

TEST(receiver, validation) {
    DiscriminationProblem p;
    p.tau = 1;
    ASSERT_THROW(p.validate(), std::invalid_argument);
    p.tau = 0.5;
    p.eta1 = 1.5;
    ASSERT_THROW(p.validate(), std::invalid_argument);
    ASSERT_THROW((DetectorCalibration{-1, 1, 1, 1}).validate(), std::invalid_argument);
    ASSERT_NO_THROW(experiment_one().validate());
}

TEST(receiver, calibration_derived_quantities) {
    auto cal = experiment_one();
    ASSERT_NEAR(cal.signal_amplitude(), std::sqrt(1.13 * 1.13 + 1.07 * 1.07), 1e-15);
    ASSERT_GT(cal.visibility_c(), 0);
    ASSERT_LE(cal.visibility_c(), 1);
    ASSERT_NEAR((DetectorCalibration{1, 1, 1, 1}).visibility_d(), 1.0, 1e-15);
    Receiver r = CalibratedReceiver{cal};
    ASSERT_EQ(signal_amplitude(r), cal.signal_amplitude());
    ASSERT_EQ(prior_one(r), 0.5);
}
