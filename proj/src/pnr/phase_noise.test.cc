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

#include "pnr/phase_noise.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gtest/gtest.h"

using namespace pnr;

TEST(phase_noise, pdf_values) {
    ASSERT_DOUBLE_EQ(pdf(PhaseNoise::uniform(2), 0), 0.5);
    ASSERT_EQ(pdf(PhaseNoise::uniform(2), 1.5), 0.0);
    ASSERT_DOUBLE_EQ(pdf(PhaseNoise::uniform(2), 1.0), 0.5);
    ASSERT_NEAR(pdf(PhaseNoise::gaussian(1), 0), 1 / std::sqrt(2 * std::numbers::pi), 1e-15);
    ASSERT_THROW(pdf(PhaseNoise::none(), 0), std::logic_error);
}

TEST(phase_noise, rejects_negative_parameters) {
    ASSERT_THROW(PhaseNoise::uniform(-1), std::invalid_argument);
    ASSERT_THROW(PhaseNoise::gaussian(-0.1), std::invalid_argument);
    ASSERT_THROW(parse_noise_kind("lorentzian"), std::invalid_argument);
    ASSERT_EQ(parse_noise_kind("gaussian"), NoiseKind::GAUSSIAN);
}

TEST(phase_noise, integrate_delta_evaluates_at_zero) {
    auto g = [](double phi) { return 3 + phi + std::cos(phi); };
    ASSERT_EQ(integrate(PhaseNoise::none(), g), 4.0);
    ASSERT_EQ(integrate(PhaseNoise::uniform(0), g), 4.0);
    ASSERT_EQ(integrate(PhaseNoise::gaussian(0), g), 4.0);
}

TEST(phase_noise, pdf_normalized) {
    auto one = [](double) { return 1.0; };
    for (double gamma : {0.01, 0.5, 1.0, 3.0, 2 * std::numbers::pi}) {
        ASSERT_NEAR(integrate(PhaseNoise::uniform(gamma), one), 1.0, 1e-12) << gamma;
    }
    for (double sigma : {0.01, 0.144, 0.5, 1.0, 2.0}) {
        ASSERT_NEAR(integrate(PhaseNoise::gaussian(sigma), one), 1.0, 1e-12) << sigma;
    }
}

TEST(phase_noise, second_moments) {
    auto sq = [](double phi) { return phi * phi; };
    for (double sigma : {0.05, 0.3, 1.0}) {
        ASSERT_NEAR(integrate(PhaseNoise::gaussian(sigma), sq), sigma * sigma, 1e-12) << sigma;
    }
    for (double gamma : {0.2, 1.0, 2.5}) {
        double var = integrate(PhaseNoise::uniform(gamma), sq);
        ASSERT_NEAR(var, gamma * gamma / 12, 1e-12);
        double s = matched_sigma(gamma);
        ASSERT_NEAR(var, s * s, 1e-12);
    }
}

TEST(phase_noise, characteristic_values) {
    ASSERT_EQ(characteristic(PhaseNoise::uniform(1.3), 0), 1.0);
    ASSERT_EQ(characteristic(PhaseNoise::gaussian(0.7), 0), 1.0);
    ASSERT_EQ(characteristic(PhaseNoise::none(), 17), 1.0);
    ASSERT_NEAR(characteristic(PhaseNoise::uniform(2 * std::numbers::pi), 1), 0.0, 1e-15);
    ASSERT_NEAR(characteristic(PhaseNoise::uniform(1), 3), 0.664996657736036, 1e-14);
    ASSERT_NEAR(characteristic(PhaseNoise::gaussian(0.5), 2), std::exp(-0.5), 1e-15);
}

TEST(phase_noise, characteristic_matches_quadrature) {
    IntegrationOptions options;
    for (auto noise : {PhaseNoise::uniform(0.5), PhaseNoise::uniform(1), PhaseNoise::uniform(3),
                       PhaseNoise::uniform(2 * std::numbers::pi), PhaseNoise::gaussian(0.05),
                       PhaseNoise::gaussian(0.144), PhaseNoise::gaussian(0.4), PhaseNoise::gaussian(1.0)}) {
        for (int k = -128; k <= 128; k++) {
            double quad = integrate(noise, [&](double phi) { return std::cos(k * phi); }, options);
            double closed = characteristic(noise, k);
            ASSERT_NEAR(closed, quad, 1e-9) << noise.str() << " k=" << k;
            ASSERT_LE(std::abs(closed), 1.0);
            ASSERT_EQ(closed, characteristic(noise, -k));
        }
    }
}

TEST(phase_noise, matched_sigma_values) {
    ASSERT_EQ(matched_sigma(0), 0.0);
    ASSERT_NEAR(matched_sigma(2 * std::sqrt(3.0)), 1.0, 1e-15);
    ASSERT_NEAR(matched_sigma(0.6), 0.173205080756888, 1e-14);
    ASSERT_NEAR(matched_sigma(0.5), 0.144337567297406, 1e-14);
}

TEST(phase_noise, sample_support_and_delta) {
    Rng rng(7);
    for (int k = 0; k < 1000; k++) {
        ASSERT_EQ(sample(PhaseNoise::none(), rng), 0.0);
    }
    auto noise = PhaseNoise::uniform(0.8);
    for (int k = 0; k < 100000; k++) {
        double v = sample(noise, rng);
        ASSERT_GE(v, -0.4);
        ASSERT_LE(v, 0.4);
    }
}

TEST(phase_noise, gaussian_sample_variance) {
    Rng rng(12345);
    const int n = 1000000;
    const double sigma = 0.5;
    double sum = 0;
    double sum2 = 0;
    for (int k = 0; k < n; k++) {
        double v = sample(PhaseNoise::gaussian(sigma), rng);
        sum += v;
        sum2 += v * v;
    }
    double mean = sum / n;
    double var = sum2 / n - mean * mean;
    ASSERT_NEAR(var, 0.25, 3 * std::sqrt(2.0 / n) * sigma * sigma);
    ASSERT_NEAR(mean, 0, 3 * sigma / std::sqrt(static_cast<double>(n)));
}

TEST(phase_noise, uniform_sample_variance) {
    Rng rng(99);
    const int n = 400000;
    const double gamma = 1.2;
    double sum2 = 0;
    for (int k = 0; k < n; k++) {
        double v = sample(PhaseNoise::uniform(gamma), rng);
        sum2 += v * v;
    }
    // Var(phi^2) for a uniform window is gamma^4 / 80 - (gamma^2 / 12)^2.
    double var = gamma * gamma / 12;
    double sd = std::sqrt(std::pow(gamma, 4) / 80 - var * var);
    ASSERT_NEAR(sum2 / n, var, 4 * sd / std::sqrt(static_cast<double>(n)));
}
