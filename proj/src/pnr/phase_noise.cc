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

namespace pnr {

PhaseNoise PhaseNoise::none() {
    return PhaseNoise{};
}

PhaseNoise PhaseNoise::uniform(double gamma) {
    if (!(gamma >= 0) || std::isinf(gamma)) {
        throw std::invalid_argument("uniform noise width must be finite and non-negative");
    }
    return PhaseNoise{NoiseKind::UNIFORM, gamma, 0};
}

PhaseNoise PhaseNoise::gaussian(double sigma) {
    if (!(sigma >= 0) || std::isinf(sigma)) {
        throw std::invalid_argument("gaussian noise width must be finite and non-negative");
    }
    return PhaseNoise{NoiseKind::GAUSSIAN, 0, sigma};
}

double PhaseNoise::parameter() const {
    switch (kind) {
        case NoiseKind::UNIFORM:
            return gamma;
        case NoiseKind::GAUSSIAN:
            return sigma;
        default:
            return 0;
    }
}

bool PhaseNoise::is_delta() const {
    return kind == NoiseKind::NONE || parameter() == 0;
}

PhaseNoise PhaseNoise::with_parameter(double value) const {
    switch (kind) {
        case NoiseKind::UNIFORM:
            return uniform(value);
        case NoiseKind::GAUSSIAN:
            return gaussian(value);
        default:
            return none();
    }
}

std::string PhaseNoise::str() const {
    switch (kind) {
        case NoiseKind::UNIFORM:
            return "uniform(gamma=" + std::to_string(gamma) + ")";
        case NoiseKind::GAUSSIAN:
            return "gaussian(sigma=" + std::to_string(sigma) + ")";
        default:
            return "none";
    }
}

NoiseKind parse_noise_kind(const std::string &text) {
    if (text == "none") {
        return NoiseKind::NONE;
    }
    if (text == "uniform") {
        return NoiseKind::UNIFORM;
    }
    if (text == "gaussian") {
        return NoiseKind::GAUSSIAN;
    }
    throw std::invalid_argument("unknown noise kind '" + text + "' (expected none, uniform or gaussian)");
}

std::string noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::UNIFORM:
            return "uniform";
        case NoiseKind::GAUSSIAN:
            return "gaussian";
        default:
            return "none";
    }
}

double pdf(const PhaseNoise &noise, double phi) {
    if (noise.is_delta()) {
        throw std::logic_error("a delta phase weight has no density; use integrate() or sample()");
    }
    if (noise.kind == NoiseKind::UNIFORM) {
        return std::abs(phi) <= 0.5 * noise.gamma ? 1.0 / noise.gamma : 0.0;
    }
    double z = phi / noise.sigma;
    return std::exp(-0.5 * z * z) / (noise.sigma * std::sqrt(2.0 * std::numbers::pi));
}

QuadratureRule noise_rule(const PhaseNoise &noise, const IntegrationOptions &options) {
    if (noise.is_delta()) {
        QuadratureRule rule;
        rule.nodes = {0.0};
        rule.weights = {1.0};
        rule.kind = QuadratureKind::GAUSSIAN_WEIGHTED;
        return rule;
    }
    double half = noise.kind == NoiseKind::UNIFORM ? 0.5 * noise.gamma : options.gaussian_cutoff * noise.sigma;
    size_t panels = static_cast<size_t>(std::ceil(2 * half / options.max_panel_width));
    if (panels == 0) {
        panels = 1;
    }
    QuadratureRule rule = composite_gauss_legendre(options.order, -half, half, panels);
    for (size_t k = 0; k < rule.size(); k++) {
        rule.weights[k] *= pdf(noise, rule.nodes[k]);
    }
    if (noise.kind == NoiseKind::GAUSSIAN) {
        rule.kind = QuadratureKind::GAUSSIAN_WEIGHTED;
    }
    return rule;
}

double characteristic(const PhaseNoise &noise, int k) {
    if (noise.is_delta() || k == 0) {
        return 1;
    }
    double kk = static_cast<double>(k);
    if (noise.kind == NoiseKind::UNIFORM) {
        double x = 0.5 * noise.gamma * kk;
        return std::sin(x) / x;
    }
    double s = noise.sigma * kk;
    return std::exp(-0.5 * s * s);
}

double sample(const PhaseNoise &noise, Rng &rng) {
    if (noise.is_delta()) {
        return 0;
    }
    if (noise.kind == NoiseKind::UNIFORM) {
        return (uniform01(rng) - 0.5) * noise.gamma;
    }
    return noise.sigma * standard_normal(rng);
}

double matched_sigma(double gamma) {
    if (!(gamma >= 0)) {
        throw std::invalid_argument("gamma must be non-negative");
    }
    return gamma / (2.0 * std::sqrt(3.0));
}

}  // namespace pnr
