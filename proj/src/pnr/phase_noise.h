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

#ifndef PNR_PHASE_NOISE_H
#define PNR_PHASE_NOISE_H

#include <cstddef>
#include <string>

#include "pnr/numerics.h"
#include "pnr/random.h"

namespace pnr {

enum class NoiseKind { NONE, UNIFORM, GAUSSIAN };

/// Phase-noise weight function f(phi).
///
/// UNIFORM has total width `gamma` (support [-gamma/2, gamma/2]); GAUSSIAN is
/// a zero-mean normal with standard deviation `sigma`. NONE, and either family
/// with a zero parameter, acts as a Dirac delta at phi = 0.
struct PhaseNoise {
    NoiseKind kind = NoiseKind::NONE;
    double gamma = 0;
    double sigma = 0;

    static PhaseNoise none();
    static PhaseNoise uniform(double gamma);
    static PhaseNoise gaussian(double sigma);

    /// The meaningful parameter of this kind (gamma or sigma; 0 for NONE).
    double parameter() const;
    /// True when the weight is a point mass at zero.
    bool is_delta() const;
    /// Same family with a different parameter.
    PhaseNoise with_parameter(double value) const;

    std::string str() const;
    bool operator==(const PhaseNoise &other) const = default;
};

NoiseKind parse_noise_kind(const std::string &text);
std::string noise_kind_name(NoiseKind kind);

/// Controls the quadrature used by `integrate`.
struct IntegrationOptions {
    /// Gauss-Legendre nodes per panel.
    size_t order = 201;
    /// Upper bound on a panel's width in radians.
    double max_panel_width = 1.0;
    /// Gaussian support is truncated at +-cutoff * sigma.
    double gaussian_cutoff = 8.0;
};

/// f(phi). Throws std::logic_error for a delta weight, which has no density.
double pdf(const PhaseNoise &noise, double phi);

/// Quadrature rule with f folded into the weights, so that
/// sum_k w_k g(x_k) approximates the integral of f(phi) g(phi).
QuadratureRule noise_rule(const PhaseNoise &noise, const IntegrationOptions &options = {});

/// Integral of f(phi) g(phi) dphi.
template <typename Func>
double integrate(const PhaseNoise &noise, Func &&g, const IntegrationOptions &options = {}) {
    if (noise.is_delta()) {
        return g(0.0);
    }
    return noise_rule(noise, options).apply(g);
}

/// F(k) = integral of f(phi) e^{i k phi}, real because f is even.
double characteristic(const PhaseNoise &noise, int k);

/// Draws phi ~ f.
double sample(const PhaseNoise &noise, Rng &rng);

/// Gaussian width with the same variance as a uniform window of width gamma.
double matched_sigma(double gamma);

}  // namespace pnr

#endif
