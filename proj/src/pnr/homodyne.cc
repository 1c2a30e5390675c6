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

#include "pnr/homodyne.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pnr/numerics.h"

namespace pnr {

double quadrature_pdf(const QuadratureDensity &d, double x, const IntegrationOptions &options) {
    double shift = std::numbers::sqrt2 * d.beta * static_cast<double>(d.sign);
    double v = integrate(
        d.noise,
        [&](double phi) {
            double z = x - shift * std::cos(phi);
            return std::exp(-z * z);
        },
        options);
    return v / std::sqrt(std::numbers::pi);
}

double homodyne_error(double beta, const PhaseNoise &noise, const IntegrationOptions &options) {
    if (!(beta >= 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be finite and non-negative");
    }
    double scale = std::numbers::sqrt2 * beta;
    double v = integrate(noise, [&](double phi) { return 0.5 * erfc(scale * std::cos(phi)); }, options);
    return std::clamp(v, 0.0, 0.5);
}

Moments quadrature_moments(const QuadratureDensity &d) {
    double mean = std::numbers::sqrt2 * d.beta * static_cast<double>(d.sign) * characteristic(d.noise, 1);
    double second = 0.5 + d.beta * d.beta * (1 + characteristic(d.noise, 2));
    return Moments{mean, second - mean * mean};
}

}  // namespace pnr
