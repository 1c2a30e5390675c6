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

#ifndef PNR_HOMODYNE_H
#define PNR_HOMODYNE_H

#include "pnr/phase_noise.h"

namespace pnr {

/// Quadrature density p(x; sign * beta) of a dephased coherent state under
/// ideal strong-LO homodyne detection.
struct QuadratureDensity {
    double beta = 1;
    PhaseNoise noise;
    /// +1 for |beta>, -1 for |-beta>.
    int sign = 1;
};

double quadrature_pdf(const QuadratureDensity &d, double x, const IntegrationOptions &options = {});

/// Sign-decision homodyne error with equal priors. The x integrals are done in
/// closed form, leaving the noise average of erfc(sqrt(2) beta cos phi) / 2.
double homodyne_error(double beta, const PhaseNoise &noise, const IntegrationOptions &options = {});

struct Moments {
    double mean = 0;
    double variance = 0;
};

/// Mean and variance of x under p(x; sign * beta), from F(1) and F(2).
Moments quadrature_moments(const QuadratureDensity &d);

}  // namespace pnr

#endif
