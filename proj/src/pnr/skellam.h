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

#ifndef PNR_SKELLAM_H
#define PNR_SKELLAM_H

#include <cstdint>
#include <vector>

#include "pnr/phase_noise.h"
#include "pnr/receiver.h"

namespace pnr {

/// Probability that n_c - n_d == y for independent Poisson counts.
double skellam_pmf(const OutputMeans &means, int64_t y);

/// skellam_pmf for every y in [y_lo, y_hi], sharing one Bessel recurrence.
std::vector<double> skellam_pmf_range(const OutputMeans &means, int64_t y_lo, int64_t y_hi);

/// Chernoff bound on P(n_c - n_d <= -k) for k >= 1.
double skellam_lower_tail_bound(const OutputMeans &means, int64_t k);

/// Smallest k >= 1 with skellam_lower_tail_bound(means, k) < tolerance.
int64_t skellam_lower_cutoff(const OutputMeans &means, double tolerance);

/// P(n_c - n_d < 0), truncated where the Chernoff bound drops below 1e-13.
double skellam_negative_mass(const OutputMeans &means);

/// Decision error of the sign-of-difference rule with fair-coin ties, for one
/// hypothesis. For Bit::ONE this is sum_{y<0} S_y + S_0 / 2.
double skellam_hypothesis_error(const OutputMeans &means, Bit sent);

/// Error of the photon-counting receiver with the LO phase rotated by
/// `phase_shift`: the prior-weighted hypothesis errors.
double skellam_error_at_phase(const Receiver &receiver, double phase_shift);

/// Noise-averaged error probability.
double skellam_error(const Receiver &receiver, const PhaseNoise &noise, const IntegrationOptions &options = {});

/// Distribution of n_c - n_d for Bit::ONE averaged over the noise, on [y_lo, y_hi].
std::vector<double> noisy_skellam_pmf(
    const Receiver &receiver,
    const PhaseNoise &noise,
    int64_t y_lo,
    int64_t y_hi,
    const IntegrationOptions &options = {});

}  // namespace pnr

#endif
