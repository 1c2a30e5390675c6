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

#ifndef PNR_CLI_DISTRIBUTIONS_H
#define PNR_CLI_DISTRIBUTIONS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pnr/phase_noise.h"
#include "pnr/receiver.h"

namespace pnr {

struct DistributionRow {
    int64_t y = 0;
    double skellam_pmf = 0;
    std::optional<double> mc_frequency;
    double homodyne_overlay = 0;

    bool operator==(const DistributionRow &other) const = default;
};

struct DistributionSpec {
    Receiver receiver = DiscriminationProblem{};
    PhaseNoise noise;
    /// Number of simulated bit-1 shots; 0 leaves mc_frequency empty.
    size_t mc_shots = 0;
    uint64_t seed = 0;
    IntegrationOptions integration;
};

/// Photocount-difference law of bit 1 averaged over the noise, over a y range
/// holding all but ~1e-12 of the mass (widened to cover every MC sample).
///
/// The homodyne overlay is the quadrature density of |beta_eff> under the
/// same noise, mapped onto the y axis by the affine change of variables that
/// matches its mean and standard deviation to those of the Skellam mixture:
/// overlay(y) = p_x(m_x + (y - m_y) s_x / s_y) s_x / s_y, a density per unit y
/// and so directly comparable with the unit-width Skellam bins.
std::vector<DistributionRow> compute_distribution(const DistributionSpec &spec);

void write_distribution(std::ostream &out, const std::vector<DistributionRow> &rows);
/// Throws DataError(SCHEMA).
std::vector<DistributionRow> read_distribution(std::istream &in);

}  // namespace pnr

#endif
