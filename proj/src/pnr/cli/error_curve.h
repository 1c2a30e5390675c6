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

#ifndef PNR_CLI_ERROR_CURVE_H
#define PNR_CLI_ERROR_CURVE_H

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnr/monte_carlo.h"
#include "pnr/phase_noise.h"
#include "pnr/receiver.h"
#include "pnr/shot_record.h"

namespace pnr {

/// Analytic error probabilities (and optionally a Monte Carlo estimate) at one
/// noise setting.
struct CurvePoint {
    double p_helstrom = 0;
    double p_homodyne = 0;
    double p_skellam = 0;
    std::optional<double> mc_mean;
    std::optional<double> mc_stderr;

    bool operator==(const CurvePoint &other) const = default;
};

struct ErrorCurveRow {
    /// gamma for uniform noise, sigma for gaussian noise, 0 without noise.
    double noise_param = 0;
    CurvePoint point;
    /// Matched mode only: gaussian noise at sigma = gamma / (2 sqrt 3).
    std::optional<CurvePoint> gaussian;

    bool operator==(const ErrorCurveRow &other) const = default;
};

struct ErrorCurve {
    NoiseKind kind = NoiseKind::UNIFORM;
    bool matched = false;
    std::vector<ErrorCurveRow> rows;

    bool operator==(const ErrorCurve &other) const = default;
};

struct SweepSpec {
    Receiver receiver = DiscriminationProblem{};
    NoiseKind kind = NoiseKind::UNIFORM;
    std::vector<double> grid;
    /// Uniform grid with a paired gaussian column at the matched sigma.
    bool matched = false;
    bool mc = false;
    ExperimentOptions mc_options;
    /// When non-empty, MC shots are drawn from this raw piezo scan (bit 1
    /// around phase 0, bit 0 around phase pi) instead of simulated per shot.
    std::vector<ShotRecord> mc_scan;
    IntegrationOptions integration;
    /// Grid points run concurrently; 0 means one per hardware thread.
    size_t workers = 0;
};

/// `points` evenly spaced values from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, size_t points);

/// Throws ConfigError unless the grid is non-empty, finite, non-negative and
/// strictly increasing.
void validate_grid(std::span<const double> grid);

CurvePoint evaluate_point(
    const Receiver &receiver, const PhaseNoise &noise, const IntegrationOptions &integration);

/// Every row is independent of scheduling: MC for grid point i uses seed
/// derive_seed(seed, i) (and derive_seed(seed, n + i) for the paired column).
ErrorCurve compute_error_curve(const SweepSpec &spec);

std::vector<std::string> error_curve_header(const ErrorCurve &curve);
void write_error_curve(std::ostream &out, const ErrorCurve &curve);
/// Parses a CSV produced by write_error_curve. Throws DataError(SCHEMA).
/// The header fixes the matched flag; `kind` names the swept noise.
ErrorCurve read_error_curve(std::istream &in, NoiseKind kind);

}  // namespace pnr

#endif
