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

#ifndef PNR_CALIBRATION_H
#define PNR_CALIBRATION_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnr/phase_noise.h"
#include "pnr/random.h"
#include "pnr/receiver.h"
#include "pnr/shot_record.h"

namespace pnr {

enum class DataErrorKind {
    MISSING_FILE,
    IO,
    SCHEMA,
    NON_INTEGER_COUNT,
    NO_MODULATION,
    INSUFFICIENT_RECORDS,
};

std::string data_error_kind_name(DataErrorKind kind);

/// Problem with input data. `line` is 1-based and 0 when not tied to a line.
class DataError : public std::runtime_error {
   public:
    DataError(DataErrorKind kind, const std::string &message, size_t line = 0);

    DataErrorKind kind() const {
        return kind_;
    }
    size_t line() const {
        return line_;
    }

   private:
    DataErrorKind kind_;
    size_t line_;
};

/// Header line of the shot CSV.
inline constexpr const char *SHOT_CSV_HEADER = "position_index,phase_tag,n_c,n_d,true_bit";

void write_shot_csv(std::ostream &out, std::span<const ShotRecord> records);
void write_shot_csv(const std::string &path, std::span<const ShotRecord> records);

/// Streams records to `sink` in file order. Throws DataError.
void for_each_shot(std::istream &in, const std::function<void(const ShotRecord &)> &sink);
std::vector<ShotRecord> read_shot_csv(const std::string &path);

struct PositionSummary {
    uint32_t index = 0;
    double phase_tag = 0;
    uint64_t shots = 0;
    double mean_c = 0;
    double mean_d = 0;
    /// Mean of the second half of the shots minus the first half, in units of
    /// its Poisson standard error.
    double drift_z_c = 0;
    double drift_z_d = 0;

    bool empty() const {
        return shots == 0;
    }
};

/// Per-position averages of a piezo scan. Positions are indexed densely from 0
/// to the largest index seen; indices without shots are kept and flagged.
struct ScanSummary {
    std::vector<PositionSummary> positions;

    std::vector<uint32_t> empty_positions() const;
    size_t total_shots() const;
};

/// Associative fold over shots; partial accumulators can be merged.
class ScanAccumulator {
   public:
    void add(const ShotRecord &record);
    void merge(const ScanAccumulator &other);
    ScanSummary finish() const;

   private:
    struct Position {
        bool seen = false;
        double phase_tag = 0;
        std::vector<std::pair<uint32_t, uint32_t>> counts;
    };
    std::vector<Position> positions_;
};

ScanSummary summarize(std::span<const ShotRecord> records);
ScanSummary ingest_scan(const std::string &path);

enum class Port { C, D };

struct FringeFit {
    /// mu(theta) ~ offset + amplitude cos(theta - phase_offset).
    double offset = 0;
    double amplitude = 0;
    double phase_offset = 0;
    double offset_stderr = 0;
    double amplitude_stderr = 0;
    /// Root-mean-square of mean - model over non-empty positions.
    double residual_rms = 0;
    /// Root-mean-square Poisson standard error of the per-position means.
    double poisson_stderr_rms = 0;

    double max_mean() const {
        return offset + amplitude;
    }
    double min_mean() const;
};

struct FitOptions {
    /// A fringe whose amplitude is below this many standard errors is flat.
    double min_modulation_z = 5;
};

/// Weighted least-squares fit of A + B cos(theta) + C sin(theta) to one port.
/// Throws DataError(NO_MODULATION) for a flat fringe.
FringeFit fit_port(const ScanSummary &summary, Port port, const FitOptions &options = {});

struct CalibrationFit {
    DetectorCalibration cal;
    /// Propagated standard errors of a_c, a_d, b_c, b_d.
    DetectorCalibration std_error;
    FringeFit port_c;
    FringeFit port_d;
};

/// Inverts mu = a^2 + b^2 + 2ab cos(phi) on both ports using the fitted
/// maximum and minimum: a = (sqrt(max) + sqrt(min)) / 2, b = (sqrt(max) -
/// sqrt(min)) / 2.
CalibrationFit fit_fringe(const ScanSummary &summary, const FitOptions &options = {});

/// Per-position phase in [0, pi] from arccos of the normalized port mean.
/// Port d is sign-flipped so both ports report the port-c convention (phase 0
/// at the port-c maximum). Empty positions give NaN.
std::vector<double> retrieve_phase(const ScanSummary &summary, Port port, const FitOptions &options = {});

/// Lifts arccos phases onto an increasing sweep: each turn of the [0, pi]
/// sequence at an extremum starts the next half fringe. The result starts in
/// (-pi, pi]; NaN entries (empty positions) stay NaN.
std::vector<double> unwrap_monotone_sweep(std::span<const double> phases);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double phi);

/// Draws `n_select` records (with replacement) from `scan`, each with
/// probability proportional to f(tag - center_phase). A delta weight keeps only
/// the records of the bin nearest `center_phase`.
std::vector<ShotRecord> assemble_noisy_set(
    std::span<const ShotRecord> scan, const PhaseNoise &noise, double center_phase, size_t n_select, Rng &rng);

/// Bit::ONE records around phase 0 and Bit::ZERO records around phase pi,
/// `n_select` of each, labelled with their bit.
std::vector<ShotRecord> assemble_reference_sets(
    std::span<const ShotRecord> scan, const PhaseNoise &noise, size_t n_select, Rng &rng);

/// key=value report (a_c, a_d, b_c, b_d and diagnostics).
void write_calibration_report(std::ostream &out, const CalibrationFit &fit, const ScanSummary &summary);
/// Reads a_c, a_d, b_c, b_d from a key=value file; other keys are ignored.
DetectorCalibration read_calibration_report(const std::string &path);

}  // namespace pnr

#endif
