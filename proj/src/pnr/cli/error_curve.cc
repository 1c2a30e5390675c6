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

#include "pnr/cli/error_curve.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "pnr/calibration.h"
#include "pnr/cli/config_error.h"
#include "pnr/helstrom.h"
#include "pnr/homodyne.h"
#include "pnr/parallel.h"
#include "pnr/random.h"
#include "pnr/skellam.h"
#include "pnr/text.h"

namespace pnr {

namespace {

const std::vector<std::string> POINT_COLUMNS{"p_helstrom", "p_homodyne", "p_skellam", "mc_mean", "mc_stderr"};

void check_finite(double v, const char *what, const PhaseNoise &noise) {
    if (!std::isfinite(v)) {
        throw NumericalError(std::string(what) + " is not finite at " + noise.str());
    }
}

CurvePoint run_mc(CurvePoint point, const SweepSpec &spec, const PhaseNoise &noise, uint64_t seed) {
    ExperimentOptions options = spec.mc_options;
    options.seed = seed;
    // Grid points already run in parallel.
    options.workers = 1;
    BootstrapResult r;
    if (spec.mc_scan.empty()) {
        r = run_experiment(spec.receiver, noise, options);
    } else {
        Rng rng = make_stream(seed, ~uint64_t{0});
        size_t per_bit = std::max(options.n_shots, options.n_shots * options.n_reps / 2);
        auto pool = assemble_reference_sets(spec.mc_scan, noise, per_bit, rng);
        r = bootstrap_error(pool, options);
    }
    point.mc_mean = r.mean_error;
    point.mc_stderr = r.std_error;
    return point;
}

std::string optional_cell(const std::optional<double> &v) {
    return v ? format_double(*v) : std::string();
}

double required_number(std::string_view cell, size_t line) {
    auto v = parse_double(trim(cell));
    if (!v) {
        throw DataError(DataErrorKind::SCHEMA, "expected a number, got '" + std::string(cell) + "'", line);
    }
    return *v;
}

std::optional<double> optional_number(std::string_view cell, size_t line) {
    if (trim(cell).empty()) {
        return std::nullopt;
    }
    return required_number(cell, line);
}

CurvePoint parse_point(const std::vector<std::string_view> &cells, size_t first, size_t line) {
    CurvePoint p;
    p.p_helstrom = required_number(cells[first], line);
    p.p_homodyne = required_number(cells[first + 1], line);
    p.p_skellam = required_number(cells[first + 2], line);
    p.mc_mean = optional_number(cells[first + 3], line);
    p.mc_stderr = optional_number(cells[first + 4], line);
    if (p.mc_mean.has_value() != p.mc_stderr.has_value()) {
        throw DataError(DataErrorKind::SCHEMA, "mc_mean and mc_stderr must be given together", line);
    }
    return p;
}

}  // namespace

std::vector<double> linear_grid(double lo, double hi, size_t points) {
    if (points == 0) {
        throw ConfigError("grid needs at least one point");
    }
    if (points == 1) {
        return {lo};
    }
    std::vector<double> out(points);
    for (size_t k = 0; k < points; k++) {
        // Pin the end points exactly.
        out[k] = k + 1 == points ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return out;
}

void validate_grid(std::span<const double> grid) {
    if (grid.empty()) {
        throw ConfigError("noise grid is empty");
    }
    for (size_t k = 0; k < grid.size(); k++) {
        if (!std::isfinite(grid[k]) || grid[k] < 0) {
            throw ConfigError("noise grid values must be finite and non-negative, got " + format_double(grid[k]));
        }
        if (k > 0 && !(grid[k] > grid[k - 1])) {
            throw ConfigError(
                "noise grid must be strictly increasing (" + format_double(grid[k - 1]) + " then " +
                format_double(grid[k]) + ")");
        }
    }
}

CurvePoint evaluate_point(const Receiver &receiver, const PhaseNoise &noise, const IntegrationOptions &integration) {
    CurvePoint p;
    double beta = signal_amplitude(receiver);
    try {
        p.p_helstrom = helstrom_bound(beta, noise, prior_one(receiver));
    } catch (const std::runtime_error &e) {
        throw NumericalError(e.what());
    }
    p.p_homodyne = homodyne_error(beta, noise, integration);
    p.p_skellam = skellam_error(receiver, noise, integration);
    check_finite(p.p_helstrom, "p_helstrom", noise);
    check_finite(p.p_homodyne, "p_homodyne", noise);
    check_finite(p.p_skellam, "p_skellam", noise);
    return p;
}

ErrorCurve compute_error_curve(const SweepSpec &spec) {
    if (spec.matched && spec.kind != NoiseKind::UNIFORM) {
        throw ConfigError("matched mode sweeps uniform gamma; got noise kind " + noise_kind_name(spec.kind));
    }
    std::vector<double> grid = spec.kind == NoiseKind::NONE ? std::vector<double>{0.0} : spec.grid;
    validate_grid(grid);

    ErrorCurve curve;
    curve.kind = spec.kind;
    curve.matched = spec.matched;
    curve.rows.resize(grid.size());
    size_t n = grid.size();
    parallel_for(n, spec.workers, [&](size_t i) {
        ErrorCurveRow row;
        row.noise_param = grid[i];
        PhaseNoise noise = spec.kind == NoiseKind::NONE ? PhaseNoise::none()
                           : spec.kind == NoiseKind::UNIFORM ? PhaseNoise::uniform(grid[i])
                                                             : PhaseNoise::gaussian(grid[i]);
        row.point = evaluate_point(spec.receiver, noise, spec.integration);
        if (spec.mc) {
            row.point = run_mc(row.point, spec, noise, derive_seed(spec.mc_options.seed, i));
        }
        if (spec.matched) {
            PhaseNoise g = PhaseNoise::gaussian(matched_sigma(grid[i]));
            row.gaussian = evaluate_point(spec.receiver, g, spec.integration);
            if (spec.mc) {
                row.gaussian = run_mc(*row.gaussian, spec, g, derive_seed(spec.mc_options.seed, n + i));
            }
        }
        curve.rows[i] = std::move(row);
    });
    return curve;
}

std::vector<std::string> error_curve_header(const ErrorCurve &curve) {
    std::vector<std::string> cols{"noise_param"};
    if (!curve.matched) {
        cols.insert(cols.end(), POINT_COLUMNS.begin(), POINT_COLUMNS.end());
        return cols;
    }
    cols.push_back("sigma");
    for (const char *suffix : {"_uniform", "_gaussian"}) {
        for (const auto &c : POINT_COLUMNS) {
            cols.push_back(c + suffix);
        }
    }
    return cols;
}

void write_error_curve(std::ostream &out, const ErrorCurve &curve) {
    auto cols = error_curve_header(curve);
    for (size_t k = 0; k < cols.size(); k++) {
        out << (k ? "," : "") << cols[k];
    }
    out << '\n';
    auto emit = [&](const CurvePoint &p) {
        out << ',' << format_double(p.p_helstrom) << ',' << format_double(p.p_homodyne) << ','
            << format_double(p.p_skellam) << ',' << optional_cell(p.mc_mean) << ',' << optional_cell(p.mc_stderr);
    };
    for (const auto &row : curve.rows) {
        out << format_double(row.noise_param);
        if (curve.matched) {
            out << ',' << format_double(matched_sigma(row.noise_param));
        }
        emit(row.point);
        if (curve.matched) {
            emit(row.gaussian.value_or(CurvePoint{}));
        }
        out << '\n';
    }
}

ErrorCurve read_error_curve(std::istream &in, NoiseKind kind) {
    std::string line;
    size_t line_no = 1;
    if (!std::getline(in, line)) {
        throw DataError(DataErrorKind::SCHEMA, "empty error-curve file", 1);
    }
    ErrorCurve curve;
    curve.kind = kind;
    auto header_of = [](bool matched) {
        ErrorCurve probe;
        probe.matched = matched;
        std::string h;
        for (const auto &c : error_curve_header(probe)) {
            h += (h.empty() ? "" : ",") + c;
        }
        return h;
    };
    std::string header(trim(line));
    if (header == header_of(false)) {
        curve.matched = false;
    } else if (header == header_of(true)) {
        curve.matched = true;
    } else {
        throw DataError(DataErrorKind::SCHEMA, "unexpected error-curve header '" + header + "'", 1);
    }
    size_t width = curve.matched ? 12 : 6;
    while (std::getline(in, line)) {
        line_no++;
        if (trim(line).empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != width) {
            throw DataError(
                DataErrorKind::SCHEMA,
                "expected " + std::to_string(width) + " fields, got " + std::to_string(cells.size()), line_no);
        }
        ErrorCurveRow row;
        row.noise_param = required_number(cells[0], line_no);
        if (!curve.rows.empty() && !(row.noise_param > curve.rows.back().noise_param)) {
            throw DataError(DataErrorKind::SCHEMA, "noise_param is not strictly increasing", line_no);
        }
        if (curve.matched) {
            required_number(cells[1], line_no);
            row.point = parse_point(cells, 2, line_no);
            row.gaussian = parse_point(cells, 7, line_no);
        } else {
            row.point = parse_point(cells, 1, line_no);
        }
        curve.rows.push_back(row);
    }
    return curve;
}

}  // namespace pnr
