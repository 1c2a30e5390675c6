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

#include "pnr/cli/distributions.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

#include "pnr/calibration.h"
#include "pnr/cli/config_error.h"
#include "pnr/homodyne.h"
#include "pnr/monte_carlo.h"
#include "pnr/random.h"
#include "pnr/skellam.h"
#include "pnr/text.h"

namespace pnr {

namespace {

constexpr const char *HEADER = "y,skellam_pmf,mc_frequency,homodyne_overlay";

// Largest port means over a full turn of phase; bounds the support of every
// noise mixture.
OutputMeans peak_means(const Receiver &r) {
    OutputMeans peak{0, 0};
    for (int k = 0; k < 256; k++) {
        auto m = receiver_means(r, Bit::ONE, 2 * std::numbers::pi * k / 256);
        peak.mu_c = std::max(peak.mu_c, m.mu_c);
        peak.mu_d = std::max(peak.mu_d, m.mu_d);
    }
    return peak;
}

int64_t reach(double mu) {
    // Poisson(mu) puts < 1e-12 beyond mu + 10 sqrt(mu) + 10 for any mu here.
    return static_cast<int64_t>(std::ceil(mu * 1.01 + 10 * std::sqrt(mu) + 12));
}

}  // namespace

std::vector<DistributionRow> compute_distribution(const DistributionSpec &spec) {
    OutputMeans peak = peak_means(spec.receiver);
    int64_t lo = -reach(peak.mu_d);
    int64_t hi = reach(peak.mu_c);

    std::vector<int64_t> samples;
    if (spec.mc_shots > 0) {
        Rng rng = make_stream(spec.seed, 0);
        samples.reserve(spec.mc_shots);
        for (size_t k = 0; k < spec.mc_shots; k++) {
            double shift = sample(spec.noise, rng);
            auto shot = simulate_shot(receiver_means(spec.receiver, Bit::ONE, shift), rng);
            samples.push_back(shot.difference());
        }
        auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
        lo = std::min(lo, *mn);
        hi = std::max(hi, *mx);
    }

    auto pmf = noisy_skellam_pmf(spec.receiver, spec.noise, lo, hi, spec.integration);
    double mean_y = 0;
    double second_y = 0;
    for (int64_t y = lo; y <= hi; y++) {
        double p = pmf[static_cast<size_t>(y - lo)];
        if (!std::isfinite(p)) {
            throw NumericalError("Skellam mixture is not finite at y=" + std::to_string(y));
        }
        mean_y += p * static_cast<double>(y);
        second_y += p * static_cast<double>(y) * static_cast<double>(y);
    }
    double sd_y = std::sqrt(std::max(0.0, second_y - mean_y * mean_y));

    QuadratureDensity density{signal_amplitude(spec.receiver), spec.noise, 1};
    Moments mx = quadrature_moments(density);
    double sd_x = std::sqrt(std::max(0.0, mx.variance));
    double scale = sd_y > 0 ? sd_x / sd_y : 0;

    std::vector<size_t> counts(static_cast<size_t>(hi - lo + 1), 0);
    for (int64_t y : samples) {
        counts[static_cast<size_t>(y - lo)]++;
    }

    std::vector<DistributionRow> rows;
    rows.reserve(counts.size());
    for (int64_t y = lo; y <= hi; y++) {
        size_t k = static_cast<size_t>(y - lo);
        DistributionRow row;
        row.y = y;
        row.skellam_pmf = pmf[k];
        if (spec.mc_shots > 0) {
            row.mc_frequency = static_cast<double>(counts[k]) / static_cast<double>(spec.mc_shots);
        }
        if (scale > 0) {
            double x = mx.mean + (static_cast<double>(y) - mean_y) * scale;
            row.homodyne_overlay = quadrature_pdf(density, x, spec.integration) * scale;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_distribution(std::ostream &out, const std::vector<DistributionRow> &rows) {
    out << HEADER << '\n';
    for (const auto &r : rows) {
        out << r.y << ',' << format_double(r.skellam_pmf) << ','
            << (r.mc_frequency ? format_double(*r.mc_frequency) : std::string()) << ','
            << format_double(r.homodyne_overlay) << '\n';
    }
}

std::vector<DistributionRow> read_distribution(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || trim(line) != HEADER) {
        throw DataError(DataErrorKind::SCHEMA, "expected header '" + std::string(HEADER) + "'", 1);
    }
    std::vector<DistributionRow> rows;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (trim(line).empty()) {
            continue;
        }
        auto cells = split(line, ',');
        if (cells.size() != 4) {
            throw DataError(DataErrorKind::SCHEMA, "expected 4 fields", line_no);
        }
        auto y = parse_int(trim(cells[0]));
        auto pmf = parse_double(trim(cells[1]));
        auto overlay = parse_double(trim(cells[3]));
        if (!y || !pmf || !overlay) {
            throw DataError(DataErrorKind::SCHEMA, "malformed distribution row", line_no);
        }
        if (!rows.empty() && *y != rows.back().y + 1) {
            throw DataError(DataErrorKind::SCHEMA, "y values must be consecutive", line_no);
        }
        DistributionRow row{*y, *pmf, std::nullopt, *overlay};
        if (!trim(cells[2]).empty()) {
            auto f = parse_double(trim(cells[2]));
            if (!f) {
                throw DataError(DataErrorKind::SCHEMA, "malformed mc_frequency", line_no);
            }
            row.mc_frequency = *f;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pnr
