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

#include "pnr/calibration.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <tuple>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "pnr/text.h"

namespace pnr {

std::string data_error_kind_name(DataErrorKind kind) {
    switch (kind) {
        case DataErrorKind::MISSING_FILE:
            return "missing-file";
        case DataErrorKind::IO:
            return "io";
        case DataErrorKind::SCHEMA:
            return "schema";
        case DataErrorKind::NON_INTEGER_COUNT:
            return "non-integer-count";
        case DataErrorKind::NO_MODULATION:
            return "no-modulation";
        case DataErrorKind::INSUFFICIENT_RECORDS:
            return "insufficient-records";
    }
    return "unknown";
}

namespace {

std::string with_line(const std::string &message, size_t line) {
    if (line == 0) {
        return message;
    }
    return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

DataError::DataError(DataErrorKind kind, const std::string &message, size_t line)
    : std::runtime_error(data_error_kind_name(kind) + " error: " + with_line(message, line)), kind_(kind), line_(line) {
}

// ---------------------------------------------------------------------------
// Shot CSV.

void write_shot_csv(std::ostream &out, std::span<const ShotRecord> records) {
    std::string buf;
    buf.reserve(1 << 16);
    buf.append(SHOT_CSV_HEADER);
    buf.push_back('\n');
    for (const auto &r : records) {
        buf.append(std::to_string(r.position_index));
        buf.push_back(',');
        buf.append(format_double(r.phase_tag, 17));
        buf.push_back(',');
        buf.append(std::to_string(r.n_c));
        buf.push_back(',');
        buf.append(std::to_string(r.n_d));
        buf.push_back(',');
        if (r.true_bit.has_value()) {
            buf.push_back(*r.true_bit == Bit::ONE ? '1' : '0');
        }
        buf.push_back('\n');
        if (buf.size() > (1 << 16) - 128) {
            out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

void write_shot_csv(const std::string &path, std::span<const ShotRecord> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError(DataErrorKind::IO, "cannot open '" + path + "' for writing");
    }
    write_shot_csv(out, records);
    if (!out) {
        throw DataError(DataErrorKind::IO, "failed writing '" + path + "'");
    }
}

namespace {

uint64_t parse_count(std::string_view field, const char *name, size_t line) {
    auto v = parse_int(field);
    if (!v.has_value()) {
        throw DataError(
            DataErrorKind::NON_INTEGER_COUNT, std::string(name) + " '" + std::string(field) + "' is not an integer", line);
    }
    if (*v < 0) {
        throw DataError(DataErrorKind::SCHEMA, std::string(name) + " is negative (" + std::string(field) + ")", line);
    }
    if (*v > std::numeric_limits<uint32_t>::max()) {
        throw DataError(DataErrorKind::SCHEMA, std::string(name) + " exceeds 2^32 - 1", line);
    }
    return static_cast<uint64_t>(*v);
}

ShotRecord parse_shot_line(std::string_view text, size_t line) {
    auto fields = split(text, ',');
    if (fields.size() != 5) {
        throw DataError(
            DataErrorKind::SCHEMA, "expected 5 fields, found " + std::to_string(fields.size()), line);
    }
    ShotRecord r;
    auto pos = parse_int(fields[0]);
    if (!pos.has_value() || *pos < 0 || *pos > std::numeric_limits<uint32_t>::max()) {
        throw DataError(DataErrorKind::SCHEMA, "position_index '" + std::string(fields[0]) + "' is invalid", line);
    }
    r.position_index = static_cast<uint32_t>(*pos);
    auto tag = parse_double(fields[1]);
    if (!tag.has_value() || !std::isfinite(*tag)) {
        throw DataError(DataErrorKind::SCHEMA, "phase_tag '" + std::string(fields[1]) + "' is not a finite number", line);
    }
    r.phase_tag = *tag;
    r.n_c = parse_count(fields[2], "n_c", line);
    r.n_d = parse_count(fields[3], "n_d", line);
    if (fields[4] == "1") {
        r.true_bit = Bit::ONE;
    } else if (fields[4] == "0") {
        r.true_bit = Bit::ZERO;
    } else if (!fields[4].empty()) {
        throw DataError(DataErrorKind::SCHEMA, "true_bit '" + std::string(fields[4]) + "' must be 0, 1 or empty", line);
    }
    return r;
}

}  // namespace

void for_each_shot(std::istream &in, const std::function<void(const ShotRecord &)> &sink) {
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError(DataErrorKind::SCHEMA, "file is empty (missing header)", 1);
    }
    if (line != SHOT_CSV_HEADER) {
        throw DataError(DataErrorKind::SCHEMA, "header must be '" + std::string(SHOT_CSV_HEADER) + "'", 1);
    }
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        sink(parse_shot_line(line, line_no));
    }
    if (in.bad()) {
        throw DataError(DataErrorKind::IO, "read failure", line_no);
    }
}

namespace {

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(DataErrorKind::MISSING_FILE, "cannot open '" + path + "'");
    }
    return in;
}

}  // namespace

std::vector<ShotRecord> read_shot_csv(const std::string &path) {
    auto in = open_input(path);
    std::vector<ShotRecord> out;
    for_each_shot(in, [&](const ShotRecord &r) { out.push_back(r); });
    return out;
}

// ---------------------------------------------------------------------------
// Scan summaries.

std::vector<uint32_t> ScanSummary::empty_positions() const {
    std::vector<uint32_t> out;
    for (const auto &p : positions) {
        if (p.empty()) {
            out.push_back(p.index);
        }
    }
    return out;
}

size_t ScanSummary::total_shots() const {
    size_t n = 0;
    for (const auto &p : positions) {
        n += p.shots;
    }
    return n;
}

void ScanAccumulator::add(const ShotRecord &record) {
    if (record.position_index >= positions_.size()) {
        positions_.resize(static_cast<size_t>(record.position_index) + 1);
    }
    auto &p = positions_[record.position_index];
    if (!p.seen) {
        p.seen = true;
        p.phase_tag = record.phase_tag;
    }
    p.counts.emplace_back(static_cast<uint32_t>(record.n_c), static_cast<uint32_t>(record.n_d));
}

void ScanAccumulator::merge(const ScanAccumulator &other) {
    if (other.positions_.size() > positions_.size()) {
        positions_.resize(other.positions_.size());
    }
    for (size_t k = 0; k < other.positions_.size(); k++) {
        const auto &src = other.positions_[k];
        if (!src.seen) {
            continue;
        }
        auto &dst = positions_[k];
        if (!dst.seen) {
            dst.seen = true;
            dst.phase_tag = src.phase_tag;
        }
        dst.counts.insert(dst.counts.end(), src.counts.begin(), src.counts.end());
    }
}

namespace {

double drift_z(const std::vector<std::pair<uint32_t, uint32_t>> &counts, bool port_c) {
    size_t n = counts.size();
    if (n < 2) {
        return 0;
    }
    size_t h = n / 2;
    double first = 0;
    double second = 0;
    for (size_t k = 0; k < n; k++) {
        double v = port_c ? counts[k].first : counts[k].second;
        (k < h ? first : second) += v;
    }
    double mean = (first + second) / static_cast<double>(n);
    if (mean == 0) {
        return 0;
    }
    double m1 = first / static_cast<double>(h);
    double m2 = second / static_cast<double>(n - h);
    double se = std::sqrt(mean * (1.0 / static_cast<double>(h) + 1.0 / static_cast<double>(n - h)));
    return (m2 - m1) / se;
}

}  // namespace

ScanSummary ScanAccumulator::finish() const {
    ScanSummary s;
    s.positions.resize(positions_.size());
    for (size_t k = 0; k < positions_.size(); k++) {
        const auto &src = positions_[k];
        auto &dst = s.positions[k];
        dst.index = static_cast<uint32_t>(k);
        if (!src.seen || src.counts.empty()) {
            dst.phase_tag = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        dst.phase_tag = src.phase_tag;
        dst.shots = src.counts.size();
        double sc = 0;
        double sd = 0;
        for (const auto &[c, d] : src.counts) {
            sc += c;
            sd += d;
        }
        dst.mean_c = sc / static_cast<double>(dst.shots);
        dst.mean_d = sd / static_cast<double>(dst.shots);
        dst.drift_z_c = drift_z(src.counts, true);
        dst.drift_z_d = drift_z(src.counts, false);
    }
    return s;
}

ScanSummary summarize(std::span<const ShotRecord> records) {
    ScanAccumulator acc;
    for (const auto &r : records) {
        acc.add(r);
    }
    return acc.finish();
}

ScanSummary ingest_scan(const std::string &path) {
    auto in = open_input(path);
    ScanAccumulator acc;
    size_t n = 0;
    for_each_shot(in, [&](const ShotRecord &r) {
        acc.add(r);
        n++;
    });
    if (n == 0) {
        throw DataError(DataErrorKind::SCHEMA, "no shot records in '" + path + "'");
    }
    return acc.finish();
}

// ---------------------------------------------------------------------------
// Fringe fitting and phase retrieval.

double FringeFit::min_mean() const {
    return std::max(0.0, offset - amplitude);
}

namespace {

struct PortFitDetail {
    FringeFit fit;
    double offset_amplitude_cov = 0;
};

PortFitDetail fit_port_detail(const ScanSummary &summary, Port port, const FitOptions &options) {
    std::vector<const PositionSummary *> used;
    for (const auto &p : summary.positions) {
        if (!p.empty()) {
            used.push_back(&p);
        }
    }
    if (used.size() < 3) {
        throw DataError(DataErrorKind::NO_MODULATION, "fringe fit needs at least 3 non-empty positions");
    }
    Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    double stderr2_sum = 0;
    for (const auto *p : used) {
        double mu = port == Port::C ? p->mean_c : p->mean_d;
        double n = static_cast<double>(p->shots);
        double var = std::max(mu, 1.0 / n) / n;
        stderr2_sum += mu / n;
        Eigen::Vector3d x(1.0, std::cos(p->phase_tag), std::sin(p->phase_tag));
        normal += x * x.transpose() / var;
        rhs += x * mu / var;
    }
    Eigen::LDLT<Eigen::Matrix3d> ldlt(normal);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        throw DataError(DataErrorKind::NO_MODULATION, "phase tags do not resolve a fringe");
    }
    Eigen::Vector3d coef = ldlt.solve(rhs);
    Eigen::Matrix3d cov = ldlt.solve(Eigen::Matrix3d::Identity());

    PortFitDetail out;
    FringeFit &f = out.fit;
    f.offset = coef(0);
    f.amplitude = std::hypot(coef(1), coef(2));
    f.phase_offset = std::atan2(coef(2), coef(1));
    f.offset_stderr = std::sqrt(cov(0, 0));
    double amp_var = 0;
    if (f.amplitude > 0) {
        Eigen::Vector2d g(coef(1) / f.amplitude, coef(2) / f.amplitude);
        amp_var = g.transpose() * cov.block<2, 2>(1, 1) * g;
        out.offset_amplitude_cov = g(0) * cov(0, 1) + g(1) * cov(0, 2);
    } else {
        amp_var = 0.5 * (cov(1, 1) + cov(2, 2));
    }
    f.amplitude_stderr = std::sqrt(amp_var);
    if (!(f.amplitude > options.min_modulation_z * f.amplitude_stderr)) {
        throw DataError(
            DataErrorKind::NO_MODULATION,
            std::string("port ") + (port == Port::C ? "c" : "d") + " fringe is flat (amplitude " +
                format_double(f.amplitude, 6) + " vs std_error " + format_double(f.amplitude_stderr, 6) + ")");
    }
    double res2 = 0;
    for (const auto *p : used) {
        double mu = port == Port::C ? p->mean_c : p->mean_d;
        double model = f.offset + f.amplitude * std::cos(p->phase_tag - f.phase_offset);
        res2 += (mu - model) * (mu - model);
    }
    double k = static_cast<double>(used.size());
    f.residual_rms = std::sqrt(res2 / k);
    f.poisson_stderr_rms = std::sqrt(stderr2_sum / k);
    return out;
}

// Value and standard error of (sqrt(max) +- sqrt(min)) / 2.
std::pair<double, double> invert_amplitude(const PortFitDetail &d, double sign) {
    const FringeFit &f = d.fit;
    double root_max = std::sqrt(std::max(f.max_mean(), 0.0));
    double root_min = std::sqrt(f.min_mean());
    double value = 0.5 * (root_max + sign * root_min);
    double d_max = 1.0 / (4.0 * std::max(root_max, 1e-12));
    double d_min = sign / (4.0 * std::max(root_min, 1e-12));
    if (f.offset - f.amplitude <= 0) {
        d_min = 0;
    }
    // max = A + R, min = A - R.
    double g_offset = d_max + d_min;
    double g_amp = d_max - d_min;
    double var = g_offset * g_offset * f.offset_stderr * f.offset_stderr +
                 g_amp * g_amp * f.amplitude_stderr * f.amplitude_stderr + 2 * g_offset * g_amp * d.offset_amplitude_cov;
    return {value, std::sqrt(std::max(var, 0.0))};
}

}  // namespace

FringeFit fit_port(const ScanSummary &summary, Port port, const FitOptions &options) {
    return fit_port_detail(summary, port, options).fit;
}

CalibrationFit fit_fringe(const ScanSummary &summary, const FitOptions &options) {
    PortFitDetail c = fit_port_detail(summary, Port::C, options);
    PortFitDetail d = fit_port_detail(summary, Port::D, options);
    CalibrationFit out;
    out.port_c = c.fit;
    out.port_d = d.fit;
    std::tie(out.cal.a_c, out.std_error.a_c) = invert_amplitude(c, +1);
    std::tie(out.cal.b_c, out.std_error.b_c) = invert_amplitude(c, -1);
    std::tie(out.cal.a_d, out.std_error.a_d) = invert_amplitude(d, +1);
    std::tie(out.cal.b_d, out.std_error.b_d) = invert_amplitude(d, -1);
    return out;
}

std::vector<double> retrieve_phase(const ScanSummary &summary, Port port, const FitOptions &options) {
    FringeFit f = fit_port(summary, port, options);
    std::vector<double> out;
    out.reserve(summary.positions.size());
    for (const auto &p : summary.positions) {
        if (p.empty()) {
            out.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        double mu = port == Port::C ? p.mean_c : p.mean_d;
        double normalized = (mu - f.offset) / f.amplitude;
        if (port == Port::D) {
            normalized = -normalized;
        }
        out.push_back(std::acos(std::clamp(normalized, -1.0, 1.0)));
    }
    return out;
}

std::vector<double> unwrap_monotone_sweep(std::span<const double> phases) {
    constexpr double TWO_PI = 2 * std::numbers::pi;
    std::vector<double> out(phases.size(), std::numeric_limits<double>::quiet_NaN());
    std::vector<double> valid;
    std::vector<size_t> where;
    for (size_t k = 0; k < phases.size(); k++) {
        if (std::isfinite(phases[k])) {
            valid.push_back(phases[k]);
            where.push_back(k);
        }
    }
    if (valid.empty()) {
        return out;
    }
    // Typical phase advance per position, from the steps between neighbours.
    std::vector<double> steps;
    for (size_t k = 1; k < valid.size(); k++) {
        double s = std::abs(valid[k] - valid[k - 1]) / static_cast<double>(where[k] - where[k - 1]);
        if (s > 0) {
            steps.push_back(s);
        }
    }
    double expected_step = 0;
    if (!steps.empty()) {
        std::nth_element(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(steps.size() / 2), steps.end());
        expected_step = steps[steps.size() / 2];
    }

    // Greedy lift from a given start; returns the squared misfit to the
    // expected advance.
    auto lift = [&](double start, std::vector<double> &lifted) {
        lifted.assign(valid.size(), 0);
        lifted[0] = start;
        double cost = 0;
        for (size_t k = 1; k < valid.size(); k++) {
            double target = lifted[k - 1] + expected_step * static_cast<double>(where[k] - where[k - 1]);
            double turn = std::floor(target / TWO_PI) * TWO_PI;
            double best = lifted[k - 1];
            double best_gap = std::numeric_limits<double>::infinity();
            for (double base : {turn - TWO_PI, turn, turn + TWO_PI}) {
                for (double c : {base + valid[k], base + TWO_PI - valid[k]}) {
                    double gap = std::abs(c - target);
                    if (gap < best_gap) {
                        best_gap = gap;
                        best = c;
                    }
                }
            }
            lifted[k] = best;
            cost += best_gap * best_gap;
        }
        return cost;
    };
    // The first arccos value does not say which half of the turn the sweep
    // starts in; noise near an extremum makes the first step unreliable, so
    // try both.
    std::vector<double> rising;
    std::vector<double> falling;
    double cost_rising = lift(valid[0], rising);
    double cost_falling = lift(TWO_PI - valid[0], falling);
    const auto &best = cost_falling < cost_rising ? falling : rising;
    // Anchor the sweep so it starts in (-pi, pi].
    double offset = wrap_angle(best[0]) - best[0];
    for (size_t k = 0; k < valid.size(); k++) {
        out[where[k]] = best[k] + offset;
    }
    return out;
}

double wrap_angle(double phi) {
    double r = std::remainder(phi, 2 * std::numbers::pi);
    if (r <= -std::numbers::pi) {
        r += 2 * std::numbers::pi;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Noisy mixtures from scan data.

std::vector<ShotRecord> assemble_noisy_set(
    std::span<const ShotRecord> scan, const PhaseNoise &noise, double center_phase, size_t n_select, Rng &rng) {
    if (scan.empty()) {
        throw DataError(DataErrorKind::INSUFFICIENT_RECORDS, "scan holds no records");
    }
    std::vector<double> cumulative(scan.size(), 0.0);
    double total = 0;
    if (noise.is_delta()) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto &r : scan) {
            nearest = std::min(nearest, std::abs(wrap_angle(r.phase_tag - center_phase)));
        }
        for (size_t k = 0; k < scan.size(); k++) {
            if (std::abs(wrap_angle(scan[k].phase_tag - center_phase)) <= nearest + 1e-12) {
                total += 1;
            }
            cumulative[k] = total;
        }
    } else {
        for (size_t k = 0; k < scan.size(); k++) {
            total += pdf(noise, wrap_angle(scan[k].phase_tag - center_phase));
            cumulative[k] = total;
        }
    }
    if (!(total > 0)) {
        throw DataError(
            DataErrorKind::INSUFFICIENT_RECORDS,
            "no scan records under " + noise.str() + " centred at " + format_double(center_phase, 6));
    }
    std::vector<ShotRecord> out;
    out.reserve(n_select);
    for (size_t k = 0; k < n_select; k++) {
        double u = uniform01(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        size_t idx = std::min(static_cast<size_t>(it - cumulative.begin()), scan.size() - 1);
        out.push_back(scan[idx]);
    }
    return out;
}

std::vector<ShotRecord> assemble_reference_sets(
    std::span<const ShotRecord> scan, const PhaseNoise &noise, size_t n_select, Rng &rng) {
    auto ones = assemble_noisy_set(scan, noise, 0.0, n_select, rng);
    auto zeros = assemble_noisy_set(scan, noise, std::numbers::pi, n_select, rng);
    for (auto &r : ones) {
        r.true_bit = Bit::ONE;
    }
    for (auto &r : zeros) {
        r.true_bit = Bit::ZERO;
    }
    ones.insert(ones.end(), zeros.begin(), zeros.end());
    return ones;
}

// ---------------------------------------------------------------------------
// Reports.

void write_calibration_report(std::ostream &out, const CalibrationFit &fit, const ScanSummary &summary) {
    auto kv = [&](const std::string &key, double v) { out << key << '=' << format_double(v, 12) << '\n'; };
    kv("a_c", fit.cal.a_c);
    kv("a_d", fit.cal.a_d);
    kv("b_c", fit.cal.b_c);
    kv("b_d", fit.cal.b_d);
    kv("a_c_stderr", fit.std_error.a_c);
    kv("a_d_stderr", fit.std_error.a_d);
    kv("b_c_stderr", fit.std_error.b_c);
    kv("b_d_stderr", fit.std_error.b_d);
    kv("visibility_c", fit.cal.visibility_c());
    kv("visibility_d", fit.cal.visibility_d());
    for (auto [name, f] : {std::pair{"c", &fit.port_c}, std::pair{"d", &fit.port_d}}) {
        std::string s(name);
        kv("fringe_offset_" + s, f->offset);
        kv("fringe_amplitude_" + s, f->amplitude);
        kv("fringe_phase_" + s, f->phase_offset);
        kv("residual_rms_" + s, f->residual_rms);
        kv("poisson_stderr_rms_" + s, f->poisson_stderr_rms);
    }
    double drift_c = 0;
    double drift_d = 0;
    for (const auto &p : summary.positions) {
        drift_c = std::max(drift_c, std::abs(p.drift_z_c));
        drift_d = std::max(drift_d, std::abs(p.drift_z_d));
    }
    kv("max_abs_drift_z_c", drift_c);
    kv("max_abs_drift_z_d", drift_d);
    out << "positions=" << summary.positions.size() << '\n';
    out << "total_shots=" << summary.total_shots() << '\n';
    out << "empty_positions=";
    auto empty = summary.empty_positions();
    for (size_t k = 0; k < empty.size(); k++) {
        out << (k ? ";" : "") << empty[k];
    }
    out << '\n';
}

DetectorCalibration read_calibration_report(const std::string &path) {
    auto in = open_input(path);
    std::map<std::string, double> values;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string_view::npos) {
            throw DataError(DataErrorKind::SCHEMA, "expected key=value", line_no);
        }
        std::string key(trim(t.substr(0, eq)));
        if (key == "a_c" || key == "a_d" || key == "b_c" || key == "b_d") {
            auto v = parse_double(trim(t.substr(eq + 1)));
            if (!v.has_value()) {
                throw DataError(DataErrorKind::SCHEMA, "value of " + key + " is not a number", line_no);
            }
            values[key] = *v;
        }
    }
    for (const char *key : {"a_c", "a_d", "b_c", "b_d"}) {
        if (!values.contains(key)) {
            throw DataError(DataErrorKind::SCHEMA, std::string("calibration report lacks ") + key);
        }
    }
    DetectorCalibration cal{values["a_c"], values["a_d"], values["b_c"], values["b_d"]};
    try {
        cal.validate();
    } catch (const std::invalid_argument &e) {
        throw DataError(DataErrorKind::SCHEMA, e.what());
    }
    return cal;
}

}  // namespace pnr
