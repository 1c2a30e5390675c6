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

#include "pnr/cli/cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pnr/calibration.h"
#include "pnr/cli/config_error.h"
#include "pnr/cli/distributions.h"
#include "pnr/cli/error_curve.h"
#include "pnr/cli/plot_script.h"
#include "pnr/monte_carlo.h"
#include "pnr/receiver.h"
#include "pnr/text.h"

namespace pnr {

namespace {

struct CommonOptions {
    uint64_t seed = 0;
    bool mc = false;
    size_t shots = 1000;
    size_t reps = 100;
    std::string out;
    size_t workers = 0;
};

struct SourceOptions {
    std::string source = "exp1";
    std::string calibration;
    double beta = 1;
    double alpha = 1;
    double tau = 0.5;
    double phi = 0;
    double eta1 = 0.5;
};

struct SweepOptions {
    SourceOptions source;
    std::string noise = "uniform";
    std::vector<double> grid;
    double grid_min = 0;
    double grid_max = 2 * std::numbers::pi;
    size_t points = 40;
    bool matched = false;
    std::string mc_source = "shots";
    std::string scan;
    size_t scan_positions = 60;
    size_t scan_shots = 5000;
    size_t order = IntegrationOptions{}.order;
    double gaussian_cutoff = IntegrationOptions{}.gaussian_cutoff;
    std::string plot_script;
};

struct DistributionOptions {
    SourceOptions source;
    std::string noise = "none";
    double param = 0;
    size_t order = IntegrationOptions{}.order;
    std::string plot_script;
};

struct SynthesizeOptions {
    SourceOptions source;
    size_t positions = 60;
    size_t shots_per_position = 50000;
};

struct CalibrateOptions {
    std::string scan;
    std::string port = "c";
    std::string phases;
    double min_modulation_z = FitOptions{}.min_modulation_z;
};

void add_source_options(CLI::App *cmd, SourceOptions &s) {
    cmd->add_option("--source", s.source, "Receiver: ideal, exp1, exp2 or file")
        ->check(CLI::IsMember({"ideal", "exp1", "exp2", "file"}))
        ->capture_default_str();
    cmd->add_option("--calibration", s.calibration, "Calibration report (implies --source file)");
    cmd->add_option("--beta", s.beta, "Signal amplitude (ideal source)")->capture_default_str();
    cmd->add_option("--alpha", s.alpha, "Local-oscillator amplitude (ideal source)")->capture_default_str();
    cmd->add_option("--tau", s.tau, "Beam-splitter transmissivity (ideal source)")->capture_default_str();
    cmd->add_option("--phi", s.phi, "LO phase in radians")->capture_default_str();
    cmd->add_option("--eta1", s.eta1, "Prior probability of bit 1")->capture_default_str();
}

Receiver resolve_receiver(const SourceOptions &s) {
    std::string source = s.calibration.empty() ? s.source : "file";
    if (!s.calibration.empty() && s.source != "file" && s.source != "exp1") {
        throw ConfigError("--calibration conflicts with --source " + s.source);
    }
    try {
        if (source == "ideal") {
            DiscriminationProblem p{s.beta, s.alpha, s.tau, s.phi, s.eta1};
            p.validate();
            return p;
        }
        DetectorCalibration cal;
        if (source == "exp1") {
            cal = experiment_one();
        } else if (source == "exp2") {
            cal = experiment_two();
        } else {
            if (s.calibration.empty()) {
                throw ConfigError("--source file needs --calibration <path>");
            }
            cal = read_calibration_report(s.calibration);
        }
        if (!(s.eta1 >= 0 && s.eta1 <= 1)) {
            throw std::invalid_argument("eta1 must lie in [0, 1]");
        }
        return CalibratedReceiver{cal, s.phi, s.eta1};
    } catch (const std::invalid_argument &e) {
        if (dynamic_cast<const ConfigError *>(&e)) {
            throw;
        }
        throw ConfigError(e.what());
    }
}

NoiseKind resolve_noise_kind(const std::string &name) {
    try {
        return parse_noise_kind(name);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

PhaseNoise make_noise(NoiseKind kind, double param) {
    try {
        switch (kind) {
            case NoiseKind::NONE:
                return PhaseNoise::none();
            case NoiseKind::UNIFORM:
                return PhaseNoise::uniform(param);
            case NoiseKind::GAUSSIAN:
                return PhaseNoise::gaussian(param);
        }
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown noise kind");
}

/// Writes through `emit` to `path`, or to `fallback` when the path is empty
/// or "-".
void write_output(const std::string &path, std::ostream &fallback, const std::function<void(std::ostream &)> &emit) {
    if (path.empty() || path == "-") {
        emit(fallback);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw DataError(DataErrorKind::IO, "cannot open '" + path + "' for writing");
    }
    emit(f);
    f.flush();
    if (!f) {
        throw DataError(DataErrorKind::IO, "write to '" + path + "' failed");
    }
}

void run_sweep(const CommonOptions &common, const SweepOptions &o, std::ostream &out, std::ostream &err) {
    SweepSpec spec;
    spec.receiver = resolve_receiver(o.source);
    spec.kind = resolve_noise_kind(o.noise);
    spec.grid = o.grid.empty() ? linear_grid(o.grid_min, o.grid_max, o.points) : o.grid;
    spec.matched = o.matched;
    spec.mc = common.mc;
    spec.mc_options = {common.shots, common.reps, common.seed, 1};
    spec.workers = common.workers;
    spec.integration.order = o.order;
    spec.integration.gaussian_cutoff = o.gaussian_cutoff;
    if (o.order == 0 || !(o.gaussian_cutoff > 0)) {
        throw ConfigError("--order must be positive and --gaussian-cutoff > 0");
    }
    if (spec.mc && (common.shots == 0 || common.reps < 2)) {
        throw ConfigError("Monte Carlo needs --shots >= 1 and --reps >= 2");
    }
    if (spec.mc && o.mc_source == "scan") {
        if (!o.scan.empty()) {
            spec.mc_scan = read_shot_csv(o.scan);
        } else {
            const auto *cal = std::get_if<CalibratedReceiver>(&spec.receiver);
            if (cal == nullptr) {
                throw ConfigError("--mc-source scan without --scan needs a calibrated source");
            }
            spec.mc_scan = synthesize_piezo_scan(
                cal->cal, o.scan_positions, o.scan_shots, derive_seed(common.seed, 0x5ca9), common.workers);
        }
    }
    ErrorCurve curve = compute_error_curve(spec);
    write_output(common.out, out, [&](std::ostream &s) { write_error_curve(s, curve); });
    if (!o.plot_script.empty()) {
        std::string csv = common.out.empty() || common.out == "-" ? "sweep.csv" : common.out;
        write_output(o.plot_script, out, [&](std::ostream &s) { write_sweep_plot_script(s, csv, curve); });
    }
    err << "sweep: " << curve.rows.size() << " points, " << describe(spec.receiver) << '\n';
}

void run_distributions(const CommonOptions &common, const DistributionOptions &o, std::ostream &out, std::ostream &err) {
    DistributionSpec spec;
    spec.receiver = resolve_receiver(o.source);
    spec.noise = make_noise(resolve_noise_kind(o.noise), o.param);
    spec.mc_shots = common.mc ? common.shots : 0;
    spec.seed = common.seed;
    if (o.order == 0) {
        throw ConfigError("--order must be positive");
    }
    spec.integration.order = o.order;
    auto rows = compute_distribution(spec);
    write_output(common.out, out, [&](std::ostream &s) { write_distribution(s, rows); });
    if (!o.plot_script.empty()) {
        std::string csv = common.out.empty() || common.out == "-" ? "distributions.csv" : common.out;
        write_output(o.plot_script, out, [&](std::ostream &s) { write_distribution_plot_script(s, csv); });
    }
    err << "distributions: y in [" << rows.front().y << ", " << rows.back().y << "], " << describe(spec.receiver)
        << '\n';
}

void run_synthesize(const CommonOptions &common, const SynthesizeOptions &o, std::ostream &out, std::ostream &err) {
    Receiver r = resolve_receiver(o.source);
    const auto *cal = std::get_if<CalibratedReceiver>(&r);
    if (cal == nullptr) {
        throw ConfigError("synthesize needs a calibrated source (exp1, exp2 or file)");
    }
    if (o.positions < 2 || o.shots_per_position == 0) {
        throw ConfigError("synthesize needs --positions >= 2 and --shots-per-position >= 1");
    }
    auto scan = synthesize_piezo_scan(cal->cal, o.positions, o.shots_per_position, common.seed, common.workers);
    write_output(common.out, out, [&](std::ostream &s) { write_shot_csv(s, scan); });
    err << "synthesize: " << scan.size() << " shots over " << o.positions << " positions\n";
}

void run_calibrate(const CommonOptions &common, const CalibrateOptions &o, std::ostream &out, std::ostream &err) {
    FitOptions fit_options{o.min_modulation_z};
    ScanSummary summary = ingest_scan(o.scan);
    CalibrationFit fit = fit_fringe(summary, fit_options);
    write_output(common.out, out, [&](std::ostream &s) { write_calibration_report(s, fit, summary); });
    if (!o.phases.empty()) {
        Port port = o.port == "d" ? Port::D : Port::C;
        auto phases = retrieve_phase(summary, port, fit_options);
        auto unwrapped = unwrap_monotone_sweep(phases);
        write_output(o.phases, out, [&](std::ostream &s) {
            s << "position_index,phase_tag,retrieved_phase,unwrapped_phase\n";
            for (size_t k = 0; k < phases.size(); k++) {
                auto cell = [](double v) { return std::isfinite(v) ? format_double(v) : std::string(); };
                s << k << ',' << cell(summary.positions[k].phase_tag) << ',' << cell(phases[k]) << ','
                  << cell(unwrapped[k]) << '\n';
            }
        });
    }
    auto empty = summary.empty_positions();
    err << "calibrate: " << summary.total_shots() << " shots, " << summary.positions.size() << " positions";
    if (!empty.empty()) {
        err << ", " << empty.size() << " empty";
    }
    err << "; a_c=" << format_double(fit.cal.a_c, 6) << " a_d=" << format_double(fit.cal.a_d, 6)
        << " b_c=" << format_double(fit.cal.b_c, 6) << " b_d=" << format_double(fit.cal.b_d, 6) << '\n';
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coherent-state BPSK discrimination under phase noise"};
    app.name("pnr");
    app.set_config("--config", "", "INI config file; [sweep], [distributions], ... sections hold subcommand keys");
    app.require_subcommand(1, 1);
    // Lets --config follow the subcommand name.
    app.fallthrough();
    app.allow_config_extras(CLI::config_extras_mode::error);

    CommonOptions common;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--seed", common.seed, "Master random seed")->capture_default_str();
        cmd->add_flag("--mc", common.mc, "Add Monte Carlo estimates");
        cmd->add_option("--shots", common.shots, "Shots per Monte Carlo repetition (N_s)")->capture_default_str();
        cmd->add_option("--reps", common.reps, "Monte Carlo repetitions (M)")->capture_default_str();
        cmd->add_option("--out", common.out, "Output path (default stdout)");
        cmd->add_option("--workers", common.workers, "Worker threads, 0 = all cores")->capture_default_str();
    };

    SweepOptions sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Error probability versus phase-noise strength");
    add_common(sweep_cmd);
    add_source_options(sweep_cmd, sweep.source);
    sweep_cmd->add_option("--noise", sweep.noise, "none, uniform or gaussian")->capture_default_str();
    sweep_cmd->add_option("--grid", sweep.grid, "Explicit comma-separated noise grid")->delimiter(',');
    sweep_cmd->add_option("--grid-min", sweep.grid_min, "First grid value")->capture_default_str();
    sweep_cmd->add_option("--grid-max", sweep.grid_max, "Last grid value")->capture_default_str();
    sweep_cmd->add_option("--points", sweep.points, "Number of grid points")->capture_default_str();
    sweep_cmd->add_flag("--matched", sweep.matched, "Pair uniform gamma with gaussian sigma = gamma / (2 sqrt 3)");
    sweep_cmd->add_option("--mc-source", sweep.mc_source, "shots (fresh per-shot noise) or scan (piezo-scan pool)")
        ->check(CLI::IsMember({"shots", "scan"}))
        ->capture_default_str();
    sweep_cmd->add_option("--scan", sweep.scan, "Shot CSV used as the scan pool");
    sweep_cmd->add_option("--scan-positions", sweep.scan_positions, "Positions of a synthesized pool")
        ->capture_default_str();
    sweep_cmd->add_option("--scan-shots", sweep.scan_shots, "Shots per position of a synthesized pool")
        ->capture_default_str();
    sweep_cmd->add_option("--order", sweep.order, "Gauss-Legendre nodes per panel")->capture_default_str();
    sweep_cmd->add_option("--gaussian-cutoff", sweep.gaussian_cutoff, "Gaussian support in units of sigma")
        ->capture_default_str();
    sweep_cmd->add_option("--plot-script", sweep.plot_script, "Also write a matplotlib script here");

    DistributionOptions dist;
    auto *dist_cmd = app.add_subcommand("distributions", "Photocount-difference distribution of bit 1");
    add_common(dist_cmd);
    add_source_options(dist_cmd, dist.source);
    dist_cmd->add_option("--noise", dist.noise, "none, uniform or gaussian")->capture_default_str();
    dist_cmd->add_option("--param", dist.param, "gamma or sigma of the noise")->capture_default_str();
    dist_cmd->add_option("--order", dist.order, "Gauss-Legendre nodes per panel")->capture_default_str();
    dist_cmd->add_option("--plot-script", dist.plot_script, "Also write a matplotlib script here");

    SynthesizeOptions synth;
    auto *synth_cmd = app.add_subcommand("synthesize", "Synthesize a raw piezo-scan shot CSV");
    add_common(synth_cmd);
    add_source_options(synth_cmd, synth.source);
    synth_cmd->add_option("--positions", synth.positions, "Piezo positions over one turn")->capture_default_str();
    synth_cmd->add_option("--shots-per-position", synth.shots_per_position, "Shots at each position")
        ->capture_default_str();

    CalibrateOptions calib;
    auto *calib_cmd = app.add_subcommand("calibrate", "Fit a, b per port from a raw piezo scan");
    add_common(calib_cmd);
    calib_cmd->add_option("scan,--scan", calib.scan, "Shot CSV of the scan")->required();
    calib_cmd->add_option("--port", calib.port, "Port used for phase retrieval")
        ->check(CLI::IsMember({"c", "d"}))
        ->capture_default_str();
    calib_cmd->add_option("--phases", calib.phases, "Write retrieved per-position phases to this CSV");
    calib_cmd->add_option("--min-modulation-z", calib.min_modulation_z, "Flat-fringe threshold in standard errors")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_CONFIG;
    }

    try {
        if (*sweep_cmd) {
            run_sweep(common, sweep, out, err);
        } else if (*dist_cmd) {
            run_distributions(common, dist, out, err);
        } else if (*synth_cmd) {
            run_synthesize(common, synth, out, err);
        } else {
            run_calibrate(common, calib, out, err);
        }
    } catch (const DataError &e) {
        err << "pnr: " << e.what() << '\n';
        return EXIT_DATA;
    } catch (const ConfigError &e) {
        err << "pnr: config error: " << e.what() << '\n';
        return EXIT_CONFIG;
    } catch (const NumericalError &e) {
        err << "pnr: numerical error: " << e.what() << '\n';
        return EXIT_NUMERICAL;
    } catch (const std::invalid_argument &e) {
        err << "pnr: config error: " << e.what() << '\n';
        return EXIT_CONFIG;
    } catch (const std::exception &e) {
        err << "pnr: numerical error: " << e.what() << '\n';
        return EXIT_NUMERICAL;
    }
    return EXIT_OK;
}

}  // namespace pnr
