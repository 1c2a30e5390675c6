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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.h"
#include "pnr/calibration.h"
#include "pnr/helstrom.h"
#include "pnr/homodyne.h"
#include "pnr/monte_carlo.h"
#include "pnr/skellam.h"
#include "pnr/text.h"

using namespace pnr;

namespace {

constexpr double PI = std::numbers::pi;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    return format_double(v, 6);
}

Verdict skellam_exactness() {
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> mean_dist(0.0, 30.0);
    double worst_norm = 0;
    double worst_moment = 0;
    double worst_oracle = 0;
    for (int trial = 0; trial < 200; trial++) {
        // (0, 30]: reflect the half-open draw.
        OutputMeans m{30.0 - mean_dist(rng), 30.0 - mean_dist(rng)};
        auto lo = static_cast<int64_t>(-std::ceil(m.mu_d + 15 * std::sqrt(m.mu_d) + 30));
        auto hi = static_cast<int64_t>(std::ceil(m.mu_c + 15 * std::sqrt(m.mu_c) + 30));
        auto pmf = skellam_pmf_range(m, lo, hi);
        double total = 0;
        double mean = 0;
        for (int64_t y = lo; y <= hi; y++) {
            double p = pmf[static_cast<size_t>(y - lo)];
            total += p;
            mean += p * static_cast<double>(y);
            worst_oracle = std::max(worst_oracle, std::abs(p - oracle::poisson_convolution(m.mu_c, m.mu_d, y)));
        }
        double var = 0;
        for (int64_t y = lo; y <= hi; y++) {
            double d = static_cast<double>(y) - mean;
            var += pmf[static_cast<size_t>(y - lo)] * d * d;
        }
        worst_norm = std::max(worst_norm, std::abs(total - 1));
        worst_moment = std::max(
            {worst_moment, std::abs(mean - (m.mu_c - m.mu_d)), std::abs(var - (m.mu_c + m.mu_d))});
    }
    bool pass = worst_norm <= 1e-10 && worst_moment <= 1e-8 && worst_oracle <= 1e-10;
    return {pass, "200 pairs; max |sum-1|=" + fmt(worst_norm) + " max moment err=" + fmt(worst_moment) +
                      " max |pmf-convolution|=" + fmt(worst_oracle)};
}

Verdict helstrom_closed_form() {
    double worst = 0;
    double worst_dephased = 0;
    for (double beta : {0.25, 0.5, 1.0, 1.5, 2.0}) {
        auto op = build_lambda(beta, PhaseNoise::none(), default_truncation(beta));
        worst = std::max(worst, std::abs(helstrom_bound(op) - oracle::pure_state_helstrom(beta)));
        worst_dephased =
            std::max(worst_dephased, std::abs(helstrom_bound(beta, PhaseNoise::uniform(2 * PI)) - 0.5));
    }
    return {worst <= 1e-8 && worst_dephased == 0.0,
            "max |P_H - closed form|=" + fmt(worst) + "; gamma=2pi max |P_H-0.5|=" + fmt(worst_dephased)};
}

Verdict homodyne_reduction() {
    double worst = 0;
    for (double beta : {0.25, 0.5, 1.0, 2.0}) {
        for (double gamma : {0.0, 0.5, 1.0, 2.0}) {
            double closed = homodyne_error(beta, PhaseNoise::uniform(gamma));
            worst = std::max(worst, std::abs(closed - oracle::homodyne_error_2d_uniform(beta, gamma)));
        }
    }
    double clean = homodyne_error(1.0, PhaseNoise::none());
    return {worst <= 1e-8 && std::abs(clean - 0.0227501) <= 1e-7,
            "4x4 grid max |closed - 2-D quadrature|=" + fmt(worst) + "; beta=1 noiseless P_hd=" +
                format_double(clean, 9)};
}

struct Curves {
    std::vector<double> grid;
    std::vector<double> helstrom;
    std::vector<double> homodyne;
    std::vector<double> skellam;
};

Curves curves(const Receiver &r, const std::vector<double> &grid, const std::function<PhaseNoise(double)> &noise) {
    Curves c;
    c.grid = grid;
    double beta = signal_amplitude(r);
    for (double g : grid) {
        PhaseNoise n = noise(g);
        c.helstrom.push_back(helstrom_bound(beta, n, prior_one(r)));
        c.homodyne.push_back(homodyne_error(beta, n));
        c.skellam.push_back(skellam_error(r, n));
    }
    return c;
}

std::vector<double> gamma_grid() {
    std::vector<double> g;
    for (int k = 0; k < 30; k++) {
        g.push_back(PI * k / 29);
    }
    return g;
}

Verdict quantum_limit_ordering() {
    const double tol = 1e-10;
    bool ordered = true;
    bool monotone = true;
    bool converging = true;
    std::string detail;
    for (auto [name, cal] : {std::pair{"exp1", experiment_one()}, std::pair{"exp2", experiment_two()}}) {
        Receiver r = CalibratedReceiver{cal};
        for (bool gaussian : {false, true}) {
            auto c = curves(r, gamma_grid(), [&](double g) {
                return gaussian ? PhaseNoise::gaussian(matched_sigma(g)) : PhaseNoise::uniform(g);
            });
            for (size_t k = 0; k < c.grid.size(); k++) {
                ordered &= c.helstrom[k] <= c.homodyne[k] + tol && c.helstrom[k] <= c.skellam[k] + tol;
                if (k > 0) {
                    monotone &= c.helstrom[k] >= c.helstrom[k - 1] - tol && c.homodyne[k] >= c.homodyne[k - 1] - tol &&
                                c.skellam[k] >= c.skellam[k - 1] - tol;
                }
            }
            double rel0 = (c.skellam.front() - c.helstrom.front()) / c.helstrom.front();
            double rel1 = (c.skellam.back() - c.helstrom.back()) / c.helstrom.back();
            converging &= rel1 < rel0;
            detail += std::string(name) + (gaussian ? "/gauss" : "/unif") + " rel gap " + fmt(rel0) + "->" +
                      fmt(rel1) + "; ";
        }
    }
    detail += std::string("ordered=") + (ordered ? "yes" : "no") + " monotone=" + (monotone ? "yes" : "no");
    return {ordered && monotone && converging, detail};
}

Verdict uniform_below_gaussian() {
    bool found = true;
    std::string detail;
    for (auto [name, cal] : {std::pair{"exp1", experiment_one()}, std::pair{"exp2", experiment_two()}}) {
        Receiver r = CalibratedReceiver{cal};
        auto grid = gamma_grid();
        auto u = curves(r, grid, [](double g) { return PhaseNoise::uniform(g); });
        auto g = curves(r, grid, [](double v) { return PhaseNoise::gaussian(matched_sigma(v)); });
        double first = NAN;
        double last = NAN;
        for (size_t k = 0; k < grid.size(); k++) {
            if (u.helstrom[k] < g.helstrom[k] && u.skellam[k] < g.skellam[k]) {
                if (std::isnan(first)) {
                    first = grid[k];
                }
                last = grid[k];
            }
        }
        found &= !std::isnan(first);
        detail += std::string(name) + ": uniform below gaussian for gamma in [" + fmt(first) + ", " + fmt(last) +
                  "]; ";
    }
    return {found, detail};
}

Verdict monte_carlo_agreement() {
    bool pass = true;
    std::string detail;
    double slowest = 0;
    uint64_t seed = 1000;
    for (auto [name, cal] : {std::pair{"exp1", experiment_one()}, std::pair{"exp2", experiment_two()}}) {
        Receiver r = CalibratedReceiver{cal};
        for (auto noise : {PhaseNoise::none(), PhaseNoise::uniform(0.5), PhaseNoise::gaussian(0.144)}) {
            auto t0 = std::chrono::steady_clock::now();
            auto res = run_experiment(r, noise, {.n_shots = 1000, .n_reps = 100, .seed = seed++});
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            slowest = std::max(slowest, secs);
            double p = skellam_error(r, noise);
            double pooled = std::sqrt(p * (1 - p) / (1000.0 * 100.0));
            double z = (res.mean_error - p) / pooled;
            pass &= std::abs(z) <= 3 && secs < 60;
            detail += std::string(name) + "/" + noise.str() + " z=" + format_double(z, 3) + "; ";
        }
    }
    detail += "slowest point " + format_double(slowest, 3) + " s";
    return {pass, detail};
}

Verdict calibration_round_trip() {
    auto truth = experiment_one();
    auto scan = synthesize_piezo_scan(truth, 60, 50000, 7, 0);
    auto fit = fit_fringe(summarize(scan));
    const double got[] = {fit.cal.a_c, fit.cal.a_d, fit.cal.b_c, fit.cal.b_d};
    const double want[] = {truth.a_c, truth.a_d, truth.b_c, truth.b_d};
    const double se[] = {fit.std_error.a_c, fit.std_error.a_d, fit.std_error.b_c, fit.std_error.b_d};
    const char *names[] = {"a_c", "a_d", "b_c", "b_d"};
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 4; k++) {
        double z = (got[k] - want[k]) / se[k];
        pass &= std::isfinite(z) && std::abs(z) <= 3;
        detail += std::string(names[k]) + "=" + format_double(got[k], 6) + " (z=" + format_double(z, 3) + ") ";
    }
    return {pass, detail};
}

Verdict strong_lo_convergence() {
    auto gap = [](double alpha) {
        Receiver r = DiscriminationProblem{.beta = 1, .alpha = alpha, .tau = 0.5};
        return std::abs(skellam_error(r, PhaseNoise::none()) - homodyne_error(1, PhaseNoise::none()));
    };
    double g3 = gap(3);
    double g20 = gap(20);
    return {g20 < g3, "|P_sk - P_hd| alpha=3: " + fmt(g3) + ", alpha=20: " + fmt(g20)};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Verdict()> check;
    };
    const Criterion criteria[] = {
        {"skellam-exactness", skellam_exactness},
        {"helstrom-closed-form", helstrom_closed_form},
        {"homodyne-reduction", homodyne_reduction},
        {"quantum-limit-ordering", quantum_limit_ordering},
        {"uniform-vs-gaussian", uniform_below_gaussian},
        {"monte-carlo-agreement", monte_carlo_agreement},
        {"calibration-round-trip", calibration_round_trip},
        {"strong-lo-convergence", strong_lo_convergence},
    };
    int failures = 0;
    int index = 1;
    for (const auto &c : criteria) {
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", index++, c.name, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", 8 - failures, 8);
    return failures == 0 ? 0 : 1;
}
