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

#include "pnr/skellam.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "pnr/numerics.h"

namespace pnr {

namespace {

constexpr double TAIL_TOLERANCE = 1e-13;

void check_means(const OutputMeans &m) {
    if (!(m.mu_c >= 0) || !(m.mu_d >= 0) || !std::isfinite(m.mu_c) || !std::isfinite(m.mu_d)) {
        throw std::invalid_argument("skellam means must be finite and non-negative");
    }
}

double poisson_pmf(double mean, int64_t k) {
    if (k < 0) {
        return 0;
    }
    if (mean == 0) {
        return k == 0 ? 1 : 0;
    }
    double kk = static_cast<double>(k);
    return std::exp(-mean + kk * std::log(mean) - log_factorial(static_cast<uint64_t>(k)));
}

OutputMeans swapped(const OutputMeans &m) {
    return OutputMeans{m.mu_d, m.mu_c};
}

}  // namespace

std::vector<double> skellam_pmf_range(const OutputMeans &means, int64_t y_lo, int64_t y_hi) {
    check_means(means);
    if (y_hi < y_lo) {
        return {};
    }
    std::vector<double> out(static_cast<size_t>(y_hi - y_lo + 1), 0.0);
    if (means.mu_c == 0 || means.mu_d == 0) {
        // One dark port: the difference is +-Poisson.
        for (int64_t y = y_lo; y <= y_hi; y++) {
            out[static_cast<size_t>(y - y_lo)] = means.mu_d == 0 ? poisson_pmf(means.mu_c, y) : poisson_pmf(means.mu_d, -y);
        }
        return out;
    }
    int64_t max_order = std::max(std::abs(y_lo), std::abs(y_hi));
    auto log_i = log_bessel_i_scaled_sequence(static_cast<int>(max_order), 2 * std::sqrt(means.mu_c * means.mu_d));
    double root_gap = std::sqrt(means.mu_c) - std::sqrt(means.mu_d);
    double base = -root_gap * root_gap;
    double half_log_ratio = 0.5 * (std::log(means.mu_c) - std::log(means.mu_d));
    for (int64_t y = y_lo; y <= y_hi; y++) {
        double li = log_i[static_cast<size_t>(std::abs(y))];
        out[static_cast<size_t>(y - y_lo)] = std::exp(base + static_cast<double>(y) * half_log_ratio + li);
    }
    return out;
}

double skellam_pmf(const OutputMeans &means, int64_t y) {
    return skellam_pmf_range(means, y, y)[0];
}

double skellam_lower_tail_bound(const OutputMeans &means, int64_t k) {
    check_means(means);
    if (k < 1) {
        return 1;
    }
    if (means.mu_d == 0) {
        return 0;
    }
    double kk = static_cast<double>(k);
    double u = (kk + std::sqrt(kk * kk + 4 * means.mu_c * means.mu_d)) / (2 * means.mu_d);
    if (u <= 1) {
        return 1;
    }
    double log_bound = means.mu_c * (1 / u - 1) + means.mu_d * (u - 1) - kk * std::log(u);
    return std::min(1.0, std::exp(log_bound));
}

int64_t skellam_lower_cutoff(const OutputMeans &means, double tolerance) {
    if (skellam_lower_tail_bound(means, 1) < tolerance) {
        return 1;
    }
    int64_t hi = 2;
    while (skellam_lower_tail_bound(means, hi) >= tolerance) {
        hi *= 2;
        if (hi > (int64_t{1} << 40)) {
            throw std::runtime_error("skellam tail cutoff did not converge");
        }
    }
    int64_t lo = hi / 2;
    while (hi - lo > 1) {
        int64_t mid = lo + (hi - lo) / 2;
        if (skellam_lower_tail_bound(means, mid) < tolerance) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

double skellam_negative_mass(const OutputMeans &means) {
    check_means(means);
    if (means.mu_d == 0) {
        return 0;
    }
    int64_t cutoff = skellam_lower_cutoff(means, TAIL_TOLERANCE);
    auto pmf = skellam_pmf_range(means, -cutoff, -1);
    double total = 0;
    // Smallest terms first.
    for (double v : pmf) {
        total += v;
    }
    return total;
}

double skellam_hypothesis_error(const OutputMeans &means, Bit sent) {
    OutputMeans oriented = sent == Bit::ONE ? means : swapped(means);
    double tie = skellam_pmf(oriented, 0);
    return std::clamp(skellam_negative_mass(oriented) + 0.5 * tie, 0.0, 1.0);
}

double skellam_error_at_phase(const Receiver &receiver, double phase_shift) {
    double eta1 = prior_one(receiver);
    double e1 = skellam_hypothesis_error(receiver_means(receiver, Bit::ONE, phase_shift), Bit::ONE);
    double e0 = skellam_hypothesis_error(receiver_means(receiver, Bit::ZERO, phase_shift), Bit::ZERO);
    return std::clamp(eta1 * e1 + (1 - eta1) * e0, 0.0, 1.0);
}

double skellam_error(const Receiver &receiver, const PhaseNoise &noise, const IntegrationOptions &options) {
    double v = integrate(noise, [&](double shift) { return skellam_error_at_phase(receiver, shift); }, options);
    return std::clamp(v, 0.0, 1.0);
}

std::vector<double> noisy_skellam_pmf(
    const Receiver &receiver,
    const PhaseNoise &noise,
    int64_t y_lo,
    int64_t y_hi,
    const IntegrationOptions &options) {
    std::vector<double> total(y_hi >= y_lo ? static_cast<size_t>(y_hi - y_lo + 1) : 0, 0.0);
    QuadratureRule rule = noise_rule(noise, options);
    for (size_t k = 0; k < rule.size(); k++) {
        auto pmf = skellam_pmf_range(receiver_means(receiver, Bit::ONE, rule.nodes[k]), y_lo, y_hi);
        for (size_t j = 0; j < total.size(); j++) {
            total[j] += rule.weights[k] * pmf[j];
        }
    }
    return total;
}

}  // namespace pnr
