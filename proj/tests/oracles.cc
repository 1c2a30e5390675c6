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

#include "oracles.h"

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

double bessel_i_scaled_series(int order, double x, int terms) {
    int n = order < 0 ? -order : order;
    if (x == 0) {
        return n == 0 ? 1.0 : 0.0;
    }
    if (terms == 0) {
        terms = 60 + static_cast<int>(4 * x);
    }
    double lx = std::log(0.5 * x);
    std::vector<double> logs;
    double peak = -INFINITY;
    for (int k = 0; k < terms; k++) {
        double t = (2.0 * k + n) * lx - std::lgamma(k + 1.0) - std::lgamma(k + n + 1.0);
        logs.push_back(t);
        peak = std::max(peak, t);
    }
    long double sum = 0;
    for (double t : logs) {
        sum += std::exp(static_cast<long double>(t - peak));
    }
    return static_cast<double>(std::exp(static_cast<long double>(peak - x)) * sum);
}

double poisson_convolution(double mu_c, double mu_d, int64_t y, int limit) {
    auto pois = [](double mu, int64_t k) -> long double {
        if (k < 0) {
            return 0;
        }
        if (mu == 0) {
            return k == 0 ? 1 : 0;
        }
        return std::exp(static_cast<long double>(-mu + k * std::log(mu) - std::lgamma(k + 1.0)));
    };
    long double total = 0;
    for (int64_t n = 0; n < limit; n++) {
        total += pois(mu_c, n) * pois(mu_d, n - y);
    }
    return static_cast<double>(total);
}

namespace {

double simpson_step(
    const std::function<double(double)> &f,
    double a,
    double b,
    double fa,
    double fm,
    double fb,
    double whole,
    double tol,
    int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * tol) {
        return left + right + delta / 15;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double tol) {
    double fa = f(a);
    double fb = f(b);
    double fm = f(0.5 * (a + b));
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 50);
}

double erfc_quadrature(double x) {
    auto g = [](double t) { return 2 / std::sqrt(std::numbers::pi) * std::exp(-t * t); };
    // The integrand is below 1e-300 past x + 27.
    double total = 0;
    double lo = x;
    for (int k = 0; k < 30; k++) {
        total += adaptive_simpson(g, lo, lo + 1, 1e-17);
        lo += 1;
    }
    return total;
}

double pure_state_helstrom(double beta) {
    return 0.5 * (1 - std::sqrt(1 - std::exp(-4 * beta * beta)));
}

namespace {

// Composite Simpson with n (even) intervals.
double simpson(const std::function<double(double)> &f, double a, double b, int n) {
    double h = (b - a) / n;
    double total = f(a) + f(b);
    for (int k = 1; k < n; k++) {
        total += (k % 2 ? 4 : 2) * f(a + k * h);
    }
    return total * h / 3;
}

}  // namespace

double homodyne_error_2d_uniform(double beta, double gamma) {
    auto density = [&](double x, double sign) {
        auto integrand = [&](double phi) {
            double z = x - sign * std::sqrt(2.0) * beta * std::cos(phi);
            return std::exp(-z * z);
        };
        double v = gamma == 0 ? integrand(0) : simpson(integrand, -gamma / 2, gamma / 2, 400) / gamma;
        return v / std::sqrt(std::numbers::pi);
    };
    double reach = std::sqrt(2.0) * beta + 12;
    double lower = simpson([&](double x) { return density(x, +1); }, -reach, 0, 2400);
    double upper = simpson([&](double x) { return density(x, -1); }, 0, reach, 2400);
    return 0.5 * (lower + upper);
}

std::complex<double> lambda_entry_uniform(double beta, double gamma, int n, int m) {
    double mag = std::exp(-beta * beta + (n + m) * std::log(beta) - 0.5 * (std::lgamma(n + 1.0) + std::lgamma(m + 1.0)));
    double parity = 0.5 * (1 - ((n + m) % 2 == 0 ? 1 : -1));
    if (gamma == 0) {
        return {mag * parity, 0};
    }
    int k = n - m;
    double re = simpson([&](double phi) { return std::cos(k * phi); }, -gamma / 2, gamma / 2, 2000) / gamma;
    double im = simpson([&](double phi) { return std::sin(k * phi); }, -gamma / 2, gamma / 2, 2000) / gamma;
    return std::complex<double>(re, im) * (mag * parity);
}

}  // namespace oracle
