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

#include "pnr/numerics.h"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pnr {

namespace {

constexpr size_t LOG_FACTORIAL_TABLE_SIZE = 256;

const std::array<double, LOG_FACTORIAL_TABLE_SIZE> &log_factorial_table() {
    static const std::array<double, LOG_FACTORIAL_TABLE_SIZE> table = [] {
        std::array<double, LOG_FACTORIAL_TABLE_SIZE> t{};
        double exact = 1;
        long double running = 0;
        t[0] = 0;
        for (size_t n = 1; n < LOG_FACTORIAL_TABLE_SIZE; n++) {
            running += std::log(static_cast<long double>(n));
            if (n <= 20) {
                exact *= static_cast<double>(n);
                t[n] = std::log(exact);
            } else {
                t[n] = static_cast<double>(running);
            }
        }
        return t;
    }();
    return table;
}

// Unit rules on [-1, 1], cached by order.
const QuadratureRule &unit_legendre(size_t order) {
    static std::mutex mu;
    static std::map<size_t, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) {
        return it->second;
    }

    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    size_t half = (order + 1) / 2;
    for (size_t i = 0; i < half; i++) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(order) + 0.5));
        double dp = 0;
        for (int iter = 0; iter < 100; iter++) {
            double p0 = 1;
            double p1 = 0;
            for (size_t j = 1; j <= order; j++) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
            }
            dp = static_cast<double>(order) * (z * p0 - p1) / (z * z - 1.0);
            double step = p0 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node.
        double p0 = 1;
        double p1 = 0;
        for (size_t j = 1; j <= order; j++) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
        }
        dp = static_cast<double>(order) * (z * p0 - p1) / (z * z - 1.0);
        double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    if (order % 2 == 1) {
        rule.nodes[order / 2] = 0;
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

}  // namespace

double log_factorial(uint64_t n) {
    if (n < LOG_FACTORIAL_TABLE_SIZE) {
        return log_factorial_table()[n];
    }
    double x = static_cast<double>(n);
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
    return x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x) + series;
}

std::vector<double> log_bessel_i_scaled_sequence(int max_order, double x) {
    if (max_order < 0) {
        throw std::invalid_argument("max_order must be non-negative");
    }
    if (!(x >= 0) || std::isinf(x)) {
        throw std::invalid_argument("bessel argument must be finite and non-negative, got " + std::to_string(x));
    }
    size_t n = static_cast<size_t>(max_order) + 1;
    std::vector<double> out(n, -std::numeric_limits<double>::infinity());
    if (x == 0) {
        out[0] = 0;
        return out;
    }
    if (x < 1e-8) {
        // Leading series term; the next correction is below (x/2)^2 ~ 1e-17.
        double log_half = std::log(0.5 * x);
        for (size_t k = 0; k < n; k++) {
            out[k] = -x + static_cast<double>(k) * log_half - log_factorial(k);
        }
        return out;
    }

    constexpr double BIG = 1e250;
    constexpr double LOG_BIG = 575.6462732485114;  // ln(1e250)
    size_t start = static_cast<size_t>(max_order) + 32 + static_cast<size_t>(std::ceil(std::sqrt(80.0 * x)));
    start += start % 2;

    double inv_x2 = 2.0 / x;
    double above = 0;  // J_{k+1}
    double here = 1;   // J_k
    double sum = 0;    // J_0 + 2 sum_{k>=1} J_k, in current units
    double log_scale = 0;
    for (size_t k = start; k > 0; k--) {
        if (k < n) {
            out[k] = std::log(here) + log_scale;
        }
        sum += 2 * here;
        double below = inv_x2 * static_cast<double>(k) * here + above;
        above = here;
        here = below;
        if (here > BIG) {
            here /= BIG;
            above /= BIG;
            sum /= BIG;
            log_scale += LOG_BIG;
        }
    }
    out[0] = std::log(here) + log_scale;
    sum += here;
    double log_norm = std::log(sum) + log_scale;
    for (auto &v : out) {
        v -= log_norm;
    }
    return out;
}

double bessel_i_scaled(int order, double x) {
    int k = order < 0 ? -order : order;
    return std::exp(log_bessel_i_scaled_sequence(k, x)[static_cast<size_t>(k)]);
}

double erfc(double x) {
    return std::erfc(x);
}

QuadratureRule gauss_legendre(size_t order, double a, double b) {
    return composite_gauss_legendre(order, a, b, 1);
}

QuadratureRule composite_gauss_legendre(size_t order, double a, double b, size_t panels) {
    if (order == 0) {
        throw std::invalid_argument("quadrature order must be at least 1");
    }
    if (panels == 0) {
        throw std::invalid_argument("quadrature panel count must be at least 1");
    }
    if (!(a < b)) {
        throw std::invalid_argument("quadrature interval must satisfy a < b");
    }
    const QuadratureRule &unit = unit_legendre(order);
    QuadratureRule rule;
    rule.kind = QuadratureKind::LEGENDRE_INTERVAL;
    rule.nodes.reserve(order * panels);
    rule.weights.reserve(order * panels);
    double width = (b - a) / static_cast<double>(panels);
    for (size_t p = 0; p < panels; p++) {
        double lo = a + width * static_cast<double>(p);
        double mid = lo + 0.5 * width;
        for (size_t k = 0; k < order; k++) {
            rule.nodes.push_back(mid + 0.5 * width * unit.nodes[k]);
            rule.weights.push_back(0.5 * width * unit.weights[k]);
        }
    }
    return rule;
}

}  // namespace pnr
