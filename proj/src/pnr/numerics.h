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

#ifndef PNR_NUMERICS_H
#define PNR_NUMERICS_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pnr {

/// ln(n!). Exact products below 21, a summed-log table below 256 and the
/// Stirling series above.
double log_factorial(uint64_t n);

/// e^{-x} I_order(x) for integer order and x >= 0. Negative orders are folded
/// onto |order|.
double bessel_i_scaled(int order, double x);

/// ln(e^{-x} I_k(x)) for k = 0..max_order, from a single Miller backward
/// recurrence normalized with e^x = I_0(x) + 2 sum_{k>=1} I_k(x).
///
/// Entries are -infinity where the value is exactly zero (x == 0, k > 0).
std::vector<double> log_bessel_i_scaled_sequence(int max_order, double x);

/// Complementary error function.
double erfc(double x);

enum class QuadratureKind {
    /// Plain Gauss-Legendre on [a, b]; the weights sum to b - a.
    LEGENDRE_INTERVAL,
    /// Gauss-Legendre on a truncated support with a normal density folded into
    /// the weights; the weights sum to 1.
    GAUSSIAN_WEIGHTED,
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadratureKind kind = QuadratureKind::LEGENDRE_INTERVAL;

    size_t size() const {
        return nodes.size();
    }

    template <typename Func>
    double apply(Func &&g) const {
        double total = 0;
        for (size_t k = 0; k < nodes.size(); k++) {
            total += weights[k] * g(nodes[k]);
        }
        return total;
    }
};

/// Gauss-Legendre rule with `order` nodes on [a, b]. Exact for polynomials of
/// degree up to 2 * order - 1. Throws std::invalid_argument for order == 0 or
/// a >= b.
QuadratureRule gauss_legendre(size_t order, double a, double b);

/// `panels` equal sub-intervals of [a, b], each carrying a Gauss-Legendre rule
/// of the given order.
QuadratureRule composite_gauss_legendre(size_t order, double a, double b, size_t panels);

}  // namespace pnr

#endif
