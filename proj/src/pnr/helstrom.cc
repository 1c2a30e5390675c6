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

#include "pnr/helstrom.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pnr/numerics.h"

namespace pnr {

FockOperator::FockOperator(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("FockOperator must be square");
    }
}

size_t default_truncation(double beta) {
    double b2 = beta * beta;
    return static_cast<size_t>(std::ceil(b2 + 10 * std::sqrt(b2 + 1) + 10));
}

FockOperator build_lambda(double beta, const PhaseNoise &noise, size_t dim, double eta1) {
    if (dim < 1) {
        throw std::invalid_argument("Fock truncation must be at least 1");
    }
    if (!(beta > 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be finite and positive");
    }
    if (!(eta1 >= 0 && eta1 <= 1)) {
        throw std::invalid_argument("eta1 must lie in [0, 1]");
    }
    double eta0 = 1 - eta1;
    double log_beta = std::log(beta);
    std::vector<double> half_log_fact(dim);
    for (size_t n = 0; n < dim; n++) {
        half_log_fact[n] = 0.5 * log_factorial(n);
    }
    std::vector<double> char_fn(dim);
    for (size_t k = 0; k < dim; k++) {
        char_fn[k] = characteristic(noise, static_cast<int>(k));
    }

    auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd m(d, d);
    for (size_t n = 0; n < dim; n++) {
        for (size_t k = n; k < dim; k++) {
            double parity = ((n + k) % 2 == 0) ? eta1 - eta0 : eta1 + eta0;
            double v = 0;
            if (parity != 0) {
                double log_mag = -beta * beta + static_cast<double>(n + k) * log_beta - half_log_fact[n] - half_log_fact[k];
                v = char_fn[k - n] * std::exp(log_mag) * parity;
            }
            m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) = v;
            m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n)) = v;
        }
    }
    return FockOperator(std::move(m));
}

std::vector<double> eigenvalues(const FockOperator &op) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver did not converge");
    }
    const auto &ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double trace_norm(const FockOperator &op) {
    double total = 0;
    for (double lambda : eigenvalues(op)) {
        if (std::abs(lambda) >= 1e-14) {
            total += std::abs(lambda);
        }
    }
    return total;
}

double helstrom_bound(const FockOperator &op) {
    return std::clamp(0.5 * (1 - trace_norm(op)), 0.0, 0.5);
}

double helstrom_bound(double beta, const PhaseNoise &noise, double eta1) {
    if (beta == 0) {
        return std::min(eta1, 1 - eta1);
    }
    return helstrom_bound(build_lambda(beta, noise, default_truncation(beta), eta1));
}

}  // namespace pnr
