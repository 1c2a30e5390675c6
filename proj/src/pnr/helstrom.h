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

#ifndef PNR_HELSTROM_H
#define PNR_HELSTROM_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pnr/phase_noise.h"

namespace pnr {

/// Dense real symmetric operator on the Fock states |0>..|dim-1>.
class FockOperator {
   public:
    explicit FockOperator(Eigen::MatrixXd entries);

    size_t dim() const {
        return static_cast<size_t>(entries_.rows());
    }
    double operator()(size_t n, size_t m) const {
        return entries_(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    }
    const Eigen::MatrixXd &matrix() const {
        return entries_;
    }

   private:
    Eigen::MatrixXd entries_;
};

/// ceil(beta^2 + 10 sqrt(beta^2 + 1) + 10): keeps the neglected Poisson weight
/// of |beta> below 1e-12.
size_t default_truncation(double beta);

/// eta1 E(|beta><beta|) - eta0 E(|-beta><-beta|) for the dephasing channel E of
/// `noise`. Entry (n, m) is
///   F(n-m) e^{-beta^2} beta^{n+m} / sqrt(n! m!) [eta1 - eta0 (-1)^{n+m}],
/// which for equal priors vanishes whenever n + m is even.
FockOperator build_lambda(double beta, const PhaseNoise &noise, size_t dim, double eta1 = 0.5);

/// Eigenvalues of the operator, ascending.
std::vector<double> eigenvalues(const FockOperator &op);

/// Sum of |eigenvalue|, with |lambda| < 1e-14 dropped.
double trace_norm(const FockOperator &op);

/// (1 - trace_norm) / 2, clamped to [0, 1/2].
double helstrom_bound(const FockOperator &op);

/// helstrom_bound(build_lambda(beta, noise, default_truncation(beta))).
double helstrom_bound(double beta, const PhaseNoise &noise, double eta1 = 0.5);

}  // namespace pnr

#endif
