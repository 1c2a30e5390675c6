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

#include "pnr/receiver.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pnr {

namespace {

bool finite_non_negative(double v) {
    return v >= 0 && std::isfinite(v);
}

double clamp_rounding(double v) {
    // Perfect destructive interference can leave -1e-16 behind.
    return v < 0 ? 0 : v;
}

}  // namespace

void DiscriminationProblem::validate() const {
    if (!(beta >= 0) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta must be finite and non-negative");
    }
    if (!finite_non_negative(alpha)) {
        throw std::invalid_argument("alpha must be finite and non-negative");
    }
    if (!(tau > 0 && tau < 1)) {
        throw std::invalid_argument("tau must lie strictly inside (0, 1)");
    }
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("phi must be finite");
    }
    if (!(eta1 >= 0 && eta1 <= 1)) {
        throw std::invalid_argument("eta1 must lie in [0, 1]");
    }
}

void DetectorCalibration::validate() const {
    if (!finite_non_negative(a_c) || !finite_non_negative(a_d) || !finite_non_negative(b_c) ||
        !finite_non_negative(b_d)) {
        throw std::invalid_argument("calibration amplitudes must be finite and non-negative");
    }
}

double DetectorCalibration::visibility_c() const {
    double s = a_c * a_c + b_c * b_c;
    return s == 0 ? 0 : 2 * a_c * b_c / s;
}

double DetectorCalibration::visibility_d() const {
    double s = a_d * a_d + b_d * b_d;
    return s == 0 ? 0 : 2 * a_d * b_d / s;
}

double DetectorCalibration::signal_amplitude() const {
    return std::hypot(b_c, b_d);
}

DetectorCalibration experiment_one() {
    return DetectorCalibration{2.01, 2.07, 1.13, 1.07};
}

DetectorCalibration experiment_two() {
    return DetectorCalibration{2.74, 2.68, 0.87, 0.85};
}

OutputMeans poisson_means(const DiscriminationProblem &p, Bit bit, double phase_shift) {
    double s = bit_sign(bit);
    double cross = 2 * std::sqrt(p.tau * (1 - p.tau)) * p.alpha * p.beta * std::cos(p.phi - phase_shift);
    double a2 = p.alpha * p.alpha;
    double b2 = p.beta * p.beta;
    return OutputMeans{
        clamp_rounding(a2 * (1 - p.tau) + b2 * p.tau + s * cross),
        clamp_rounding(a2 * p.tau + b2 * (1 - p.tau) - s * cross),
    };
}

OutputMeans calibrated_means(const DetectorCalibration &cal, Bit bit, double phi, double phase_shift) {
    double c = std::cos(phi - phase_shift) * bit_sign(bit);
    return OutputMeans{
        clamp_rounding(cal.a_c * cal.a_c + cal.b_c * cal.b_c + 2 * cal.a_c * cal.b_c * c),
        clamp_rounding(cal.a_d * cal.a_d + cal.b_d * cal.b_d - 2 * cal.a_d * cal.b_d * c),
    };
}

OutputMeans receiver_means(const Receiver &receiver, Bit bit, double phase_shift) {
    if (const auto *p = std::get_if<DiscriminationProblem>(&receiver)) {
        return poisson_means(*p, bit, phase_shift);
    }
    const auto &c = std::get<CalibratedReceiver>(receiver);
    return calibrated_means(c.cal, bit, c.phi, phase_shift);
}

double prior_one(const Receiver &receiver) {
    return std::visit([](const auto &r) { return r.eta1; }, receiver);
}

double signal_amplitude(const Receiver &receiver) {
    if (const auto *p = std::get_if<DiscriminationProblem>(&receiver)) {
        return p->beta;
    }
    return std::get<CalibratedReceiver>(receiver).cal.signal_amplitude();
}

std::string describe(const Receiver &receiver) {
    std::ostringstream out;
    if (const auto *p = std::get_if<DiscriminationProblem>(&receiver)) {
        out << "ideal(beta=" << p->beta << ", alpha=" << p->alpha << ", tau=" << p->tau << ", phi=" << p->phi
            << ")";
    } else {
        const auto &c = std::get<CalibratedReceiver>(receiver);
        out << "calibrated(a_c=" << c.cal.a_c << ", a_d=" << c.cal.a_d << ", b_c=" << c.cal.b_c
            << ", b_d=" << c.cal.b_d << ", phi=" << c.phi << ")";
    }
    return out.str();
}

}  // namespace pnr
