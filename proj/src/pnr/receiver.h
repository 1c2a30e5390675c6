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

#ifndef PNR_RECEIVER_H
#define PNR_RECEIVER_H

#include <cstdint>
#include <string>
#include <variant>

namespace pnr {

/// Transmitted BPSK symbol: ONE is |beta>, ZERO is |-beta>.
enum class Bit : uint8_t { ZERO = 0, ONE = 1 };

inline double bit_sign(Bit bit) {
    return bit == Bit::ONE ? 1.0 : -1.0;
}

inline Bit flip(Bit bit) {
    return bit == Bit::ONE ? Bit::ZERO : Bit::ONE;
}

/// Signal |+-beta> mixed with a local oscillator |alpha e^{i phi}> on a beam
/// splitter of transmissivity tau.
struct DiscriminationProblem {
    double beta = 1;
    double alpha = 1;
    double tau = 0.5;
    double phi = 0;
    /// Prior of Bit::ONE; the prior of Bit::ZERO is 1 - eta1.
    double eta1 = 0.5;

    double eta0() const {
        return 1 - eta1;
    }
    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Effective LO (a) and signal (b) amplitudes reaching each output port, as
/// extracted from an interference fringe.
struct DetectorCalibration {
    double a_c = 0;
    double a_d = 0;
    double b_c = 0;
    double b_d = 0;

    void validate() const;
    /// 2ab / (a^2 + b^2) on port c.
    double visibility_c() const;
    double visibility_d() const;
    /// Signal amplitude before the beam splitter, sqrt(b_c^2 + b_d^2).
    double signal_amplitude() const;
    bool operator==(const DetectorCalibration &other) const = default;
};

/// Fitted amplitudes of the more balanced configuration (LO and signal of
/// similar intensity).
DetectorCalibration experiment_one();
/// Fitted amplitudes of the unbalanced configuration.
DetectorCalibration experiment_two();

/// A calibration together with the measurement phase and prior it is run at.
struct CalibratedReceiver {
    DetectorCalibration cal;
    double phi = 0;
    double eta1 = 0.5;
};

/// Anything the photon-counting receiver can be evaluated on.
using Receiver = std::variant<DiscriminationProblem, CalibratedReceiver>;

/// Mean photon numbers at output ports c and d.
struct OutputMeans {
    double mu_c = 0;
    double mu_d = 0;
};

/// Means of the ideal beam-splitter model. `phase_shift` is the noise phase,
/// entering as phi -> phi - phase_shift.
OutputMeans poisson_means(const DiscriminationProblem &p, Bit bit, double phase_shift);

/// Means predicted by the fitted fringe. Port d is anti-phased with port c and
/// Bit::ZERO is the Bit::ONE fringe shifted by pi.
OutputMeans calibrated_means(const DetectorCalibration &cal, Bit bit, double phi, double phase_shift);

OutputMeans receiver_means(const Receiver &receiver, Bit bit, double phase_shift);

/// Prior probability of Bit::ONE.
double prior_one(const Receiver &receiver);

/// Signal amplitude beta used for the Helstrom and ideal homodyne references.
double signal_amplitude(const Receiver &receiver);

std::string describe(const Receiver &receiver);

}  // namespace pnr

#endif
