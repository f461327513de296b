// Copyright 2026 The qeff Authors
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

#ifndef QEFF_MODELS_HPP
#define QEFF_MODELS_HPP

#include "qeff/efficiency.hpp"
#include "qeff/qnd.hpp"

namespace qeff {

/// Ancilla amplitudes after the qubit-ancilla interaction:
/// |0>|a> -> c00 |0>|0_a> + c10 |0>|1_a>, |1>|a> -> c01 |1>|0_a> + c11 |1>|1_a>,
/// followed by a projective ancilla readout.
struct IndirectProjectiveConfig {
    complex c00;
    complex c01;
    complex c10;
    complex c11;
};

/// Throws Error(invalid_config) unless both columns are normalized within 1e-12.
QndDetector indirect_projective_detector(const IndirectProjectiveConfig &cfg);

/// Linear detector with a threshold on the time-averaged output, in
/// dimensionless form. The record r has mean -s for |0> and +s for |1> with
/// variance 1/2; outcome 0 means r < r_th.
struct LinearDetectorConfig {
    double s = 0.0;
    double r_th = 0.0;
    double gamma_t = 0.0;
    double kappa = 0.0;

    /// Physical parameters: integration time t, output noise spectral density
    /// S, mean currents i0 and i1, threshold current i_th, extra dephasing rate
    /// gamma and noise correlation K.
    static LinearDetectorConfig from_physical(double t, double noise_s, double i0, double i1, double i_th,
                                              double gamma = 0.0, double k = 0.0);
};

struct FidelityPair {
    double f0;
    double f1;
};

FidelityPair linear_fidelities(const LinearDetectorConfig &cfg);

/// Extra decoherence of the outcome-0 branch. Throws
/// Error(analytic_path_unsupported) for kappa != 0.
double linear_d0(const LinearDetectorConfig &cfg);

/// QND parameters with D1 = linear_d0 of the mirrored threshold.
QndDetector linear_detector(const LinearDetectorConfig &cfg);

struct LinearEnsembleEta {
    Metric eta;
    Metric eta_tilde;
};

/// Ensemble efficiency with D_av = gamma t + s^2 (1 + kappa^2); eta_tilde drops
/// the kappa^2 term.
LinearEnsembleEta linear_ensemble_eta(const LinearDetectorConfig &cfg);

/// Phase qubit: tunneling (outcome 1) destroys the qubit. p is the tunneling
/// probability from |1>, p0 from |0>.
struct PhaseQubitConfig {
    double p = 0.0;
    double p0 = 0.0;
    double phi0 = 0.0;
};

QndDetector phase_qubit_detector(const PhaseQubitConfig &cfg);

/// Tomography visibility sqrt(1 - 4 product (1 - exp(-2 d0))) where product is
/// rho00 rho11 of the null-result state.
double visibility(double product, double d0);

/// Inverts visibility() for the null-result state of a phase qubit with
/// tunneling probability p prepared in `initial`. Throws
/// Error(inconsistent_data) when no D0 reproduces v_ratio.
double estimate_d0_from_visibility(double v_ratio, double p, const PureState &initial, double p0 = 0.0);

/// Tunneling from a well into a continuum with rates Gamma0 (qubit |0>) and
/// Gamma1 (qubit |1>), in units of the measurement time t.
struct TunnelingConfig {
    double g0t = 0.0;
    double g1t = 0.0;
    double phi1 = 0.0;

    static TunnelingConfig from_rates(double gamma0, double gamma1, double t, double phi1 = 0.0);
};

/// Throws Error(invalid_config) on negative or non-finite rates or g0t > g1t,
/// Error(degenerate_config) when both rates vanish.
QndDetector tunneling_detector(const TunnelingConfig &cfg);

struct TunnelingEnsemble {
    double d_av;
    double phi_av;
    /// D_min / D_av.
    Metric eta;
    /// Same with phi1 set to zero.
    Metric eta_tilde;
};

TunnelingEnsemble tunneling_ensemble(const TunnelingConfig &cfg);

}  // namespace qeff

#endif  // QEFF_MODELS_HPP
