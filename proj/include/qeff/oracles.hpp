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

#ifndef QEFF_ORACLES_HPP
#define QEFF_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "qeff/models.hpp"
#include "qeff/parallel.hpp"

namespace qeff {

// ---------------------------------------------------------------------------
// Quadrature over the linear-detector record.

struct LinearQuadResult {
    double p0;
    double p1;
    QubitState post0;
    QubitState post1;
    /// Bound on the absolute error of every unnormalized matrix element
    /// (quadrature estimate plus the analytic tail beyond the cutoff).
    double error_bound;
    int evaluations;
};

/// Integrates the Bayesian update over r < r_th and r > r_th. For every record
/// value the state is updated from the likelihoods exp(-(r +- s)^2) and the
/// coherence picks up exp(-gamma t) exp(2 i kappa s r); the results are
/// weighted by the record density and summed per outcome. Throws
/// Error(accuracy) when `tol` (absolute) and `rel_tol` cannot both be reached.
LinearQuadResult quad_linear(const LinearDetectorConfig &cfg, const QubitState &state, double tol = 1e-14,
                             double rel_tol = 1e-13);

/// QND parameters of the linear detector recovered from quad_linear on the
/// state (|0> + |1>)/sqrt(2). Works for any kappa; phases come from the record
/// dependent phase factor.
struct LinearQuadParameters {
    double f0;
    double f1;
    double d0;
    double d1;
    double phi0;
    double phi1;
    double error_bound;
};

LinearQuadParameters quad_linear_parameters(const LinearDetectorConfig &cfg, double tol = 1e-14,
                                            double rel_tol = 1e-13);

// ---------------------------------------------------------------------------
// Monte Carlo.

struct McEstimate {
    double value;
    /// Sample standard deviation over sqrt(n); NaN when n < 2.
    double std_error;
    std::int64_t n_samples;
    std::uint64_t seed;
};

struct LinearMcResult {
    McEstimate p0;
    McEstimate f0;
    McEstimate f1;
    /// rho00 of the outcome-0 and outcome-1 conditioned states.
    McEstimate rho00_post0;
    McEstimate rho00_post1;
};

/// Samples the true basis state from diag(rho), a record value from the
/// matching Gaussian and thresholds it. Samples are split into fixed chunks
/// with one random stream each, so results do not depend on the thread count.
/// Throws Error(invalid_config) for n < 1000.
LinearMcResult mc_linear(const LinearDetectorConfig &cfg, const QubitState &state, std::int64_t n,
                         std::uint64_t seed, Execution exec = Execution::parallel);

/// Bernoulli sampling of the outcome with P0 from outcome_probabilities.
McEstimate mc_detector_outcomes(const QndDetector &det, const QubitState &state, std::int64_t n,
                                std::uint64_t seed, Execution exec = Execution::parallel);

inline constexpr std::int64_t kMcChunk = 1 << 16;

// ---------------------------------------------------------------------------
// Discretized continuum for the tunneling detector.

/// M levels uniform on [-W/2, W/2]; energies in units of Gamma1 = g1t / t.
struct ContinuumDiscretization {
    int levels = 4001;
    double bandwidth = 200.0;
    /// Time step; 0 selects bandwidth * dt = 0.05.
    double dt = 0.0;

    double spacing() const {
        return bandwidth / (levels - 1);
    }
    /// Throws Error(discretization) unless W >= 100 Gamma1 and spacing * t <= 1.
    void validate(double t, double gamma1) const;
};

struct ContinuumOptions {
    bool validate_discretization = true;
    bool detect_recurrence = true;
    Execution exec = Execution::parallel;
};

struct ContinuumResult {
    double f0;
    double f1;
    double d1;
    double phi1;
    /// sum_k b0k conj(b1k).
    complex overlap;
    /// arg(a0 conj(a1)): phase of the null-result coherence.
    double phi0;
    /// Largest |norm - 1| seen along either trajectory.
    double norm_drift;
    long steps;
    double dt;
    int levels;
    double bandwidth;
    double coupling0;
    double coupling1;
};

/// Integrates i d/dt (a, b_k) = H (a, b_k) for both qubit branches with a
/// unitary fourth-order stepper (Cayley steps composed by triple jump).
/// Rates are Gamma_j = g_jt / t; T_j = sqrt(Gamma_j / (2 pi rho)) with
/// rho = 1 / spacing, and T0 carries exp(i phi1). Throws
/// Error(stepper_accuracy) on norm drift above 1e-8 and Error(discretization)
/// when |a| revives.
ContinuumResult solve_discretized_continuum(const TunnelingConfig &cfg, const ContinuumDiscretization &disc,
                                            double t, const ContinuumOptions &options = {});

/// Same with t = g1t, i.e. Gamma1 = 1.
ContinuumResult solve_discretized_continuum(const TunnelingConfig &cfg, const ContinuumDiscretization &disc = {},
                                            const ContinuumOptions &options = {});

/// Final amplitudes of one branch (a, b_k); exposed for tests and benchmarks.
struct ContinuumBranch {
    complex a;
    std::vector<complex> b;
    double norm_drift;
    long steps;
};

ContinuumBranch evolve_continuum_branch(double gamma, complex phase, const ContinuumDiscretization &disc, double t,
                                        const ContinuumOptions &options = {});

}  // namespace qeff

#endif  // QEFF_ORACLES_HPP
