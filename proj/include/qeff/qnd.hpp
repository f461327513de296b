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

#ifndef QEFF_QND_HPP
#define QEFF_QND_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>

#include "qeff/qubit_state.hpp"

namespace qeff {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Outcome : std::uint8_t { zero = 0, one = 1 };

inline constexpr std::array<Outcome, 2> kOutcomes = {Outcome::zero, Outcome::one};

/// Maps any angle onto (-pi, pi].
double canonical_phase(double phi);

/// Binary-outcome QND detector described by fidelities F0, F1, phases phi0, phi1
/// and extra decoherences D0, D1 (either may be +infinity).
///
/// For outcome 0 the coherence rho01 is multiplied by
/// sqrt(F0 (1 - F1)) exp(-D0) exp(i phi0) before normalization, for outcome 1
/// by sqrt((1 - F0) F1) exp(-D1) exp(i phi1). A detector that destroys the
/// qubit on outcome 1 carries d1 = +inf and phi1 = 0.
class QndDetector {
   public:
    /// Throws Error(invalid_detector) on F outside [0, 1], negative or NaN D,
    /// non-finite phases, or destroys_on_1 with finite d1.
    QndDetector(double f0, double f1, double phi0, double phi1, double d0, double d1, bool destroys_on_1 = false);

    /// Detector whose outcome 1 destroys the qubit (phase-qubit style).
    static QndDetector destructive(double f0, double f1, double phi0, double d0);

    double f0() const noexcept {
        return f0_;
    }
    double f1() const noexcept {
        return f1_;
    }
    double phi0() const noexcept {
        return phi0_;
    }
    double phi1() const noexcept {
        return phi1_;
    }
    double d0() const noexcept {
        return d0_;
    }
    double d1() const noexcept {
        return d1_;
    }
    bool destroys_on_1() const noexcept {
        return destroys_on_1_;
    }

    /// F0 (1 - F1): squared modulus of the ideal outcome-0 coherence gain.
    double weight0() const noexcept {
        return f0_ * (1.0 - f1_);
    }
    /// (1 - F0) F1.
    double weight1() const noexcept {
        return (1.0 - f0_) * f1_;
    }

    /// Coherence gain sqrt(w_i) exp(-D_i) exp(i phi_i) for the given outcome.
    complex coherence_gain(Outcome outcome) const noexcept;

    bool operator==(const QndDetector &) const = default;

   private:
    double f0_;
    double f1_;
    double phi0_;
    double phi1_;
    double d0_;
    double d1_;
    bool destroys_on_1_;
};

/// Unnormalized single-outcome map: rho00 -> pop0 rho00, rho11 -> pop1 rho11,
/// rho01 -> coherence rho01. The outcome probability is pop0 rho00 + pop1 rho11.
struct BranchMap {
    double pop0;
    double pop1;
    complex coherence;

    /// Sequential composition: `*this` applied first, then `next`.
    BranchMap then(const BranchMap &next) const noexcept {
        return {pop0 * next.pop0, pop1 * next.pop1, coherence * next.coherence};
    }
};

/// Map for one outcome of a detector; throws Error(destructive_detector) for
/// outcome 1 of a detector that destroys the qubit.
BranchMap branch_map(const QndDetector &det, Outcome outcome);

struct OutcomeProbabilities {
    double p0;
    double p1;
};

struct OutcomeResult {
    Outcome outcome;
    double probability;
    /// Empty when the outcome destroyed the qubit.
    std::optional<QubitState> post_state;

    bool destroyed() const noexcept {
        return !post_state.has_value();
    }
};

/// P0 = F0 rho00 + (1 - F1) rho11 and P1 = 1 - P0.
OutcomeProbabilities outcome_probabilities(const QubitState &state, const QndDetector &det);

/// Normalized post-measurement state. Throws Error(impossible_outcome) when the
/// outcome has zero probability.
OutcomeResult apply_outcome(const QubitState &state, const QndDetector &det, Outcome outcome);

/// Applies a (possibly composed) branch map and normalizes.
OutcomeResult apply_branch(const QubitState &state, const BranchMap &map, Outcome label);

/// exp(-D_av) exp(i phi_av) = sum of the two coherence gains.
complex average_coherence_factor(const QndDetector &det);

/// Result-averaged transform P0 rho^(0) + P1 rho^(1). Throws
/// Error(undefined_average) for a destructive detector.
QubitState average_transform(const QubitState &state, const QndDetector &det);

/// Informational bound -ln[sqrt(F0 (1 - F1)) + sqrt((1 - F0) F1)]; +inf when
/// the bracket vanishes.
double d_min(double f0, double f1);

/// Per-outcome-pair map of detector `a` followed by detector `b`.
struct SequentialComposition {
    /// Indexed [outcome_a][outcome_b].
    std::array<std::array<BranchMap, 2>, 2> maps;

    const BranchMap &at(Outcome a, Outcome b) const noexcept {
        return maps[static_cast<int>(a)][static_cast<int>(b)];
    }
    /// Joint probability of (a, b) on `state`.
    double probability(const QubitState &state, Outcome a, Outcome b) const;
    /// Normalized state after (a, b).
    QubitState post_state(const QubitState &state, Outcome a, Outcome b) const;
};

/// Throws Error(destructive_detector) if either detector destroys on outcome 1.
SequentialComposition compose_sequential(const QndDetector &a, const QndDetector &b);

}  // namespace qeff

#endif  // QEFF_QND_HPP
