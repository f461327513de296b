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

#include "qeff/qnd.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qeff/error.hpp"
#include "qeff/numerics.hpp"

namespace qeff {

double canonical_phase(double phi) {
    if (!std::isfinite(phi)) {
        return phi;
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(phi, two_pi);  // [-pi, pi]
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

QndDetector::QndDetector(double f0, double f1, double phi0, double phi1, double d0, double d1, bool destroys_on_1)
    : f0_(f0),
      f1_(f1),
      phi0_(canonical_phase(phi0)),
      phi1_(canonical_phase(phi1)),
      d0_(d0),
      d1_(d1),
      destroys_on_1_(destroys_on_1) {
    auto fail = [](const std::string &what) { throw Error(ErrorKind::invalid_detector, what); };
    if (!(f0 >= 0.0 && f0 <= 1.0) || !(f1 >= 0.0 && f1 <= 1.0)) {
        std::ostringstream msg;
        msg << "fidelities must lie in [0, 1], got F0=" << f0 << " F1=" << f1;
        fail(msg.str());
    }
    if (!(d0 >= 0.0) || !(d1 >= 0.0)) {
        std::ostringstream msg;
        msg << "decoherences must be >= 0 (or +inf), got D0=" << d0 << " D1=" << d1;
        fail(msg.str());
    }
    if (!std::isfinite(phi0) || !std::isfinite(phi1)) {
        fail("phases must be finite");
    }
    if (destroys_on_1) {
        if (std::isfinite(d1)) {
            fail("a detector that destroys the qubit on outcome 1 must have d1 = +inf");
        }
        phi1_ = 0.0;
    }
}

QndDetector QndDetector::destructive(double f0, double f1, double phi0, double d0) {
    return QndDetector(f0, f1, phi0, 0.0, d0, kInfinity, true);
}

complex QndDetector::coherence_gain(Outcome outcome) const noexcept {
    double w = outcome == Outcome::zero ? weight0() : weight1();
    double d = outcome == Outcome::zero ? d0_ : d1_;
    double phi = outcome == Outcome::zero ? phi0_ : phi1_;
    if (w == 0.0 || std::isinf(d)) {
        return 0.0;
    }
    return std::polar(std::sqrt(w) * std::exp(-d), phi);
}

BranchMap branch_map(const QndDetector &det, Outcome outcome) {
    if (outcome == Outcome::zero) {
        return {det.f0(), 1.0 - det.f1(), det.coherence_gain(Outcome::zero)};
    }
    if (det.destroys_on_1()) {
        throw Error(ErrorKind::destructive_detector, "outcome 1 destroys the qubit; no post-measurement map");
    }
    return {1.0 - det.f0(), det.f1(), det.coherence_gain(Outcome::one)};
}

OutcomeProbabilities outcome_probabilities(const QubitState &state, const QndDetector &det) {
    double p0 = det.f0() * state.rho00() + (1.0 - det.f1()) * state.rho11();
    return {p0, 1.0 - p0};
}

OutcomeResult apply_branch(const QubitState &state, const BranchMap &map, Outcome label) {
    double a00 = map.pop0 * state.rho00();
    double a11 = map.pop1 * state.rho11();
    double p = a00 + a11;
    if (!(p > 0.0)) {
        throw Error(ErrorKind::impossible_outcome, "outcome has zero probability for this state");
    }
    return {label, p, QubitState(a00 / p, map.coherence * state.rho01() / p)};
}

OutcomeResult apply_outcome(const QubitState &state, const QndDetector &det, Outcome outcome) {
    auto probs = outcome_probabilities(state, det);
    double p = outcome == Outcome::zero ? probs.p0 : probs.p1;
    if (outcome == Outcome::one && det.destroys_on_1()) {
        if (!(p > 0.0)) {
            throw Error(ErrorKind::impossible_outcome, "outcome 1 has zero probability for this state");
        }
        return {outcome, p, std::nullopt};
    }
    OutcomeResult result = apply_branch(state, branch_map(det, outcome), outcome);
    result.probability = p;
    return result;
}

complex average_coherence_factor(const QndDetector &det) {
    return det.coherence_gain(Outcome::zero) + det.coherence_gain(Outcome::one);
}

QubitState average_transform(const QubitState &state, const QndDetector &det) {
    if (det.destroys_on_1()) {
        throw Error(ErrorKind::undefined_average, "averaging needs both post-measurement states");
    }
    return QubitState(state.rho00(), average_coherence_factor(det) * state.rho01());
}

double d_min(double f0, double f1) {
    // 1 - [sqrt(F0(1-F1)) + sqrt((1-F0)F1)]^2 = g^2 exactly; log1p keeps the
    // bound accurate when it is tiny.
    double g = bound_gap(f0, f1);
    return ensemble_loss(g * g, f0 * (1.0 - f1), (1.0 - f0) * f1, 0.0, 0.0, 0.0);
}

double SequentialComposition::probability(const QubitState &state, Outcome a, Outcome b) const {
    const BranchMap &m = at(a, b);
    return m.pop0 * state.rho00() + m.pop1 * state.rho11();
}

QubitState SequentialComposition::post_state(const QubitState &state, Outcome a, Outcome b) const {
    Outcome label = b;
    return *apply_branch(state, at(a, b), label).post_state;
}

SequentialComposition compose_sequential(const QndDetector &a, const QndDetector &b) {
    if (a.destroys_on_1() || b.destroys_on_1()) {
        throw Error(ErrorKind::destructive_detector, "composition needs non-destructive detectors");
    }
    SequentialComposition out{};
    for (Outcome oa : kOutcomes) {
        for (Outcome ob : kOutcomes) {
            out.maps[static_cast<int>(oa)][static_cast<int>(ob)] = branch_map(a, oa).then(branch_map(b, ob));
        }
    }
    return out;
}

}  // namespace qeff
