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

#include "qeff/efficiency.hpp"

#include <cmath>
#include <limits>

#include "qeff/numerics.hpp"

namespace qeff {

std::string_view to_string(UndefinedReason reason) {
    switch (reason) {
        case UndefinedReason::destroyed_branch:
            return "destroyed-branch";
        case UndefinedReason::zero_over_zero:
            return "zero-over-zero";
        case UndefinedReason::projective_limit:
            return "projective-limit";
    }
    return "unknown";
}

double Metric::value_or_nan() const noexcept {
    return value_ ? *value_ : std::numeric_limits<double>::quiet_NaN();
}

namespace {

// num / den for non-negative (possibly infinite) operands.
Metric ratio(double num, double den) {
    if (num == 0.0 && den == 0.0) {
        return Metric::undefined(UndefinedReason::zero_over_zero);
    }
    if (std::isinf(num) && std::isinf(den)) {
        return Metric::undefined(UndefinedReason::projective_limit);
    }
    if (std::isinf(den)) {
        return Metric::of(0.0);
    }
    return Metric::of(num / den);
}

// L / (D + L); an infinite L with finite D is the limit 1.
Metric outcome_tilde(double weight, double d) {
    double l = weight > 0.0 ? -0.5 * std::log(weight) : std::numeric_limits<double>::infinity();
    if (std::isinf(l) && std::isfinite(d)) {
        return Metric::of(1.0);
    }
    return ratio(l, d + l);
}

}  // namespace

EfficiencyReport efficiency_report(const QndDetector &det) {
    const double w0 = det.weight0();
    const double w1 = det.weight1();
    const double g = bound_gap(det.f0(), det.f1());
    const double gap2 = g * g;
    const double dphi = det.phi1() - det.phi0();

    const double dmin = ensemble_loss(gap2, w0, w1, 0.0, 0.0, 0.0);
    const auto destroyed = Metric::undefined(UndefinedReason::destroyed_branch);
    const auto projective = Metric::undefined(UndefinedReason::projective_limit);
    const bool is_projective = std::isinf(dmin);

    EfficiencyReport r{dmin, destroyed, destroyed, destroyed, destroyed, destroyed,
                       destroyed, destroyed, destroyed, destroyed};

    if (is_projective) {
        r.eta0 = projective;
        r.eta0_tilde = projective;
    } else {
        r.eta0 = ratio(dmin, det.d0() + dmin);
        r.eta0_tilde = outcome_tilde(w0, det.d0());
    }
    if (det.destroys_on_1()) {
        return r;
    }

    const double d_av = ensemble_loss(gap2, w0, w1, det.d0(), det.d1(), dphi);
    r.d_av = Metric::of(d_av);
    r.phi_av = Metric::of(std::arg(average_coherence_factor(det)));
    if (is_projective) {
        r.eta = r.eta_tilde = r.eta_tilde_tilde = r.eta1 = r.eta1_tilde = projective;
        return r;
    }

    const double d_tilde = ensemble_loss(gap2, w0, w1, det.d0(), det.d1(), 0.0);
    const double phase_only = ensemble_loss(gap2, w0, w1, 0.0, 0.0, dphi);
    r.eta = ratio(dmin, d_av);
    r.eta_tilde = ratio(dmin, d_tilde);
    r.eta_tilde_tilde = ratio(phase_only, d_av);
    r.eta1 = ratio(dmin, det.d1() + dmin);
    r.eta1_tilde = outcome_tilde(w1, det.d1());
    return r;
}

}  // namespace qeff
