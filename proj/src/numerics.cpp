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

#include "qeff/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qeff {

double log_erfc(double x) {
    if (x <= 25.0) {
        return std::log(std::erfc(x));
    }
    // erfc(x) = exp(-x^2)/(x sqrt(pi)) * (1 - 1/(2x^2) + 3/(4x^4) - ...).
    double inv2 = 1.0 / (x * x);
    double series = 1.0;
    double term = 1.0;
    for (int k = 1; k <= 6; ++k) {
        term *= -(2.0 * k - 1.0) * 0.5 * inv2;
        series += term;
    }
    return -x * x - std::log(x * std::sqrt(std::numbers::pi)) + std::log(series);
}

double one_minus_exp(double x) {
    return -std::expm1(-x);
}

double decay_fraction(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    if (std::isinf(x)) {
        return 0.0;
    }
    return -std::expm1(-x) / x;
}

double bound_gap(double f0, double f1) {
    // Rationalized difference of square roots; exact zero when F0 + F1 = 1.
    const double den = std::sqrt(f0 * f1) + std::sqrt((1.0 - f0) * (1.0 - f1));
    return den == 0.0 ? 0.0 : (f0 + f1 - 1.0) / den;
}

double coherence_loss(double x) {
    if (x >= 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    return -0.5 * std::log1p(-std::max(x, 0.0));
}

double coherence_excess(double w0, double w1, double d0, double d1, double dphi) {
    double s = std::sin(0.5 * dphi);
    double cross = 2.0 * std::sqrt(w0 * w1);
    double sum_d = d0 + d1;
    double cross_term = cross == 0.0 ? 0.0 : cross * (one_minus_exp(sum_d) + 2.0 * std::exp(-sum_d) * s * s);
    return w0 * one_minus_exp(2.0 * d0) + w1 * one_minus_exp(2.0 * d1) + cross_term;
}

double ensemble_loss(double gap2, double w0, double w1, double d0, double d1, double dphi) {
    const double a = std::sqrt(w0) * std::exp(-d0);
    const double b = std::sqrt(w1) * std::exp(-d1);
    const double m2 = a * a + b * b + 2.0 * a * b * std::cos(dphi);
    if (m2 < 0.5) {
        return m2 == 0.0 ? std::numeric_limits<double>::infinity() : -0.5 * std::log(m2);
    }
    return coherence_loss(gap2 + coherence_excess(w0, w1, d0, d1, dphi));
}

}  // namespace qeff
