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

#ifndef QEFF_NUMERICS_HPP
#define QEFF_NUMERICS_HPP

namespace qeff {

/// ln erfc(x), finite for every real x (asymptotic series past the
/// underflow point of std::erfc).
double log_erfc(double x);

/// 1 - exp(-x) without cancellation at small x.
double one_minus_exp(double x);

/// (1 - exp(-x)) / x, continuous at x = 0 where it equals 1.
double decay_fraction(double x);

/// g = sqrt(F0 F1) - sqrt((1 - F0)(1 - F1)). The identity
/// [sqrt(F0(1-F1)) + sqrt((1-F0)F1)]^2 + g^2 = 1 lets every decoherence
/// bound be written as a log1p of a small positive number.
double bound_gap(double f0, double f1);

/// -ln sqrt(1 - x) for x in [0, 1], i.e. the decoherence whose coherence
/// modulus squared is 1 - x. Returns +inf at x >= 1.
double coherence_loss(double x);

/// (sqrt(w0) + sqrt(w1))^2 - |c0 + c1|^2 for c_i = sqrt(w_i) exp(-D_i) exp(i phi_i),
/// written as a sum of non-negative terms; dphi = phi1 - phi0.
double coherence_excess(double w0, double w1, double d0, double d1, double dphi);

/// -ln|sqrt(w0) e^{-d0} + sqrt(w1) e^{-d1 + i dphi}| where gap2 is the squared
/// bound gap of the same fidelities. Uses the logarithm of the modulus when it
/// is small and log1p of the excess form when it is close to one.
double ensemble_loss(double gap2, double w0, double w1, double d0, double d1, double dphi);

}  // namespace qeff

#endif  // QEFF_NUMERICS_HPP
