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

#ifndef QEFF_QUBIT_STATE_HPP
#define QEFF_QUBIT_STATE_HPP

#include <complex>

namespace qeff {

using complex = std::complex<double>;

/// Absolute tolerance used by every state constructor.
inline constexpr double kStateTolerance = 1e-12;

/// Normalized pure state amp0 |0> + amp1 |1>.
class PureState {
   public:
    /// Throws Error(normalization) unless |amp0|^2 + |amp1|^2 = 1 within kStateTolerance.
    PureState(complex amp0, complex amp1);

    complex amp0() const noexcept {
        return amp0_;
    }
    complex amp1() const noexcept {
        return amp1_;
    }

    /// (|0> + |1>)/sqrt(2).
    static PureState plus();

   private:
    complex amp0_;
    complex amp1_;
};

/// Qubit density matrix. Only rho00 and rho01 are stored: rho11 = 1 - rho00 and
/// rho10 = conj(rho01), so trace and Hermiticity hold by construction.
class QubitState {
   public:
    /// Throws Error(invalid_state) if rho00 is outside [0, 1] or
    /// |rho01|^2 > rho00 * rho11 (both within kStateTolerance). Values are
    /// stored as given; nothing is clamped.
    QubitState(double rho00, complex rho01);

    double rho00() const noexcept {
        return rho00_;
    }
    double rho11() const noexcept {
        return 1.0 - rho00_;
    }
    complex rho01() const noexcept {
        return rho01_;
    }
    complex rho10() const noexcept {
        return std::conj(rho01_);
    }

    /// rho00 * rho11 - |rho01|^2; zero iff the state is pure.
    double purity_defect() const noexcept;

    static QubitState from_pure(const PureState &state);
    static QubitState ground();
    static QubitState excited();
    static QubitState maximally_mixed();

    bool operator==(const QubitState &) const = default;

   private:
    double rho00_;
    complex rho01_;
};

inline QubitState from_pure(const PureState &state) {
    return QubitState::from_pure(state);
}

inline double purity_defect(const QubitState &state) {
    return state.purity_defect();
}

}  // namespace qeff

#endif  // QEFF_QUBIT_STATE_HPP
