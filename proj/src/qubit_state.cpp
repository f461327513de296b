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

#include "qeff/qubit_state.hpp"

#include <cmath>
#include <sstream>

#include "qeff/error.hpp"

namespace qeff {

PureState::PureState(complex amp0, complex amp1) : amp0_(amp0), amp1_(amp1) {
    double norm = std::norm(amp0) + std::norm(amp1);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kStateTolerance) {
        std::ostringstream msg;
        msg << "|amp0|^2 + |amp1|^2 = " << norm << ", expected 1";
        throw Error(ErrorKind::normalization, msg.str());
    }
}

PureState PureState::plus() {
    double h = 1.0 / std::sqrt(2.0);
    return PureState(h, h);
}

QubitState::QubitState(double rho00, complex rho01) : rho00_(rho00), rho01_(rho01) {
    if (!std::isfinite(rho00) || !std::isfinite(rho01.real()) || !std::isfinite(rho01.imag())) {
        throw Error(ErrorKind::invalid_state, "non-finite density matrix element");
    }
    if (rho00 < -kStateTolerance || rho00 > 1.0 + kStateTolerance) {
        std::ostringstream msg;
        msg << "rho00 = " << rho00 << " outside [0, 1]";
        throw Error(ErrorKind::invalid_state, msg.str());
    }
    if (std::norm(rho01) > rho00 * (1.0 - rho00) + kStateTolerance) {
        std::ostringstream msg;
        msg << "positivity violated: |rho01|^2 = " << std::norm(rho01)
            << " > rho00*rho11 = " << rho00 * (1.0 - rho00);
        throw Error(ErrorKind::invalid_state, msg.str());
    }
}

double QubitState::purity_defect() const noexcept {
    return rho00_ * (1.0 - rho00_) - std::norm(rho01_);
}

QubitState QubitState::from_pure(const PureState &state) {
    return QubitState(std::norm(state.amp0()), state.amp0() * std::conj(state.amp1()));
}

QubitState QubitState::ground() {
    return QubitState(1.0, 0.0);
}

QubitState QubitState::excited() {
    return QubitState(0.0, 0.0);
}

QubitState QubitState::maximally_mixed() {
    return QubitState(0.5, 0.0);
}

}  // namespace qeff
