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

#ifndef QEFF_SAMPLING_HPP
#define QEFF_SAMPLING_HPP

#include "qeff/rng.hpp"
#include "qeff/superoperator.hpp"

namespace qeff {

/// Random detector for property sweeps. Fidelities and phases are uniform;
/// about one draw in ten hits an edge value (F = 0 or 1, D = 0, or D = +inf
/// when `allow_infinite_d`).
QndDetector random_detector(CounterRng &rng, bool allow_infinite_d = true);

/// Random valid density matrix; one draw in ten is pure.
QubitState random_state(CounterRng &rng);

/// Random complete two-outcome channel with two Kraus operators per outcome,
/// normalized so that sum K^dagger K = I.
BinarySuperoperator random_channel(CounterRng &rng);

}  // namespace qeff

#endif  // QEFF_SAMPLING_HPP
