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

#ifndef QEFF_PARALLEL_HPP
#define QEFF_PARALLEL_HPP

namespace qeff {

/// Selects the OpenMP kernel or its serial reference.
enum class Execution { serial, parallel };

/// Thread count used by parallel kernels. Initialized from the QEFF_NUM_THREADS
/// environment variable when set, otherwise from the OpenMP default.
int num_threads();

/// Overrides the thread count; n <= 0 restores the default.
void set_num_threads(int n);

}  // namespace qeff

#endif  // QEFF_PARALLEL_HPP
