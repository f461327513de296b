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

#ifndef QEFF_VERIFY_HPP
#define QEFF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qeff/json_io.hpp"
#include "qeff/parallel.hpp"

namespace qeff {

struct VerifyCheck {
    std::string name;
    std::string config;
    double residual;
    double tolerance;
    bool passed;
    /// Reported for context only; does not affect the suite verdict.
    bool informational = false;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCheck> checks;
    double seconds = 0.0;

    bool passed() const;
    std::vector<const VerifyCheck *> failures() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20071112;
    std::int64_t samples = 1000000;
    /// Overrides the suite's main tolerance when > 0.
    double tol = 0.0;
    int detectors = 10000;
    int states_per_detector = 100;
    Execution exec = Execution::parallel;
};

/// "linear-quad", "linear-mc", "tunneling-ode", "povm-roundtrip", "properties".
const std::vector<std::string> &verify_suites();

/// Throws Error(invalid_config) for an unknown suite.
VerifyReport run_verify(std::string_view suite, const VerifyOptions &options = {});

json to_json(const VerifyReport &report);

/// Violation counts of the QND invariants over random detectors and states.
struct PropertyTally {
    std::int64_t pairs = 0;
    std::int64_t detectors = 0;
    std::int64_t probability_sum = 0;
    std::int64_t positivity = 0;
    std::int64_t average_mixture = 0;
    std::int64_t d_av_below_d_min = 0;
    std::int64_t metric_range = 0;
    std::int64_t eta_tilde_tilde_range = 0;
    std::int64_t eta_tilde_between = 0;
    std::int64_t tilde_dominates = 0;
    double worst_average_residual = 0.0;

    PropertyTally &operator+=(const PropertyTally &o);
    std::int64_t total() const;
};

PropertyTally property_sweep(int detectors, int states_per_detector, std::uint64_t seed,
                             Execution exec = Execution::parallel);

}  // namespace qeff

#endif  // QEFF_VERIFY_HPP
