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

#ifndef QEFF_ERROR_HPP
#define QEFF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeff {

enum class ErrorKind {
    normalization,
    invalid_state,
    invalid_detector,
    invalid_config,
    impossible_outcome,
    undefined_average,
    destructive_detector,
    analytic_path_unsupported,
    degenerate_config,
    inconsistent_data,
    invalid_channel,
    accuracy,
    stepper_accuracy,
    discretization,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and machine-readable;
/// the message is for humans.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::normalization:
            return "normalization";
        case ErrorKind::invalid_state:
            return "invalid-state";
        case ErrorKind::invalid_detector:
            return "invalid-detector";
        case ErrorKind::invalid_config:
            return "invalid-config";
        case ErrorKind::impossible_outcome:
            return "impossible-outcome";
        case ErrorKind::undefined_average:
            return "undefined-average";
        case ErrorKind::destructive_detector:
            return "destructive-detector";
        case ErrorKind::analytic_path_unsupported:
            return "analytic-path-unsupported";
        case ErrorKind::degenerate_config:
            return "degenerate-config";
        case ErrorKind::inconsistent_data:
            return "inconsistent-data";
        case ErrorKind::invalid_channel:
            return "invalid-channel";
        case ErrorKind::accuracy:
            return "accuracy";
        case ErrorKind::stepper_accuracy:
            return "stepper-accuracy";
        case ErrorKind::discretization:
            return "discretization";
    }
    return "unknown";
}

}  // namespace qeff

#endif  // QEFF_ERROR_HPP
