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

#ifndef QEFF_EFFICIENCY_HPP
#define QEFF_EFFICIENCY_HPP

#include <optional>
#include <string_view>

#include "qeff/qnd.hpp"

namespace qeff {

enum class UndefinedReason {
    /// Needs the post-measurement state of an outcome that destroys the qubit.
    destroyed_branch,
    /// 0/0: no information and no decoherence on the relevant channel.
    zero_over_zero,
    /// F0 = F1 = 1 (or 0): the informational bound is infinite.
    projective_limit,
};

std::string_view to_string(UndefinedReason reason);

/// A real value or an in-band "undefined" with a reason.
class Metric {
   public:
    static Metric of(double value) {
        return Metric(value, UndefinedReason::zero_over_zero);
    }
    static Metric undefined(UndefinedReason reason) {
        return Metric(std::nullopt, reason);
    }

    bool defined() const noexcept {
        return value_.has_value();
    }
    double value() const {
        return value_.value();
    }
    /// NaN when undefined.
    double value_or_nan() const noexcept;
    /// Only meaningful when !defined().
    UndefinedReason reason() const noexcept {
        return reason_;
    }

   private:
    Metric(std::optional<double> v, UndefinedReason r) : value_(v), reason_(r) {
    }
    std::optional<double> value_;
    UndefinedReason reason_;
};

/// All efficiency figures of one detector.
struct EfficiencyReport {
    double d_min;
    Metric d_av;
    Metric phi_av;
    Metric eta;              ///< D_min / D_av
    Metric eta_tilde;        ///< phases dropped from D_av
    Metric eta_tilde_tilde;  ///< decoherences dropped, phase difference phi1 - phi0 kept
    Metric eta0;             ///< D_min / (D0 + D_min)
    Metric eta1;
    Metric eta0_tilde;  ///< L0 / (D0 + L0), L0 = -ln sqrt(F0 (1 - F1))
    Metric eta1_tilde;  ///< L1 / (D1 + L1), L1 = -ln sqrt((1 - F0) F1)
};

EfficiencyReport efficiency_report(const QndDetector &det);

}  // namespace qeff

#endif  // QEFF_EFFICIENCY_HPP
