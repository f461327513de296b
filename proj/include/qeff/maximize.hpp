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

#ifndef QEFF_MAXIMIZE_HPP
#define QEFF_MAXIMIZE_HPP

#include <string>

#include "qeff/parallel.hpp"

namespace qeff {

/// Search box and metric for maximizing a linear-detector efficiency over
/// (s, r_th). A range with min == max pins that parameter.
struct MaximizeSpec {
    std::string metric = "eta0";
    double s_min = 0.01;
    double s_max = 3.0;
    double r_min = -4.0;
    double r_max = 4.0;
    double gamma_t = 0.0;
    double kappa = 0.0;
    int grid_s = 61;
    int grid_r = 161;
    /// Zoom passes after the coarse grid; each shrinks the box around the
    /// incumbent to two coarse cells and rescans it with 21 x 21 points.
    int refinements = 10;
};

struct MaximizeResult {
    double s;
    double r_th;
    double value;
    /// Grid spacing of the final pass.
    double s_resolution;
    double r_resolution;
    long evaluations;
};

/// Grid scan plus zoom refinement. Undefined metric values are skipped.
/// Throws Error(invalid_config) for an empty box or unknown metric.
MaximizeResult maximize_linear(const MaximizeSpec &spec, Execution exec = Execution::parallel);

}  // namespace qeff

#endif  // QEFF_MAXIMIZE_HPP
