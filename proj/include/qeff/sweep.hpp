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

#ifndef QEFF_SWEEP_HPP
#define QEFF_SWEEP_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qeff/efficiency.hpp"
#include "qeff/parallel.hpp"

namespace qeff {

enum class ModelKind { linear, tunneling, phase_qubit, indirect, detector };

std::string_view to_string(ModelKind kind);
/// Throws Error(invalid_config) for unknown names.
ModelKind parse_model_kind(std::string_view name);

using ParameterMap = std::map<std::string, double, std::less<>>;

/// Builds the detector of a model from named parameters; missing parameters
/// take their defaults (zero, except F = 1 for the indirect model).
///   linear:      s, r_th, gamma_t, kappa
///   tunneling:   g0t, g1t, phi1; or f1 (sets g1t) and ratio = g1t / g0t
///   phase_qubit: p, p0, phi0
///   indirect:    f0, f1, phi0, phi1 (real amplitudes with the given phases)
///   detector:    f0, f1, phi0, phi1, d0, d1, destroys_on_1
/// Throws Error(invalid_config) for parameter names the model does not know.
QndDetector model_detector(ModelKind model, const ParameterMap &params);

/// Names accepted by metric_value, in canonical order.
const std::vector<std::string> &metric_names();

/// Value of a named metric; NaN when undefined. Throws Error(invalid_config)
/// for unknown names.
double metric_value(const QndDetector &det, const EfficiencyReport &report, std::string_view name);

enum class Spacing { linear, log };

struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    Spacing spacing = Spacing::linear;

    /// Grid values; the endpoints are exact.
    std::vector<double> values() const;
};

struct SweepSpec {
    std::string label = "sweep";
    ModelKind model = ModelKind::linear;
    ParameterMap fixed;
    Axis axis;
    std::vector<std::string> outputs;

    /// Throws Error(invalid_config) if the axis is fixed, points < 2 (unless
    /// min == max), log spacing with min <= 0, or an output is unknown.
    void validate() const;
};

struct SweepTable {
    std::string axis_name;
    std::vector<std::string> metrics;
    std::vector<double> axis;
    /// rows[i][j] is metric j at axis[i].
    std::vector<std::vector<double>> rows;
};

SweepTable run_sweep(const SweepSpec &spec, Execution exec = Execution::parallel);

/// Header row then one row per grid point; 17 significant digits, with
/// "inf", "-inf" and "nan" tokens.
std::string to_csv(const SweepTable &table);

/// Plain gnuplot script plotting every metric column of `csv_name`.
std::string gnuplot_script(const SweepTable &table, const std::string &csv_name, bool log_x);

/// Named presets: "fig1" (linear detector, three strengths) and "fig4"
/// (tunneling detector, three rate ratios).
std::vector<SweepSpec> preset(std::string_view name);

std::string format_number(double x);

}  // namespace qeff

#endif  // QEFF_SWEEP_HPP
