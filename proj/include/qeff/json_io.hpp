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

#ifndef QEFF_JSON_IO_HPP
#define QEFF_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qeff/efficiency.hpp"
#include "qeff/maximize.hpp"
#include "qeff/models.hpp"
#include "qeff/superoperator.hpp"
#include "qeff/sweep.hpp"

namespace qeff {

using json = nlohmann::json;

/// Finite values as numbers, infinities as "inf"/"-inf", NaN as null.
json number_to_json(double x);
/// Accepts numbers and the strings "inf", "+inf", "-inf".
double number_from_json(const json &j, const std::string &what);

json to_json(const QubitState &state);
QubitState state_from_json(const json &j);

json to_json(const QndDetector &det);
QndDetector detector_from_json(const json &j);

/// Undefined metrics are null with a sibling "<name>_undefined_reason".
json to_json(const EfficiencyReport &report);

json to_json(const BinarySuperoperator &sup);
BinarySuperoperator superoperator_from_json(const json &j);

/// A parsed {"model": ...} object, or a raw detector when "model" is absent
/// or equal to "detector".
struct ModelConfig {
    ModelKind kind = ModelKind::detector;
    LinearDetectorConfig linear{};
    TunnelingConfig tunneling{};
    PhaseQubitConfig phase_qubit{};
    IndirectProjectiveConfig indirect{};
    std::optional<QndDetector> detector;
};

/// Throws Error(invalid_config) on unknown models, unknown keys or bad values.
ModelConfig model_config_from_json(const json &j);
json to_json(const ModelConfig &cfg);

/// Full report for a model: the detector, its EfficiencyReport and the
/// model's ensemble quantities. A linear detector with kappa != 0 takes its
/// outcome-resolved parameters from the quadrature oracle.
json report_json(const ModelConfig &cfg);

SweepSpec sweep_spec_from_json(const json &j);
json to_json(const SweepSpec &spec);

MaximizeSpec maximize_spec_from_json(const json &j);
json to_json(const MaximizeSpec &spec);
json to_json(const MaximizeResult &result);

/// Manifest written next to every CSV.
json run_manifest(const std::string &command, const json &config, const std::vector<std::uint64_t> &seeds,
                  const json &error_bounds, const std::string &csv_file, std::size_t rows);

}  // namespace qeff

#endif  // QEFF_JSON_IO_HPP
