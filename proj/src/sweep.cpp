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

#include "qeff/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>

#include "qeff/error.hpp"
#include "qeff/models.hpp"

namespace qeff {

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::linear:
            return "linear";
        case ModelKind::tunneling:
            return "tunneling";
        case ModelKind::phase_qubit:
            return "phase_qubit";
        case ModelKind::indirect:
            return "indirect";
        case ModelKind::detector:
            return "detector";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
    for (ModelKind k : {ModelKind::linear, ModelKind::tunneling, ModelKind::phase_qubit, ModelKind::indirect,
                        ModelKind::detector}) {
        if (name == to_string(k)) {
            return k;
        }
    }
    throw Error(ErrorKind::invalid_config, "unknown model '" + std::string(name) + "'");
}

namespace {

const std::map<ModelKind, std::set<std::string, std::less<>>> &known_parameters() {
    static const std::map<ModelKind, std::set<std::string, std::less<>>> known = {
        {ModelKind::linear, {"s", "r_th", "gamma_t", "kappa"}},
        {ModelKind::tunneling, {"g0t", "g1t", "phi1", "f1", "ratio"}},
        {ModelKind::phase_qubit, {"p", "p0", "phi0"}},
        {ModelKind::indirect, {"f0", "f1", "phi0", "phi1"}},
        {ModelKind::detector, {"f0", "f1", "phi0", "phi1", "d0", "d1", "destroys_on_1"}},
    };
    return known;
}

double get(const ParameterMap &params, std::string_view name, double fallback) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

bool has(const ParameterMap &params, std::string_view name) {
    return params.find(name) != params.end();
}

}  // namespace

QndDetector model_detector(ModelKind model, const ParameterMap &params) {
    const auto &known = known_parameters().at(model);
    for (const auto &[name, value] : params) {
        if (!known.contains(name)) {
            throw Error(ErrorKind::invalid_config,
                        "model " + std::string(to_string(model)) + " has no parameter '" + name + "'");
        }
    }
    switch (model) {
        case ModelKind::linear:
            return linear_detector(
                {get(params, "s", 0.0), get(params, "r_th", 0.0), get(params, "gamma_t", 0.0), get(params, "kappa", 0.0)});
        case ModelKind::tunneling: {
            if (has(params, "f1") && has(params, "g1t")) {
                throw Error(ErrorKind::invalid_config, "tunneling: give either f1 or g1t");
            }
            if (has(params, "ratio") && has(params, "g0t")) {
                throw Error(ErrorKind::invalid_config, "tunneling: give either ratio or g0t");
            }
            double g1t = has(params, "f1") ? -std::log1p(-get(params, "f1", 0.0)) : get(params, "g1t", 0.0);
            double g0t = has(params, "ratio") ? g1t / get(params, "ratio", 1.0) : get(params, "g0t", 0.0);
            return tunneling_detector({g0t, g1t, get(params, "phi1", 0.0)});
        }
        case ModelKind::phase_qubit:
            return phase_qubit_detector({get(params, "p", 0.0), get(params, "p0", 0.0), get(params, "phi0", 0.0)});
        case ModelKind::indirect: {
            double f0 = get(params, "f0", 1.0);
            double f1 = get(params, "f1", 1.0);
            if (!(f0 >= 0.0 && f0 <= 1.0 && f1 >= 0.0 && f1 <= 1.0)) {
                throw Error(ErrorKind::invalid_config, "indirect: f0 and f1 must lie in [0, 1]");
            }
            IndirectProjectiveConfig cfg{std::sqrt(f0), std::polar(std::sqrt(1.0 - f1), -get(params, "phi0", 0.0)),
                                         std::polar(std::sqrt(1.0 - f0), get(params, "phi1", 0.0)), std::sqrt(f1)};
            return indirect_projective_detector(cfg);
        }
        case ModelKind::detector: {
            bool destroys = get(params, "destroys_on_1", 0.0) != 0.0;
            return QndDetector(get(params, "f0", 1.0), get(params, "f1", 1.0), get(params, "phi0", 0.0),
                               get(params, "phi1", 0.0), get(params, "d0", 0.0),
                               destroys ? kInfinity : get(params, "d1", 0.0), destroys);
        }
    }
    throw Error(ErrorKind::invalid_config, "unknown model");
}

const std::vector<std::string> &metric_names() {
    static const std::vector<std::string> names = {
        "f0",   "f1",   "one_minus_f0", "one_minus_f1", "phi0",      "phi1",            "d0",
        "d1",   "d_min", "d_av",        "phi_av",       "eta",       "eta_tilde",       "eta_tilde_tilde",
        "eta0", "eta1", "eta0_tilde",   "eta1_tilde"};
    return names;
}

double metric_value(const QndDetector &det, const EfficiencyReport &r, std::string_view name) {
    if (name == "f0") return det.f0();
    if (name == "f1") return det.f1();
    if (name == "one_minus_f0") return 1.0 - det.f0();
    if (name == "one_minus_f1") return 1.0 - det.f1();
    if (name == "phi0") return det.phi0();
    if (name == "phi1") return det.phi1();
    if (name == "d0") return det.d0();
    if (name == "d1") return det.d1();
    if (name == "d_min") return r.d_min;
    if (name == "d_av") return r.d_av.value_or_nan();
    if (name == "phi_av") return r.phi_av.value_or_nan();
    if (name == "eta") return r.eta.value_or_nan();
    if (name == "eta_tilde") return r.eta_tilde.value_or_nan();
    if (name == "eta_tilde_tilde") return r.eta_tilde_tilde.value_or_nan();
    if (name == "eta0") return r.eta0.value_or_nan();
    if (name == "eta1") return r.eta1.value_or_nan();
    if (name == "eta0_tilde") return r.eta0_tilde.value_or_nan();
    if (name == "eta1_tilde") return r.eta1_tilde.value_or_nan();
    throw Error(ErrorKind::invalid_config, "unknown metric '" + std::string(name) + "'");
}

std::vector<double> Axis::values() const {
    if (points == 1 || min == max) {
        return {min};
    }
    std::vector<double> v(static_cast<std::size_t>(points));
    const double span = spacing == Spacing::log ? std::log(max) - std::log(min) : max - min;
    for (int i = 0; i < points; ++i) {
        double frac = static_cast<double>(i) / (points - 1);
        v[i] = spacing == Spacing::log ? std::exp(std::log(min) + frac * span) : min + frac * span;
    }
    v.front() = min;
    v.back() = max;
    return v;
}

void SweepSpec::validate() const {
    auto fail = [](const std::string &what) { throw Error(ErrorKind::invalid_config, what); };
    if (axis.name.empty()) {
        fail("sweep axis needs a parameter name");
    }
    if (fixed.find(axis.name) != fixed.end()) {
        fail("axis parameter '" + axis.name + "' is also fixed");
    }
    if (!known_parameters().at(model).contains(axis.name)) {
        fail("model " + std::string(to_string(model)) + " has no parameter '" + axis.name + "'");
    }
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || axis.max < axis.min) {
        fail("axis needs finite min <= max");
    }
    if (axis.points < 2 && !(axis.points == 1 && axis.min == axis.max)) {
        fail("axis needs at least 2 points");
    }
    if (axis.spacing == Spacing::log && !(axis.min > 0.0)) {
        fail("log spacing needs min > 0");
    }
    if (outputs.empty()) {
        fail("sweep needs at least one output metric");
    }
    const auto &names = metric_names();
    for (const auto &m : outputs) {
        if (std::find(names.begin(), names.end(), m) == names.end()) {
            fail("unknown metric '" + m + "'");
        }
    }
}

SweepTable run_sweep(const SweepSpec &spec, Execution exec) {
    spec.validate();
    SweepTable table{spec.axis.name, spec.outputs, spec.axis.values(), {}};
    const auto n = static_cast<long>(table.axis.size());
    table.rows.assign(table.axis.size(), std::vector<double>(spec.outputs.size()));
    std::vector<std::exception_ptr> errors(table.axis.size());

    auto evaluate = [&](long i) {
        try {
            ParameterMap params = spec.fixed;
            params[spec.axis.name] = table.axis[i];
            QndDetector det = model_detector(spec.model, params);
            EfficiencyReport report = efficiency_report(det);
            for (std::size_t j = 0; j < spec.outputs.size(); ++j) {
                table.rows[i][j] = metric_value(det, report, spec.outputs[j]);
            }
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) num_threads(num_threads())
        for (long i = 0; i < n; ++i) {
            evaluate(i);
        }
    } else {
        for (long i = 0; i < n; ++i) {
            evaluate(i);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return table;
}

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const SweepTable &table) {
    std::ostringstream out;
    out << table.axis_name;
    for (const auto &m : table.metrics) {
        out << ',' << m;
    }
    out << '\n';
    for (std::size_t i = 0; i < table.axis.size(); ++i) {
        out << format_number(table.axis[i]);
        for (double v : table.rows[i]) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
    return out.str();
}

std::string gnuplot_script(const SweepTable &table, const std::string &csv_name, bool log_x) {
    std::ostringstream out;
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set xlabel '" << table.axis_name << "'\n";
    if (log_x) {
        out << "set logscale x\n";
    }
    out << "plot ";
    for (std::size_t j = 0; j < table.metrics.size(); ++j) {
        out << (j ? ", \\\n     " : "") << "'" << csv_name << "' using 1:" << j + 2 << " with lines";
    }
    out << '\n';
    return out.str();
}

std::vector<SweepSpec> preset(std::string_view name) {
    std::vector<SweepSpec> out;
    if (name == "fig1") {
        for (double s : {0.1, 1.0, 2.0}) {
            SweepSpec spec;
            spec.label = "fig1_s" + format_number(s);
            spec.model = ModelKind::linear;
            spec.fixed = {{"s", s}, {"gamma_t", 0.0}, {"kappa", 0.0}};
            spec.axis = {"r_th", -3.0, 3.0, 241, Spacing::linear};
            spec.outputs = {"eta0", "eta"};
            out.push_back(spec);
        }
    } else if (name == "fig4") {
        for (double ratio : {1.5, 3.0, 100.0}) {
            SweepSpec spec;
            spec.label = "fig4_ratio" + format_number(ratio);
            spec.model = ModelKind::tunneling;
            spec.fixed = {{"ratio", ratio}, {"phi1", 0.0}};
            spec.axis = {"f1", 0.001, 0.999, 241, Spacing::log};
            spec.outputs = {"d1", "d_min", "eta1", "eta", "one_minus_f0", "eta0"};
            out.push_back(spec);
        }
    } else {
        throw Error(ErrorKind::invalid_config, "unknown preset '" + std::string(name) + "' (expected fig1 or fig4)");
    }
    return out;
}

}  // namespace qeff
