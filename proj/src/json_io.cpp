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

#include "qeff/json_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <set>

#include "qeff/error.hpp"
#include "qeff/oracles.hpp"

namespace qeff {

namespace {

[[noreturn]] void bad(const std::string &what) {
    throw Error(ErrorKind::invalid_config, what);
}

void only_keys(const json &j, std::initializer_list<const char *> allowed, const std::string &where) {
    if (!j.is_object()) {
        bad(where + ": expected a JSON object");
    }
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto &item : j.items()) {
        if (!ok.contains(item.key())) {
            bad(where + ": unknown key '" + item.key() + "'");
        }
    }
}

double field(const json &j, const char *key, double fallback) {
    return j.contains(key) ? number_from_json(j.at(key), key) : fallback;
}

double required(const json &j, const char *key, const std::string &where) {
    if (!j.contains(key)) {
        bad(where + ": missing '" + key + "'");
    }
    return number_from_json(j.at(key), key);
}

complex complex_from_json(const json &j, const std::string &what) {
    if (!j.is_array() || j.size() != 2) {
        bad(what + ": expected [re, im]");
    }
    return {number_from_json(j[0], what), number_from_json(j[1], what)};
}

json metric_json(json &out, const char *name, const Metric &m) {
    if (m.defined()) {
        out[name] = number_to_json(m.value());
    } else {
        out[name] = nullptr;
        out[std::string(name) + "_undefined_reason"] = std::string(to_string(m.reason()));
    }
    return out;
}

std::string utc_now() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

json number_to_json(double x) {
    if (std::isnan(x)) {
        return nullptr;
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

double number_from_json(const json &j, const std::string &what) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf" || s == "Infinity") {
            return kInfinity;
        }
        if (s == "-inf") {
            return -kInfinity;
        }
    }
    bad("'" + what + "' must be a number or \"inf\"");
}

json to_json(const QubitState &state) {
    return {{"rho00", state.rho00()}, {"rho01_re", state.rho01().real()}, {"rho01_im", state.rho01().imag()}};
}

QubitState state_from_json(const json &j) {
    only_keys(j, {"rho00", "rho01_re", "rho01_im"}, "state");
    return QubitState(required(j, "rho00", "state"), {field(j, "rho01_re", 0.0), field(j, "rho01_im", 0.0)});
}

json to_json(const QndDetector &det) {
    return {{"f0", det.f0()},
            {"f1", det.f1()},
            {"phi0", det.phi0()},
            {"phi1", det.phi1()},
            {"d0", number_to_json(det.d0())},
            {"d1", number_to_json(det.d1())},
            {"destroys_on_1", det.destroys_on_1()}};
}

QndDetector detector_from_json(const json &j) {
    only_keys(j, {"model", "f0", "f1", "phi0", "phi1", "d0", "d1", "destroys_on_1"}, "detector");
    bool destroys = j.contains("destroys_on_1") && j.at("destroys_on_1").get<bool>();
    double d1 = field(j, "d1", destroys ? kInfinity : 0.0);
    try {
        return QndDetector(required(j, "f0", "detector"), required(j, "f1", "detector"), field(j, "phi0", 0.0),
                           field(j, "phi1", 0.0), field(j, "d0", 0.0), d1, destroys);
    } catch (const Error &e) {
        bad(e.what());
    }
}

json to_json(const EfficiencyReport &r) {
    json out;
    out["d_min"] = number_to_json(r.d_min);
    metric_json(out, "d_av", r.d_av);
    metric_json(out, "phi_av", r.phi_av);
    metric_json(out, "eta", r.eta);
    metric_json(out, "eta_tilde", r.eta_tilde);
    metric_json(out, "eta_tilde_tilde", r.eta_tilde_tilde);
    metric_json(out, "eta0", r.eta0);
    metric_json(out, "eta1", r.eta1);
    metric_json(out, "eta0_tilde", r.eta0_tilde);
    metric_json(out, "eta1_tilde", r.eta1_tilde);
    return out;
}

json to_json(const BinarySuperoperator &sup) {
    json out;
    for (Outcome o : kOutcomes) {
        json entries = json::array();
        const Mat4 &m = sup.map(o);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                entries.push_back({m(r, c).real(), m(r, c).imag()});
            }
        }
        out[o == Outcome::zero ? "map0" : "map1"] = entries;
    }
    return out;
}

BinarySuperoperator superoperator_from_json(const json &j) {
    only_keys(j, {"map0", "map1"}, "superoperator");
    std::array<Mat4, 2> maps;
    for (int o = 0; o < 2; ++o) {
        const char *key = o == 0 ? "map0" : "map1";
        if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 16) {
            bad(std::string("superoperator: '") + key + "' needs 16 [re, im] entries");
        }
        for (int k = 0; k < 16; ++k) {
            maps[o](k / 4, k % 4) = complex_from_json(j.at(key)[k], key);
        }
    }
    return BinarySuperoperator(maps[0], maps[1]);
}

ModelConfig model_config_from_json(const json &j) {
    if (!j.is_object()) {
        bad("config: expected a JSON object");
    }
    ModelConfig cfg;
    cfg.kind = j.contains("model") ? parse_model_kind(j.at("model").get<std::string>()) : ModelKind::detector;
    switch (cfg.kind) {
        case ModelKind::linear:
            only_keys(j, {"model", "s", "r_th", "gamma_t", "kappa"}, "linear");
            cfg.linear = {field(j, "s", 0.0), field(j, "r_th", 0.0), field(j, "gamma_t", 0.0), field(j, "kappa", 0.0)};
            break;
        case ModelKind::tunneling:
            only_keys(j, {"model", "g0t", "g1t", "phi1"}, "tunneling");
            cfg.tunneling = {field(j, "g0t", 0.0), field(j, "g1t", 0.0), field(j, "phi1", 0.0)};
            break;
        case ModelKind::phase_qubit:
            only_keys(j, {"model", "p", "p0", "phi0"}, "phase_qubit");
            cfg.phase_qubit = {field(j, "p", 0.0), field(j, "p0", 0.0), field(j, "phi0", 0.0)};
            break;
        case ModelKind::indirect: {
            only_keys(j, {"model", "c"}, "indirect");
            if (!j.contains("c") || !j.at("c").is_array() || j.at("c").size() != 4) {
                bad("indirect: 'c' needs four [re, im] pairs (c00, c01, c10, c11)");
            }
            const json &c = j.at("c");
            cfg.indirect = {complex_from_json(c[0], "c00"), complex_from_json(c[1], "c01"),
                            complex_from_json(c[2], "c10"), complex_from_json(c[3], "c11")};
            break;
        }
        case ModelKind::detector:
            cfg.detector = detector_from_json(j);
            break;
    }
    return cfg;
}

json to_json(const ModelConfig &cfg) {
    switch (cfg.kind) {
        case ModelKind::linear:
            return {{"model", "linear"},
                    {"s", cfg.linear.s},
                    {"r_th", number_to_json(cfg.linear.r_th)},
                    {"gamma_t", cfg.linear.gamma_t},
                    {"kappa", cfg.linear.kappa}};
        case ModelKind::tunneling:
            return {{"model", "tunneling"},
                    {"g0t", cfg.tunneling.g0t},
                    {"g1t", cfg.tunneling.g1t},
                    {"phi1", cfg.tunneling.phi1}};
        case ModelKind::phase_qubit:
            return {{"model", "phase_qubit"},
                    {"p", cfg.phase_qubit.p},
                    {"p0", cfg.phase_qubit.p0},
                    {"phi0", cfg.phase_qubit.phi0}};
        case ModelKind::indirect: {
            json c = json::array();
            for (complex z : {cfg.indirect.c00, cfg.indirect.c01, cfg.indirect.c10, cfg.indirect.c11}) {
                c.push_back({z.real(), z.imag()});
            }
            return {{"model", "indirect"}, {"c", c}};
        }
        case ModelKind::detector: {
            json d = to_json(*cfg.detector);
            d["model"] = "detector";
            return d;
        }
    }
    return {};
}

json report_json(const ModelConfig &cfg) {
    json out;
    out["config"] = to_json(cfg);
    std::optional<QndDetector> det;
    try {
        switch (cfg.kind) {
            case ModelKind::linear: {
                auto ens = linear_ensemble_eta(cfg.linear);
                json ensemble;
                metric_json(ensemble, "eta", ens.eta);
                metric_json(ensemble, "eta_tilde", ens.eta_tilde);
                out["ensemble"] = ensemble;
                if (cfg.linear.kappa == 0.0) {
                    det = linear_detector(cfg.linear);
                    out["detector_source"] = "analytic";
                } else {
                    auto q = quad_linear_parameters(cfg.linear);
                    det = QndDetector(q.f0, q.f1, q.phi0, q.phi1, std::max(0.0, q.d0), std::max(0.0, q.d1));
                    out["detector_source"] = "quadrature";
                    out["quadrature_error_bound"] = q.error_bound;
                }
                break;
            }
            case ModelKind::tunneling: {
                det = tunneling_detector(cfg.tunneling);
                auto ens = tunneling_ensemble(cfg.tunneling);
                json ensemble{{"d_av", number_to_json(ens.d_av)}, {"phi_av", ens.phi_av}};
                metric_json(ensemble, "eta", ens.eta);
                metric_json(ensemble, "eta_tilde", ens.eta_tilde);
                out["ensemble"] = ensemble;
                break;
            }
            case ModelKind::phase_qubit:
                det = phase_qubit_detector(cfg.phase_qubit);
                break;
            case ModelKind::indirect:
                det = indirect_projective_detector(cfg.indirect);
                break;
            case ModelKind::detector:
                det = cfg.detector;
                break;
        }
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::invalid_detector || e.kind() == ErrorKind::degenerate_config) {
            bad(e.what());
        }
        throw;
    }
    out["detector"] = to_json(*det);
    out["report"] = to_json(efficiency_report(*det));
    return out;
}

SweepSpec sweep_spec_from_json(const json &j) {
    only_keys(j, {"label", "model", "fixed", "axis", "outputs"}, "sweep");
    SweepSpec spec;
    try {
        if (j.contains("label")) {
            spec.label = j.at("label").get<std::string>();
        }
        if (!j.contains("model")) {
            bad("sweep: missing 'model'");
        }
        spec.model = parse_model_kind(j.at("model").get<std::string>());
        if (j.contains("fixed")) {
            for (const auto &item : j.at("fixed").items()) {
                spec.fixed[item.key()] = item.value().is_boolean() ? (item.value().get<bool>() ? 1.0 : 0.0)
                                                                   : number_from_json(item.value(), item.key());
            }
        }
        if (!j.contains("axis")) {
            bad("sweep: missing 'axis'");
        }
        const json &a = j.at("axis");
        only_keys(a, {"name", "min", "max", "points", "spacing"}, "sweep axis");
        spec.axis.name = a.at("name").get<std::string>();
        spec.axis.min = required(a, "min", "sweep axis");
        spec.axis.max = required(a, "max", "sweep axis");
        spec.axis.points = a.at("points").get<int>();
        std::string spacing = a.value("spacing", "linear");
        if (spacing != "linear" && spacing != "log") {
            bad("sweep axis: spacing must be linear or log");
        }
        spec.axis.spacing = spacing == "log" ? Spacing::log : Spacing::linear;
        spec.outputs = j.at("outputs").get<std::vector<std::string>>();
    } catch (const json::exception &e) {
        bad(std::string("sweep: ") + e.what());
    }
    spec.validate();
    return spec;
}

json to_json(const SweepSpec &spec) {
    json fixed = json::object();
    for (const auto &[k, v] : spec.fixed) {
        fixed[k] = number_to_json(v);
    }
    return {{"label", spec.label},
            {"model", std::string(to_string(spec.model))},
            {"fixed", fixed},
            {"axis",
             {{"name", spec.axis.name},
              {"min", spec.axis.min},
              {"max", spec.axis.max},
              {"points", spec.axis.points},
              {"spacing", spec.axis.spacing == Spacing::log ? "log" : "linear"}}},
            {"outputs", spec.outputs}};
}

MaximizeSpec maximize_spec_from_json(const json &j) {
    only_keys(j, {"model", "metric", "s_min", "s_max", "r_min", "r_max", "gamma_t", "kappa", "grid_s", "grid_r",
                  "refinements"},
              "maximize");
    if (j.contains("model") && j.at("model") != "linear") {
        bad("maximize: only the linear model is supported");
    }
    MaximizeSpec spec;
    try {
        spec.metric = j.value("metric", spec.metric);
        spec.s_min = field(j, "s_min", spec.s_min);
        spec.s_max = field(j, "s_max", spec.s_max);
        spec.r_min = field(j, "r_min", spec.r_min);
        spec.r_max = field(j, "r_max", spec.r_max);
        spec.gamma_t = field(j, "gamma_t", spec.gamma_t);
        spec.kappa = field(j, "kappa", spec.kappa);
        spec.grid_s = j.value("grid_s", spec.grid_s);
        spec.grid_r = j.value("grid_r", spec.grid_r);
        spec.refinements = j.value("refinements", spec.refinements);
    } catch (const json::exception &e) {
        bad(std::string("maximize: ") + e.what());
    }
    return spec;
}

json to_json(const MaximizeSpec &spec) {
    return {{"model", "linear"},         {"metric", spec.metric}, {"s_min", spec.s_min},
            {"s_max", spec.s_max},       {"r_min", spec.r_min},   {"r_max", spec.r_max},
            {"gamma_t", spec.gamma_t},   {"kappa", spec.kappa},   {"grid_s", spec.grid_s},
            {"grid_r", spec.grid_r},     {"refinements", spec.refinements}};
}

json to_json(const MaximizeResult &r) {
    return {{"s", r.s},
            {"r_th", r.r_th},
            {"value", r.value},
            {"s_resolution", r.s_resolution},
            {"r_resolution", r.r_resolution},
            {"evaluations", r.evaluations}};
}

json run_manifest(const std::string &command, const json &config, const std::vector<std::uint64_t> &seeds,
                  const json &error_bounds, const std::string &csv_file, std::size_t rows) {
    return {{"tool", "qeff"},
            {"version", QEFF_VERSION},
            {"command", command},
            {"config", config},
            {"seeds", seeds},
            {"created_utc", utc_now()},
            {"oracle_error_bounds", error_bounds},
            {"csv", csv_file},
            {"rows", rows}};
}

}  // namespace qeff
