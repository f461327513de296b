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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qeff/error.hpp"
#include "qeff/json_io.hpp"
#include "qeff/maximize.hpp"
#include "qeff/parallel.hpp"
#include "qeff/sweep.hpp"
#include "qeff/verify.hpp"

namespace fs = std::filesystem;
using qeff::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

json read_json(const std::string &path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw qeff::Error(qeff::ErrorKind::invalid_config, "cannot open " + path);
        }
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error &e) {
        throw qeff::Error(qeff::ErrorKind::invalid_config, path + ": " + e.what());
    }
}

void write_file(const fs::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw qeff::Error(qeff::ErrorKind::invalid_config, "cannot write " + path.string());
    }
    out << text;
}

void emit(const json &j, const std::string &out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

struct Options {
    std::string config;
    std::string preset;
    std::string out;
    std::uint64_t seed = qeff::VerifyOptions{}.seed;
    std::int64_t samples = qeff::VerifyOptions{}.samples;
    double tol = 0.0;
    int threads = 0;
    bool plot = false;
    std::string suite = "all";
    std::string metric;
};

int cmd_report(const Options &o) {
    if (o.config.empty()) {
        throw qeff::Error(qeff::ErrorKind::invalid_config, "report needs --config");
    }
    emit(qeff::report_json(qeff::model_config_from_json(read_json(o.config))), o.out);
    return kExitOk;
}

int cmd_sweep(const Options &o) {
    std::vector<qeff::SweepSpec> specs;
    if (!o.preset.empty() && !o.config.empty()) {
        throw qeff::Error(qeff::ErrorKind::invalid_config, "give either --preset or --config");
    }
    if (!o.preset.empty()) {
        specs = qeff::preset(o.preset);
    } else if (!o.config.empty()) {
        specs.push_back(qeff::sweep_spec_from_json(read_json(o.config)));
    } else {
        throw qeff::Error(qeff::ErrorKind::invalid_config, "sweep needs --preset or --config");
    }
    const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
    for (const auto &spec : specs) {
        auto table = qeff::run_sweep(spec);
        const std::string csv_name = spec.label + ".csv";
        write_file(dir / csv_name, qeff::to_csv(table));
        json config = qeff::to_json(spec);
        if (!o.preset.empty()) {
            config["preset"] = o.preset;
        }
        write_file(dir / (spec.label + ".manifest.json"),
                   qeff::run_manifest("sweep", config, {}, json::object(), csv_name, table.axis.size()).dump(2) +
                       "\n");
        if (o.plot) {
            write_file(dir / (spec.label + ".gp"),
                       qeff::gnuplot_script(table, csv_name, spec.axis.spacing == qeff::Spacing::log));
        }
        std::cout << (dir / csv_name).string() << " (" << table.axis.size() << " rows)\n";
    }
    return kExitOk;
}

int cmd_verify(const Options &o) {
    qeff::VerifyOptions vo;
    vo.seed = o.seed;
    vo.samples = o.samples;
    vo.tol = o.tol;
    std::vector<std::string> suites;
    if (o.suite == "all") {
        suites = qeff::verify_suites();
    } else {
        suites.push_back(o.suite);
    }
    json reports = json::array();
    bool ok = true;
    for (const auto &s : suites) {
        auto rep = qeff::run_verify(s, vo);
        ok = ok && rep.passed();
        reports.push_back(qeff::to_json(rep));
        for (const auto *f : rep.failures()) {
            std::cerr << "FAIL " << rep.suite << ": " << f->name << " [" << f->config << "] residual " << f->residual
                      << " >= " << f->tolerance << "\n";
        }
    }
    emit({{"passed", ok}, {"seed", o.seed}, {"samples", o.samples}, {"suites", reports}}, o.out);
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_maximize(const Options &o) {
    qeff::MaximizeSpec spec;
    if (!o.config.empty()) {
        spec = qeff::maximize_spec_from_json(read_json(o.config));
    }
    if (!o.metric.empty()) {
        spec.metric = o.metric;
    }
    auto start = std::chrono::steady_clock::now();
    auto result = qeff::maximize_linear(spec);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit({{"spec", qeff::to_json(spec)}, {"result", qeff::to_json(result)}, {"seconds", seconds}}, o.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum efficiency of binary-outcome qubit detectors"};
    app.set_version_flag("--version", QEFF_VERSION);
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads (default: QEFF_NUM_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    auto *report = app.add_subcommand("report", "Efficiency report for a model or raw detector");
    report->add_option("--config", o.config, "JSON config file ('-' for stdin)")->required();
    report->add_option("--out", o.out, "Write the JSON here instead of stdout");

    auto *sweep = app.add_subcommand("sweep", "Parameter sweep to CSV plus manifest");
    sweep->add_option("--preset", o.preset, "fig1 or fig4");
    sweep->add_option("--config", o.config, "Sweep spec JSON");
    sweep->add_option("--out", o.out, "Output directory");
    sweep->add_flag("--plot", o.plot, "Also write a gnuplot script per CSV");

    auto *verify = app.add_subcommand("verify", "Run oracle cross-check suites");
    verify->add_option("suite", o.suite, "linear-quad, linear-mc, tunneling-ode, povm-roundtrip, properties or all");
    verify->add_option("--seed", o.seed, "Monte Carlo / random-sweep seed");
    verify->add_option("--samples", o.samples, "Monte Carlo samples")->check(CLI::Range(1000LL, 1LL << 40));
    verify->add_option("--tol", o.tol, "Override the suite's main tolerance");
    verify->add_option("--out", o.out, "Write the JSON summary here instead of stdout");

    auto *maximize = app.add_subcommand("maximize", "Maximize a linear-detector efficiency over (s, r_th)");
    maximize->add_option("--config", o.config, "Search-box JSON");
    maximize->add_option("--metric", o.metric, "eta0, eta1 or eta");
    maximize->add_option("--out", o.out, "Write the JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (o.threads > 0) {
        qeff::set_num_threads(o.threads);
    }

    try {
        if (report->parsed()) return cmd_report(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (verify->parsed()) return cmd_verify(o);
        if (maximize->parsed()) return cmd_maximize(o);
    } catch (const qeff::Error &e) {
        std::cerr << "qeff: " << e.what() << "\n";
        switch (e.kind()) {
            case qeff::ErrorKind::accuracy:
            case qeff::ErrorKind::stepper_accuracy:
            case qeff::ErrorKind::discretization:
                return kExitVerifyFailed;
            default:
                return kExitUsage;
        }
    } catch (const std::exception &e) {
        std::cerr << "qeff: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
