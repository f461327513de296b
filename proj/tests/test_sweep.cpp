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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qeff/error.hpp"
#include "qeff/maximize.hpp"
#include "qeff/models.hpp"
#include "qeff/sweep.hpp"

using namespace qeff;

TEST(Axis, LinearEndpointsAreExact) {
    Axis a{"r_th", -3.0, 3.0, 241, Spacing::linear};
    auto v = a.values();
    ASSERT_EQ(v.size(), 241u);
    EXPECT_EQ(v.front(), -3.0);
    EXPECT_EQ(v.back(), 3.0);
    EXPECT_NEAR(v[120], 0.0, 1e-15);
    EXPECT_NEAR(v[1] - v[0], 0.025, 1e-15);
}

TEST(Axis, LogSpacingIsGeometric) {
    Axis a{"f1", 0.001, 0.999, 241, Spacing::log};
    auto v = a.values();
    ASSERT_EQ(v.size(), 241u);
    EXPECT_EQ(v.front(), 0.001);
    EXPECT_EQ(v.back(), 0.999);
    const double q = v[1] / v[0];
    for (std::size_t i = 2; i < v.size(); ++i) {
        EXPECT_NEAR(v[i] / v[i - 1], q, 1e-12);
    }
}

TEST(Axis, SinglePoint) {
    Axis a{"s", 0.5, 0.5, 1, Spacing::linear};
    auto v = a.values();
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0], 0.5);
}

TEST(Preset, Fig1) {
    auto specs = preset("fig1");
    ASSERT_EQ(specs.size(), 3u);
    EXPECT_EQ(specs[0].label, "fig1_s0.10000000000000001");
    for (const auto &spec : specs) {
        EXPECT_EQ(spec.model, ModelKind::linear);
        EXPECT_EQ(spec.axis.name, "r_th");
        EXPECT_EQ(spec.axis.points, 241);
        EXPECT_NO_THROW(spec.validate());
    }
}

TEST(Preset, Fig4) {
    auto specs = preset("fig4");
    ASSERT_EQ(specs.size(), 3u);
    EXPECT_EQ(specs[1].label, "fig4_ratio3");
    for (const auto &spec : specs) {
        EXPECT_EQ(spec.model, ModelKind::tunneling);
        EXPECT_EQ(spec.axis.spacing, Spacing::log);
        EXPECT_NO_THROW(spec.validate());
    }
    EXPECT_THROW(preset("fig9"), Error);
}

TEST(FormatNumber, Tokens) {
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
    EXPECT_EQ(format_number(std::nan("")), "nan");
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(3.0), "3");
    EXPECT_EQ(std::stod(format_number(std::numbers::pi)), std::numbers::pi);
}

TEST(Sweep, SinglePointMatchesReport) {
    SweepSpec spec;
    spec.model = ModelKind::detector;
    spec.fixed = {{"f0", 0.9}, {"f1", 0.8}, {"phi1", 0.4}, {"d0", 0.1}, {"d1", 0.2}};
    spec.axis = {"phi0", 0.3, 0.3, 1, Spacing::linear};
    spec.outputs = metric_names();
    auto table = run_sweep(spec, Execution::serial);
    ASSERT_EQ(table.rows.size(), 1u);

    QndDetector det(0.9, 0.8, 0.3, 0.4, 0.1, 0.2);
    auto report = efficiency_report(det);
    for (std::size_t j = 0; j < spec.outputs.size(); ++j) {
        EXPECT_EQ(table.rows[0][j], metric_value(det, report, spec.outputs[j])) << spec.outputs[j];
    }
    EXPECT_EQ(table.rows[0][0], 0.9);
}

TEST(Sweep, CsvCarriesInfAndNan) {
    SweepSpec spec;
    spec.model = ModelKind::detector;
    spec.fixed = {{"f0", 1.0}, {"f1", 0.5}, {"destroys_on_1", 1.0}};
    spec.axis = {"d0", 0.0, 1.0, 2, Spacing::linear};
    spec.outputs = {"d1", "eta", "eta0"};
    auto csv = to_csv(run_sweep(spec, Execution::serial));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "d0,d1,eta,eta0");
    EXPECT_NE(csv.find("0,inf,nan,"), std::string::npos) << csv;
}

TEST(Sweep, ValidateRejectsBadSpecs) {
    SweepSpec good;
    good.model = ModelKind::linear;
    good.fixed = {{"s", 1.0}};
    good.axis = {"r_th", -1.0, 1.0, 5, Spacing::linear};
    good.outputs = {"eta"};
    EXPECT_NO_THROW(good.validate());

    auto expect_invalid = [](const SweepSpec &spec) {
        try {
            spec.validate();
            ADD_FAILURE() << "expected invalid-config";
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::invalid_config);
        }
    };
    auto s = good;
    s.fixed["r_th"] = 0.0;
    expect_invalid(s);
    s = good;
    s.axis.points = 1;
    expect_invalid(s);
    s = good;
    s.axis.spacing = Spacing::log;
    expect_invalid(s);
    s = good;
    s.outputs = {"eta2"};
    expect_invalid(s);
    s = good;
    s.axis.name = "f1";
    expect_invalid(s);
    s = good;
    s.outputs.clear();
    expect_invalid(s);
}

TEST(Sweep, UnknownParameterOrModel) {
    EXPECT_THROW(model_detector(ModelKind::linear, {{"x", 1.0}}), Error);
    EXPECT_THROW(parse_model_kind("spin"), Error);
    EXPECT_EQ(parse_model_kind("phase_qubit"), ModelKind::phase_qubit);
}

TEST(Sweep, TunnelingRatioParameters) {
    auto det = model_detector(ModelKind::tunneling, {{"f1", 0.5}, {"ratio", 3.0}});
    auto ref = tunneling_detector({std::numbers::ln2 / 3.0, std::numbers::ln2, 0.0});
    EXPECT_NEAR(det.f1(), 0.5, 1e-15);
    EXPECT_NEAR(det.f0(), ref.f0(), 1e-15);
    EXPECT_NEAR(det.d1(), ref.d1(), 1e-15);
}

TEST(Sweep, GnuplotScriptReferencesEveryColumn) {
    auto spec = preset("fig4")[0];
    auto table = run_sweep(spec, Execution::serial);
    auto gp = gnuplot_script(table, "fig4_ratio1.5.csv", true);
    EXPECT_NE(gp.find("set logscale x"), std::string::npos);
    EXPECT_NE(gp.find("fig4_ratio1.5.csv"), std::string::npos);
    for (std::size_t j = 0; j < table.metrics.size(); ++j) {
        EXPECT_NE(gp.find("using 1:" + std::to_string(j + 2)), std::string::npos) << gp;
    }
}

TEST(Maximize, DefaultBoxFindsTheOutcomeZeroPeak) {
    auto r = maximize_linear({}, Execution::serial);
    EXPECT_NEAR(r.value, 0.6916, 5e-4);
    EXPECT_NEAR(r.s, 0.01, 1e-6);
    EXPECT_LT(r.r_th, -0.5);
    EXPECT_GT(r.r_th, -0.62);
    EXPECT_LT(r.value, 0.692);
}

TEST(Maximize, PinnedThresholdGivesTwoOverPi) {
    MaximizeSpec spec;
    spec.metric = "eta";
    spec.r_min = spec.r_max = 0.0;
    auto r = maximize_linear(spec, Execution::serial);
    EXPECT_EQ(r.r_th, 0.0);
    EXPECT_NEAR(r.value, 2.0 / std::numbers::pi, 1e-4);
}

TEST(Maximize, RejectsBadSpecs) {
    MaximizeSpec spec;
    spec.metric = "nope";
    EXPECT_THROW(maximize_linear(spec), Error);
    spec = {};
    spec.s_min = 2.0;
    spec.s_max = 1.0;
    EXPECT_THROW(maximize_linear(spec), Error);
}
