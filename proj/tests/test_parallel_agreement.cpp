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

#include "qeff/maximize.hpp"
#include "qeff/oracles.hpp"
#include "qeff/sweep.hpp"
#include "qeff/verify.hpp"

using namespace qeff;

namespace {

bool same_value(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

class ThreadCount : public ::testing::TestWithParam<int> {
   protected:
    void SetUp() override {
        set_num_threads(GetParam());
    }
    void TearDown() override {
        set_num_threads(0);
    }
};

}  // namespace

TEST_P(ThreadCount, SweepIsBitIdentical) {
    for (const char *name : {"fig1", "fig4"}) {
        for (const auto &spec : preset(name)) {
            auto s = run_sweep(spec, Execution::serial);
            auto p = run_sweep(spec, Execution::parallel);
            ASSERT_EQ(s.rows.size(), p.rows.size());
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                for (std::size_t j = 0; j < s.rows[i].size(); ++j) {
                    ASSERT_TRUE(same_value(s.rows[i][j], p.rows[i][j])) << spec.label << " row " << i;
                }
            }
            EXPECT_EQ(to_csv(s), to_csv(p));
        }
    }
}

TEST_P(ThreadCount, MonteCarloIsBitIdentical) {
    LinearDetectorConfig cfg{0.7, 0.2, 0.0, 0.0};
    QubitState state(0.4, 0.3);
    const std::int64_t n = 3 * kMcChunk + 1234;
    auto s = mc_linear(cfg, state, n, 99, Execution::serial);
    auto p = mc_linear(cfg, state, n, 99, Execution::parallel);
    EXPECT_EQ(s.p0.value, p.p0.value);
    EXPECT_EQ(s.f0.value, p.f0.value);
    EXPECT_EQ(s.f1.value, p.f1.value);
    EXPECT_EQ(s.rho00_post0.value, p.rho00_post0.value);
    EXPECT_EQ(s.rho00_post1.value, p.rho00_post1.value);

    QndDetector det(0.8, 0.6, 0.0, 0.0, 0.1, 0.1);
    EXPECT_EQ(mc_detector_outcomes(det, state, n, 5, Execution::serial).value,
              mc_detector_outcomes(det, state, n, 5, Execution::parallel).value);
}

TEST_P(ThreadCount, PropertySweepMatches) {
    auto s = property_sweep(500, 20, 11, Execution::serial);
    auto p = property_sweep(500, 20, 11, Execution::parallel);
    EXPECT_EQ(s.pairs, p.pairs);
    EXPECT_EQ(s.detectors, p.detectors);
    EXPECT_EQ(s.total(), p.total());
    EXPECT_EQ(s.eta_tilde_tilde_range, p.eta_tilde_tilde_range);
    EXPECT_EQ(s.worst_average_residual, p.worst_average_residual);
}

TEST_P(ThreadCount, MaximizeMatches) {
    MaximizeSpec spec;
    spec.s_max = 1.0;
    spec.refinements = 4;
    auto s = maximize_linear(spec, Execution::serial);
    auto p = maximize_linear(spec, Execution::parallel);
    EXPECT_EQ(s.value, p.value);
    EXPECT_EQ(s.s, p.s);
    EXPECT_EQ(s.r_th, p.r_th);
    EXPECT_EQ(s.evaluations, p.evaluations);
}

TEST_P(ThreadCount, ContinuumBranchAgrees) {
    ContinuumDiscretization disc;
    disc.levels = 801;
    disc.bandwidth = 100.0;
    ContinuumOptions serial;
    serial.exec = Execution::serial;
    ContinuumOptions parallel;
    parallel.exec = Execution::parallel;
    auto s = evolve_continuum_branch(1.0, 1.0, disc, 0.5, serial);
    auto p = evolve_continuum_branch(1.0, 1.0, disc, 0.5, parallel);
    EXPECT_LT(std::abs(s.a - p.a), 1e-12);
    EXPECT_LT(std::abs(s.norm_drift - p.norm_drift), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4));
