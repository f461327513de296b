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
#include <complex>
#include <numbers>

#include "qeff/efficiency.hpp"
#include "qeff/sampling.hpp"

using namespace qeff;
using std::numbers::pi;

namespace {

// Direct evaluation in long double from the moduli of the coherence sums.
struct Direct {
    long double d_min, d_av, d_tilde, d_phase;
};

Direct direct(const QndDetector &det) {
    using ld = long double;
    using cl = std::complex<ld>;
    ld a = std::sqrt(ld(det.f0()) * (1 - ld(det.f1())));
    ld b = std::sqrt((1 - ld(det.f0())) * ld(det.f1()));
    ld e0 = std::exp(-ld(det.d0()));
    ld e1 = std::exp(-ld(det.d1()));
    ld dphi = ld(det.phi1()) - ld(det.phi0());
    cl rot = std::polar(ld(1), dphi);
    return {-std::log(a + b), -std::log(std::abs(a * e0 + b * e1 * rot)), -std::log(a * e0 + b * e1),
            -std::log(std::abs(a + b * rot))};
}

void expect_all(const EfficiencyReport &r, double v) {
    for (const Metric *m :
         {&r.eta, &r.eta_tilde, &r.eta_tilde_tilde, &r.eta0, &r.eta1, &r.eta0_tilde, &r.eta1_tilde}) {
        ASSERT_TRUE(m->defined());
        EXPECT_NEAR(m->value(), v, 1e-15);
    }
}

}  // namespace

TEST(EfficiencyReport, IdealDetectorAllOne) {
    expect_all(efficiency_report(QndDetector(0.9, 0.8, 0.3, 0.3, 0, 0)), 1.0);
}

TEST(EfficiencyReport, KatzStyleOutcomeZero) {
    auto r = efficiency_report(QndDetector::destructive(1.0, 0.5, 0.0, 0.08));
    ASSERT_TRUE(r.eta0.defined());
    EXPECT_NEAR(r.eta0.value(), (std::log(2.0) / 2) / (0.08 + std::log(2.0) / 2), 1e-15);
    EXPECT_NEAR(r.eta0.value(), 0.8125, 1e-4);
}

TEST(EfficiencyReport, PhaseMismatchOnlyLowersEta) {
    auto r = efficiency_report(QndDetector(0.9, 0.8, 0.0, 0.7, 0, 0));
    EXPECT_DOUBLE_EQ(r.eta_tilde.value(), 1.0);
    EXPECT_DOUBLE_EQ(r.eta_tilde_tilde.value(), 1.0);
    EXPECT_DOUBLE_EQ(r.eta0.value(), 1.0);
    EXPECT_DOUBLE_EQ(r.eta1.value(), 1.0);
    EXPECT_LT(r.eta.value(), 1.0);
}

TEST(EfficiencyReport, MatchesDirectEvaluation) {
    CounterRng rng(17, 0);
    int checked = 0;
    for (int i = 0; i < 5000; ++i) {
        auto det = random_detector(rng, false);
        if (det.weight0() == 0.0 || det.weight1() == 0.0 || det.f0() + det.f1() == 1.0) {
            continue;
        }
        auto r = efficiency_report(det);
        auto d = direct(det);
        ++checked;
        auto rel = [](long double x) { return 1e-11 * std::max<long double>(1.0L, std::abs(x)); };
        EXPECT_NEAR(r.d_min, double(d.d_min), double(rel(d.d_min)));
        EXPECT_NEAR(r.d_av.value(), double(d.d_av), double(rel(d.d_av)));
        EXPECT_NEAR(r.eta.value(), double(d.d_min / d.d_av), 1e-10);
        EXPECT_NEAR(r.eta_tilde.value(), double(d.d_min / d.d_tilde), 1e-10);
        EXPECT_NEAR(r.eta_tilde_tilde.value(), double(d.d_phase / d.d_av), 1e-9 * std::max(1.0, double(d.d_phase / d.d_av)));
        EXPECT_NEAR(r.eta0.value(), double(d.d_min / (det.d0() + d.d_min)), 1e-12);
        EXPECT_NEAR(r.eta1.value(), double(d.d_min / (det.d1() + d.d_min)), 1e-12);
        long double l0 = -0.5L * std::log((long double)det.weight0());
        EXPECT_NEAR(r.eta0_tilde.value(), double(l0 / (det.d0() + l0)), 1e-12);
    }
    EXPECT_GT(checked, 3000);
}

TEST(EfficiencyReport, AveragePhase) {
    QndDetector det(0.8, 0.7, 0.4, -0.3, 0.1, 0.2);
    auto r = efficiency_report(det);
    auto c = det.coherence_gain(Outcome::zero) + det.coherence_gain(Outcome::one);
    EXPECT_NEAR(r.phi_av.value(), std::arg(c), 1e-15);
}

TEST(EfficiencyReport, NoInformationNoDecoherenceIsZeroOverZero) {
    auto r = efficiency_report(QndDetector(0.4, 0.6, 0, 0, 0, 0));
    EXPECT_EQ(r.d_min, 0.0);
    ASSERT_FALSE(r.eta.defined());
    EXPECT_EQ(r.eta.reason(), UndefinedReason::zero_over_zero);
    EXPECT_EQ(r.eta0.reason(), UndefinedReason::zero_over_zero);
}

TEST(EfficiencyReport, NoInformationWithDecoherenceIsZero) {
    auto r = efficiency_report(QndDetector(0.4, 0.6, 0, 0, 0.3, 0.3));
    EXPECT_EQ(r.eta.value(), 0.0);
    EXPECT_EQ(r.eta0.value(), 0.0);
}

TEST(EfficiencyReport, InfiniteDecoherenceGivesZero) {
    auto r = efficiency_report(QndDetector(0.8, 0.7, 0, 0, kInfinity, kInfinity));
    EXPECT_TRUE(std::isinf(r.d_av.value()));
    EXPECT_EQ(r.eta.value(), 0.0);
    EXPECT_EQ(r.eta_tilde.value(), 0.0);
    EXPECT_EQ(r.eta0.value(), 0.0);
    EXPECT_EQ(r.eta1.value(), 0.0);
    EXPECT_EQ(r.eta0_tilde.value(), 0.0);
}

TEST(EfficiencyReport, ProjectiveLimitIsUndefined) {
    auto r = efficiency_report(QndDetector(1.0, 1.0, 0, 0, 0, 0));
    EXPECT_TRUE(std::isinf(r.d_min));
    for (const Metric *m : {&r.eta, &r.eta_tilde, &r.eta_tilde_tilde, &r.eta0, &r.eta1}) {
        ASSERT_FALSE(m->defined());
        EXPECT_EQ(m->reason(), UndefinedReason::projective_limit);
    }
}

TEST(EfficiencyReport, ZeroWeightOutcomeTildeIsOne) {
    // F0 = 1: no coherence survives outcome 1 anyway, so L1 is infinite.
    auto r = efficiency_report(QndDetector(1.0, 0.5, 0, 0, 0, 0.4));
    EXPECT_EQ(r.eta1_tilde.value(), 1.0);
    EXPECT_LT(r.eta1.value(), 1.0);
}

TEST(EfficiencyReport, DestroyedBranchMetricsUndefined) {
    auto r = efficiency_report(QndDetector::destructive(1.0, 0.5, 0.0, 0.0));
    EXPECT_EQ(r.eta0.value(), 1.0);
    for (const Metric *m : {&r.d_av, &r.phi_av, &r.eta, &r.eta_tilde, &r.eta_tilde_tilde, &r.eta1, &r.eta1_tilde}) {
        ASSERT_FALSE(m->defined());
        EXPECT_EQ(m->reason(), UndefinedReason::destroyed_branch);
    }
}

TEST(EfficiencyReport, ReasonNames) {
    EXPECT_EQ(to_string(UndefinedReason::destroyed_branch), "destroyed-branch");
    EXPECT_EQ(to_string(UndefinedReason::zero_over_zero), "zero-over-zero");
    EXPECT_EQ(to_string(UndefinedReason::projective_limit), "projective-limit");
}

TEST(EfficiencyReport, RandomInvariants) {
    CounterRng rng(19, 0);
    for (int i = 0; i < 20000; ++i) {
        auto det = random_detector(rng);
        auto r = efficiency_report(det);
        ASSERT_GE(r.d_min, 0.0);
        if (r.d_av.defined()) {
            ASSERT_GE(r.d_av.value(), r.d_min);
        }
        for (const Metric *m : {&r.eta, &r.eta_tilde, &r.eta0, &r.eta1, &r.eta0_tilde, &r.eta1_tilde}) {
            if (m->defined()) {
                ASSERT_GE(m->value(), 0.0);
                ASSERT_LE(m->value(), 1.0);
            }
        }
        if (r.eta_tilde.defined() && r.eta0.defined() && r.eta1.defined()) {
            ASSERT_GE(r.eta_tilde.value(), std::min(r.eta0.value(), r.eta1.value()) - 1e-12);
            ASSERT_LE(r.eta_tilde.value(), std::max(r.eta0.value(), r.eta1.value()) + 1e-12);
        }
        if (r.eta0.defined() && r.eta0_tilde.defined()) {
            ASSERT_GE(r.eta0_tilde.value(), r.eta0.value() - 1e-12);
        }
        if (r.eta1.defined() && r.eta1_tilde.defined()) {
            ASSERT_GE(r.eta1_tilde.value(), r.eta1.value() - 1e-12);
        }
    }
}

TEST(EfficiencyReport, DoubleTildeExceedsOneForOpposedPhases) {
    // With phi1 - phi0 near pi, damping the weaker branch reduces the
    // destructive interference, so the phase-only loss is larger than D_av.
    QndDetector det(0.6, 0.5, 0.0, 0.9 * pi, 0.0, 1.0);
    auto r = efficiency_report(det);
    auto d = direct(det);
    EXPECT_NEAR(r.eta_tilde_tilde.value(), double(d.d_phase / d.d_av), 1e-12);
    EXPECT_GT(r.eta_tilde_tilde.value(), 1.0);
}
