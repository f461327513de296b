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
#include "qeff/models.hpp"
#include "qeff/rng.hpp"

using namespace qeff;
using std::numbers::pi;

namespace {

// Tunneling D1 straight from the exponentials, in extended precision.
long double reference_d1(long double a, long double b) {
    long double pref = 2 * std::sqrt(a * b) / (a + b);
    long double ratio = (1 - std::exp(-(a + b) / 2)) / std::sqrt((1 - std::exp(-a)) * (1 - std::exp(-b)));
    return -std::log(pref * ratio);
}

TunnelingConfig at_f1(double ratio, double f1) {
    double g1t = -std::log1p(-f1);
    return {g1t / ratio, g1t, 0.0};
}

}  // namespace

TEST(IndirectProjective, IdentityCouplingIsProjective) {
    auto det = indirect_projective_detector({1.0, 0.0, 0.0, 1.0});
    EXPECT_EQ(det.f0(), 1.0);
    EXPECT_EQ(det.f1(), 1.0);
    EXPECT_EQ(det.d0(), 0.0);
    EXPECT_EQ(det.d1(), 0.0);
}

TEST(IndirectProjective, RealAmplitudesAreIdeal) {
    auto det = indirect_projective_detector({std::sqrt(0.8), std::sqrt(0.3), std::sqrt(0.2), std::sqrt(0.7)});
    EXPECT_EQ(det.phi0(), 0.0);
    EXPECT_EQ(det.phi1(), 0.0);
    auto r = efficiency_report(det);
    for (const Metric *m : {&r.eta, &r.eta_tilde, &r.eta_tilde_tilde, &r.eta0, &r.eta1}) {
        EXPECT_NEAR(m->value(), 1.0, 1e-15);
    }
}

TEST(IndirectProjective, ComplexAmplitudeLowersEnsembleEta) {
    const double chi = pi / 4;
    auto det = indirect_projective_detector(
        {std::sqrt(0.9), std::sqrt(0.1), std::polar(std::sqrt(0.1), chi), std::sqrt(0.9)});
    EXPECT_NEAR(det.f0(), 0.9, 1e-15);
    EXPECT_NEAR(det.f1(), 0.9, 1e-15);
    EXPECT_NEAR(det.phi0(), 0.0, 1e-15);
    EXPECT_NEAR(det.phi1(), chi, 1e-15);
    auto r = efficiency_report(det);
    double expected = std::log(0.6) / std::log(0.6 * std::cos(chi / 2));
    EXPECT_NEAR(r.eta.value(), expected, 1e-13);
    EXPECT_LT(r.eta.value(), 1.0);
    EXPECT_NEAR(r.eta_tilde.value(), 1.0, 1e-15);
}

TEST(IndirectProjective, RejectsUnnormalizedColumns) {
    EXPECT_THROW(indirect_projective_detector({1.0, 0.0, 0.1, 1.0}), Error);
}

TEST(PhaseQubit, HalfTunnelingProbability) {
    auto det = phase_qubit_detector({0.5, 0.0, 0.0});
    EXPECT_EQ(det.f0(), 1.0);
    EXPECT_EQ(det.f1(), 0.5);
    EXPECT_TRUE(det.destroys_on_1());
    auto r = efficiency_report(det);
    EXPECT_EQ(r.eta0.value(), 1.0);
    for (const Metric *m : {&r.eta, &r.eta_tilde, &r.eta_tilde_tilde, &r.eta1}) {
        ASSERT_FALSE(m->defined());
        EXPECT_EQ(m->reason(), UndefinedReason::destroyed_branch);
    }
}

TEST(PhaseQubit, NoTunnelingIsNoInformation) {
    auto det = phase_qubit_detector({0.2, 0.2, 0.0});
    EXPECT_DOUBLE_EQ(det.f0(), 0.8);
    EXPECT_EQ(det.f1(), 0.2);
    auto p = outcome_probabilities(QubitState(0.3, 0.1), det);
    EXPECT_DOUBLE_EQ(p.p0, 0.8);
}

TEST(PhaseQubit, LeakyZeroStateStillIdealOnNullResult) {
    auto r = efficiency_report(phase_qubit_detector({0.5, 0.1, 0.0}));
    EXPECT_EQ(r.eta0.value(), 1.0);
}

TEST(PhaseQubit, NullResultKeepsPureStatesPure) {
    CounterRng rng(59, 0);
    for (int i = 0; i < 200; ++i) {
        double theta = pi * rng.uniform();
        auto s = from_pure(PureState(std::cos(theta / 2), std::polar(std::sin(theta / 2), 2 * pi * rng.uniform())));
        auto det = phase_qubit_detector({rng.uniform(), 0.5 * rng.uniform(), 2 * pi * rng.uniform()});
        auto p = outcome_probabilities(s, det);
        if (p.p0 < 1e-9) {
            continue;
        }
        auto out = apply_outcome(s, det, Outcome::zero);
        EXPECT_LT(std::abs(purity_defect(*out.post_state)), 1e-12);
    }
}

TEST(PhaseQubit, RejectsInvalid) {
    EXPECT_THROW(phase_qubit_detector({1.5, 0.0, 0.0}), Error);
    EXPECT_THROW(phase_qubit_detector({0.5, -0.1, 0.0}), Error);
}

TEST(Visibility, Examples) {
    EXPECT_EQ(visibility(2.0 / 9.0, 0.0), 1.0);
    EXPECT_NEAR(visibility(2.0 / 9.0, kInfinity), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(visibility(2.0 / 9.0, 0.0824), 0.93, 5e-4);
    EXPECT_EQ(visibility(0.0, 3.0), 1.0);
}

TEST(EstimateD0, Examples) {
    double d0 = estimate_d0_from_visibility(0.93, 0.5, PureState::plus());
    EXPECT_NEAR(d0, 0.082, 1e-3);
    double dmin = std::log(2.0) / 2.0;
    EXPECT_NEAR(dmin / (d0 + dmin), 0.81, 5e-3);
    EXPECT_EQ(estimate_d0_from_visibility(1.0, 0.5, PureState::plus()), 0.0);
}

TEST(EstimateD0, InvertsVisibility) {
    CounterRng rng(61, 0);
    for (int i = 0; i < 100; ++i) {
        double product = 0.25 * (0.05 + 0.95 * rng.uniform());
        double d0 = 2.0 * rng.uniform();
        double v = visibility(product, d0);
        // Build a pure state whose null-result product at p = 0.5 is `product`.
        double r = 0.5 * (1 + std::sqrt(1 - 4 * product));  // rho00 after the null result
        double rho00 = r / (r + 2 * (1 - r));                 // undo the 1 : 1/2 Bayes weights
        PureState s(std::sqrt(rho00), std::sqrt(1 - rho00));
        EXPECT_NEAR(estimate_d0_from_visibility(v, 0.5, s), d0, 1e-10 * std::max(1.0, d0));
    }
}

TEST(EstimateD0, LeakyZeroState) {
    // p0 > 0 changes the null-result populations, hence the inferred D0.
    double a = estimate_d0_from_visibility(0.93, 0.5, PureState::plus(), 0.0);
    double b = estimate_d0_from_visibility(0.93, 0.5, PureState::plus(), 0.2);
    EXPECT_NE(a, b);
    QubitState post = *apply_outcome(from_pure(PureState::plus()), phase_qubit_detector({0.5, 0.2, 0.0}),
                                     Outcome::zero)
                           .post_state;
    EXPECT_NEAR(visibility(post.rho00() * post.rho11(), b), 0.93, 1e-12);
}

TEST(EstimateD0, InconsistentData) {
    try {
        estimate_d0_from_visibility(0.2, 0.5, PureState::plus());
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::inconsistent_data);
    }
}

TEST(TunnelingDetector, FidelitiesAndIdealNullResult) {
    auto det = tunneling_detector({0.2, 0.9, 0.3});
    EXPECT_NEAR(det.f0(), std::exp(-0.2), 1e-16);
    EXPECT_NEAR(det.f1(), 1 - std::exp(-0.9), 1e-16);
    EXPECT_EQ(det.d0(), 0.0);
    EXPECT_EQ(det.phi0(), 0.0);
    EXPECT_NEAR(det.phi1(), 0.3, 1e-16);
    EXPECT_EQ(efficiency_report(det).eta0.value(), 1.0);
}

TEST(TunnelingDetector, EqualRatesCarryNoInformation) {
    auto det = tunneling_detector({0.7, 0.7, 0.0});
    EXPECT_EQ(det.d1(), 0.0);
    EXPECT_NEAR(det.f0() + det.f1(), 1.0, 1e-16);
}

TEST(TunnelingDetector, MatchesDirectFormula) {
    for (double ratio : {1.5, 3.0, 10.0, 100.0}) {
        for (double g1t : {0.01, 0.1, 0.5, 1.0, 3.0, 8.0}) {
            double d1 = tunneling_detector({g1t / ratio, g1t, 0.0}).d1();
            double ref = (double)reference_d1(g1t / ratio, g1t);
            EXPECT_NEAR(d1, ref, 1e-13 + 1e-10 * ref) << ratio << " " << g1t;
        }
    }
}

TEST(TunnelingDetector, RatioThreeAtHalfFidelity) {
    double d1 = tunneling_detector(at_f1(3.0, 0.5)).d1();
    EXPECT_NEAR(d1, 2.2e-3, 2e-5);
}

TEST(TunnelingDetector, ZeroRateLimit) {
    const double b = 1.3;
    double d1 = tunneling_detector({0.0, b, 0.0}).d1();
    double limit = -std::log(2 * (1 - std::exp(-b / 2)) / std::sqrt(b * (1 - std::exp(-b))));
    EXPECT_NEAR(d1, limit, 1e-15);
    EXPECT_NEAR(tunneling_detector({1e-12, b, 0.0}).d1(), limit, 1e-12);
}

TEST(TunnelingDetector, SmallTimesKeepPrecision) {
    // F1 = 1e-3 needs 1 - e^{-x} without cancellation.
    auto cfg = at_f1(3.0, 1e-3);
    double d1 = tunneling_detector(cfg).d1();
    EXPECT_GT(d1, 0.0);
    EXPECT_NEAR(d1, (double)reference_d1(cfg.g0t, cfg.g1t), 1e-14);
}

TEST(TunnelingDetector, ZeroRateIsIdealEnsemble) {
    auto r = efficiency_report(tunneling_detector({0.0, 1.1, 0.0}));
    EXPECT_NEAR(r.eta.value(), 1.0, 1e-15);
    EXPECT_LT(r.eta1.value(), 1.0);
    EXPECT_EQ(r.eta1_tilde.value(), 1.0);
    EXPECT_NEAR(r.d_min, 0.55, 1e-15);
}

TEST(TunnelingDetector, Validation) {
    try {
        tunneling_detector({0.5, 0.4, 0.0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_config);
    }
    try {
        tunneling_detector({0.0, 0.0, 0.0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::degenerate_config);
    }
}

TEST(TunnelingDetector, SaturationAtLargeTimes) {
    for (double ratio : {1.5, 3.0, 100.0}) {
        double limit = -std::log(2 * std::sqrt(ratio) / (1 + ratio));
        double d1 = tunneling_detector({4000.0 / ratio, 4000.0, 0.0}).d1();
        EXPECT_NEAR(d1, limit, 1e-12);
        auto r = efficiency_report(tunneling_detector({4000.0 / ratio, 4000.0, 0.0}));
        EXPECT_LT(r.eta1.value(), 1e-3);
    }
}

TEST(TunnelingDetector, EtaAtLeastEta1) {
    for (double ratio : {1.01, 1.5, 3.0, 100.0, 1e4}) {
        for (double f1 = 0.001; f1 < 0.9995; f1 *= 1.3) {
            auto r = efficiency_report(tunneling_detector(at_f1(ratio, f1)));
            EXPECT_GE(r.eta.value(), r.eta1.value()) << ratio << " " << f1;
        }
    }
}

TEST(TunnelingDetector, MonotoneInRateRatioAtFixedFidelity) {
    double prev_d1 = 0.0;
    double prev_eta1 = 0.0;
    for (double ratio : {1.5, 3.0, 100.0}) {
        auto det = tunneling_detector(at_f1(ratio, 0.5));
        auto r = efficiency_report(det);
        EXPECT_GT(det.d1(), prev_d1);
        EXPECT_GT(r.eta1.value(), prev_eta1);
        prev_d1 = det.d1();
        prev_eta1 = r.eta1.value();
    }
}

TEST(TunnelingDetector, SmallFidelityLimit) {
    for (double ratio : {1.5, 3.0, 100.0}) {
        auto det = tunneling_detector(at_f1(ratio, 1e-4));
        EXPECT_LT(det.d1(), 1e-8);
        EXPECT_GT(efficiency_report(det).eta1.value(), 0.999);
    }
}

TEST(TunnelingEnsemble, ClosedFormFactor) {
    TunnelingConfig cfg{0.3, 1.2, 0.4};
    auto ens = tunneling_ensemble(cfg);
    double e = std::exp(-0.75);
    complex factor = e + 2 * std::sqrt(0.36) / 1.5 * std::polar(1.0, 0.4) * (1 - e);
    EXPECT_NEAR(ens.d_av, -std::log(std::abs(factor)), 1e-14);
    EXPECT_NEAR(ens.phi_av, std::arg(factor), 1e-14);
}

TEST(TunnelingEnsemble, AgreesWithGenericAverage) {
    for (double g0t : {0.0, 0.1, 0.5}) {
        for (double g1t : {0.5, 1.0, 4.0}) {
            for (double phi : {0.0, 0.7, -2.0}) {
                TunnelingConfig cfg{g0t, g1t, phi};
                auto ens = tunneling_ensemble(cfg);
                auto r = efficiency_report(tunneling_detector(cfg));
                EXPECT_NEAR(ens.d_av, r.d_av.value(), 1e-12);
                EXPECT_NEAR(ens.phi_av, r.phi_av.value(), 1e-12);
                ASSERT_EQ(ens.eta.defined(), r.eta.defined());
                ASSERT_EQ(ens.eta_tilde.defined(), r.eta_tilde.defined());
                if (ens.eta.defined()) {
                    EXPECT_NEAR(ens.eta.value(), r.eta.value(), 1e-12);
                } else {
                    EXPECT_EQ(ens.eta.reason(), r.eta.reason());
                }
                if (ens.eta_tilde.defined()) {
                    EXPECT_NEAR(ens.eta_tilde.value(), r.eta_tilde.value(), 1e-12);
                }
            }
        }
    }
}

TEST(TunnelingEnsemble, RealAmplitudesMakeThreeEtasCoincide) {
    auto det = tunneling_detector({0.2, 0.9, 0.0});
    auto r = efficiency_report(det);
    EXPECT_NEAR(r.eta.value(), r.eta_tilde.value(), 1e-15);
    EXPECT_NEAR(r.eta.value(), r.eta_tilde_tilde.value(), 1e-15);
}

TEST(TunnelingEnsemble, ZeroRateGivesIdealEta) {
    auto ens = tunneling_ensemble({0.0, 2.0, 0.0});
    EXPECT_NEAR(ens.eta.value(), 1.0, 1e-15);
    EXPECT_NEAR(ens.d_av, 1.0, 1e-15);
}

TEST(TunnelingEnsemble, EqualRatesUndefined) {
    auto ens = tunneling_ensemble({0.5, 0.5, 0.0});
    EXPECT_NEAR(ens.d_av, 0.0, 1e-16);
    EXPECT_FALSE(ens.eta.defined());
}
