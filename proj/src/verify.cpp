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

#include "qeff/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qeff/error.hpp"
#include "qeff/oracles.hpp"
#include "qeff/sampling.hpp"

namespace qeff {

bool VerifyReport::passed() const {
    return failures().empty();
}

std::vector<const VerifyCheck *> VerifyReport::failures() const {
    std::vector<const VerifyCheck *> out;
    for (const auto &c : checks) {
        if (!c.passed && !c.informational) {
            out.push_back(&c);
        }
    }
    return out;
}

const std::vector<std::string> &verify_suites() {
    static const std::vector<std::string> suites = {"linear-quad", "linear-mc", "tunneling-ode", "povm-roundtrip",
                                                    "properties"};
    return suites;
}

PropertyTally &PropertyTally::operator+=(const PropertyTally &o) {
    pairs += o.pairs;
    detectors += o.detectors;
    probability_sum += o.probability_sum;
    positivity += o.positivity;
    average_mixture += o.average_mixture;
    d_av_below_d_min += o.d_av_below_d_min;
    metric_range += o.metric_range;
    eta_tilde_tilde_range += o.eta_tilde_tilde_range;
    eta_tilde_between += o.eta_tilde_between;
    tilde_dominates += o.tilde_dominates;
    worst_average_residual = std::max(worst_average_residual, o.worst_average_residual);
    return *this;
}

std::int64_t PropertyTally::total() const {
    return probability_sum + positivity + average_mixture + d_av_below_d_min + metric_range + eta_tilde_tilde_range +
           eta_tilde_between +
           tilde_dominates;
}

namespace {

constexpr double kSlack = 1e-12;

std::string describe(const LinearDetectorConfig &c) {
    std::ostringstream s;
    s << "s=" << c.s << " r_th=" << c.r_th << " gamma_t=" << c.gamma_t << " kappa=" << c.kappa;
    return s.str();
}

std::string describe(const TunnelingConfig &c) {
    std::ostringstream s;
    s << "g0t=" << c.g0t << " g1t=" << c.g1t << " phi1=" << c.phi1;
    return s.str();
}

VerifyCheck check(std::string name, std::string config, double residual, double tol) {
    return {std::move(name), std::move(config), residual, tol, residual < tol};
}

PropertyTally detector_properties(const QndDetector &det, CounterRng &rng, int states) {
    PropertyTally t;
    t.detectors = 1;
    const EfficiencyReport r = efficiency_report(det);

    if (!(r.d_av.value() >= r.d_min)) {
        t.d_av_below_d_min += 1;
    }
    if (r.eta_tilde_tilde.defined() && !(r.eta_tilde_tilde.value() >= 0.0 && r.eta_tilde_tilde.value() <= 1.0)) {
        t.eta_tilde_tilde_range += 1;
    }
    for (const Metric *m : {&r.eta, &r.eta_tilde, &r.eta0, &r.eta1, &r.eta0_tilde, &r.eta1_tilde}) {
        if (m->defined() && !(m->value() >= 0.0 && m->value() <= 1.0)) {
            t.metric_range += 1;
        }
    }
    if (r.eta_tilde.defined() && r.eta0.defined() && r.eta1.defined()) {
        double lo = std::min(r.eta0.value(), r.eta1.value());
        double hi = std::max(r.eta0.value(), r.eta1.value());
        if (r.eta_tilde.value() < lo - kSlack || r.eta_tilde.value() > hi + kSlack) {
            t.eta_tilde_between += 1;
        }
    }
    for (auto [tilde, plain] : {std::pair{&r.eta0_tilde, &r.eta0}, std::pair{&r.eta1_tilde, &r.eta1}}) {
        if (tilde->defined() && plain->defined() && tilde->value() < plain->value() - kSlack) {
            t.tilde_dominates += 1;
        }
    }

    for (int j = 0; j < states; ++j) {
        const QubitState state = random_state(rng);
        t.pairs += 1;
        const auto probs = outcome_probabilities(state, det);
        if (probs.p0 + probs.p1 != 1.0) {
            t.probability_sum += 1;
        }
        complex mix01 = 0.0;
        double mix00 = 0.0;
        bool ok = true;
        for (Outcome o : kOutcomes) {
            double p = o == Outcome::zero ? probs.p0 : probs.p1;
            if (!(p > 0.0)) {
                continue;
            }
            try {
                auto res = apply_outcome(state, det, o);
                if (res.post_state->purity_defect() < -kStateTolerance) {
                    t.positivity += 1;
                }
                mix00 += p * res.post_state->rho00();
                mix01 += p * res.post_state->rho01();
            } catch (const Error &) {
                t.positivity += 1;
                ok = false;
            }
        }
        if (ok) {
            QubitState avg = average_transform(state, det);
            double residual = std::max(std::abs(avg.rho00() - mix00), std::abs(avg.rho01() - mix01));
            t.worst_average_residual = std::max(t.worst_average_residual, residual);
            if (!(residual <= kSlack)) {
                t.average_mixture += 1;
            }
        }
    }
    return t;
}

VerifyReport suite_linear_quad(const VerifyOptions &opt) {
    VerifyReport rep{"linear-quad", {}};
    const double d_tol = opt.tol > 0.0 ? opt.tol : 1e-8;
    const QubitState plus = QubitState::from_pure(PureState::plus());
    for (double s : {0.1, 0.5, 1.0, 1.5, 2.0}) {
        for (double r : {-1.5, -0.5, 0.0, 0.5, 1.5}) {
            LinearDetectorConfig cfg{s, r, 0.0, 0.0};
            QndDetector det = linear_detector(cfg);
            auto q = quad_linear_parameters(cfg);
            rep.checks.push_back(check("d0", describe(cfg), std::abs(det.d0() - q.d0), d_tol));
            rep.checks.push_back(check("d1", describe(cfg), std::abs(det.d1() - q.d1), d_tol));
            auto quad = quad_linear(cfg, plus);
            double diag = 0.0;
            for (Outcome o : kOutcomes) {
                auto res = apply_outcome(plus, det, o);
                const QubitState &qs = o == Outcome::zero ? quad.post0 : quad.post1;
                diag = std::max(diag, std::abs(res.post_state->rho00() - qs.rho00()));
            }
            rep.checks.push_back(check("conditioned_diagonals", describe(cfg), diag, 1e-10));
            rep.checks.push_back(check("p0_plus_p1", describe(cfg), std::abs(quad.p0 + quad.p1 - 1.0), 1e-12));
        }
    }
    // Ensemble coherence factor including the record-dependent phase.
    for (auto cfg : {LinearDetectorConfig{0.5, -0.3, 0.2, 0.5}, LinearDetectorConfig{1.2, 0.4, 0.0, 1.5},
                     LinearDetectorConfig{2.0, 0.0, 0.1, 0.0}}) {
        auto quad = quad_linear(cfg, plus);
        complex mixed = quad.p0 * quad.post0.rho01() + quad.p1 * quad.post1.rho01();
        double expected = 0.5 * std::exp(-(cfg.gamma_t + cfg.s * cfg.s * (1.0 + cfg.kappa * cfg.kappa)));
        rep.checks.push_back(check("ensemble_coherence", describe(cfg), std::abs(mixed - expected), 1e-8));
    }
    return rep;
}

VerifyReport suite_linear_mc(const VerifyOptions &opt) {
    VerifyReport rep{"linear-mc", {}};
    const double k_sigma = opt.tol > 0.0 ? opt.tol : 4.0;
    struct Case {
        LinearDetectorConfig cfg;
        QubitState state;
    };
    const std::vector<Case> cases = {
        {{1.0, 0.0, 0.0, 0.0}, QubitState::from_pure(PureState::plus())},
        {{0.5, -0.5, 0.0, 0.0}, QubitState(0.3, 0.1)},
        {{2.0, 0.7, 0.0, 0.0}, QubitState(0.8, complex(0.0, -0.2))},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto &[cfg, state] = cases[i];
        const std::uint64_t seed = opt.seed + i;
        auto f = linear_fidelities(cfg);
        double p0 = outcome_probabilities(state, linear_detector(cfg)).p0;
        auto mc = mc_linear(cfg, state, opt.samples, seed, opt.exec);
        for (auto [name, est, exact] : {std::tuple{"f0", mc.f0, f.f0}, std::tuple{"f1", mc.f1, f.f1},
                                        std::tuple{"p0", mc.p0, p0}}) {
            double z = std::abs(est.value - exact) / est.std_error;
            rep.checks.push_back(check(std::string(name) + "_sigmas", describe(cfg), z, k_sigma));
        }
        auto again = mc_linear(cfg, state, opt.samples, seed, opt.exec);
        bool same = again.p0.value == mc.p0.value && again.f0.value == mc.f0.value && again.f1.value == mc.f1.value;
        rep.checks.push_back(check("seed_reproducible", describe(cfg), same ? 0.0 : 1.0, 0.5));
    }
    return rep;
}

VerifyReport suite_tunneling_ode(const VerifyOptions &opt) {
    VerifyReport rep{"tunneling-ode", {}};
    const double d_tol = opt.tol > 0.0 ? opt.tol : 1e-2;
    const double g1t = std::numbers::ln2;
    ContinuumOptions copts;
    copts.exec = opt.exec;
    for (double ratio : {1.5, 3.0, 100.0}) {
        TunnelingConfig cfg{g1t / ratio, g1t, 0.0};
        QndDetector det = tunneling_detector(cfg);
        auto ode = solve_discretized_continuum(cfg, ContinuumDiscretization{}, copts);
        rep.checks.push_back(check("d1", describe(cfg), std::abs(ode.d1 - det.d1()), d_tol));
        rep.checks.push_back(check("norm_drift", describe(cfg), ode.norm_drift, 1e-8));
        rep.checks.push_back(check("phi1", describe(cfg), std::abs(ode.phi1), 1e-6));
        VerifyCheck f0 = check("f0_finite_band", describe(cfg), std::abs(ode.f0 - det.f0()), 1e-3);
        VerifyCheck f1 = check("f1_finite_band", describe(cfg), std::abs(ode.f1 - det.f1()), 1e-3);
        f0.informational = f1.informational = true;
        rep.checks.push_back(f0);
        rep.checks.push_back(f1);
    }
    return rep;
}

VerifyReport suite_povm_roundtrip(const VerifyOptions &opt) {
    VerifyReport rep{"povm-roundtrip", {}};
    const double tol = opt.tol > 0.0 ? opt.tol : 1e-10;
    double worst_param = 0.0;
    double worst_choi = 0.0;
    int not_qnd = 0;
    for (int i = 0; i < 1000; ++i) {
        CounterRng rng(opt.seed, static_cast<std::uint64_t>(i));
        QndDetector det = random_detector(rng, false);
        BinarySuperoperator sup = from_qnd(det);
        for (Outcome o : kOutcomes) {
            worst_choi = std::max(worst_choi, std::max(0.0, -choi_eigenvalues(sup.map(o)).minCoeff()));
        }
        auto ex = extract_qnd(sup);
        if (!ex.is_qnd()) {
            ++not_qnd;
            continue;
        }
        const QndDetector &back = *ex.detector;
        auto phase_gap = [](double a, double b) { return std::abs(canonical_phase(a - b)); };
        double r = std::max(std::abs(back.f0() - det.f0()), std::abs(back.f1() - det.f1()));
        // D and phi only act through the coherence gain, so they are observable
        // only where its bound sqrt(w) is nonzero.
        if (det.weight0() > 0.0) {
            r = std::max({r, std::abs(back.d0() - det.d0()), phase_gap(back.phi0(), det.phi0())});
        }
        if (det.weight1() > 0.0) {
            r = std::max({r, std::abs(back.d1() - det.d1()), phase_gap(back.phi1(), det.phi1())});
        }
        worst_param = std::max(worst_param, r);
    }
    rep.checks.push_back(check("roundtrip_parameters", "1000 random detectors", worst_param, tol));
    rep.checks.push_back(check("roundtrip_not_qnd", "1000 random detectors", not_qnd, 0.5));
    rep.checks.push_back(check("choi_psd", "1000 random detectors", worst_choi, 1e-10));

    QndDetector det(0.8, 0.7, 0.3, -0.4, 0.3, 0.1);
    BinarySuperoperator scaled = from_qnd(det);
    scaled.map(Outcome::zero) *= 0.9;
    auto complete = check_completeness(scaled);
    rep.checks.push_back(check("scaled_channel_incomplete", "0.9 * S0", complete.ok ? 1.0 : 0.0, 0.5));

    double worst_channel = 0.0;
    int invalid = 0;
    for (int i = 0; i < 100; ++i) {
        CounterRng rng(opt.seed ^ 0x5eedULL, static_cast<std::uint64_t>(i));
        BinarySuperoperator sup = random_channel(rng);
        QubitState state = random_state(rng);
        try {
            double p = 0.0;
            for (Outcome o : kOutcomes) {
                p += apply(sup, state, o).probability;
            }
            worst_channel = std::max(worst_channel, std::abs(p - 1.0));
        } catch (const Error &) {
            ++invalid;
        }
    }
    rep.checks.push_back(check("random_channel_probability", "100 random channels", worst_channel, 1e-10));
    rep.checks.push_back(check("random_channel_valid_output", "100 random channels", invalid, 0.5));
    return rep;
}

VerifyReport suite_properties(const VerifyOptions &opt) {
    VerifyReport rep{"properties", {}};
    PropertyTally t = property_sweep(opt.detectors, opt.states_per_detector, opt.seed, opt.exec);
    std::ostringstream cfg;
    cfg << t.detectors << " detectors x " << opt.states_per_detector << " states";
    const std::string c = cfg.str();
    rep.checks.push_back(check("probability_sum", c, t.probability_sum, 0.5));
    rep.checks.push_back(check("post_state_positivity", c, t.positivity, 0.5));
    rep.checks.push_back(check("average_is_mixture", c, t.average_mixture, 0.5));
    rep.checks.push_back(check("d_av_at_least_d_min", c, t.d_av_below_d_min, 0.5));
    rep.checks.push_back(check("metrics_in_unit_interval", c, t.metric_range, 0.5));
    rep.checks.push_back(check("eta_tilde_tilde_in_unit_interval", c, t.eta_tilde_tilde_range, 0.5));
    rep.checks.push_back(check("eta_tilde_between_eta0_eta1", c, t.eta_tilde_between, 0.5));
    rep.checks.push_back(check("eta_i_tilde_at_least_eta_i", c, t.tilde_dominates, 0.5));
    return rep;
}

}  // namespace

PropertyTally property_sweep(int detectors, int states_per_detector, std::uint64_t seed, Execution exec) {
    std::vector<PropertyTally> partial(static_cast<std::size_t>(std::max(0, detectors)));
    auto run = [&](int i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        partial[i] = detector_properties(random_detector(rng), rng, states_per_detector);
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) num_threads(num_threads())
        for (int i = 0; i < detectors; ++i) {
            run(i);
        }
    } else {
        for (int i = 0; i < detectors; ++i) {
            run(i);
        }
    }
    PropertyTally total;
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

VerifyReport run_verify(std::string_view suite, const VerifyOptions &options) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    if (suite == "linear-quad") {
        rep = suite_linear_quad(options);
    } else if (suite == "linear-mc") {
        rep = suite_linear_mc(options);
    } else if (suite == "tunneling-ode") {
        rep = suite_tunneling_ode(options);
    } else if (suite == "povm-roundtrip") {
        rep = suite_povm_roundtrip(options);
    } else if (suite == "properties") {
        rep = suite_properties(options);
    } else {
        throw Error(ErrorKind::invalid_config, "unknown verify suite '" + std::string(suite) + "'");
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

json to_json(const VerifyReport &rep) {
    json checks = json::array();
    for (const auto &c : rep.checks) {
        json item{{"name", c.name},
                  {"config", c.config},
                  {"residual", number_to_json(c.residual)},
                  {"tolerance", c.tolerance},
                  {"passed", c.passed}};
        if (c.informational) {
            item["informational"] = true;
        }
        checks.push_back(item);
    }
    json failures = json::array();
    for (const auto *f : rep.failures()) {
        failures.push_back(f->name + " [" + f->config + "]");
    }
    return {{"suite", rep.suite},
            {"passed", rep.passed()},
            {"seconds", rep.seconds},
            {"failures", failures},
            {"checks", checks}};
}

}  // namespace qeff
