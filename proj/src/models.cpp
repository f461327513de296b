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

#include "qeff/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qeff/error.hpp"
#include "qeff/numerics.hpp"

namespace qeff {

namespace {

void require(bool ok, ErrorKind kind, const std::string &what) {
    if (!ok) {
        throw Error(kind, what);
    }
}

void validate(const LinearDetectorConfig &cfg) {
    require(std::isfinite(cfg.s) && cfg.s >= 0.0, ErrorKind::invalid_config, "linear: s must be finite and >= 0");
    require(std::isfinite(cfg.gamma_t) && cfg.gamma_t >= 0.0, ErrorKind::invalid_config,
            "linear: gamma_t must be finite and >= 0");
    require(!std::isnan(cfg.r_th), ErrorKind::invalid_config, "linear: r_th is NaN");
    require(std::isfinite(cfg.kappa), ErrorKind::invalid_config, "linear: kappa must be finite");
}

void validate(const TunnelingConfig &cfg) {
    require(std::isfinite(cfg.g0t) && std::isfinite(cfg.g1t) && cfg.g0t >= 0.0 && cfg.g1t >= 0.0,
            ErrorKind::invalid_config, "tunneling: g0t and g1t must be finite and >= 0");
    if (cfg.g0t > cfg.g1t) {
        std::ostringstream msg;
        msg << "tunneling: g1t must be >= g0t, got g0t=" << cfg.g0t << " g1t=" << cfg.g1t;
        throw Error(ErrorKind::invalid_config, msg.str());
    }
    require(std::isfinite(cfg.phi1), ErrorKind::invalid_config, "tunneling: phi1 must be finite");
    require(cfg.g1t > 0.0, ErrorKind::degenerate_config,
            "tunneling: g0t = g1t = 0 is a no-measurement detector; outcome 1 never occurs");
}

Metric safe_ratio(double num, double den) {
    if (num == 0.0 && den == 0.0) {
        return Metric::undefined(UndefinedReason::zero_over_zero);
    }
    if (std::isinf(num) && std::isinf(den)) {
        return Metric::undefined(UndefinedReason::projective_limit);
    }
    if (std::isinf(den)) {
        return Metric::of(0.0);
    }
    return Metric::of(num / den);
}

}  // namespace

QndDetector indirect_projective_detector(const IndirectProjectiveConfig &cfg) {
    double col0 = std::norm(cfg.c00) + std::norm(cfg.c10);
    double col1 = std::norm(cfg.c01) + std::norm(cfg.c11);
    if (!(std::abs(col0 - 1.0) <= 1e-12) || !(std::abs(col1 - 1.0) <= 1e-12)) {
        std::ostringstream msg;
        msg << "indirect: columns must be normalized, got |c00|^2+|c10|^2=" << col0 << " |c01|^2+|c11|^2=" << col1;
        throw Error(ErrorKind::invalid_config, msg.str());
    }
    double f0 = std::clamp(std::norm(cfg.c00), 0.0, 1.0);
    double f1 = std::clamp(std::norm(cfg.c11), 0.0, 1.0);
    double phi0 = std::arg(cfg.c00 * std::conj(cfg.c01));
    double phi1 = std::arg(cfg.c10 * std::conj(cfg.c11));
    return QndDetector(f0, f1, phi0, phi1, 0.0, 0.0);
}

LinearDetectorConfig LinearDetectorConfig::from_physical(double t, double noise_s, double i0, double i1, double i_th,
                                                         double gamma, double k) {
    require(t > 0.0 && noise_s > 0.0, ErrorKind::invalid_config, "linear: t and S must be positive");
    require(i1 > i0, ErrorKind::invalid_config, "linear: the |1> current i1 must exceed i0");
    double delta_i = i1 - i0;
    double scale = std::sqrt(t / noise_s);
    return {0.5 * delta_i * scale, (i_th - 0.5 * (i0 + i1)) * scale, gamma * t, k * noise_s / delta_i};
}

FidelityPair linear_fidelities(const LinearDetectorConfig &cfg) {
    validate(cfg);
    return {0.5 * std::erfc(-(cfg.r_th + cfg.s)), 0.5 * std::erfc(cfg.r_th - cfg.s)};
}

double linear_d0(const LinearDetectorConfig &cfg) {
    validate(cfg);
    if (cfg.kappa != 0.0) {
        throw Error(ErrorKind::analytic_path_unsupported,
                    "linear: outcome-resolved D0 has no closed form for kappa != 0; use the quadrature oracle");
    }
    const double r = cfg.r_th;
    const double s = cfg.s;
    if (r == kInfinity) {
        return cfg.gamma_t + s * s;
    }
    if (r == -kInfinity) {
        return kInfinity;
    }
    // ln[(erfc(-r)/2) / sqrt(F0 (1 - F1))] with F0 = erfc(-(r+s))/2 and
    // 1 - F1 = erfc(s-r)/2; the factors of 2 cancel.
    double log_ratio = log_erfc(-r) - 0.5 * (log_erfc(-(r + s)) + log_erfc(s - r));
    return std::max(0.0, cfg.gamma_t + s * s - log_ratio);
}

QndDetector linear_detector(const LinearDetectorConfig &cfg) {
    auto f = linear_fidelities(cfg);
    LinearDetectorConfig mirrored = cfg;
    mirrored.r_th = -cfg.r_th;
    return QndDetector(f.f0, f.f1, 0.0, 0.0, linear_d0(cfg), linear_d0(mirrored));
}

LinearEnsembleEta linear_ensemble_eta(const LinearDetectorConfig &cfg) {
    auto f = linear_fidelities(cfg);
    double dmin = d_min(f.f0, f.f1);
    double s2 = cfg.s * cfg.s;
    return {safe_ratio(dmin, cfg.gamma_t + s2 * (1.0 + cfg.kappa * cfg.kappa)), safe_ratio(dmin, cfg.gamma_t + s2)};
}

QndDetector phase_qubit_detector(const PhaseQubitConfig &cfg) {
    require(cfg.p >= 0.0 && cfg.p <= 1.0 && cfg.p0 >= 0.0 && cfg.p0 <= 1.0, ErrorKind::invalid_config,
            "phase qubit: p and p0 must lie in [0, 1]");
    require(std::isfinite(cfg.phi0), ErrorKind::invalid_config, "phase qubit: phi0 must be finite");
    return QndDetector::destructive(1.0 - cfg.p0, cfg.p, cfg.phi0, 0.0);
}

double visibility(double product, double d0) {
    require(product >= 0.0 && product <= 0.25 + kStateTolerance, ErrorKind::invalid_config,
            "visibility: rho00 rho11 must lie in [0, 1/4]");
    require(d0 >= 0.0, ErrorKind::invalid_config, "visibility: d0 must be >= 0");
    return std::sqrt(std::max(0.0, 1.0 - 4.0 * product * one_minus_exp(2.0 * d0)));
}

double estimate_d0_from_visibility(double v_ratio, double p, const PureState &initial, double p0) {
    require(v_ratio > 0.0 && v_ratio <= 1.0, ErrorKind::invalid_config, "visibility ratio must lie in (0, 1]");
    QndDetector det = phase_qubit_detector({p, p0, 0.0});
    auto post = apply_outcome(QubitState::from_pure(initial), det, Outcome::zero).post_state;
    double product = post->rho00() * post->rho11();
    double loss = 1.0 - v_ratio * v_ratio;
    if (loss == 0.0) {
        return 0.0;
    }
    double x = loss / (4.0 * product);
    if (!(x < 1.0)) {
        std::ostringstream msg;
        msg << "visibility ratio " << v_ratio << " is below the full-dephasing value "
            << std::sqrt(std::max(0.0, 1.0 - 4.0 * product)) << " for this state";
        throw Error(ErrorKind::inconsistent_data, msg.str());
    }
    return -0.5 * std::log1p(-x);
}

TunnelingConfig TunnelingConfig::from_rates(double gamma0, double gamma1, double t, double phi1) {
    return {gamma0 * t, gamma1 * t, phi1};
}

QndDetector tunneling_detector(const TunnelingConfig &cfg) {
    validate(cfg);
    const double a = cfg.g0t;
    const double b = cfg.g1t;
    // D1 = -ln[(2 sqrt(ab)/(a+b)) (1 - e^{-(a+b)/2}) / sqrt((1-e^{-a})(1-e^{-b}))]
    // rewritten with f(x) = (1 - e^{-x})/x so that the a -> 0 limit is exact.
    double d1 = -std::log(decay_fraction(0.5 * (a + b))) + 0.5 * std::log(decay_fraction(a)) +
                0.5 * std::log(decay_fraction(b));
    return QndDetector(std::exp(-a), one_minus_exp(b), 0.0, cfg.phi1, 0.0, std::max(0.0, d1));
}

TunnelingEnsemble tunneling_ensemble(const TunnelingConfig &cfg) {
    QndDetector det = tunneling_detector(cfg);
    const double a = cfg.g0t;
    const double b = cfg.g1t;
    const double e = std::exp(-0.5 * (a + b));
    const double one_minus_e = one_minus_exp(0.5 * (a + b));
    const double p = 2.0 * std::sqrt(a * b) / (a + b);
    const double q = (b - a) / (a + b);
    const double root_gap = (std::sqrt(b) - std::sqrt(a)) * (std::sqrt(b) - std::sqrt(a)) / (a + b);

    // 1 - |e + p e^{i phi}(1 - e)|^2 as a sum of non-negative terms.
    auto loss = [&](double phi) {
        const double m2 = std::norm(e + p * std::polar(1.0, phi) * one_minus_e);
        if (m2 < 0.5) {
            return -0.5 * std::log(m2);
        }
        double sn = std::sin(0.5 * phi);
        double x = one_minus_e * (q * q + e * (root_gap * root_gap + 4.0 * p * sn * sn));
        return coherence_loss(x);
    };
    complex factor = e + p * std::polar(1.0, cfg.phi1) * one_minus_e;
    const double d_av = loss(cfg.phi1);
    const double dmin = a == b ? 0.0 : d_min(det.f0(), det.f1());
    return {d_av, std::arg(factor), safe_ratio(dmin, d_av), safe_ratio(dmin, loss(0.0))};
}

}  // namespace qeff
