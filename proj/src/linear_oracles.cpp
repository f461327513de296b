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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qeff/error.hpp"
#include "qeff/oracles.hpp"
#include "qeff/quadrature.hpp"

namespace qeff {

namespace {

constexpr double kCutoff = 8.0;

// Unnormalized outcome-region integrals: rho00 part, rho11 part, Re and Im of
// the coherence.
using Block = std::array<double, 4>;

struct RegionIntegrals {
    QuadResult<4> outcome0;
    QuadResult<4> outcome1;
    double tail;
};

RegionIntegrals integrate_regions(const LinearDetectorConfig &cfg, const QubitState &state, double tol,
                                  double rel_tol) {
    const double s = cfg.s;
    const double rho00 = state.rho00();
    const double rho11 = state.rho11();
    const complex rho01 = state.rho01();
    const double prior_product = rho00 * rho11;
    const double dephasing = std::exp(-cfg.gamma_t);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

    auto integrand = [&](double r) -> Block {
        double like0 = inv_sqrt_pi * std::exp(-(r + s) * (r + s));
        double like1 = inv_sqrt_pi * std::exp(-(r - s) * (r - s));
        double density = rho00 * like0 + rho11 * like1;
        if (density == 0.0) {
            return {0.0, 0.0, 0.0, 0.0};
        }
        double post00 = rho00 * like0 / density;
        double post11 = rho11 * like1 / density;
        complex post01 = 0.0;
        if (prior_product > 0.0) {
            post01 = rho01 * std::sqrt(post00 * post11 / prior_product) * dephasing *
                     std::polar(1.0, 2.0 * cfg.kappa * s * r);
        }
        return {density * post00, density * post11, density * post01.real(), density * post01.imag()};
    };

    const double lo = -kCutoff - s;
    const double hi = kCutoff + s;
    const double r = std::clamp(cfg.r_th, lo, hi);
    RegionIntegrals out{integrate_adaptive<4>(integrand, lo, r, tol, rel_tol),
                        integrate_adaptive<4>(integrand, r, hi, tol, rel_tol),
                        0.5 * std::erfc(kCutoff) + 0.5 * std::erfc(kCutoff + 2.0 * s)};
    for (const auto *q : {&out.outcome0, &out.outcome1}) {
        if (!q->converged) {
            std::ostringstream msg;
            msg << "quadrature did not reach tol=" << tol << " rel_tol=" << rel_tol << "; achieved "
                << *std::max_element(q->error.begin(), q->error.end()) << " after " << q->intervals
                << " intervals";
            throw Error(ErrorKind::accuracy, msg.str());
        }
    }
    return out;
}

double max_error(const QuadResult<4> &q) {
    return *std::max_element(q.error.begin(), q.error.end());
}

}  // namespace

LinearQuadResult quad_linear(const LinearDetectorConfig &cfg, const QubitState &state, double tol, double rel_tol) {
    linear_fidelities(cfg);  // validates
    auto regions = integrate_regions(cfg, state, tol, rel_tol);
    auto post = [](const QuadResult<4> &q, double p) {
        if (!(p > 0.0)) {
            throw Error(ErrorKind::impossible_outcome, "outcome region carries no probability for this state");
        }
        return QubitState(q.value[0] / p, complex(q.value[2], q.value[3]) / p);
    };
    const auto &q0 = regions.outcome0;
    const auto &q1 = regions.outcome1;
    double p0 = q0.value[0] + q0.value[1];
    double p1 = q1.value[0] + q1.value[1];
    return {p0,
            p1,
            post(q0, p0),
            post(q1, p1),
            std::max(max_error(q0), max_error(q1)) + regions.tail,
            q0.evaluations + q1.evaluations};
}

LinearQuadParameters quad_linear_parameters(const LinearDetectorConfig &cfg, double tol, double rel_tol) {
    linear_fidelities(cfg);
    const QubitState plus = QubitState::from_pure(PureState::plus());
    auto regions = integrate_regions(cfg, plus, tol, rel_tol);
    const auto &q0 = regions.outcome0.value;
    const auto &q1 = regions.outcome1.value;
    // For the plus state rho00 = rho11 = rho01 = 1/2.
    double f0 = 2.0 * q0[0];
    double one_minus_f1 = 2.0 * q0[1];
    double one_minus_f0 = 2.0 * q1[0];
    double f1 = 2.0 * q1[1];
    complex c0 = 2.0 * complex(q0[2], q0[3]);
    complex c1 = 2.0 * complex(q1[2], q1[3]);
    auto decoherence = [](complex c, double pa, double pb) {
        if (std::abs(c) == 0.0) {
            return kInfinity;
        }
        return -std::log(std::abs(c)) + 0.5 * (std::log(pa) + std::log(pb));
    };
    return {f0,
            f1,
            decoherence(c0, f0, one_minus_f1),
            decoherence(c1, one_minus_f0, f1),
            std::arg(c0),
            std::arg(c1),
            std::max(max_error(regions.outcome0), max_error(regions.outcome1)) + regions.tail};
}

}  // namespace qeff
