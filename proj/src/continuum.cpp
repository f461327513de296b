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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "qeff/error.hpp"
#include "qeff/oracles.hpp"

namespace qeff {

namespace {

constexpr int kBlocks = 64;
constexpr double kNormTolerance = 1e-8;

// One Cayley step (I + cH) psi' = (I - cH) psi with c = i tau / 2 for the
// arrowhead Hamiltonian H = [[0, T* 1^T], [T 1, diag(eps)]], solved in O(M).
struct CayleyStep {
    complex c;
    complex ct;       // c T
    complex ct_conj;  // c T*
    complex denom_a;
    std::vector<complex> num;      // 1 - c eps_k
    std::vector<complex> inv_den;  // 1 / (1 + c eps_k)

    CayleyStep(double tau, complex coupling, const std::vector<double> &eps)
        : c(0.0, 0.5 * tau), ct(c * coupling), ct_conj(c * std::conj(coupling)) {
        num.resize(eps.size());
        inv_den.resize(eps.size());
        complex s2 = 0.0;
        for (std::size_t k = 0; k < eps.size(); ++k) {
            num[k] = 1.0 - c * eps[k];
            inv_den[k] = 1.0 / (1.0 + c * eps[k]);
            s2 += inv_den[k];
        }
        denom_a = 1.0 - c * c * std::norm(coupling) * s2;
    }
};

struct Trajectory {
    complex a = 1.0;
    std::vector<complex> b;
    complex sum_b = 0.0;
    double norm_drift = 0.0;
    double min_a2 = 1.0;
    bool revived = false;

    // Returns false if the step breaks an invariant.
    bool record(double b_norm, bool detect_recurrence) {
        double a2 = std::norm(a);
        norm_drift = std::max(norm_drift, std::abs(a2 + b_norm - 1.0));
        if (detect_recurrence && a2 > min_a2 + 1e-3 * (1.0 - min_a2) + 1e-12) {
            revived = true;
        }
        min_a2 = std::min(min_a2, a2);
        return norm_drift <= kNormTolerance && !revived;
    }
};

void step_serial(Trajectory &tr, const CayleyStep &st) {
    const std::size_t m = tr.b.size();
    const complex y_a = tr.a - st.ct_conj * tr.sum_b;
    const complex ct_a = st.ct * tr.a;
    complex acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        complex y = st.num[k] * tr.b[k] - ct_a;
        tr.b[k] = y;
        acc += y * st.inv_den[k];
    }
    const complex x_a = (y_a - st.ct_conj * acc) / st.denom_a;
    const complex ct_x = st.ct * x_a;
    complex sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        tr.b[k] = (tr.b[k] - ct_x) * st.inv_den[k];
        sum += tr.b[k];
    }
    tr.a = x_a;
    tr.sum_b = sum;
}

double norm_serial(const std::vector<complex> &b) {
    double n = 0.0;
    for (const auto &x : b) {
        n += std::norm(x);
    }
    return n;
}

std::vector<double> level_energies(const ContinuumDiscretization &disc) {
    std::vector<double> eps(static_cast<std::size_t>(disc.levels));
    const double de = disc.spacing();
    for (int k = 0; k < disc.levels; ++k) {
        eps[k] = -0.5 * disc.bandwidth + k * de;
    }
    return eps;
}

}  // namespace

void ContinuumDiscretization::validate(double t, double gamma1) const {
    std::ostringstream msg;
    if (levels < 3 || !(bandwidth > 0.0) || !(dt >= 0.0)) {
        msg << "need levels >= 3, bandwidth > 0 and dt >= 0";
    } else if (bandwidth < 100.0 * gamma1) {
        msg << "bandwidth " << bandwidth << " is below 100 Gamma1 = " << 100.0 * gamma1;
    } else if (spacing() * t > 1.0) {
        msg << "level spacing " << spacing() << " times t = " << t << " exceeds 1; the continuum revives";
    } else {
        return;
    }
    throw Error(ErrorKind::discretization, msg.str());
}

ContinuumBranch evolve_continuum_branch(double gamma, complex phase, const ContinuumDiscretization &disc, double t,
                                        const ContinuumOptions &options) {
    if (!(gamma >= 0.0) || !(t > 0.0) || disc.levels < 3 || !(disc.bandwidth > 0.0)) {
        throw Error(ErrorKind::invalid_config, "continuum: need gamma >= 0, t > 0, levels >= 3, bandwidth > 0");
    }
    const std::vector<double> eps = level_energies(disc);
    const double density = 1.0 / disc.spacing();
    const complex coupling = phase * std::sqrt(gamma / (2.0 * std::numbers::pi * density));

    const double dt_target = disc.dt > 0.0 ? disc.dt : 0.05 / disc.bandwidth;
    const long steps = static_cast<long>(std::ceil(t / dt_target - 1e-9));
    const double h = t / static_cast<double>(steps);

    // Fourth-order triple jump: x1, x0, x1 with 2 x1 + x0 = 1.
    const double cbrt2 = std::cbrt(2.0);
    const double x1 = 1.0 / (2.0 - cbrt2);
    const double x0 = -cbrt2 / (2.0 - cbrt2);
    const CayleyStep outer(x1 * h, coupling, eps);
    const CayleyStep inner(x0 * h, coupling, eps);
    const std::array<const CayleyStep *, 3> stages = {&outer, &inner, &outer};

    Trajectory tr;
    tr.b.assign(eps.size(), complex(0.0));
    const std::size_t m = eps.size();
    bool ok = true;

    if (options.exec == Execution::serial) {
        for (long n = 0; n < steps && ok; ++n) {
            for (const CayleyStep *st : stages) {
                step_serial(tr, *st);
            }
            ok = tr.record(norm_serial(tr.b), options.detect_recurrence);
        }
    } else {
        const int blocks = static_cast<int>(std::min<std::size_t>(kBlocks, m));
        std::vector<complex> part_acc(blocks);
        std::vector<complex> part_sum(blocks);
        std::vector<double> part_norm(blocks);
        complex y_a = 0.0;
        complex x_a = 0.0;
        auto block_range = [m, blocks](int blk) {
            std::size_t begin = m * blk / blocks;
            std::size_t end = m * (blk + 1) / blocks;
            return std::pair{begin, end};
        };
#pragma omp parallel num_threads(num_threads())
        for (long n = 0; n < steps; ++n) {
            for (const CayleyStep *st : stages) {
#pragma omp single
                y_a = tr.a - st->ct_conj * tr.sum_b;

                const complex ct_a = st->ct * tr.a;
#pragma omp for schedule(static)
                for (int blk = 0; blk < blocks; ++blk) {
                    auto [begin, end] = block_range(blk);
                    complex acc = 0.0;
                    for (std::size_t k = begin; k < end; ++k) {
                        complex y = st->num[k] * tr.b[k] - ct_a;
                        tr.b[k] = y;
                        acc += y * st->inv_den[k];
                    }
                    part_acc[blk] = acc;
                }

#pragma omp single
                {
                    complex acc = 0.0;
                    for (int blk = 0; blk < blocks; ++blk) {
                        acc += part_acc[blk];
                    }
                    x_a = (y_a - st->ct_conj * acc) / st->denom_a;
                }

                const complex ct_x = st->ct * x_a;
#pragma omp for schedule(static)
                for (int blk = 0; blk < blocks; ++blk) {
                    auto [begin, end] = block_range(blk);
                    complex sum = 0.0;
                    double norm = 0.0;
                    for (std::size_t k = begin; k < end; ++k) {
                        complex x = (tr.b[k] - ct_x) * st->inv_den[k];
                        tr.b[k] = x;
                        sum += x;
                        norm += std::norm(x);
                    }
                    part_sum[blk] = sum;
                    part_norm[blk] = norm;
                }

#pragma omp single
                {
                    complex sum = 0.0;
                    for (int blk = 0; blk < blocks; ++blk) {
                        sum += part_sum[blk];
                    }
                    tr.a = x_a;
                    tr.sum_b = sum;
                }
            }
#pragma omp single
            {
                double norm = 0.0;
                for (int blk = 0; blk < blocks; ++blk) {
                    norm += part_norm[blk];
                }
                ok = tr.record(norm, options.detect_recurrence);
            }
            if (!ok) {
                break;
            }
        }
    }

    if (tr.norm_drift > kNormTolerance) {
        std::ostringstream msg;
        msg << "norm drift " << tr.norm_drift << " exceeds " << kNormTolerance << " (dt=" << h << ")";
        throw Error(ErrorKind::stepper_accuracy, msg.str());
    }
    if (tr.revived) {
        std::ostringstream msg;
        msg << "well amplitude revived (|a|^2 rose above its running minimum " << tr.min_a2
            << "); the discretized continuum recurs before t=" << t;
        throw Error(ErrorKind::discretization, msg.str());
    }
    return {tr.a, std::move(tr.b), tr.norm_drift, steps};
}

ContinuumResult solve_discretized_continuum(const TunnelingConfig &cfg, const ContinuumDiscretization &disc,
                                            double t, const ContinuumOptions &options) {
    tunneling_detector(cfg);  // validates
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw Error(ErrorKind::invalid_config, "continuum: t must be positive and finite");
    }
    const double gamma0 = cfg.g0t / t;
    const double gamma1 = cfg.g1t / t;
    if (options.validate_discretization) {
        disc.validate(t, gamma1);
    }
    ContinuumBranch b0 = evolve_continuum_branch(gamma0, std::polar(1.0, cfg.phi1), disc, t, options);
    ContinuumBranch b1 = evolve_continuum_branch(gamma1, 1.0, disc, t, options);

    complex overlap = 0.0;
    double n0 = 0.0;
    double n1 = 0.0;
    for (std::size_t k = 0; k < b0.b.size(); ++k) {
        overlap += b0.b[k] * std::conj(b1.b[k]);
        n0 += std::norm(b0.b[k]);
        n1 += std::norm(b1.b[k]);
    }
    double d1 = std::numeric_limits<double>::quiet_NaN();
    double phi1 = 0.0;
    if (n0 > 0.0 && n1 > 0.0 && std::abs(overlap) > 0.0) {
        d1 = -std::log(std::abs(overlap)) + 0.5 * std::log(n0 * n1);
        phi1 = std::arg(overlap);
    }
    const double density = 1.0 / disc.spacing();
    ContinuumResult out;
    out.f0 = std::norm(b0.a);
    out.f1 = 1.0 - std::norm(b1.a);
    out.d1 = d1;
    out.phi1 = phi1;
    out.overlap = overlap;
    out.phi0 = std::arg(b0.a * std::conj(b1.a));
    out.norm_drift = std::max(b0.norm_drift, b1.norm_drift);
    out.steps = b1.steps;
    out.dt = t / static_cast<double>(b1.steps);
    out.levels = disc.levels;
    out.bandwidth = disc.bandwidth;
    out.coupling0 = std::sqrt(gamma0 / (2.0 * std::numbers::pi * density));
    out.coupling1 = std::sqrt(gamma1 / (2.0 * std::numbers::pi * density));
    return out;
}

ContinuumResult solve_discretized_continuum(const TunnelingConfig &cfg, const ContinuumDiscretization &disc,
                                            const ContinuumOptions &options) {
    return solve_discretized_continuum(cfg, disc, cfg.g1t, options);
}

}  // namespace qeff
