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

#ifndef QEFF_QUADRATURE_HPP
#define QEFF_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace qeff {

/// Result of a vector-valued integral; `error` is the largest component
/// error estimate.
template <std::size_t N>
struct QuadResult {
    std::array<double, N> value{};
    std::array<double, N> error{};
    int evaluations = 0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

template <std::size_t N>
struct Segment {
    double a;
    double b;
    std::array<double, N> value;
    std::array<double, N> error;
    double worst;

    bool operator<(const Segment &other) const {
        return worst < other.worst;
    }
};

template <std::size_t N, class F>
Segment<N> gk15(F &f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using Gauss = boost::math::quadrature::gauss<double, 7>;
    // Nodes ascend from 0; the Gauss nodes are the even Kronrod indices.
    const auto &xk = Kronrod::abscissa();
    const auto &wk = Kronrod::weights();
    const auto &wg = Gauss::weights();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, N> kronrod{};
    std::array<double, N> gauss{};
    auto fc = f(center);
    for (std::size_t k = 0; k < N; ++k) {
        kronrod[k] = wk[0] * fc[k];
        gauss[k] = wg[0] * fc[k];
    }
    for (std::size_t j = 1; j < xk.size(); ++j) {
        double dx = half * xk[j];
        auto f1 = f(center - dx);
        auto f2 = f(center + dx);
        for (std::size_t k = 0; k < N; ++k) {
            double sum = f1[k] + f2[k];
            kronrod[k] += wk[j] * sum;
            if (j % 2 == 0) {
                gauss[k] += wg[j / 2] * sum;
            }
        }
    }
    Segment<N> seg{a, b, {}, {}, 0.0};
    for (std::size_t k = 0; k < N; ++k) {
        seg.value[k] = kronrod[k] * half;
        seg.error[k] = std::abs((kronrod[k] - gauss[k]) * half);
        seg.worst = std::max(seg.worst, seg.error[k]);
    }
    return seg;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of a vector-valued
/// integrand over [a, b]. `f(x)` returns std::array<double, N>. Bisects the
/// interval with the largest error until every component satisfies
/// error <= max(abs_tol, rel_tol * |value|) or `max_intervals` is reached.
template <std::size_t N, class F>
QuadResult<N> integrate_adaptive(F f, double a, double b, double abs_tol, double rel_tol = 0.0,
                                 int max_intervals = 4000) {
    QuadResult<N> out;
    if (!(b > a)) {
        out.converged = true;
        return out;
    }
    std::priority_queue<detail::Segment<N>> queue;
    queue.push(detail::gk15<N>(f, a, b));
    out.evaluations = 15;

    std::array<double, N> value = queue.top().value;
    std::array<double, N> error = queue.top().error;
    auto within = [&]() {
        for (std::size_t k = 0; k < N; ++k) {
            if (error[k] > std::max(abs_tol, rel_tol * std::abs(value[k]))) {
                return false;
            }
        }
        return true;
    };

    while (!within() && static_cast<int>(queue.size()) < max_intervals) {
        auto worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gk15<N>(f, worst.a, mid);
        auto right = detail::gk15<N>(f, mid, worst.b);
        for (std::size_t k = 0; k < N; ++k) {
            value[k] += left.value[k] + right.value[k] - worst.value[k];
            error[k] += left.error[k] + right.error[k] - worst.error[k];
        }
        queue.push(left);
        queue.push(right);
        out.evaluations += 30;
    }
    out.converged = within();
    out.intervals = static_cast<int>(queue.size());

    // Re-sum from scratch so the running updates leave no rounding residue.
    out.value = {};
    out.error = {};
    while (!queue.empty()) {
        const auto &s = queue.top();
        for (std::size_t k = 0; k < N; ++k) {
            out.value[k] += s.value[k];
            out.error[k] += s.error[k];
        }
        queue.pop();
    }
    return out;
}

}  // namespace qeff

#endif  // QEFF_QUADRATURE_HPP
