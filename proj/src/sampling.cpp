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

#include "qeff/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace qeff {

namespace {

double edge_or_uniform(CounterRng &rng, double lo, double hi) {
    double u = rng.uniform();
    if (u < 0.05) {
        return lo;
    }
    if (u < 0.10) {
        return hi;
    }
    return lo + (hi - lo) * rng.uniform();
}

double random_phase(CounterRng &rng) {
    return std::numbers::pi * (2.0 * rng.uniform() - 1.0);
}

double random_decoherence(CounterRng &rng, bool allow_infinite) {
    double u = rng.uniform();
    if (u < 0.1) {
        return 0.0;
    }
    if (allow_infinite && u < 0.15) {
        return kInfinity;
    }
    return -std::log(1.0 - rng.uniform()) * (rng.uniform() < 0.5 ? 0.1 : 2.0);
}

complex gaussian(CounterRng &rng) {
    return {rng.normal(), rng.normal()};
}

}  // namespace

QndDetector random_detector(CounterRng &rng, bool allow_infinite_d) {
    double f0 = edge_or_uniform(rng, 0.0, 1.0);
    double f1 = edge_or_uniform(rng, 0.0, 1.0);
    double phi0 = random_phase(rng);
    double phi1 = rng.uniform() < 0.1 ? phi0 : random_phase(rng);
    double d0 = random_decoherence(rng, allow_infinite_d);
    double d1 = random_decoherence(rng, allow_infinite_d);
    return QndDetector(f0, f1, phi0, phi1, d0, d1);
}

QubitState random_state(CounterRng &rng) {
    double rho00 = edge_or_uniform(rng, 0.0, 1.0);
    double bound = std::sqrt(rho00 * (1.0 - rho00));
    double modulus = rng.uniform() < 0.1 ? bound : bound * rng.uniform();
    return QubitState(rho00, std::polar(modulus, random_phase(rng)));
}

BinarySuperoperator random_channel(CounterRng &rng) {
    std::array<Mat2, 4> a;
    Mat2 total = Mat2::Zero();
    for (auto &k : a) {
        k << gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng);
        total += k.adjoint() * k;
    }
    Eigen::SelfAdjointEigenSolver<Mat2> solver(total);
    Mat2 inv_sqrt = solver.operatorInverseSqrt();
    for (auto &k : a) {
        k = k * inv_sqrt;
    }
    return BinarySuperoperator::from_kraus(std::span<const Mat2>(a.data(), 2), std::span<const Mat2>(a.data() + 2, 2));
}

}  // namespace qeff
