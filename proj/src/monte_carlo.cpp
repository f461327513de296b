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

#include <cmath>
#include <limits>
#include <vector>

#include "qeff/error.hpp"
#include "qeff/oracles.hpp"
#include "qeff/rng.hpp"

namespace qeff {

namespace {

struct LinearTally {
    std::int64_t n = 0;
    std::int64_t state0 = 0;
    std::int64_t state0_out0 = 0;
    std::int64_t state1_out1 = 0;
    std::int64_t out0 = 0;

    LinearTally &operator+=(const LinearTally &o) {
        n += o.n;
        state0 += o.state0;
        state0_out0 += o.state0_out0;
        state1_out1 += o.state1_out1;
        out0 += o.out0;
        return *this;
    }
};

McEstimate bernoulli(std::int64_t hits, std::int64_t n, std::uint64_t seed) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (n == 0) {
        return {nan, nan, 0, seed};
    }
    double p = static_cast<double>(hits) / static_cast<double>(n);
    if (n < 2) {
        return {p, nan, n, seed};
    }
    double dn = static_cast<double>(n);
    double sd = std::sqrt(p * (1.0 - p) * dn / (dn - 1.0));
    return {p, sd / std::sqrt(dn), n, seed};
}

void require_samples(std::int64_t n) {
    if (n < 1000) {
        throw Error(ErrorKind::invalid_config, "Monte Carlo needs at least 1000 samples");
    }
}

std::int64_t chunk_count(std::int64_t n) {
    return (n + kMcChunk - 1) / kMcChunk;
}

// Runs `kernel(chunk, begin, end)` for every chunk, in parallel or serially,
// and sums the per-chunk tallies in chunk order.
template <class Tally, class Kernel>
Tally run_chunks(std::int64_t n, Execution exec, Kernel kernel) {
    const std::int64_t chunks = chunk_count(n);
    std::vector<Tally> partial(static_cast<std::size_t>(chunks));
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) num_threads(num_threads())
        for (std::int64_t c = 0; c < chunks; ++c) {
            partial[c] = kernel(c, c * kMcChunk, std::min(n, (c + 1) * kMcChunk));
        }
    } else {
        for (std::int64_t c = 0; c < chunks; ++c) {
            partial[c] = kernel(c, c * kMcChunk, std::min(n, (c + 1) * kMcChunk));
        }
    }
    Tally total{};
    for (const auto &t : partial) {
        total += t;
    }
    return total;
}

struct Count {
    std::int64_t hits = 0;
    Count &operator+=(const Count &o) {
        hits += o.hits;
        return *this;
    }
};

}  // namespace

LinearMcResult mc_linear(const LinearDetectorConfig &cfg, const QubitState &state, std::int64_t n,
                         std::uint64_t seed, Execution exec) {
    require_samples(n);
    linear_fidelities(cfg);
    const double rho00 = state.rho00();
    const double s = cfg.s;
    const double r_th = cfg.r_th;
    const double sigma = std::sqrt(0.5);

    auto kernel = [&](std::int64_t chunk, std::int64_t begin, std::int64_t end) {
        CounterRng rng(seed, static_cast<std::uint64_t>(chunk));
        LinearTally t;
        for (std::int64_t i = begin; i < end; ++i) {
            bool is0 = rng.uniform() < rho00;
            double r = (is0 ? -s : s) + sigma * rng.normal();
            bool out0 = r < r_th;
            t.n += 1;
            t.state0 += is0;
            t.state0_out0 += is0 && out0;
            t.state1_out1 += !is0 && !out0;
            t.out0 += out0;
        }
        return t;
    };
    LinearTally t = run_chunks<LinearTally>(n, exec, kernel);
    const std::int64_t state1 = t.n - t.state0;
    const std::int64_t out1 = t.n - t.out0;
    const std::int64_t state0_out1 = t.state0 - t.state0_out0;
    return {bernoulli(t.out0, t.n, seed), bernoulli(t.state0_out0, t.state0, seed),
            bernoulli(t.state1_out1, state1, seed), bernoulli(t.state0_out0, t.out0, seed),
            bernoulli(state0_out1, out1, seed)};
}

McEstimate mc_detector_outcomes(const QndDetector &det, const QubitState &state, std::int64_t n,
                                std::uint64_t seed, Execution exec) {
    require_samples(n);
    const double p0 = outcome_probabilities(state, det).p0;
    auto kernel = [&](std::int64_t chunk, std::int64_t begin, std::int64_t end) {
        CounterRng rng(seed, static_cast<std::uint64_t>(chunk));
        Count c;
        for (std::int64_t i = begin; i < end; ++i) {
            c.hits += rng.uniform() < p0;
        }
        return c;
    };
    Count c = run_chunks<Count>(n, exec, kernel);
    return bernoulli(c.hits, n, seed);
}

}  // namespace qeff
