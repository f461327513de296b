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

#include "qeff/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qeff/error.hpp"
#include "qeff/models.hpp"
#include "qeff/sweep.hpp"

namespace qeff {

namespace {

struct Box {
    double s_lo, s_hi, r_lo, r_hi;
    int ns, nr;
};

std::vector<double> grid(double lo, double hi, int n) {
    if (lo == hi || n < 2) {
        return {lo};
    }
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * i / (n - 1);
    }
    v.back() = hi;
    return v;
}

double evaluate(const MaximizeSpec &spec, double s, double r) {
    QndDetector det = linear_detector({s, r, spec.gamma_t, spec.kappa});
    double v = metric_value(det, efficiency_report(det), spec.metric);
    return std::isnan(v) ? -kInfinity : v;
}

struct Best {
    double s;
    double r;
    double value;
};

Best scan(const MaximizeSpec &spec, const Box &box, Execution exec, long &evaluations) {
    const auto ss = grid(box.s_lo, box.s_hi, box.ns);
    const auto rs = grid(box.r_lo, box.r_hi, box.nr);
    const long n = static_cast<long>(ss.size() * rs.size());
    std::vector<double> values(static_cast<std::size_t>(n));
    auto at = [&](long k) { return evaluate(spec, ss[k / rs.size()], rs[k % rs.size()]); };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) num_threads(num_threads())
        for (long k = 0; k < n; ++k) {
            values[k] = at(k);
        }
    } else {
        for (long k = 0; k < n; ++k) {
            values[k] = at(k);
        }
    }
    evaluations += n;
    long arg = std::max_element(values.begin(), values.end()) - values.begin();
    return {ss[arg / rs.size()], rs[arg % rs.size()], values[arg]};
}

}  // namespace

MaximizeResult maximize_linear(const MaximizeSpec &spec, Execution exec) {
    if (!(spec.s_min >= 0.0 && spec.s_max >= spec.s_min && spec.r_max >= spec.r_min) ||
        !std::isfinite(spec.s_max) || !std::isfinite(spec.r_min) || !std::isfinite(spec.r_max)) {
        throw Error(ErrorKind::invalid_config, "maximize: need 0 <= s_min <= s_max and r_min <= r_max");
    }
    if (spec.metric != "eta0" && spec.metric != "eta1" && spec.metric != "eta") {
        throw Error(ErrorKind::invalid_config, "maximize: metric must be eta0, eta1 or eta");
    }
    long evaluations = 0;
    Box box{spec.s_min, spec.s_max, spec.r_min, spec.r_max, std::max(2, spec.grid_s), std::max(2, spec.grid_r)};
    Best best = scan(spec, box, exec, evaluations);
    double ds = box.ns > 1 ? (box.s_hi - box.s_lo) / (box.ns - 1) : 0.0;
    double dr = box.nr > 1 ? (box.r_hi - box.r_lo) / (box.nr - 1) : 0.0;
    for (int pass = 0; pass < spec.refinements; ++pass) {
        box = {std::max(spec.s_min, best.s - ds), std::min(spec.s_max, best.s + ds),
               std::max(spec.r_min, best.r - dr), std::min(spec.r_max, best.r + dr), 21, 21};
        Best candidate = scan(spec, box, exec, evaluations);
        if (candidate.value > best.value) {
            best = candidate;
        }
        ds = (box.s_hi - box.s_lo) / 20.0;
        dr = (box.r_hi - box.r_lo) / 20.0;
    }
    if (!std::isfinite(best.value)) {
        throw Error(ErrorKind::invalid_config, "maximize: metric is undefined over the whole box");
    }
    return {best.s, best.r, best.value, ds, dr, evaluations};
}

}  // namespace qeff
