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

#include "qeff/superoperator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qeff/error.hpp"

namespace qeff {

Vec4 vectorize(const Mat2 &op) {
    Vec4 v;
    v << op(0, 0), op(0, 1), op(1, 0), op(1, 1);
    return v;
}

Mat2 unvectorize(const Vec4 &v) {
    Mat2 m;
    m << v(0), v(1), v(2), v(3);
    return m;
}

Mat2 to_matrix(const QubitState &state) {
    Mat2 m;
    m << state.rho00(), state.rho01(), state.rho10(), state.rho11();
    return m;
}

namespace {

Mat4 kraus_to_map(std::span<const Mat2> kraus) {
    Mat4 map = Mat4::Zero();
    for (const Mat2 &k : kraus) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        map(2 * i + j, 2 * a + b) += k(i, a) * std::conj(k(j, b));
                    }
                }
            }
        }
    }
    return map;
}

Mat2 basis_op(int i, int j) {
    Mat2 m = Mat2::Zero();
    m(i, j) = 1.0;
    return m;
}

}  // namespace

BinarySuperoperator BinarySuperoperator::from_kraus(std::span<const Mat2> kraus0, std::span<const Mat2> kraus1) {
    return BinarySuperoperator(kraus_to_map(kraus0), kraus_to_map(kraus1));
}

Mat2 BinarySuperoperator::act(Outcome outcome, const Mat2 &op) const {
    return unvectorize(map(outcome) * vectorize(op));
}

void BinarySuperoperator::validate(double tol) const {
    for (Outcome o : kOutcomes) {
        auto herm = check_hermiticity_preserving(map(o), tol);
        if (!herm.ok) {
            std::ostringstream msg;
            msg << "map " << static_cast<int>(o) << " is not Hermiticity preserving (residual " << herm.residual << ")";
            throw Error(ErrorKind::invalid_channel, msg.str());
        }
        auto cp = check_complete_positivity(map(o), tol);
        if (!cp.ok) {
            std::ostringstream msg;
            msg << "map " << static_cast<int>(o) << " is not completely positive (min Choi eigenvalue "
                << -cp.residual << ")";
            throw Error(ErrorKind::invalid_channel, msg.str());
        }
    }
    auto complete = check_completeness(*this, tol);
    if (!complete.ok) {
        std::ostringstream msg;
        msg << "completeness violated (residual " << complete.residual << ")";
        throw Error(ErrorKind::invalid_channel, msg.str());
    }
}

Mat4 choi_matrix(const Mat4 &map) {
    Mat4 c;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    c(2 * i + k, 2 * j + l) = map(2 * k + l, 2 * i + j);
                }
            }
        }
    }
    return c;
}

Eigen::Vector4d choi_eigenvalues(const Mat4 &map) {
    Mat4 c = choi_matrix(map);
    Mat4 h = 0.5 * (c + c.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

int choi_rank(const Mat4 &map, double tol) {
    auto ev = choi_eigenvalues(map);
    return static_cast<int>((ev.array() > tol).count());
}

std::vector<Mat2> kraus_operators(const Mat4 &map, double tol) {
    Mat4 c = choi_matrix(map);
    Mat4 h = 0.5 * (c + c.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> solver(h);
    std::vector<Mat2> out;
    for (int n = 0; n < 4; ++n) {
        double lambda = solver.eigenvalues()(n);
        if (lambda <= tol) {
            continue;
        }
        Vec4 v = solver.eigenvectors().col(n) * std::sqrt(lambda);
        Mat2 k;
        for (int i = 0; i < 2; ++i) {
            for (int kk = 0; kk < 2; ++kk) {
                k(kk, i) = v(2 * i + kk);
            }
        }
        out.push_back(k);
    }
    return out;
}

CheckResult check_hermiticity_preserving(const Mat4 &map, double tol) {
    Mat4 c = choi_matrix(map);
    double residual = (c - c.adjoint()).cwiseAbs().maxCoeff();
    return {residual <= tol, residual};
}

CheckResult check_complete_positivity(const Mat4 &map, double tol) {
    double min_ev = choi_eigenvalues(map).minCoeff();
    double residual = std::max(0.0, -min_ev);
    return {residual <= tol, residual};
}

CheckResult check_completeness(const BinarySuperoperator &sup, double tol) {
    Mat4 total = sup.map(Outcome::zero) + sup.map(Outcome::one);
    double residual = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            // Trace of the image of |i><j| is the sum of rows (0,0) and (1,1).
            complex tr = total(0, 2 * i + j) + total(3, 2 * i + j);
            complex expected = i == j ? 1.0 : 0.0;
            residual = std::max(residual, std::abs(tr - expected));
        }
    }
    return {residual <= tol, residual};
}

OutcomeResult apply(const BinarySuperoperator &sup, const QubitState &state, Outcome outcome) {
    sup.validate();
    Mat2 out = sup.act(outcome, to_matrix(state));
    double p = out.trace().real();
    if (!(p > 0.0)) {
        throw Error(ErrorKind::impossible_outcome, "outcome has zero probability for this state");
    }
    return {outcome, p, QubitState(out(0, 0).real() / p, out(0, 1) / p)};
}

BinarySuperoperator from_qnd(const QndDetector &det) {
    if (det.destroys_on_1()) {
        throw Error(ErrorKind::destructive_detector, "a destructive detector has no outcome-1 superoperator");
    }
    Mat4 m0 = Mat4::Zero();
    Mat4 m1 = Mat4::Zero();
    complex c0 = det.coherence_gain(Outcome::zero);
    complex c1 = det.coherence_gain(Outcome::one);
    m0.diagonal() << det.f0(), c0, std::conj(c0), 1.0 - det.f1();
    m1.diagonal() << 1.0 - det.f0(), c1, std::conj(c1), det.f1();
    return BinarySuperoperator(m0, m1);
}

QndExtraction extract_qnd(const BinarySuperoperator &sup, double tol) {
    double residual = 0.0;
    for (Outcome o : kOutcomes) {
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Mat2 img = sup.act(o, basis_op(i, j));
                for (int k = 0; k < 2; ++k) {
                    for (int l = 0; l < 2; ++l) {
                        if (k == i && l == j) {
                            if (i == j) {
                                residual = std::max(residual, std::abs(img(k, l).imag()));
                            }
                            continue;
                        }
                        residual = std::max(residual, std::abs(img(k, l)));
                    }
                }
            }
        }
    }
    if (residual > tol) {
        return {std::nullopt, residual};
    }

    auto clamp_unit = [tol](double f) {
        if (f < -tol || f > 1.0 + tol) {
            throw Error(ErrorKind::invalid_channel, "population gain outside [0, 1]");
        }
        return std::clamp(f, 0.0, 1.0);
    };
    const Mat4 &m0 = sup.map(Outcome::zero);
    const Mat4 &m1 = sup.map(Outcome::one);
    double f0 = clamp_unit(m0(0, 0).real());
    double f1 = clamp_unit(m1(3, 3).real());
    std::array<double, 2> bound = {std::sqrt(f0 * clamp_unit(m0(3, 3).real())),
                                   std::sqrt(clamp_unit(m1(0, 0).real()) * f1)};
    std::array<complex, 2> gain = {m0(1, 1), m1(1, 1)};
    std::array<double, 2> d{};
    std::array<double, 2> phi{};
    for (int n = 0; n < 2; ++n) {
        double mod = std::abs(gain[n]);
        if (mod > bound[n] * (1.0 + tol) + tol) {
            std::ostringstream msg;
            msg << "coherence gain " << mod << " of outcome " << n << " exceeds its CP bound " << bound[n];
            throw Error(ErrorKind::invalid_channel, msg.str());
        }
        if (mod == 0.0 || bound[n] == 0.0) {
            d[n] = kInfinity;
            phi[n] = 0.0;
        } else {
            d[n] = std::max(0.0, -std::log(mod / bound[n]));
            phi[n] = std::arg(gain[n]);
        }
    }
    return {QndDetector(f0, f1, phi[0], phi[1], d[0], d[1]), residual};
}

}  // namespace qeff
