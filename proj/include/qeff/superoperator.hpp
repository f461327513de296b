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

#ifndef QEFF_SUPEROPERATOR_HPP
#define QEFF_SUPEROPERATOR_HPP

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "qeff/qnd.hpp"

namespace qeff {

using Mat2 = Eigen::Matrix<complex, 2, 2>;
using Mat4 = Eigen::Matrix<complex, 4, 4>;
using Vec4 = Eigen::Matrix<complex, 4, 1>;

inline constexpr double kStructuralTolerance = 1e-10;
inline constexpr double kExtractionTolerance = 1e-8;

/// Row-major vectorization (rho00, rho01, rho10, rho11).
Vec4 vectorize(const Mat2 &op);
Mat2 unvectorize(const Vec4 &v);
Mat2 to_matrix(const QubitState &state);

/// Two-outcome measurement channel. Each map acts on vectorized 2x2 operators:
/// vec(S[X]) = map * vec(X). Construction does not validate; call validate()
/// or the check_* functions.
class BinarySuperoperator {
   public:
    BinarySuperoperator(const Mat4 &map0, const Mat4 &map1) : maps_{map0, map1} {
    }

    /// S[X] = sum_k K X K^dagger per outcome.
    static BinarySuperoperator from_kraus(std::span<const Mat2> kraus0, std::span<const Mat2> kraus1);

    const Mat4 &map(Outcome outcome) const noexcept {
        return maps_[static_cast<int>(outcome)];
    }
    Mat4 &map(Outcome outcome) noexcept {
        return maps_[static_cast<int>(outcome)];
    }

    Mat2 act(Outcome outcome, const Mat2 &op) const;

    /// Throws Error(invalid_channel) unless both maps are Hermiticity preserving
    /// and completely positive and the pair is complete, all within `tol`.
    void validate(double tol = kStructuralTolerance) const;

   private:
    std::array<Mat4, 2> maps_;
};

struct CheckResult {
    bool ok;
    double residual;
};

/// C[(i,k),(j,l)] = <k| S[|i><j|] |l>.
Mat4 choi_matrix(const Mat4 &map);
/// Ascending eigenvalues of the Hermitian part of the Choi matrix.
Eigen::Vector4d choi_eigenvalues(const Mat4 &map);
/// Number of Choi eigenvalues above `tol`.
int choi_rank(const Mat4 &map, double tol = kStructuralTolerance);
/// Kraus operators from the Choi eigendecomposition (eigenvalues above `tol`).
std::vector<Mat2> kraus_operators(const Mat4 &map, double tol = kStructuralTolerance);

CheckResult check_hermiticity_preserving(const Mat4 &map, double tol = kStructuralTolerance);
CheckResult check_complete_positivity(const Mat4 &map, double tol = kStructuralTolerance);

/// Tr S0[X] + Tr S1[X] = Tr X for every operator X. The residual is the
/// largest violation over the four basis operators.
CheckResult check_completeness(const BinarySuperoperator &sup, double tol = kStructuralTolerance);

/// Probability Tr S[rho] and post-state S[rho]/P. Validates the channel first.
OutcomeResult apply(const BinarySuperoperator &sup, const QubitState &state, Outcome outcome);

/// Diagonal maps reproducing the QND transform. Infinite D gives a zero
/// coherence entry. Throws Error(destructive_detector) for destructive detectors.
BinarySuperoperator from_qnd(const QndDetector &det);

struct QndExtraction {
    /// Empty when the channel is not QND within tolerance.
    std::optional<QndDetector> detector;
    /// Largest entry that violates the QND structure.
    double residual;

    bool is_qnd() const noexcept {
        return detector.has_value();
    }
};

/// Recovers (F0, F1, phi0, phi1, D0, D1) from a QND channel. A zero
/// coherence gain is reported as D = +inf, phi = 0. Throws
/// Error(invalid_channel) if a coherence gain exceeds its CP bound.
QndExtraction extract_qnd(const BinarySuperoperator &sup, double tol = kExtractionTolerance);

}  // namespace qeff

#endif  // QEFF_SUPEROPERATOR_HPP
