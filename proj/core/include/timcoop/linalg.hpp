#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace timcoop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Relative singular-value threshold factor used by numerical_rank().
inline constexpr double kRankRelTol = 1e-10;

/// Number of singular values above max(rows, cols) * sigma_max * kRankRelTol.
/// Empty and all-zero matrices have rank 0.
int numerical_rank(const Matrix& m);

/// Horizontal concatenation. All blocks must share `rows`.
Matrix hstack(std::span<const Matrix> blocks, Eigen::Index rows);

}  // namespace timcoop
