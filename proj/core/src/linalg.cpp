#include "timcoop/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace timcoop {

int numerical_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double tol = static_cast<double>(std::max(m.rows(), m.cols())) * sv(0) * kRankRelTol;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  return rank;
}

Matrix hstack(std::span<const Matrix> blocks, Eigen::Index rows) {
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack: row count mismatch");
    cols += b.cols();
  }
  Matrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace timcoop
