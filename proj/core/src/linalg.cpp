#include "mvcema/linalg.hpp"

#include <cmath>

#include "mvcema/errors.hpp"

namespace mvcema {

namespace detail {

bool is_symmetric(const Matrix& s, double tol) {
  if (s.rows() != s.cols()) return false;
  return (s - s.transpose()).cwiseAbs().maxCoeff() <= tol;
}

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw ValidationError(std::string(what) + ": non-finite entries");
  }
}

}  // namespace detail

Matrix gram(const Matrix& a) {
  detail::require_finite(a, "gram");
  Matrix g = a * a.transpose();
  // Symmetrize away the rounding skew so downstream symmetry checks hold.
  g = 0.5 * (g + g.transpose().eval());
  return g;
}

double det_psd(const Matrix& s) {
  detail::require_finite(s, "det_psd");
  if (!detail::is_symmetric(s)) {
    throw NonSymmetricError("det_psd: matrix is not symmetric within 1e-10");
  }
  Eigen::LDLT<Matrix> ldlt(s);
  double det;
  if (ldlt.info() == Eigen::Success) {
    det = ldlt.vectorD().prod();
  } else {
    det = Eigen::PartialPivLU<Matrix>(s).determinant();
  }
  if (det < 0.0 && det > -1e-12) det = 0.0;
  return det;
}

NullSpaceBasis null_space(const Matrix& a) {
  detail::require_finite(a, "null_space");
  const Index rows = a.rows();
  const Index cols = a.cols();
  if (rows >= cols) {
    throw ValidationError("null_space: expected a wide matrix (rows < cols)");
  }
  // QR of A^T: the leading rank columns of Q span range(A^T), the rest its
  // orthogonal complement, i.e. the kernel of A.
  Eigen::ColPivHouseholderQR<Matrix> qr(a.transpose());
  const Matrix& r = qr.matrixR();
  const double pivot_max = std::abs(r(0, 0));
  Index rank = 0;
  for (Index i = 0; i < rows; ++i) {
    if (std::abs(r(i, i)) > 1e-10 * pivot_max) ++rank;
  }
  if (rank < rows) {
    throw RankDeficientError("null_space: row rank " + std::to_string(rank) +
                             " < " + std::to_string(rows));
  }
  Matrix q = qr.householderQ();
  NullSpaceBasis out;
  out.source_rows = rows;
  out.ambient_dim = cols;
  out.basis = q.rightCols(cols - rows);
  return out;
}

double spectral_upper_bound(const Matrix& s) {
  detail::require_finite(s, "spectral_upper_bound");
  if (!detail::is_symmetric(s)) {
    throw NonSymmetricError(
        "spectral_upper_bound: matrix is not symmetric within 1e-10");
  }
  if (s.rows() <= 64) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  }
  return s.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace mvcema
