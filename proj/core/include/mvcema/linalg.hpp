#ifndef MVCEMA_LINALG_HPP
#define MVCEMA_LINALG_HPP

#include "mvcema/matrix.hpp"

namespace mvcema {

/// Orthonormal basis of the kernel of a wide full-row-rank matrix.
/// basis is ambient_dim x (ambient_dim - source_rows) with
/// basis^T basis = I and source * basis = 0, both within 1e-10.
struct NullSpaceBasis {
  Index source_rows = 0;
  Index ambient_dim = 0;
  Matrix basis;
};

/// A * A^T (symmetric positive semidefinite, rows x rows).
Matrix gram(const Matrix& a);

/// Determinant of a symmetric matrix via LDL^T with an LU fallback.
/// Tiny negative results are clamped to zero. Throws NonSymmetricError
/// if max|S - S^T| exceeds 1e-10.
double det_psd(const Matrix& s);

/// Kernel basis of a (rows < cols) matrix. Rank is tested against
/// 1e-10 relative to the largest singular value; throws RankDeficientError
/// when row rank < rows.
NullSpaceBasis null_space(const Matrix& a);

/// Upper bound on the largest eigenvalue of a symmetric matrix: exact for
/// n <= 64 (self-adjoint eigensolver), max absolute row sum beyond that.
double spectral_upper_bound(const Matrix& s);

namespace detail {
/// Shared symmetry test: max|S - S^T| <= tol.
bool is_symmetric(const Matrix& s, double tol = 1e-10);
void require_finite(const Matrix& m, const char* what);
}  // namespace detail

}  // namespace mvcema

#endif  // MVCEMA_LINALG_HPP
