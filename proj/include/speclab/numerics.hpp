#pragma once

#include <utility>
#include <vector>

#include "speclab/util.hpp"

namespace speclab {

/// Eigenvalues of a dense matrix, with the worst eigenpair residual
/// max_k ||A v_k - lambda_k v_k||_2 over unit eigenvectors as a quality
/// certificate.
struct EigenResult {
  std::vector<Complex> eigenvalues;  // all of them, algebraic multiplicity
  double residual = 0.0;

  /// Single-linkage clustering of the eigenvalue list: two values join a
  /// cluster when |a - b| <= rel_tol * (1 + max(|a|,|b|)).  Returns
  /// (cluster mean, count) sorted by (Re, Im).
  std::vector<std::pair<Complex, int>> clustered(double rel_tol = 1e-8) const;
};

/// Dense non-Hermitian eigensolve.  Throws std::invalid_argument on a
/// non-square input and std::runtime_error if the QR iteration fails.
EigenResult eig_dense(const CMatrix& A);

/// Singular values, nonincreasing, min(rows, cols) of them.
std::vector<double> singular_values(const CMatrix& A);

/// Solve A x = y for square A.  Throws std::invalid_argument on shape
/// mismatch and std::runtime_error naming the offending singular value when
/// A is singular or near-singular (relative residual > 1e-8).
CVector solve_dense(const CMatrix& A, const CVector& y);

/// Largest singular value; 0x0 matrices have norm 0.
double operator_norm(const CMatrix& A);

}  // namespace speclab
