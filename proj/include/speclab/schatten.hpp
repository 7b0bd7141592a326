#pragma once

#include <limits>

#include "speclab/util.hpp"

namespace speclab {

/// Smallest integer k >= p (the regularization order attached to a Schatten
/// exponent).  Requires p >= 1.
int ceil_index(double p);

/// (sum_k s_k^p)^(1/p) over the singular values; p = infinity gives the
/// operator norm.  Requires p >= 1.
double schatten_norm(const CMatrix& A, double p);

/// Regularized determinant det_k(Id - A) over the eigenvalues of A:
///   prod_j (1 - lambda_j) * exp(sum_{i=1}^{k-1} lambda_j^i / i).
/// k = 1 is the plain determinant of Id - A.
Complex reg_det(const CMatrix& A, int k);

/// log|det_k(Id-A)| / ||A||_{S_p}^p with k = ceil_index(p); the empirical
/// counterpart of the determinant growth constant.  Returns 0 for A = 0.
double det_growth_check(const CMatrix& A, double p);

/// |det_k(Id - AB) - det_k(Id - BA)| for compatible rectangular factors.
double cyclic_check(const CMatrix& A, const CMatrix& B, int k);

}  // namespace speclab
