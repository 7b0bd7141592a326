#include "speclab/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace speclab {

std::vector<std::pair<Complex, int>> EigenResult::clustered(double rel_tol) const {
  const int n = static_cast<int>(eigenvalues.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double scale = 1.0 + std::max(std::abs(eigenvalues[i]), std::abs(eigenvalues[j]));
      if (std::abs(eigenvalues[i] - eigenvalues[j]) <= rel_tol * scale)
        parent[find(i)] = find(j);
    }
  std::vector<std::pair<Complex, int>> out;
  for (int r = 0; r < n; ++r) {
    if (find(r) != r) continue;
    Complex sum = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i)
      if (find(i) == r) {
        sum += eigenvalues[i];
        ++count;
      }
    out.emplace_back(sum / static_cast<double>(count), count);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
    return a.first.imag() < b.first.imag();
  });
  return out;
}

EigenResult eig_dense(const CMatrix& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("eig_dense: matrix must be square, got " +
                                std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  EigenResult res;
  if (A.rows() == 0) return res;
  Eigen::ComplexEigenSolver<CMatrix> solver(A, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_dense: eigenvalue iteration did not converge");
  const CVector& vals = solver.eigenvalues();
  const CMatrix& vecs = solver.eigenvectors();
  CMatrix defect = A * vecs - vecs * vals.asDiagonal();
  res.eigenvalues.assign(vals.data(), vals.data() + vals.size());
  res.residual = 0.0;
  for (int k = 0; k < vals.size(); ++k) {
    double nv = vecs.col(k).norm();
    if (nv > 0.0) res.residual = std::max(res.residual, defect.col(k).norm() / nv);
  }
  return res;
}

std::vector<double> singular_values(const CMatrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return {};
  Eigen::JacobiSVD<CMatrix> svd(A);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

CVector solve_dense(const CMatrix& A, const CVector& y) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("solve_dense: matrix must be square");
  if (A.rows() != y.size())
    throw std::invalid_argument("solve_dense: rhs length " + std::to_string(y.size()) +
                                " does not match matrix dimension " + std::to_string(A.rows()));
  if (A.rows() == 0) return CVector(0);
  Eigen::PartialPivLU<CMatrix> lu(A);
  CVector x = lu.solve(y);
  // A NaN solution poisons the scale factor too, so test the residual first:
  // a failed factorisation must never masquerade as a zero residual.
  double resid = (A * x - y).norm();
  double denom = A.norm() * x.norm() + y.norm();
  bool ok = std::isfinite(resid) && (denom > 0.0 ? resid <= 1e-8 * denom : resid == 0.0);
  if (!ok) {
    // Diagnose: the solve failed because A is (near) singular; report how.
    std::vector<double> sv = singular_values(A);
    std::ostringstream msg;
    msg << "solve_dense: matrix is singular or near-singular, smallest singular value "
        << (sv.empty() ? 0.0 : sv.back());
    throw std::runtime_error(msg.str());
  }
  return x;
}

double operator_norm(const CMatrix& A) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(A);
  return svd.singularValues()(0);
}

}  // namespace speclab
