#include "speclab/schatten.hpp"

#include <cmath>
#include <stdexcept>

#include "speclab/numerics.hpp"

namespace speclab {

int ceil_index(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("ceil_index: exponent must be >= 1");
  return static_cast<int>(std::ceil(p));
}

double schatten_norm(const CMatrix& A, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("schatten_norm: exponent must be >= 1");
  std::vector<double> sv = singular_values(A);
  if (sv.empty()) return 0.0;
  if (std::isinf(p)) return sv.front();
  // Scale by the largest singular value so powers stay in range.
  double top = sv.front();
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (double s : sv) sum += std::pow(s / top, p);
  return top * std::pow(sum, 1.0 / p);
}

Complex reg_det(const CMatrix& A, int k) {
  if (k < 1) throw std::invalid_argument("reg_det: order must be >= 1");
  if (A.rows() != A.cols()) throw std::invalid_argument("reg_det: matrix must be square");
  Complex out(1.0, 0.0);
  for (Complex ev : eig_dense(A).eigenvalues) {
    Complex factor = 1.0 - ev;
    Complex expo(0.0, 0.0);
    Complex power(1.0, 0.0);
    for (int i = 1; i < k; ++i) {
      power *= ev;
      expo += power / static_cast<double>(i);
    }
    out *= factor * std::exp(expo);
  }
  return out;
}

double det_growth_check(const CMatrix& A, double p) {
  double norm = schatten_norm(A, p);
  if (norm == 0.0) return 0.0;
  Complex det = reg_det(A, ceil_index(p));
  return std::log(std::abs(det)) / std::pow(norm, p);
}

double cyclic_check(const CMatrix& A, const CMatrix& B, int k) {
  if (A.cols() != B.rows() || B.cols() != A.rows())
    throw std::invalid_argument("cyclic_check: factor shapes must be n x m and m x n");
  return std::abs(reg_det(A * B, k) - reg_det(B * A, k));
}

}  // namespace speclab
