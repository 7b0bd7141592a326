#include "speclab/detfun.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "speclab/schatten.hpp"

namespace speclab {

DetSetup::DetSetup(const FreeOperatorModel& model, const PotentialField& V, double p, double b)
    : model_(model), p_(p) {
  if (!(p >= 1.0)) throw std::invalid_argument("DetSetup: exponent must be >= 1");
  k_ = ceil_index(p);
  v_lp_ = lp_norm(V, p);
  free_pos_ = free_dense(model_, Basis::Position);
  pot_pos_ = potential_dense(V);
  pert_pos_ = perturbed(free_pos_, pot_pos_);
  b_ = b > 0.0 ? b : find_b_star(V, model_, p).b_star;

  // Free eigenbasis.  D0 is Hermitian, so the spectral data is exact enough
  // to run the resolvent through a diagonal.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(free_pos_);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("DetSetup: free operator eigensolve failed");
  mu_ = es.eigenvalues();
  Uh_ = es.eigenvectors().adjoint();

  const int n = model_.dim();
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix C = (pert_pos_ - Complex(0.0, b_) * id).partialPivLu().solve(pot_pos_);
  CU_ = C * es.eigenvectors();
  G_ = Uh_ * CU_;
}

CMatrix DetSetup::resolvent_weights(Complex lambda) const {
  const int n = static_cast<int>(mu_.size());
  CVector w(n);
  for (int k = 0; k < n; ++k) {
    Complex gap = lambda - Complex(mu_[k], 0.0);
    if (std::abs(gap) < 1e-14 * (1.0 + std::abs(lambda)))
      throw std::invalid_argument("DetSetup: lambda sits on the free spectrum (pole of F)");
    w[k] = 1.0 / gap;
  }
  return w.asDiagonal();
}

CMatrix DetSetup::F_matrix(Complex lambda) const {
  return (lambda - Complex(0.0, b_)) * (CU_ * resolvent_weights(lambda) * Uh_);
}

Complex DetSetup::f_value(Complex lambda) const {
  const int n = static_cast<int>(mu_.size());
  const Complex s = lambda - Complex(0.0, b_);
  CVector w(n);
  for (int k = 0; k < n; ++k) {
    Complex gap = lambda - Complex(mu_[k], 0.0);
    if (std::abs(gap) < 1e-14 * (1.0 + std::abs(lambda)))
      throw std::invalid_argument("DetSetup: lambda sits on the free spectrum (pole of F)");
    w[k] = 1.0 / gap;
  }

  // det(Id - F) through one LU; the correction exponent needs tr F^j only
  // for j < k, and those come from the small projected matrix G.
  CMatrix a = CMatrix::Identity(n, n) - s * (CU_ * w.asDiagonal() * Uh_);
  Complex det = a.partialPivLu().determinant();

  Complex expo = 0.0;
  if (k_ >= 2) expo += s * (G_.diagonal().array() * w.array()).sum();
  if (k_ >= 3) {
    CMatrix M = s * (G_ * w.asDiagonal());
    CMatrix P = M * M;
    expo += P.trace() / 2.0;
    for (int j = 3; j < k_; ++j) {
      P = P * M;
      expo += P.trace() / static_cast<double>(j);
    }
  }
  return det * std::exp(expo);
}

Complex DetSetup::f_value_eig(Complex lambda) const { return reg_det(F_matrix(lambda), k_); }

std::vector<ZeroCluster> zeros_in_region(const DetSetup& setup, Complex lo, Complex hi,
                                         const ContourOptions& opts) {
  const SpectrumModel sm = setup.model().spectrum_model();
  if (lo.imag() <= 0.0 && hi.imag() >= 0.0) {
    // The rectangle crosses the real axis; that is fine inside the spectral
    // gap but not across the essential set, where f has its poles.
    bool hits;
    if (sm.kind == OperatorKind::Dirac)
      hits = hi.real() >= sm.m || lo.real() <= -sm.m;
    else
      hits = hi.real() >= sm.m;
    if (hits)
      throw std::invalid_argument(
          "zeros_in_region: rectangle crosses the model spectrum; shrink it");
  }
  return find_zeros([&setup](Complex z) { return setup.f_value(z); }, lo, hi, opts);
}

double growth_ratio(const DetSetup& setup, const std::vector<Complex>& samples) {
  if (samples.empty()) throw std::invalid_argument("growth_ratio: no sample points");
  const SpectrumModel sm = setup.model().spectrum_model();
  const double p = setup.p();
  const int dd = setup.model().grid.d;
  const double denom_pot = std::pow(setup.potential_lp(), p);
  // V = 0 makes f identically 1, so the sup of log|f| * (weights) is an
  // honest 0 -- not the 0/0 the normalization would produce literally.
  if (denom_pot == 0.0) return 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (Complex lam : samples) {
    double dist = sm.distance(lam);
    if (!(dist > 0.0))
      throw std::invalid_argument("growth_ratio: sample on the model spectrum");
    double lf = std::log(std::abs(setup.f_value(lam)));
    double ratio = lf * std::pow(dist, p - 1.0) /
                   (denom_pot * std::pow(1.0 + std::abs(lam), p + dd - 1.0));
    best = std::max(best, ratio);
  }
  return best;
}

}  // namespace speclab
