#pragma once

#include <vector>

#include "speclab/bounds.hpp"
#include "speclab/contour.hpp"
#include "speclab/operators.hpp"
#include "speclab/util.hpp"

namespace speclab {

/// Holomorphic characteristic function of the perturbed operator D = D0 + V:
///   F(lambda) = (lambda - ib) (-ib + D)^{-1} V (lambda - D0)^{-1}
///   f(lambda) = det_k(Id - F(lambda)),   k = ceil(p),
/// normalized so f(ib) = 1.  Zeros of f in the resolvent set of the grid
/// model are exactly the eigenvalues of D, with matching multiplicity.
class DetSetup {
 public:
  /// b <= 0 selects the height from the doubling search (find_b_star).
  DetSetup(const FreeOperatorModel& model, const PotentialField& V, double p, double b = 0.0);

  const FreeOperatorModel& model() const { return model_; }
  double p() const { return p_; }
  int order() const { return k_; }
  double b() const { return b_; }
  double potential_lp() const { return v_lp_; }
  const CMatrix& free_position() const { return free_pos_; }
  const CMatrix& potential_position() const { return pot_pos_; }
  const CMatrix& perturbed_position() const { return pert_pos_; }

  CMatrix F_matrix(Complex lambda) const;

  /// det_k(Id - F) via LU determinant and power traces (exact identity with
  /// the eigenvalue product; see f_value_eig for the cross-check route).
  Complex f_value(Complex lambda) const;

  /// Same value through the eigenvalue-product definition.
  Complex f_value_eig(Complex lambda) const;

 private:
  CMatrix resolvent_weights(Complex lambda) const;  // diag 1/(lambda - mu_k)

  FreeOperatorModel model_;
  double p_ = 2.0;
  int k_ = 2;
  double b_ = 0.0;
  double v_lp_ = 0.0;
  CMatrix free_pos_, pot_pos_, pert_pos_;
  CMatrix CU_;             // (-ib + D)^{-1} V U
  CMatrix Uh_;             // U^H, free eigenbasis
  CMatrix G_;              // U^H (-ib + D)^{-1} V U, for the trace shortcuts
  Eigen::VectorXd mu_;     // free eigenvalues
};

/// Zeros of f inside the open rectangle (lo, hi) by the argument principle.
/// The rectangle must avoid the model spectrum (where f has its poles).
std::vector<ZeroCluster> zeros_in_region(const DetSetup& setup, Complex lo, Complex hi,
                                         const ContourOptions& opts = {});

/// sup over the sample points of
///   log|f(lambda)| dist(lambda)^{p-1} / (||V||_p^p (1 + |lambda|)^{p+d-1}).
double growth_ratio(const DetSetup& setup, const std::vector<Complex>& samples);

}  // namespace speclab
