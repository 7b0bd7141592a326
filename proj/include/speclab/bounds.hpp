#pragma once

#include "speclab/operators.hpp"
#include "speclab/util.hpp"

namespace speclab {

/// Which branch of the two-branch resolvent symbol the radial integral
/// targets: Minus integrates 1/|sqrt(r^2+m^2) - lambda|^p, Plus the
/// mirrored 1/|sqrt(r^2+m^2) + lambda|^p.
enum class ResolventSide { Minus, Plus };

/// Branch matching the sign of Re lambda (ties go to Minus).
ResolventSide side_for(Complex lambda);

/// I(lambda) = int_0^inf r^{d-1} / |sqrt(r^2+m^2) -/+ lambda|^p dr to
/// relative accuracy ~1e-8 (adaptive panels up to R = 10(|lambda|+m+1), the
/// tail by the substitution r -> R/t which turns the r^{d-1-p} decay into a
/// proper integral).  Throws when p <= d (divergent) or lambda sits on the
/// branch half-line.
double resolvent_lp_radial(Complex lambda, double m, int d, double p, ResolventSide side);

/// Distance-scaled core the radial integral is compared against:
///   m > 0: (1 + |lambda -/+ m|^{d-1}) / dist^{p-1}   (sign of Re lambda)
///   m = 0: |lambda|^{d-1} / dist^{p-1}
/// with dist the distance to the two-branch spectrum.
double det_br_core(Complex lambda, double m, int d, double p);

struct DetRsResult {
  double lhs_p = 0.0;       // ||V (lambda - D0)^{-1}||_{S_p}^p, singular values
  double rhs_p = 0.0;       // (2pi)^{-d} ||V||_p^p * lattice symbol norm^p
  double ratio = 0.0;       // lhs_p / rhs_p
  double s2_sq = 0.0;       // ||.||_{S_2}^2 via singular values
  double kernel_sq = 0.0;   // same, via the block-kernel double sum
};

/// Lattice check of the Schatten-vs-symbol bound.  The two S_2 fields give
/// the kernel identity route and are filled for every p.
DetRsResult det_rs_check(const PotentialField& V, const FreeOperatorModel& model, Complex lambda,
                         double p);

struct BStarResult {
  double b_star = 0.0;
  double sp_at_b = 0.0;          // ||V (ib - D0)^{-1}||_{S_p} at b*
  double op_at_b = 0.0;          // same, operator norm
  double sp_at_2b = 0.0;         // S_p norm at 2 b*, strictly smaller
  double resolvent_norm = 0.0;   // ||(-ib* + D0 + V)^{-1}||
};

/// Doubling search from b = 2 max(1, m) for the smallest tested height with
/// ||V (ib - D0)^{-1}||_{S_p} < 1 and the effective certificate
/// sqrt(b^2+m^2) (1 - ||V (ib - D0)^{-1}||_op) >= 1, which guarantees
/// ||(-ib + D0 + V)^{-1}|| <= 1.
BStarResult find_b_star(const PotentialField& V, const FreeOperatorModel& model, double p);

}  // namespace speclab
