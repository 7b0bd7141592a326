#pragma once

#include <utility>

#include "speclab/util.hpp"

namespace speclab {

/// Biholomorphism between the resolvent set of the massive case,
/// C \ ((-inf,-m] U [m, inf)), and the unit disc.  Composition of
///   z1 = (lambda - m)/(lambda + m)       (plane minus [0, inf))
///   z2 = sqrt(z1), branch Im z2 > 0      (upper half-plane)
///   z3 = (z2 - i)/(z2 + i)               (unit disc)
/// recentred by the Moebius automorphism that sends the image z_b of
/// lambda = ib to the origin (rotation theta fixed to 0).
class DiracDiscMap {
 public:
  /// m > 0, b > 0.  Pass b <= 0 to get the default height 2*max(1, m).
  explicit DiracDiscMap(double m, double b = 0.0);

  static double default_b(double m) { return 2.0 * std::max(1.0, m); }

  double m() const { return m_; }
  double b() const { return b_; }
  double theta() const { return 0.0; }
  Complex z_b() const { return z_b_; }
  Complex u_plus() const { return u_plus_; }    // image of z3 = 1
  Complex u_minus() const { return u_minus_; }  // image of z3 = -1
  Complex u_i() const { return u_i_; }          // image of z3 = i
  Complex u_mi() const { return u_mi_; }        // image of z3 = -i

  /// First three stages of the chain.  Throws when lambda is on the spectrum.
  Complex stage_z3(Complex lambda) const;

  /// Full chain lambda -> u in the unit disc.
  Complex to_disc(Complex lambda) const;

  /// Inverse chain; throws when |u| >= 1.
  Complex from_disc(Complex u) const;

  /// Inverse of the first three stages: psi(z) = -2m z / (1 + z^2).
  Complex psi(Complex z3) const;
  Complex psi_prime(Complex z3) const;

  /// Two-sided distortion bracket around dist(psi(z3), spectrum):
  ///   lower = (m/2) * |1-z3^2|/|1+z3^2|^2 * (1+|z3|) * (1-|z3|)
  ///   upper = 4 * lower.
  /// Throws for |z3| >= 1 or z3 within 1e-12 of the poles at +/-i.
  std::pair<double, double> koebe_bracket(Complex z3) const;

  /// |u-u_plus| |u-u_minus| / (|u-u_i|^2 |u-u_mi|^2) * (1-|u|); comparable to
  /// dist(lambda, spectrum) when u = to_disc(lambda).
  double cm1_comparator(Complex u) const;

  /// dist(lambda, spectrum) / (sqrt(|lambda-m| |lambda+m|) (1+|lambda|));
  /// comparable to 1-|u|.
  double cm2_comparator(Complex lambda) const;

 private:
  Complex recentre(Complex z3) const;

  double m_ = 0.0;
  double b_ = 0.0;
  Complex z_b_, u_plus_, u_minus_, u_i_, u_mi_;
};

/// Massless counterpart: the spectrum is all of R, the resolvent upper
/// half-plane maps to the disc by the Cayley transform centred at ib.
struct CayleyMap {
  double b = 0.0;

  explicit CayleyMap(double b_height = 2.0);

  /// u = (lambda - ib)/(lambda + ib); requires Im lambda > 0 (the lower
  /// half-plane is handled by reflection).
  Complex to_disc(Complex lambda) const;

  /// lambda = ib (1+u)/(1-u); requires |u| < 1.
  Complex from_disc(Complex u) const;
};

}  // namespace speclab
