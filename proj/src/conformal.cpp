#include "speclab/conformal.hpp"

#include <cmath>
#include <stdexcept>

#include "speclab/spectra.hpp"

namespace speclab {

namespace {

// sqrt on C \ [0, inf) mapping into the open upper half-plane.
Complex upper_sqrt(Complex z) {
  Complex r = std::sqrt(z);
  if (r.imag() < 0.0) r = -r;
  return r;
}

}  // namespace

DiracDiscMap::DiracDiscMap(double m, double b) : m_(m), b_(b > 0.0 ? b : default_b(m)) {
  if (!(m > 0.0))
    throw std::invalid_argument("DiracDiscMap: mass must be positive (use CayleyMap for m = 0)");
  z_b_ = Complex(0.0, -b_ / (std::abs(Complex(m_, b_)) + m_));
  u_plus_ = recentre(Complex(1.0, 0.0));
  u_minus_ = recentre(Complex(-1.0, 0.0));
  u_i_ = recentre(Complex(0.0, 1.0));
  u_mi_ = recentre(Complex(0.0, -1.0));
}

Complex DiracDiscMap::recentre(Complex z3) const {
  return (z3 - z_b_) / (1.0 - std::conj(z_b_) * z3);
}

Complex DiracDiscMap::stage_z3(Complex lambda) const {
  if (distance(lambda, SpectrumModel::dirac(m_)) <= 0.0)
    throw std::invalid_argument("DiracDiscMap: lambda lies on the spectrum");
  Complex z1 = (lambda - m_) / (lambda + m_);
  Complex z2 = upper_sqrt(z1);
  return (z2 - Complex(0.0, 1.0)) / (z2 + Complex(0.0, 1.0));
}

Complex DiracDiscMap::to_disc(Complex lambda) const { return recentre(stage_z3(lambda)); }

Complex DiracDiscMap::from_disc(Complex u) const {
  if (!(std::abs(u) < 1.0))
    throw std::invalid_argument("DiracDiscMap::from_disc: |u| must be < 1");
  Complex z3 = (u + z_b_) / (1.0 + std::conj(z_b_) * u);
  return psi(z3);
}

Complex DiracDiscMap::psi(Complex z3) const {
  Complex denom = 1.0 + z3 * z3;
  if (std::abs(denom) == 0.0)
    throw std::invalid_argument("DiracDiscMap::psi: pole at z3 = +/- i");
  return -2.0 * m_ * z3 / denom;
}

Complex DiracDiscMap::psi_prime(Complex z3) const {
  Complex denom = 1.0 + z3 * z3;
  if (std::abs(denom) == 0.0)
    throw std::invalid_argument("DiracDiscMap::psi_prime: pole at z3 = +/- i");
  return -2.0 * m_ * (1.0 - z3 * z3) / (denom * denom);
}

std::pair<double, double> DiracDiscMap::koebe_bracket(Complex z3) const {
  double r = std::abs(z3);
  if (!(r < 1.0))
    throw std::invalid_argument("DiracDiscMap::koebe_bracket: z3 must lie in the open disc");
  Complex sq = 1.0 + z3 * z3;
  if (std::abs(sq) < 1e-12)
    throw std::invalid_argument("DiracDiscMap::koebe_bracket: z3 too close to +/- i");
  double factor = std::abs(1.0 - z3 * z3) / std::norm(sq) * (1.0 + r) * (1.0 - r);
  double lower = 0.5 * m_ * factor;
  return {lower, 4.0 * lower};
}

double DiracDiscMap::cm1_comparator(Complex u) const {
  double denom = std::norm(u - u_i_) * std::norm(u - u_mi_);
  if (denom == 0.0)
    throw std::invalid_argument("DiracDiscMap::cm1_comparator: u at a boundary pole image");
  return std::abs(u - u_plus_) * std::abs(u - u_minus_) / denom * (1.0 - std::abs(u));
}

double DiracDiscMap::cm2_comparator(Complex lambda) const {
  double dist = distance(lambda, SpectrumModel::dirac(m_));
  if (dist <= 0.0)
    throw std::invalid_argument("DiracDiscMap::cm2_comparator: lambda lies on the spectrum");
  double prod = std::abs(lambda - m_) * std::abs(lambda + m_);
  return dist / (std::sqrt(prod) * (1.0 + std::abs(lambda)));
}

CayleyMap::CayleyMap(double b_height) : b(b_height) {
  if (!(b > 0.0)) throw std::invalid_argument("CayleyMap: height must be positive");
}

Complex CayleyMap::to_disc(Complex lambda) const {
  if (!(lambda.imag() > 0.0))
    throw std::invalid_argument(
        "CayleyMap::to_disc: lambda must lie in the open upper half-plane");
  const Complex ib(0.0, b);
  return (lambda - ib) / (lambda + ib);
}

Complex CayleyMap::from_disc(Complex u) const {
  if (!(std::abs(u) < 1.0))
    throw std::invalid_argument("CayleyMap::from_disc: |u| must be < 1");
  const Complex ib(0.0, b);
  return ib * (1.0 + u) / (1.0 - u);
}

}  // namespace speclab
