#include "speclab/bgk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace speclab {

namespace {

void validate_pairs(const std::vector<BoundaryPair>& pairs) {
  for (const auto& pr : pairs) {
    if (std::abs(std::abs(pr.zeta) - 1.0) > 1e-12)
      throw std::invalid_argument("boundary point must lie on the unit circle");
    if (!(pr.beta >= 0.0)) throw std::invalid_argument("boundary exponent must be nonnegative");
  }
}

}  // namespace

void GrowthEnvelope::validate() const {
  if (!(K > 0.0)) throw std::invalid_argument("GrowthEnvelope: K must be positive");
  if (!(alpha >= 0.0)) throw std::invalid_argument("GrowthEnvelope: alpha must be nonnegative");
  validate_pairs(pairs);
}

void DiscFunction::validate() const {
  if (!evaluator) throw std::invalid_argument("DiscFunction: no evaluator");
  Complex at0 = evaluator(Complex(0.0, 0.0));
  if (std::abs(at0 - Complex(1.0, 0.0)) > 1e-12)
    throw std::invalid_argument("DiscFunction: h(0) must equal 1");
}

double zero_sum(const std::vector<std::pair<Complex, int>>& zeros, double alpha, double tau,
                const std::vector<BoundaryPair>& pairs) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("zero_sum: alpha must be nonnegative");
  if (!(tau > 0.0)) throw std::invalid_argument("zero_sum: tau must be positive");
  validate_pairs(pairs);
  double total = 0.0;
  for (const auto& [z, mult] : zeros) {
    if (mult < 0) throw std::invalid_argument("zero_sum: negative multiplicity");
    double r = std::abs(z);
    if (!(r < 1.0)) throw std::invalid_argument("zero_sum: zero on or outside the unit circle");
    double term = std::pow(1.0 - r, alpha + 1.0 + tau);
    for (const auto& pr : pairs) {
      double expo = std::max(pr.beta - 1.0 + tau, 0.0);
      if (expo > 0.0) term *= std::pow(std::abs(z - pr.zeta), expo);
    }
    total += static_cast<double>(mult) * term;
  }
  return total;
}

double fit_envelope(const DiscFunction& h, double alpha, const std::vector<BoundaryPair>& pairs,
                    double rho_max) {
  h.validate();
  if (!(alpha >= 0.0)) throw std::invalid_argument("fit_envelope: alpha must be nonnegative");
  if (!(rho_max > 0.0 && rho_max < 1.0))
    throw std::invalid_argument("fit_envelope: sample radius must lie in (0, 1)");
  validate_pairs(pairs);

  std::vector<double> radii;
  for (int k = 1; k <= 12; ++k) {
    double r = 1.0 - std::pow(2.0, -k);
    if (r <= rho_max) radii.push_back(r);
  }
  radii.push_back(rho_max);

  constexpr int kAngles = 256;
  double best = 0.0;  // the sup is clipped below at 0
  for (double r : radii) {
    for (int a = 0; a < kAngles; ++a) {
      double th = 2.0 * PI * a / kAngles;
      Complex z = r * Complex(std::cos(th), std::sin(th));
      double lh = std::log(std::abs(h.evaluator(z)));
      double env = std::pow(1.0 - r, alpha);
      for (const auto& pr : pairs) env *= std::pow(std::abs(z - pr.zeta), pr.beta);
      double val = lh * env;
      if (val > best) best = val;
    }
  }
  return best;
}

DiscFunction synth_blaschke(const std::vector<std::pair<Complex, int>>& zeros) {
  Complex b0 = 1.0;
  for (const auto& [a, mult] : zeros) {
    if (mult < 1) throw std::invalid_argument("synth_blaschke: multiplicity must be >= 1");
    if (!(std::abs(a) < 1.0))
      throw std::invalid_argument("synth_blaschke: zero on or outside the unit circle");
    if (std::abs(a) < 1e-15)
      throw std::invalid_argument("synth_blaschke: zero at the origin (cannot normalize)");
    for (int i = 0; i < mult; ++i) b0 *= a;
  }
  DiscFunction h;
  h.known_zeros = zeros;
  h.evaluator = [zeros, b0](Complex z) {
    Complex val = 1.0;
    for (const auto& [a, mult] : zeros) {
      Complex factor = (a - z) / (1.0 - std::conj(a) * z);
      for (int i = 0; i < mult; ++i) val *= factor;
    }
    return val / b0;
  };
  return h;
}

double check_ratio(const DiscFunction& h, double alpha, const std::vector<BoundaryPair>& pairs,
                   double tau, double rho_max) {
  if (!h.known_zeros)
    throw std::invalid_argument("check_ratio: the function has no zero list attached");
  double khat = fit_envelope(h, alpha, pairs, rho_max);
  double zs = zero_sum(*h.known_zeros, alpha, tau, pairs);
  return zs / std::max(khat, 1e-12);
}

}  // namespace speclab
