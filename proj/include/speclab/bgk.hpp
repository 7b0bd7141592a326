#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "speclab/util.hpp"

namespace speclab {

/// Boundary point carrying a growth exponent: the envelope factor |z-zeta|^beta.
struct BoundaryPair {
  Complex zeta;       // on the unit circle
  double beta = 0.0;  // nonnegative
};

/// Hypothesis bound for a normalized holomorphic function on the disc:
///   log|h(z)| <= K / ((1-|z|)^alpha prod_j |z-zeta_j|^{beta_j}).
struct GrowthEnvelope {
  double K = 1.0;
  double alpha = 0.0;
  std::vector<BoundaryPair> pairs;
  void validate() const;
};

/// Holomorphic test subject on the open disc, normalized to h(0) = 1.
/// known_zeros absent means "not computed", not "no zeros".
struct DiscFunction {
  std::function<Complex(Complex)> evaluator;
  std::optional<std::vector<std::pair<Complex, int>>> known_zeros;
  void validate() const;  // checks h(0) = 1 within 1e-12
};

/// Outermost sampling radius for envelope fitting: 1 - 2^{-12}.
inline constexpr double kRhoMaxDefault = 1.0 - 1.0 / 4096.0;

/// The zero-side sum: sum over zeros of
///   mult * (1-|z|)^{alpha+1+tau} * prod_j |z-zeta_j|^{(beta_j-1+tau)_+}.
double zero_sum(const std::vector<std::pair<Complex, int>>& zeros, double alpha, double tau,
                const std::vector<BoundaryPair>& pairs);

/// Empirical envelope constant: sup over a radial-angular sample grid
/// (radii 1-2^{-k} up to rho_max, 256 angles) of
///   log|h(z)| (1-|z|)^alpha prod_j |z-zeta_j|^{beta_j},   clipped below at 0.
double fit_envelope(const DiscFunction& h, double alpha, const std::vector<BoundaryPair>& pairs,
                    double rho_max = kRhoMaxDefault);

/// Finite Blaschke product through the given zeros (with multiplicity),
/// divided by its value at 0.  Zeros must be strictly inside and away from
/// the origin; known_zeros is populated.
DiscFunction synth_blaschke(const std::vector<std::pair<Complex, int>>& zeros);

/// zero_sum / max(fit_envelope, 1e-12) over the function's known zeros;
/// recorded across families to exhibit a uniform empirical constant.
double check_ratio(const DiscFunction& h, double alpha, const std::vector<BoundaryPair>& pairs,
                   double tau, double rho_max = kRhoMaxDefault);

}  // namespace speclab
