#pragma once

#include <string>
#include <utility>
#include <vector>

#include "speclab/operators.hpp"
#include "speclab/spectra.hpp"
#include "speclab/util.hpp"

namespace speclab {

/// The eigenvalue-sum weight families.  The first six target non-self-adjoint
/// perturbations (Dirac massive/massless, Klein-Gordon massive/massless and
/// the simple KG form without the tau refinement); the two gap weights are
/// the self-adjoint specializations, measured as a plain power of the
/// distance to the essential set.
enum class WeightId {
  DiracMassive,
  DiracMassiveLowP,
  DiracMassless,
  KgMassive,
  KgMassless,
  KgSimple,
  GapSelfAdjoint,
  GapSelfAdjointLowP,
};

std::string to_string(WeightId id);
WeightId parse_weight_id(const std::string& name);

/// Configured default for the refinement exponent: min{p-d, 1}/4.
double default_tau(double p, int d);

struct TheoremWeight {
  WeightId id = WeightId::DiracMassive;
  double m = 0.0;
  double p = 2.0;
  double tau = 0.0;  // unused (0) for KgSimple
  int d = 1;

  /// tau < 0 picks the default rule (and 0 for KgSimple).
  static TheoremWeight make(WeightId id, int d, double p, double m, double tau = -1.0);

  /// Essential set the weight measures distance against (Dirac or KG line).
  SpectrumModel essential() const;

  /// Throws invalid_argument on inconsistent parameters: massive families
  /// need m > 0, massless ones m = 0, and the refined weights need p > d
  /// with tau in (0, min{p-d, 1}).
  void validate() const;
};

/// Pointwise weight value.  Zero on the essential set (the continuous limit);
/// callers that must reject such points should test distance() themselves.
double weight(const TheoremWeight& w, Complex lambda);

/// Sum of mult * weight(lambda) over the listed eigenvalue clusters.
double lt_sum(const std::vector<std::pair<Complex, int>>& eigs, const TheoremWeight& w);

/// Accumulation regimes for upper half-plane eigenvalue sequences of the
/// massive Dirac model, with the convergent tail quantity each one admits:
///   1: lambda_n -> +-m non-tangentially; sum |lambda_n -+ m|^{p-1+tau}
///   2: |lambda_n| -> inf, bounded Im;   sum |Im|^{p+tau} / |lambda|^{2p+2tau}
///   3: lambda_n -> x0 in (m, inf);      sum |Im lambda_n|^{p+tau}
struct RegimeReport {
  int regime = 0;
  double reported_sum = 0.0;
};
RegimeReport regime_classify(const std::vector<Complex>& seq, double m, double p, double tau);

/// Least-squares slope of log lt_sum(sigma_d(D0 + sV)) against log s.
/// Heights with an empty discrete spectrum (or zero sum) are dropped and
/// counted; fewer than two surviving points is an error.
struct ScalingFit {
  double slope = 0.0;
  std::vector<double> s_used;
  std::vector<double> sums;
  int dropped = 0;
};
ScalingFit scaling_exponent(const FreeOperatorModel& model, const PotentialField& V,
                            const TheoremWeight& w, const std::vector<double>& s_values);

}  // namespace speclab
