#pragma once

#include "speclab/util.hpp"

namespace speclab {

enum class OperatorKind { Dirac, KleinGordon };

/// The essential spectrum shape of a free operator:
///   Dirac(m):        (-inf, -m] U [m, inf)   (all of R for m = 0)
///   KleinGordon(m):  [m, inf)
struct SpectrumModel {
  OperatorKind kind = OperatorKind::Dirac;
  double m = 0.0;

  static SpectrumModel dirac(double m);
  static SpectrumModel klein_gordon(double m);

  double distance(Complex lambda) const;
  bool in_resolvent(Complex lambda) const;
};

/// Exact Euclidean distance from lambda to the model spectrum.
double distance(Complex lambda, const SpectrumModel& model);

/// True iff distance(lambda) > 0.
bool in_resolvent(Complex lambda, const SpectrumModel& model);

}  // namespace speclab
