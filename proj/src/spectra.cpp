#include "speclab/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace speclab {

SpectrumModel SpectrumModel::dirac(double m) {
  if (m < 0.0) throw std::invalid_argument("SpectrumModel: mass must be >= 0");
  return SpectrumModel{OperatorKind::Dirac, m};
}

SpectrumModel SpectrumModel::klein_gordon(double m) {
  if (m < 0.0) throw std::invalid_argument("SpectrumModel: mass must be >= 0");
  return SpectrumModel{OperatorKind::KleinGordon, m};
}

double distance(Complex lambda, const SpectrumModel& model) {
  const double re = lambda.real(), im = lambda.imag(), m = model.m;
  if (model.kind == OperatorKind::Dirac) {
    // Two half-lines (+/-m outward); the nearest point is the projection onto
    // the closer half-line, or its endpoint when Re lambda falls in the gap.
    if (std::abs(re) >= m) return std::abs(im);
    return std::min(std::abs(lambda - Complex(m, 0.0)), std::abs(lambda + Complex(m, 0.0)));
  }
  if (re >= m) return std::abs(im);
  return std::abs(lambda - Complex(m, 0.0));
}

bool in_resolvent(Complex lambda, const SpectrumModel& model) {
  return distance(lambda, model) > 0.0;
}

double SpectrumModel::distance(Complex lambda) const { return speclab::distance(lambda, *this); }

bool SpectrumModel::in_resolvent(Complex lambda) const {
  return speclab::in_resolvent(lambda, *this);
}

}  // namespace speclab
