#include "speclab/ltsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace speclab {

namespace {

bool is_kg_family(WeightId id) {
  return id == WeightId::KgMassive || id == WeightId::KgMassless || id == WeightId::KgSimple;
}

bool is_massless(WeightId id) {
  return id == WeightId::DiracMassless || id == WeightId::KgMassless;
}

bool uses_tau(WeightId id) { return id != WeightId::KgSimple; }

}  // namespace

std::string to_string(WeightId id) {
  switch (id) {
    case WeightId::DiracMassive: return "dirac-massive";
    case WeightId::DiracMassiveLowP: return "dirac-massive-lowp";
    case WeightId::DiracMassless: return "dirac-massless";
    case WeightId::KgMassive: return "kg-massive";
    case WeightId::KgMassless: return "kg-massless";
    case WeightId::KgSimple: return "kg-simple";
    case WeightId::GapSelfAdjoint: return "gap-selfadjoint";
    case WeightId::GapSelfAdjointLowP: return "gap-selfadjoint-lowp";
  }
  throw std::logic_error("to_string: unknown weight id");
}

WeightId parse_weight_id(const std::string& name) {
  static const WeightId all[] = {
      WeightId::DiracMassive,  WeightId::DiracMassiveLowP,  WeightId::DiracMassless,
      WeightId::KgMassive,     WeightId::KgMassless,        WeightId::KgSimple,
      WeightId::GapSelfAdjoint, WeightId::GapSelfAdjointLowP};
  for (WeightId id : all)
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown weight id '" + name +
                              "' (expected dirac-massive, dirac-massive-lowp, dirac-massless, "
                              "kg-massive, kg-massless, kg-simple, gap-selfadjoint, "
                              "gap-selfadjoint-lowp)");
}

double default_tau(double p, int d) { return std::min(p - static_cast<double>(d), 1.0) / 4.0; }

TheoremWeight TheoremWeight::make(WeightId id, int d, double p, double m, double tau) {
  TheoremWeight w;
  w.id = id;
  w.d = d;
  w.p = p;
  w.m = m;
  w.tau = uses_tau(id) ? (tau < 0.0 ? default_tau(p, d) : tau) : 0.0;
  w.validate();
  return w;
}

SpectrumModel TheoremWeight::essential() const {
  return is_kg_family(id) ? SpectrumModel::klein_gordon(m) : SpectrumModel::dirac(m);
}

void TheoremWeight::validate() const {
  if (d < 1 || d > 3) throw std::invalid_argument("TheoremWeight: dimension must be 1, 2 or 3");
  if (!(p >= 1.0)) throw std::invalid_argument("TheoremWeight: exponent must be >= 1");
  if (is_massless(id)) {
    if (m != 0.0) throw std::invalid_argument("TheoremWeight: massless weight needs m = 0");
  } else if (id != WeightId::KgSimple) {
    if (!(m > 0.0)) throw std::invalid_argument("TheoremWeight: massive weight needs m > 0");
  } else if (!(m >= 0.0)) {
    throw std::invalid_argument("TheoremWeight: mass must be nonnegative");
  }
  if (uses_tau(id)) {
    if (!(p > static_cast<double>(d)))
      throw std::invalid_argument("TheoremWeight: refined weights need p > d");
    double cap = std::min(p - static_cast<double>(d), 1.0);
    if (!(tau > 0.0 && tau < cap))
      throw std::invalid_argument("TheoremWeight: tau must lie in (0, min{p-d, 1})");
  } else if (tau != 0.0) {
    throw std::invalid_argument("TheoremWeight: this weight takes no tau");
  }
}

double weight(const TheoremWeight& w, Complex lambda) {
  const double dist = w.essential().distance(lambda);
  if (!(dist > 0.0)) return 0.0;  // limit value on the essential set
  const double mod = std::abs(lambda);
  const double p = w.p, tau = w.tau, m = w.m;
  const double dd = static_cast<double>(w.d);
  switch (w.id) {
    case WeightId::DiracMassive:
      return std::pow(dist, p + tau) /
             (std::abs(lambda - m) * std::abs(lambda + m) *
              std::pow(1.0 + mod, 2.0 * p - 2.0 + 2.0 * tau));
    case WeightId::DiracMassiveLowP:
      return std::pow(dist, p + tau) /
             (std::pow(std::abs(lambda - m) * std::abs(lambda + m), (p + tau) / 2.0) *
              std::pow(1.0 + mod, p + tau));
    case WeightId::DiracMassless:
      return std::pow(dist, p + tau) / std::pow(1.0 + mod, 2.0 * (p + tau));
    case WeightId::KgMassive:
      return std::pow(dist, p + tau) /
             (std::abs(lambda - m) *
              std::pow(1.0 + mod, p + std::max(p / 2.0, dd) + 2.0 * tau - 1.0));
    case WeightId::KgMassless:
      return std::pow(dist, p + tau) /
             (std::pow(mod, std::min((p + tau) / 2.0, dd)) *
              std::pow(1.0 + mod, p / 2.0 + std::max(p, 2.0 * dd) - dd + 2.0 * tau));
    case WeightId::KgSimple:
      return std::pow(dist, p) / std::pow(1.0 + mod, 2.0 * p);
    case WeightId::GapSelfAdjoint:
      return std::pow(dist, p - 1.0 + tau);
    case WeightId::GapSelfAdjointLowP:
      return std::pow(dist, (p + tau) / 2.0);
  }
  throw std::logic_error("weight: unknown weight id");
}

double lt_sum(const std::vector<std::pair<Complex, int>>& eigs, const TheoremWeight& w) {
  double total = 0.0;
  for (const auto& [lambda, mult] : eigs) {
    if (mult < 0) throw std::invalid_argument("lt_sum: negative multiplicity");
    total += static_cast<double>(mult) * weight(w, lambda);
  }
  return total;
}

RegimeReport regime_classify(const std::vector<Complex>& seq, double m, double p, double tau) {
  const int n = static_cast<int>(seq.size());
  if (n < 8) throw std::invalid_argument("regime_classify: need at least 8 points");
  for (Complex z : seq)
    if (!(z.imag() > 0.0))
      throw std::invalid_argument("regime_classify: sequence must lie in the upper half-plane");

  const int k = std::max(4, n / 4);
  const auto tail_begin = seq.end() - k;
  const Complex last = seq.back();
  const double scale = 1.0 + m;

  // Regime 2: modulus blow-up with imaginary parts staying comparatively flat.
  double max_tail_im = 0.0;
  for (auto it = tail_begin; it != seq.end(); ++it)
    max_tail_im = std::max(max_tail_im, it->imag());
  if (std::abs(last) >= 10.0 * scale && std::abs(last) >= 1.2 * std::abs(*tail_begin) &&
      max_tail_im <= 0.2 * std::abs(last)) {
    double sum = 0.0;
    for (Complex z : seq)
      sum += std::pow(z.imag(), p + tau) / std::pow(std::abs(z), 2.0 * p + 2.0 * tau);
    return {2, sum};
  }

  // Regime 1: non-tangential approach to an edge +-m (fixed aperture 10).
  for (double edge : {m, -m}) {
    if (std::abs(last - edge) > 0.05 * scale) continue;
    bool cone = true;
    for (auto it = tail_begin; it != seq.end(); ++it)
      if (std::abs(it->real() - edge) > 10.0 * it->imag()) {
        cone = false;
        break;
      }
    if (!cone) continue;
    double sum = 0.0;
    for (Complex z : seq) sum += std::pow(std::abs(z - edge), p - 1.0 + tau);
    return {1, sum};
  }

  // Regime 3: a real limit strictly inside (m, inf).
  if (last.imag() <= 0.05 * (1.0 + std::abs(last)) && last.real() > m + 0.05 * scale) {
    bool clustered = true;
    for (auto it = tail_begin; it != seq.end(); ++it)
      if (std::abs(*it - last) > 0.5 * (1.0 + std::abs(last))) {
        clustered = false;
        break;
      }
    if (clustered) {
      double sum = 0.0;
      for (Complex z : seq) sum += std::pow(z.imag(), p + tau);
      return {3, sum};
    }
  }

  throw std::runtime_error("regime_classify: sequence fits no regime (mixed limit behavior)");
}

ScalingFit scaling_exponent(const FreeOperatorModel& model, const PotentialField& V,
                            const TheoremWeight& w, const std::vector<double>& s_values) {
  for (double s : s_values)
    if (!(s > 0.0 && s <= 1.0))
      throw std::invalid_argument("scaling_exponent: heights must lie in (0, 1]");
  const CMatrix free_pos = free_dense(model, Basis::Position);
  const CMatrix pot = potential_dense(V);
  const SpectrumModel sm = model.spectrum_model();

  ScalingFit fit;
  for (double s : s_values) {
    CMatrix D = free_pos + s * pot;
    auto eigs = discrete_spectrum(D, sm);
    double sum = lt_sum(eigs, w);
    if (eigs.empty() || !(sum > 0.0)) {
      ++fit.dropped;
      continue;
    }
    fit.s_used.push_back(s);
    fit.sums.push_back(sum);
  }
  const int used = static_cast<int>(fit.s_used.size());
  if (used < 2)
    throw std::runtime_error("scaling_exponent: fewer than two heights left a discrete spectrum");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < used; ++i) {
    double x = std::log(fit.s_used[i]), y = std::log(fit.sums[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = used * sxx - sx * sx;
  if (std::abs(denom) < 1e-30)
    throw std::runtime_error("scaling_exponent: degenerate regression (identical heights)");
  fit.slope = (used * sxy - sx * sy) / denom;
  return fit;
}

}  // namespace speclab
