#include "speclab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "speclab/quadrature.hpp"
#include "speclab/schatten.hpp"
#include "speclab/spectra.hpp"

namespace speclab {

ResolventSide side_for(Complex lambda) {
  return lambda.real() >= 0.0 ? ResolventSide::Minus : ResolventSide::Plus;
}

double resolvent_lp_radial(Complex lambda, double m, int d, double p, ResolventSide side) {
  if (d < 1 || d > 3) throw std::invalid_argument("resolvent_lp_radial: d must be 1, 2 or 3");
  if (m < 0.0) throw std::invalid_argument("resolvent_lp_radial: mass must be >= 0");
  if (!(p > d))
    throw std::invalid_argument("resolvent_lp_radial: integral diverges for p <= d");
  // The Plus branch is the Minus branch evaluated at -lambda.
  const Complex lam = side == ResolventSide::Minus ? lambda : -lambda;
  if (distance(lam, SpectrumModel::klein_gordon(m)) <= 0.0)
    throw std::invalid_argument("resolvent_lp_radial: lambda lies on the symbol half-line");

  const double R = 10.0 * (std::abs(lam) + m + 1.0);
  auto head = [&](double r) {
    double mu = std::sqrt(r * r + m * m);
    return std::pow(r, d - 1) / std::pow(std::abs(Complex(mu, 0.0) - lam), p);
  };
  // Tail via r = R/t:  int_R^inf = int_0^1 t^alpha g(t) dt with
  // g(t) = R^d / |sqrt(R^2 + m^2 t^2) - t lam|^p and alpha = p - d - 1 > -1.
  // Subtracting g(0) keeps the integrand bounded for alpha < 0.
  const double alpha = p - d - 1.0;
  const double Rd = std::pow(R, d);
  auto g = [&](double t) {
    double mu = std::sqrt(R * R + m * m * t * t);
    return Rd / std::pow(std::abs(Complex(mu, 0.0) - t * lam), p);
  };
  const double g0 = Rd / std::pow(R, p);
  auto tail_reg = [&](double t) { return std::pow(t, alpha) * (g(t) - g0); };

  double head_val = integrate_adaptive(head, 0.0, R, 1e-9).value;
  double tail_val = g0 / (alpha + 1.0) + integrate_adaptive(tail_reg, 0.0, 1.0, 1e-9, 1e-13 * (std::abs(head_val) + g0)).value;
  return head_val + tail_val;
}

double det_br_core(Complex lambda, double m, int d, double p) {
  if (d < 1 || d > 3) throw std::invalid_argument("det_br_core: d must be 1, 2 or 3");
  if (m < 0.0) throw std::invalid_argument("det_br_core: mass must be >= 0");
  if (!(p > d)) throw std::invalid_argument("det_br_core: requires p > d");
  double dist = distance(lambda, SpectrumModel::dirac(m));
  if (dist <= 0.0) throw std::invalid_argument("det_br_core: lambda lies on the spectrum");
  double denom = std::pow(dist, p - 1.0);
  if (m == 0.0) return std::pow(std::abs(lambda), d - 1.0) / denom;
  double shift = lambda.real() >= 0.0 ? std::abs(lambda - Complex(m, 0.0))
                                      : std::abs(lambda + Complex(m, 0.0));
  return (1.0 + std::pow(shift, d - 1.0)) / denom;
}

DetRsResult det_rs_check(const PotentialField& V, const FreeOperatorModel& model, Complex lambda,
                         double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("det_rs_check: exponent must be >= 1");
  if (V.n != model.block_dim() || V.grid.points() != model.grid.points())
    throw std::invalid_argument("det_rs_check: potential does not match the model grid");
  if (!in_resolvent(lambda, model.spectrum_model()))
    throw std::invalid_argument("det_rs_check: lambda lies on the model spectrum");

  const int dim = model.dim();
  CMatrix free_pos = free_dense(model, Basis::Position);
  CMatrix resolvent = (lambda * CMatrix::Identity(dim, dim) - free_pos).partialPivLu().solve(
      CMatrix::Identity(dim, dim));
  CMatrix A = potential_dense(V) * resolvent;

  DetRsResult out;
  out.lhs_p = std::pow(schatten_norm(A, p), p);
  out.s2_sq = std::pow(schatten_norm(A, 2.0), 2.0);
  // Kernel route: the S_2 norm as the double sum of squared block Frobenius
  // norms of the "kernel" A(x_j, x_l).
  const int nb = V.n;
  double ker = 0.0;
  for (int j = 0; j < dim; j += nb)
    for (int l = 0; l < dim; l += nb) ker += A.block(j, l, nb, nb).squaredNorm();
  out.kernel_sq = ker;

  // Symbol side on the frequency lattice, measure (2pi/L)^d per point.
  const ResolventSide side =
      model.kind == OperatorKind::Dirac ? side_for(lambda) : ResolventSide::Minus;
  const Complex lam = side == ResolventSide::Minus ? lambda : -lambda;
  double lattice = 0.0;
  for (int k = 0; k < model.grid.points(); ++k) {
    double mu = std::sqrt(model.grid.freq_norm2(k) + model.m * model.m);
    lattice += std::pow(std::abs(Complex(mu, 0.0) - lam), -p);
  }
  double measure = std::pow(2.0 * PI / model.grid.L, model.grid.d);
  double symbol_p = std::pow(static_cast<double>(nb), p / 2.0) * lattice * measure;
  out.rhs_p = std::pow(2.0 * PI, -model.grid.d) * std::pow(lp_norm(V, p), p) * symbol_p;
  out.ratio = out.lhs_p / out.rhs_p;
  return out;
}

BStarResult find_b_star(const PotentialField& V, const FreeOperatorModel& model, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("find_b_star: exponent must be >= 1");
  const int dim = model.dim();
  CMatrix free_pos = free_dense(model, Basis::Position);
  CMatrix pot = potential_dense(V);
  const CMatrix id = CMatrix::Identity(dim, dim);

  auto birman_schwinger_norms = [&](double b) {
    CMatrix M = pot * (Complex(0.0, b) * id - free_pos).partialPivLu().solve(id);
    std::vector<double> sv = singular_values(M);
    double sp;
    double top = sv.front();
    if (top == 0.0) {
      sp = 0.0;
    } else {
      double sum = 0.0;
      for (double s : sv) sum += std::pow(s / top, p);
      sp = top * std::pow(sum, 1.0 / p);
    }
    return std::pair<double, double>(sp, sv.front());
  };

  const double m = model.m;
  double b = 2.0 * std::max(1.0, m);
  for (int step = 0; step < 60; ++step, b *= 2.0) {
    auto [sp, op] = birman_schwinger_norms(b);
    bool certificate = std::sqrt(b * b + m * m) * (1.0 - op) >= 1.0;
    if (sp < 1.0 && certificate) {
      BStarResult out;
      out.b_star = b;
      out.sp_at_b = sp;
      out.op_at_b = op;
      out.sp_at_2b = birman_schwinger_norms(2.0 * b).first;
      std::vector<double> sv = singular_values(Complex(0.0, -b) * id + free_pos + pot);
      out.resolvent_norm = 1.0 / sv.back();
      return out;
    }
  }
  throw std::runtime_error("find_b_star: no admissible height found (doubling exhausted)");
}

}  // namespace speclab
