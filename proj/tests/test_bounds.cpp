#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "speclab/bounds.hpp"
#include "speclab/generators.hpp"
#include "speclab/numerics.hpp"
#include "speclab/operators.hpp"
#include "speclab/spectra.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("side selection follows the sign of the real part") {
  CHECK(side_for(Complex(1, 1)) == ResolventSide::Minus);
  CHECK(side_for(Complex(-1, 1)) == ResolventSide::Plus);
  CHECK(side_for(Complex(0, 1)) == ResolventSide::Minus);  // tie goes to Minus
}

TEST_CASE("radial resolvent integral closed forms") {
  SUBCASE("massless d=1 p=2 at lambda=i is pi/2") {
    // 1/|r - i|^2 = 1/(r^2+1) integrates to pi/2
    double v = resolvent_lp_radial(Complex(0, 1), 0.0, 1, 2.0, ResolventSide::Minus);
    CHECK(v == doctest::Approx(PI / 2.0).epsilon(1e-8));
  }

  SUBCASE("massive d=1 p=3 at lambda=2i is 1/5") {
    // |sqrt(r^2+1) - 2i|^3 = (r^2+5)^{3/2}, antiderivative r/(5 sqrt(r^2+5))
    double v = resolvent_lp_radial(Complex(0, 2), 1.0, 1, 3.0, ResolventSide::Minus);
    CHECK(v == doctest::Approx(0.2).epsilon(1e-8));
  }

  SUBCASE("massless d=1 p=2 off-axis: (pi/2 + atan(a/b))/b") {
    double v = resolvent_lp_radial(Complex(1, 1), 0.0, 1, 2.0, ResolventSide::Minus);
    CHECK(v == doctest::Approx(3.0 * PI / 4.0).epsilon(1e-8));
  }

  SUBCASE("massless d=3 p=4 at lambda=i is pi/4") {
    // r^2/(r^2+1)^2 integrates to pi/4
    double v = resolvent_lp_radial(Complex(0, 1), 0.0, 3, 4.0, ResolventSide::Minus);
    CHECK(v == doctest::Approx(PI / 4.0).epsilon(1e-8));
  }

  SUBCASE("conjugation symmetry") {
    Complex lam(0.8, 1.3);
    double a = resolvent_lp_radial(lam, 0.7, 2, 3.5, ResolventSide::Minus);
    double b = resolvent_lp_radial(std::conj(lam), 0.7, 2, 3.5, ResolventSide::Minus);
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }

  SUBCASE("Plus branch mirrors the Minus branch at -lambda") {
    Complex lam(-1.2, 0.9);
    double p1 = resolvent_lp_radial(lam, 1.0, 1, 2.5, ResolventSide::Plus);
    double p2 = resolvent_lp_radial(-lam, 1.0, 1, 2.5, ResolventSide::Minus);
    CHECK(p1 == doctest::Approx(p2).epsilon(1e-12));
  }

  SUBCASE("d=2 tail substitution vs brute-force midpoint Riemann") {
    const Complex lam(1.0, 0.7);
    const double m = 0.5, p = 4.5;
    const int d = 2;
    double v = resolvent_lp_radial(lam, m, d, p, ResolventSide::Minus);
    // integrand decays like r^{-3.5}; [0, 200] leaves a ~3e-7 tail
    const double R = 200.0;
    const long n = 2'000'000;
    const double h = R / n;
    double riemann = 0.0;
    for (long i = 0; i < n; ++i) {
      double r = (i + 0.5) * h;
      double mu = std::sqrt(r * r + m * m);
      riemann += r / std::pow(std::abs(Complex(mu, 0.0) - lam), p);
    }
    riemann *= h;
    CHECK(std::abs(v - riemann) <= 1e-5 * riemann);
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS(resolvent_lp_radial(Complex(0, 1), 1.0, 2, 2.0, ResolventSide::Minus),
                    std::invalid_argument);  // p <= d
    CHECK_THROWS_AS(resolvent_lp_radial(Complex(3, 0), 1.0, 1, 2.0, ResolventSide::Minus),
                    std::invalid_argument);  // on the half-line
    CHECK_THROWS_AS(resolvent_lp_radial(Complex(0, 1), -1.0, 1, 2.0, ResolventSide::Minus),
                    std::invalid_argument);  // negative mass
  }
}

TEST_CASE("distance-scaled core") {
  SUBCASE("massive anchor: 2/sqrt(5) at m=1 d=1 p=2 lambda=2i") {
    CHECK(det_br_core(Complex(0, 2), 1.0, 1, 2.0) ==
          doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-14));
  }

  SUBCASE("massless d=1: plain inverse distance power") {
    CHECK(det_br_core(Complex(0, 2), 0.0, 1, 3.0) == doctest::Approx(0.25).epsilon(1e-14));
  }

  SUBCASE("massive d=2 picks the near-branch shift") {
    double want = (1.0 + std::sqrt(5.0)) / 5.0;  // (1+|2i-1|)/sqrt(5)^2 at p=3
    CHECK(det_br_core(Complex(0, 2), 1.0, 2, 3.0) == doctest::Approx(want).epsilon(1e-13));
  }

  SUBCASE("pole order dist^{1-p} approaching the spectrum") {
    // above lambda=1 (m=1, d=1) the shift term is 1, so core * t^{p-1} = 2
    for (double t : {1e-2, 1e-4, 1e-6}) {
      double c = det_br_core(Complex(1.0, t), 1.0, 1, 2.5);
      CHECK(c * std::pow(t, 1.5) == doctest::Approx(2.0).epsilon(1e-10));
    }
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS(det_br_core(Complex(0, 1), 1.0, 1, 1.0), std::invalid_argument);  // p <= d
    CHECK_THROWS_AS(det_br_core(Complex(2, 0), 1.0, 1, 2.0), std::invalid_argument);  // on spectrum
  }
}

TEST_CASE("lattice Schatten-vs-symbol comparison") {
  Grid g(1, 64, 2.0 * PI);
  FreeOperatorModel model = FreeOperatorModel::dirac(g, 1.0);
  const Complex lam(0.3, 0.8);

  SUBCASE("zero potential gives zero norms") {
    PotentialField V(g, 2);
    DetRsResult r = det_rs_check(V, model, lam, 2.0);
    CHECK(r.lhs_p == 0.0);
    CHECK(r.s2_sq == 0.0);
    CHECK(r.kernel_sq == 0.0);
  }

  SUBCASE("S_2 kernel identity and the p=2 bound") {
    PotentialField V = gen_random_complex(g, 2, 314, 0.5);
    DetRsResult r = det_rs_check(V, model, lam, 2.0);
    CHECK(std::abs(r.s2_sq - r.kernel_sq) <= 1e-9 * (1.0 + r.s2_sq));
    CHECK(r.lhs_p == doctest::Approx(r.s2_sq).epsilon(1e-12));
    CHECK(r.ratio <= 1.0 + 1e-9);
    CHECK(r.ratio > 0.1);  // the bound is not vacuous at this scale
  }

  SUBCASE("p above 2 stays within 5 percent of the symbol bound") {
    PotentialField V = gen_random_complex(g, 2, 315, 0.5);
    for (double p : {2.5, 3.0}) {
      DetRsResult r = det_rs_check(V, model, lam, p);
      CAPTURE(p);
      CHECK(r.ratio <= 1.05);
    }
  }

  SUBCASE("rejections") {
    PotentialField V(g, 2);
    CHECK_THROWS_AS(det_rs_check(V, model, Complex(2, 0), 2.0), std::invalid_argument);
    PotentialField bad(g, 1);
    CHECK_THROWS_AS(det_rs_check(bad, model, lam, 2.0), std::invalid_argument);
  }
}

TEST_CASE("admissible height search") {
  Grid g(1, 8, 2.0 * PI);
  FreeOperatorModel model = FreeOperatorModel::dirac(g, 1.0);
  CMatrix H0 = free_dense(model, Basis::Position);

  SUBCASE("zero potential accepts the starting height") {
    PotentialField V(g, 2);
    BStarResult r = find_b_star(V, model, 2.0);
    CHECK(r.b_star == 2.0);  // 2 max(1, m)
    CHECK(r.sp_at_b == 0.0);
    CHECK(r.op_at_b == 0.0);
    // (-2i + D0)^{-1} is normal; nearest free eigenvalue is +-1
    CHECK(r.resolvent_norm == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
  }

  SUBCASE("constant anti-Hermitian shift has closed-form norms") {
    const double gamma = 0.4, p = 2.0;
    PotentialField V = gen_constant_antiherm(g, 2, gamma);
    BStarResult r = find_b_star(V, model, p);

    // S_p norm of gamma (ib - D0)^{-1} from the free eigenvalues
    std::vector<Complex> mu = eig_dense(free_dense(model, Basis::Fourier)).eigenvalues;
    double sum = 0.0;
    for (Complex ev : mu) sum += std::pow(r.b_star * r.b_star + ev.real() * ev.real(), -p / 2.0);
    double sp_expect = gamma * std::pow(sum, 1.0 / p);
    CHECK(r.sp_at_b == doctest::Approx(sp_expect).epsilon(1e-9));

    // shifted operator is normal: resolvent norm 1/sqrt(mu_min^2 + (b+gamma)^2)
    double expect = 1.0 / std::sqrt(1.0 + std::pow(r.b_star + gamma, 2.0));
    CHECK(r.resolvent_norm == doctest::Approx(expect).epsilon(1e-9));
    CHECK(r.resolvent_norm <= 1.0 + 1e-9);
    CHECK(r.sp_at_2b < r.sp_at_b);
  }

  SUBCASE("random potential satisfies every certificate clause") {
    PotentialField V = gen_random_complex(g, 2, 777, 0.6);
    const double p = 2.5;
    BStarResult r = find_b_star(V, model, p);
    CHECK(r.b_star >= 2.0);
    CHECK(r.sp_at_b < 1.0);
    CHECK(r.op_at_b <= r.sp_at_b + 1e-12);  // operator norm below any S_p norm
    CHECK(r.sp_at_2b < r.sp_at_b);
    CHECK(std::sqrt(r.b_star * r.b_star + 1.0) * (1.0 - r.op_at_b) >= 1.0);
    CHECK(r.resolvent_norm <= 1.0 + 1e-9);

    // independent residual check of the resolvent norm at -i b*
    const int dim = model.dim();
    CMatrix shifted = Complex(0, -r.b_star) * CMatrix::Identity(dim, dim) + H0 +
                      potential_dense(V);
    CHECK(1.0 / singular_values(shifted).back() == doctest::Approx(r.resolvent_norm));
  }

  SUBCASE("exponent validation") {
    PotentialField V(g, 2);
    CHECK_THROWS_AS(find_b_star(V, model, 0.5), std::invalid_argument);
  }
}
