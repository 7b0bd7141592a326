#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "speclab/spectra.hpp"
#include "test_support.hpp"

using namespace speclab;

TEST_CASE("Dirac distances on hand-checked points") {
  SpectrumModel dirac = SpectrumModel::dirac(1.0);
  // nearest spectral points of lambda = i are +-1
  CHECK(distance(Complex(0, 1), dirac) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  // on the spectrum
  CHECK(distance(Complex(2, 0), dirac) == 0.0);
  // midpoint of the gap
  CHECK(distance(Complex(0, 0), dirac) == doctest::Approx(1.0));
  // above the right branch the distance is the height
  CHECK(distance(Complex(3, 0.25), dirac) == doctest::Approx(0.25));
}

TEST_CASE("Klein-Gordon distances") {
  SpectrumModel kg = SpectrumModel::klein_gordon(1.0);
  // Re >= m branch: straight drop to the half-line
  CHECK(distance(Complex(1, 1), kg) == doctest::Approx(1.0));
  // left of the edge: distance to the endpoint m
  CHECK(distance(Complex(0, 0), kg) == doctest::Approx(1.0));
  CHECK(distance(Complex(0, 1), kg) == doctest::Approx(std::sqrt(2.0)));
  CHECK(distance(Complex(2, 0), kg) == 0.0);
}

TEST_CASE("in_resolvent agrees with positive distance") {
  SpectrumModel dirac = SpectrumModel::dirac(1.0);
  CHECK(in_resolvent(Complex(0, 1), dirac));
  CHECK_FALSE(in_resolvent(Complex(-3, 0), dirac));
  CHECK(in_resolvent(Complex(0.5, 0), dirac));  // inside the gap

  SpectrumModel kg = SpectrumModel::klein_gordon(1.0);
  CHECK(in_resolvent(Complex(1, 1), kg));
  CHECK_FALSE(in_resolvent(Complex(5, 0), kg));
  CHECK(in_resolvent(Complex(-1, 0), kg));  // everything left of m is resolvent
}

TEST_CASE("member calls forward to the free functions") {
  SpectrumModel dirac = SpectrumModel::dirac(2.0);
  Complex lambda(0.3, -0.7);
  CHECK(dirac.distance(lambda) == distance(lambda, dirac));
  CHECK(dirac.in_resolvent(lambda) == in_resolvent(lambda, dirac));
}

TEST_CASE("Dirac spectrum symmetries of the distance") {
  SpectrumModel dirac = SpectrumModel::dirac(0.75);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Complex z = testsup::random_point(rng, 4.0);
    double dz = distance(z, dirac);
    CHECK(distance(std::conj(z), dirac) == doctest::Approx(dz).epsilon(1e-14));
    CHECK(distance(-z, dirac) == doctest::Approx(dz).epsilon(1e-14));
  }
}

TEST_CASE("distance is 1-Lipschitz") {
  std::mt19937_64 rng(12);
  for (const SpectrumModel& model :
       {SpectrumModel::dirac(1.0), SpectrumModel::dirac(0.0), SpectrumModel::klein_gordon(0.5)}) {
    for (int i = 0; i < 200; ++i) {
      Complex a = testsup::random_point(rng, 3.0);
      Complex b = testsup::random_point(rng, 3.0);
      CHECK(std::abs(distance(a, model) - distance(b, model)) <= std::abs(a - b) + 1e-12);
    }
  }
}

TEST_CASE("massless Dirac spectrum is the whole real line") {
  SpectrumModel d0 = SpectrumModel::dirac(0.0);
  CHECK(distance(Complex(17.0, 0.0), d0) == 0.0);
  CHECK(distance(Complex(-5.0, 0.3), d0) == doctest::Approx(0.3));
  CHECK(distance(Complex(0.0, -2.0), d0) == doctest::Approx(2.0));
}
