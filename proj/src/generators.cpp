#include "speclab/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace speclab {

PotentialField gen_constant_antiherm(const Grid& grid, int n, double gamma) {
  PotentialField V(grid, n);
  const CMatrix block = Complex(0.0, -gamma) * CMatrix::Identity(n, n);
  for (CMatrix& s : V.samples) s = block;
  return V;
}

PotentialField gen_gaussian_bump(const Grid& grid, int n, double amp, double sigma,
                                 double center) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian bump needs sigma > 0");
  PotentialField V(grid, n);
  for (int j = 0; j < grid.points(); ++j) {
    std::array<double, 3> x = grid.point(j);
    double dist2 = 0.0;
    for (int axis = 0; axis < grid.d; ++axis) {
      double delta = std::abs(x[axis] - center);
      delta = std::min(delta, grid.L - delta);
      dist2 += delta * delta;
    }
    V.samples[j] = amp * std::exp(-dist2 / (2.0 * sigma * sigma)) * CMatrix::Identity(n, n);
  }
  return V;
}

PotentialField gen_random_complex(const Grid& grid, int n, std::uint64_t seed, double amp) {
  PotentialField V(grid, n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double scale = amp / std::sqrt(2.0);
  for (int j = 0; j < grid.points(); ++j)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        double re = gauss(rng);
        double im = gauss(rng);
        V.samples[j](r, c) = scale * Complex(re, im);
      }
  return V;
}

}  // namespace speclab
