#pragma once

#include <cstdint>

#include "speclab/operators.hpp"

namespace speclab {

/// V(x) = -i gamma Id_n at every grid point.  Shifts every free eigenvalue
/// by exactly -i gamma, which makes this the closed-form test family.
PotentialField gen_constant_antiherm(const Grid& grid, int n, double gamma);

/// Scalar Gaussian bump times Id_n, periodic distance to the center point
/// (the same center coordinate on every axis):
///   V(x) = amp * exp(-dist_per(x, center)^2 / (2 sigma^2)) Id_n.
PotentialField gen_gaussian_bump(const Grid& grid, int n, double amp, double sigma,
                                 double center);

/// Dense i.i.d. complex Gaussian entries, amp * (g1 + i g2) / sqrt(2),
/// drawn from mt19937_64(seed) with std::normal_distribution in a fixed
/// order: grid point outer, then matrix row, then column, real before
/// imaginary.  Reproducible for a fixed (seed, platform).
PotentialField gen_random_complex(const Grid& grid, int n, std::uint64_t seed, double amp);

}  // namespace speclab
