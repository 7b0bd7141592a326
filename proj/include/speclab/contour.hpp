#pragma once

#include <functional>
#include <vector>

#include "speclab/util.hpp"

namespace speclab {

using Analytic = std::function<Complex(Complex)>;

struct ZeroCluster {
  Complex location;
  int multiplicity = 0;
};

struct ContourOptions {
  int initial_nodes = 128;   // trapezoid nodes per rectangle side at the root
  int min_nodes = 32;        // node floor for subdivided cells
  int max_nodes = 4096;      // doubling cap per side
  double winding_tol = 0.1;  // accepted distance of the raw winding from an integer
  double fd_step_rel = 1e-5;       // derivative step h = fd_step_rel * (1 + |z|)
  double newton_rel_tol = 1e-10;   // Newton stop |dz| <= tol * (1 + |z|)
  int newton_cap = 50;
  double cluster_rms_rel = 1e-7;   // moment spread below which a cell is one cluster
  double cell_floor_rel = 1e-6;    // cell diameter floor (relative), cluster reported as-is
  double moment_refine_rel = 1e-3;  // multi-zero centroid agreement between levels, vs cell size
  double f_floor = 1e-13;          // min|f| / max|f| on a contour flags "through a zero"
  int jitter_retries = 6;
  int max_depth = 40;
};

/// Raw trapezoid moments of f' / f along a closed polyline (node list,
/// consecutive segments, wrapping).  winding_raw is the 0th moment / 2 pi i;
/// s1 and s2 are the first and second moments (sums of zeros and of squared
/// zeros when the contour is fine enough).
struct ContourMoments {
  double winding_raw = 0.0;
  Complex s1{0.0, 0.0};
  Complex s2{0.0, 0.0};
  double min_abs = 0.0;
  double max_abs = 0.0;
};

/// Derivative by central differences with one Richardson step:
/// (4 D_{h/2} - D_h) / 3, h = fd_step_rel * (1 + |z|).
Complex fd_derivative(const Analytic& f, Complex z, double fd_step_rel = 1e-5);

ContourMoments contour_moments(const Analytic& f, const std::vector<Complex>& loop,
                               double fd_step_rel = 1e-5);

/// All zeros of f inside the open rectangle (lo, hi), with multiplicities,
/// by recursive quadrisection of the argument-principle winding number.
/// Simple zeros are Newton-refined; a cell whose contour moments certify a
/// tight cluster is reported as one location with the winding as its
/// multiplicity.  Throws std::invalid_argument for a degenerate rectangle
/// and std::runtime_error when the winding will not stabilize or a zero
/// pins the boundary despite jittering.
std::vector<ZeroCluster> find_zeros(const Analytic& f, Complex lo, Complex hi,
                                    const ContourOptions& opts = {});

/// Winding number of f around a circle (doubling node rule as above).
int winding_circle(const Analytic& f, Complex center, double radius,
                   const ContourOptions& opts = {});

}  // namespace speclab
