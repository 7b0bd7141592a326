#pragma once

#include <functional>

namespace speclab {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // accumulated panel error estimate
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b].  Panels are bisected, each
/// child inheriting half the tolerance budget, until the local K15/G7
/// discrepancy fits; throws std::runtime_error when the depth cap is hit
/// with the budget still blown.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol = 1e-9, double abs_tol = 0.0,
                                    int max_depth = 48);

}  // namespace speclab
