#pragma once

#include <vector>

#include "speclab/util.hpp"

namespace speclab {

/// Matrices alpha_1..alpha_d, beta obeying
///   alpha_i alpha_j + alpha_j alpha_i = 2 delta_ij Id,
/// with beta counted as alpha_{d+1}.
struct CliffordRep {
  int d = 0;  // space dimension, 1..3
  int n = 0;  // matrix size: 2 for d=1,2 and 4 for d=3
  std::vector<CMatrix> alphas;
  CMatrix beta;
};

/// Standard representation: d=1 (sigma1, sigma3), d=2 (sigma1, sigma2,
/// sigma3), d=3 the 4x4 block construction from the Pauli matrices.
/// Throws std::invalid_argument outside d in {1,2,3}.
CliffordRep build_clifford(int d);

/// max over all pairs from {alpha_1..alpha_d, beta} of
/// ||a_i a_j + a_j a_i - 2 delta_ij Id||_op.  Zero for a genuine
/// representation.
double anticommutation_residual(const CliffordRep& rep);

}  // namespace speclab
