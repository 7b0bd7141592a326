#pragma once

#include <string>

#include "speclab/operators.hpp"

namespace speclab {

/// Text potential format, bit-exact under write/read round trips:
///   dirac-lt-potential v1 d=<d> N=<N> L=<float> n=<n>
/// followed by N^d * n^2 lines of "re im" (full round-trip precision),
/// grid point outer, matrix row, matrix column inner.
void write_potential(const std::string& path, const PotentialField& V);

/// Parses the header and all entries; throws runtime_error with the file
/// name and line number on any malformed content.
PotentialField read_potential(const std::string& path);

}  // namespace speclab
