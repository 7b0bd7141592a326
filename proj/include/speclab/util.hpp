#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace speclab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

constexpr double PI = 3.14159265358979323846;

/// Number of worker threads: explicit argument > SPECLAB_THREADS env > 1.
int resolve_threads(int requested);

/// Run fn(i) for i in [0, count) on up to `threads` std::threads.
/// Results must be written to pre-sized per-index slots so the outcome is
/// independent of the schedule.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

/// FNV-1a 64-bit hash, used to stamp config provenance into reports.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace speclab
