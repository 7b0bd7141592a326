#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "speclab/ltsum.hpp"
#include "speclab/operators.hpp"
#include "speclab/util.hpp"

namespace speclab {

/// Configuration problems carry the file, line and field in the message and
/// map to exit code 2 at the CLI boundary.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class PotentialSource { None, Generator, File };

struct GeneratorSpec {
  std::string name;          // constant-antiherm | gaussian-bump | random-complex
  double gamma = 0.5;        // constant-antiherm
  double amp = 1.0;          // gaussian-bump, random-complex
  double sigma = 0.7;        // gaussian-bump
  double center = 0.0;       // gaussian-bump (same coordinate on every axis)
  std::uint64_t seed = 1;    // random-complex
};

/// Flat key=value configuration with [section] headers and # comments.
struct ExperimentConfig {
  // [operator]
  OperatorKind kind = OperatorKind::Dirac;
  int d = 1;
  int N = 32;
  double L = 2.0 * PI;
  double m = 1.0;
  int l = 1;  // KG block size; Dirac block size comes from the Clifford rep

  // [potential]
  PotentialSource source = PotentialSource::None;
  GeneratorSpec generator;
  std::string potential_file;

  // [analysis]
  double p = 2.0;
  double tau = -1.0;  // < 0 -> default rule
  double b = 0.0;     // <= 0 -> auto via find_b_star
  std::vector<std::string> weight_names;
  std::optional<std::pair<Complex, Complex>> window;  // lo, hi for det-zeros
  int grid_samples = 40;     // resolvent-bound lambda grid per axis
  int samples = 2000;        // conformal-check sample count
  std::vector<double> s_values = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  double bgk_alpha = 1.0;
  double bgk_beta = 1.0;
  double bgk_tau = 0.5;
  std::vector<int> bgk_family = {10, 25, 50, 100, 200};

  // [output]
  std::string out_dir = "out";

  /// Parses and validates; throws ConfigError with file:line context.
  static ExperimentConfig from_file(const std::string& path);

  /// Cross-field checks (p > d, even N, window off the essential set, ...).
  void validate() const;

  FreeOperatorModel model() const;
  TheoremWeight make_weight(const std::string& name) const;
};

}  // namespace speclab
