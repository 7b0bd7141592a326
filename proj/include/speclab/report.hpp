#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "speclab/util.hpp"

namespace speclab {

/// RFC-4180 escaping: quote fields containing commas, quotes or newlines,
/// doubling embedded quotes.
std::string csv_escape(const std::string& field);

/// Full round-trip precision floating-point formatting (%.17g).
std::string g17(double v);

/// Writes a header row plus data rows, creating parent directories.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// One eigenvalue row of a report: position, multiplicity, distance to the
/// essential set and one column per configured weight.
struct EigRow {
  Complex lambda;
  int mult = 1;
  double distance = 0.0;
  std::vector<double> weights;
};

/// A complete experiment report: a lambda-scatter CSV (re, im, mult,
/// distance, weight columns) plus a line-delimited "key = value" summary
/// with provenance (config hash, seed).
struct ReportRecord {
  std::string experiment_id;
  std::vector<std::string> weight_names;
  std::vector<EigRow> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);

  /// Writes <out_dir>/eigenvalues.csv (when rows exist) and
  /// <out_dir>/summary.txt; contents depend only on the record.
  void emit(const std::string& out_dir) const;
};

}  // namespace speclab
