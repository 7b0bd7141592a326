#include "speclab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace speclab {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  auto emit_row = [&out](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(row[i]);
    }
    out << "\r\n";
  };
  emit_row(header);
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width differs from the header");
    emit_row(row);
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void ReportRecord::add(const std::string& key, const std::string& value) {
  summary.emplace_back(key, value);
}

void ReportRecord::add(const std::string& key, double value) {
  summary.emplace_back(key, g17(value));
}

void ReportRecord::emit(const std::string& out_dir) const {
  std::filesystem::create_directories(out_dir);

  if (!rows.empty()) {
    std::vector<std::string> header = {"re", "im", "mult", "distance"};
    for (const std::string& w : weight_names) header.push_back("w:" + w);
    std::vector<std::vector<std::string>> table;
    table.reserve(rows.size());
    for (const EigRow& r : rows) {
      if (r.weights.size() != weight_names.size())
        throw std::invalid_argument("report row has the wrong number of weight columns");
      std::vector<std::string> row = {g17(r.lambda.real()), g17(r.lambda.imag()),
                                      std::to_string(r.mult), g17(r.distance)};
      for (double w : r.weights) row.push_back(g17(w));
      table.push_back(std::move(row));
    }
    write_csv(out_dir + "/eigenvalues.csv", header, table);
  }

  std::ofstream out(out_dir + "/summary.txt");
  if (!out) throw std::runtime_error("cannot open '" + out_dir + "/summary.txt' for writing");
  out << "experiment = " << experiment_id << "\n";
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(config_hash));
  out << "config_hash = " << hex << "\n";
  out << "seed = " << seed << "\n";
  for (const auto& [k, v] : summary) out << k << " = " << v << "\n";
  if (!out) throw std::runtime_error("write failed for '" + out_dir + "/summary.txt'");
}

}  // namespace speclab
