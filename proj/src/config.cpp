#include "speclab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace speclab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

/// Raw parse result: "section.key" -> entry, with enough position data to
/// produce file:line diagnostics for every field.
class RawConfig {
 public:
  RawConfig(std::string path) : path_(std::move(path)) {}

  void load() {
    std::ifstream in(path_);
    if (!in) throw ConfigError("cannot open config file '" + path_ + "'");
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ConfigError(at(lineno) + "unterminated section header");
        section = trim(line.substr(1, line.size() - 2));
        if (section.empty()) throw ConfigError(at(lineno) + "empty section name");
        continue;
      }
      size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError(at(lineno) + "expected key = value");
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw ConfigError(at(lineno) + "empty key");
      if (section.empty())
        throw ConfigError(at(lineno) + "key '" + key + "' outside any [section]");
      std::string full = section + "." + key;
      if (entries_.count(full))
        throw ConfigError(at(lineno) + "duplicate key '" + key + "' in [" + section + "]");
      entries_[full] = Entry{value, lineno, false};
    }
  }

  Entry* find(const std::string& section, const std::string& key) {
    auto it = entries_.find(section + "." + key);
    if (it == entries_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  std::string get_string(const std::string& sec, const std::string& key, std::string dflt) {
    Entry* e = find(sec, key);
    return e ? e->value : dflt;
  }

  double get_double(const std::string& sec, const std::string& key, double dflt) {
    Entry* e = find(sec, key);
    if (!e) return dflt;
    return parse_double(*e, sec, key);
  }

  int get_int(const std::string& sec, const std::string& key, int dflt) {
    Entry* e = find(sec, key);
    if (!e) return dflt;
    char* end = nullptr;
    long v = std::strtol(e->value.c_str(), &end, 10);
    if (end == e->value.c_str() || *end != '\0')
      throw ConfigError(at(e->line) + "key '" + key + "' in [" + sec +
                        "]: expected an integer, got '" + e->value + "'");
    return static_cast<int>(v);
  }

  std::uint64_t get_u64(const std::string& sec, const std::string& key, std::uint64_t dflt) {
    Entry* e = find(sec, key);
    if (!e) return dflt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(e->value.c_str(), &end, 10);
    // strtoull accepts a sign and wraps the negation; that is never what a
    // seed means, so treat any '-' as a parse failure.
    if (end == e->value.c_str() || *end != '\0' ||
        e->value.find('-') != std::string::npos)
      throw ConfigError(at(e->line) + "key '" + key + "' in [" + sec +
                        "]: expected an unsigned integer, got '" + e->value + "'");
    return static_cast<std::uint64_t>(v);
  }

  double parse_double(const Entry& e, const std::string& sec, const std::string& key) {
    char* end = nullptr;
    double v = std::strtod(e.value.c_str(), &end);
    if (end == e.value.c_str() || *end != '\0')
      throw ConfigError(at(e.line) + "key '" + key + "' in [" + sec +
                        "]: expected a number, got '" + e.value + "'");
    return v;
  }

  std::vector<double> get_double_list(const std::string& sec, const std::string& key,
                                      std::vector<double> dflt) {
    Entry* e = find(sec, key);
    if (!e) return dflt;
    std::vector<double> out;
    for (const std::string& tok : split_list(e->value)) {
      Entry fake{tok, e->line, true};
      out.push_back(parse_double(fake, sec, key));
    }
    if (out.empty())
      throw ConfigError(at(e->line) + "key '" + key + "' in [" + sec + "]: empty list");
    return out;
  }

  std::vector<int> get_int_list(const std::string& sec, const std::string& key,
                                std::vector<int> dflt) {
    Entry* e = find(sec, key);
    if (!e) return dflt;
    std::vector<int> out;
    for (double v : get_double_list_from(*e, sec, key)) {
      int iv = static_cast<int>(v);
      if (static_cast<double>(iv) != v)
        throw ConfigError(at(e->line) + "key '" + key + "' in [" + sec +
                          "]: expected integers");
      out.push_back(iv);
    }
    return out;
  }

  void reject_unused() const {
    for (const auto& [full, e] : entries_) {
      if (e.used) continue;
      size_t dot = full.find('.');
      throw ConfigError(at(e.line) + "unknown key '" + full.substr(dot + 1) + "' in [" +
                        full.substr(0, dot) + "]");
    }
  }

  std::string at(int line) const { return path_ + ":" + std::to_string(line) + ": "; }

  const Entry* peek(const std::string& sec, const std::string& key) const {
    auto it = entries_.find(sec + "." + key);
    return it == entries_.end() ? nullptr : &it->second;
  }

 private:
  std::vector<double> get_double_list_from(const Entry& e, const std::string& sec,
                                           const std::string& key) {
    std::vector<double> out;
    for (const std::string& tok : split_list(e.value)) {
      Entry fake{tok, e.line, true};
      out.push_back(parse_double(fake, sec, key));
    }
    if (out.empty())
      throw ConfigError(at(e.line) + "key '" + key + "' in [" + sec + "]: empty list");
    return out;
  }

  std::string path_;
  std::map<std::string, Entry> entries_;
};

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  RawConfig raw(path);
  raw.load();
  ExperimentConfig cfg;

  std::string kind = raw.get_string("operator", "kind", "dirac");
  if (kind == "dirac") {
    cfg.kind = OperatorKind::Dirac;
  } else if (kind == "kg") {
    cfg.kind = OperatorKind::KleinGordon;
  } else {
    const Entry* e = raw.peek("operator", "kind");
    throw ConfigError(raw.at(e->line) + "key 'kind' in [operator]: expected dirac or kg, got '" +
                      kind + "'");
  }
  cfg.d = raw.get_int("operator", "d", cfg.d);
  cfg.N = raw.get_int("operator", "N", cfg.N);
  cfg.L = raw.get_double("operator", "L", cfg.L);
  cfg.m = raw.get_double("operator", "m", cfg.m);
  cfg.l = raw.get_int("operator", "l", cfg.l);

  std::string source = raw.get_string("potential", "source", "none");
  if (source == "none") {
    cfg.source = PotentialSource::None;
  } else if (source == "generator") {
    cfg.source = PotentialSource::Generator;
  } else if (source == "file") {
    cfg.source = PotentialSource::File;
  } else {
    const Entry* e = raw.peek("potential", "source");
    throw ConfigError(raw.at(e->line) +
                      "key 'source' in [potential]: expected none, generator or file, got '" +
                      source + "'");
  }
  cfg.generator.name = raw.get_string("potential", "generator", cfg.generator.name);
  cfg.generator.gamma = raw.get_double("potential", "gamma", cfg.generator.gamma);
  cfg.generator.amp = raw.get_double("potential", "amp", cfg.generator.amp);
  cfg.generator.sigma = raw.get_double("potential", "sigma", cfg.generator.sigma);
  cfg.generator.center = raw.get_double("potential", "center", cfg.generator.center);
  cfg.generator.seed = raw.get_u64("potential", "seed", cfg.generator.seed);
  cfg.potential_file = raw.get_string("potential", "file", cfg.potential_file);

  cfg.p = raw.get_double("analysis", "p", cfg.p);
  cfg.tau = raw.get_double("analysis", "tau", cfg.tau);
  cfg.b = raw.get_double("analysis", "b", cfg.b);
  if (const Entry* e = raw.find("analysis", "weights")) {
    cfg.weight_names = split_list(e->value);
    if (cfg.weight_names.empty())
      throw ConfigError(raw.at(e->line) + "key 'weights' in [analysis]: empty list");
    for (const std::string& name : cfg.weight_names) {
      try {
        parse_weight_id(name);
      } catch (const std::invalid_argument& ex) {
        throw ConfigError(raw.at(e->line) + "key 'weights' in [analysis]: " + ex.what());
      }
    }
  }
  if (const Entry* e = raw.find("analysis", "window")) {
    std::vector<std::string> parts = split_list(e->value);
    if (parts.size() != 4)
      throw ConfigError(raw.at(e->line) +
                        "key 'window' in [analysis]: expected re_lo,im_lo,re_hi,im_hi");
    double v[4];
    for (int i = 0; i < 4; ++i) {
      char* end = nullptr;
      v[i] = std::strtod(parts[i].c_str(), &end);
      if (end == parts[i].c_str() || *end != '\0')
        throw ConfigError(raw.at(e->line) + "key 'window' in [analysis]: bad number '" +
                          parts[i] + "'");
    }
    cfg.window = std::make_pair(Complex(v[0], v[1]), Complex(v[2], v[3]));
  }
  cfg.grid_samples = raw.get_int("analysis", "grid", cfg.grid_samples);
  cfg.samples = raw.get_int("analysis", "samples", cfg.samples);
  cfg.s_values = raw.get_double_list("analysis", "s_values", cfg.s_values);
  cfg.bgk_alpha = raw.get_double("analysis", "bgk_alpha", cfg.bgk_alpha);
  cfg.bgk_beta = raw.get_double("analysis", "bgk_beta", cfg.bgk_beta);
  cfg.bgk_tau = raw.get_double("analysis", "bgk_tau", cfg.bgk_tau);
  cfg.bgk_family = raw.get_int_list("analysis", "bgk_family", cfg.bgk_family);

  cfg.out_dir = raw.get_string("output", "dir", cfg.out_dir);

  raw.reject_unused();
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (d < 1 || d > 3) throw ConfigError("operator.d must be 1, 2 or 3");
  if (N < 2 || N % 2 != 0) throw ConfigError("operator.N must be even and >= 2");
  if (!(L > 0.0)) throw ConfigError("operator.L must be positive");
  if (!(m >= 0.0)) throw ConfigError("operator.m must be nonnegative");
  if (l < 1) throw ConfigError("operator.l must be >= 1");
  if (!(p > static_cast<double>(d)))
    throw ConfigError("analysis.p must exceed the dimension d");
  if (tau >= 0.0) {
    double cap = std::min(p - static_cast<double>(d), 1.0);
    if (!(tau > 0.0 && tau < cap))
      throw ConfigError("analysis.tau must lie in (0, min{p-d, 1})");
  }
  if (window) {
    Complex lo = window->first, hi = window->second;
    if (!(lo.real() < hi.real() && lo.imag() < hi.imag()))
      throw ConfigError("analysis.window must satisfy re_lo < re_hi and im_lo < im_hi");
    if (lo.imag() <= 0.0 && hi.imag() >= 0.0) {
      bool hits = kind == OperatorKind::Dirac ? (hi.real() >= m || lo.real() <= -m)
                                              : hi.real() >= m;
      if (hits) throw ConfigError("analysis.window crosses the essential spectrum");
    }
  }
  if (grid_samples < 2) throw ConfigError("analysis.grid must be >= 2");
  if (samples < 1) throw ConfigError("analysis.samples must be >= 1");
  for (double s : s_values)
    if (!(s > 0.0 && s <= 1.0)) throw ConfigError("analysis.s_values must lie in (0, 1]");
  if (!(bgk_alpha >= 0.0)) throw ConfigError("analysis.bgk_alpha must be nonnegative");
  if (!(bgk_beta >= 0.0)) throw ConfigError("analysis.bgk_beta must be nonnegative");
  if (!(bgk_tau > 0.0)) throw ConfigError("analysis.bgk_tau must be positive");
  if (bgk_family.empty()) throw ConfigError("analysis.bgk_family must not be empty");
  for (int c : bgk_family)
    if (c < 1) throw ConfigError("analysis.bgk_family entries must be >= 1");
  if (source == PotentialSource::File && potential_file.empty())
    throw ConfigError("potential.file is required when potential.source = file");
  if (source == PotentialSource::Generator && generator.name != "constant-antiherm" &&
      generator.name != "gaussian-bump" && generator.name != "random-complex")
    throw ConfigError("potential.generator must be constant-antiherm, gaussian-bump or "
                      "random-complex");
  if (source == PotentialSource::Generator && generator.name == "gaussian-bump" &&
      !(generator.sigma > 0.0))
    throw ConfigError("potential.sigma must be positive");
  if (out_dir.empty()) throw ConfigError("output.dir must not be empty");
}

FreeOperatorModel ExperimentConfig::model() const {
  Grid grid(d, N, L);
  return kind == OperatorKind::Dirac ? FreeOperatorModel::dirac(grid, m)
                                     : FreeOperatorModel::klein_gordon(grid, m, l);
}

TheoremWeight ExperimentConfig::make_weight(const std::string& name) const {
  return TheoremWeight::make(parse_weight_id(name), d, p, m, tau);
}

}  // namespace speclab
