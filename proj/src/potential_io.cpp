#include "speclab/potential_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace speclab {

namespace {

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

void write_potential(const std::string& path, const PotentialField& V) {
  V.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "dirac-lt-potential v1 d=" << V.grid.d << " N=" << V.grid.N << " L=" << g17(V.grid.L)
      << " n=" << V.n << "\n";
  for (const CMatrix& block : V.samples)
    for (int r = 0; r < V.n; ++r)
      for (int c = 0; c < V.n; ++c)
        out << g17(block(r, c).real()) << " " << g17(block(r, c).imag()) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

PotentialField read_potential(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open potential file '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) fail(path, 1, "missing header");

  int d = 0, N = 0, n = 0;
  double L = 0.0;
  {
    std::istringstream hs(header);
    std::string magic, version, tok;
    hs >> magic >> version;
    if (magic != "dirac-lt-potential" || version != "v1")
      fail(path, 1, "expected header 'dirac-lt-potential v1 ...'");
    bool have_d = false, have_N = false, have_L = false, have_n = false;
    while (hs >> tok) {
      size_t eq = tok.find('=');
      if (eq == std::string::npos) fail(path, 1, "bad header token '" + tok + "'");
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      char* end = nullptr;
      if (key == "d") {
        d = static_cast<int>(std::strtol(val.c_str(), &end, 10));
        have_d = true;
      } else if (key == "N") {
        N = static_cast<int>(std::strtol(val.c_str(), &end, 10));
        have_N = true;
      } else if (key == "L") {
        L = std::strtod(val.c_str(), &end);
        have_L = true;
      } else if (key == "n") {
        n = static_cast<int>(std::strtol(val.c_str(), &end, 10));
        have_n = true;
      } else {
        fail(path, 1, "unknown header field '" + key + "'");
      }
      if (end == val.c_str() || *end != '\0') fail(path, 1, "bad header value '" + tok + "'");
    }
    if (!(have_d && have_N && have_L && have_n)) fail(path, 1, "header must set d, N, L and n");
  }

  Grid grid(d, N, L);  // validates d, N, L
  if (n < 1) fail(path, 1, "block size n must be >= 1");
  PotentialField V(grid, n);

  const long expected = static_cast<long>(grid.points()) * n * n;
  std::string line;
  long count = 0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    // allow trailing blank lines only
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) {
      if (count < expected) fail(path, lineno, "blank line before all entries were read");
      continue;
    }
    if (count >= expected) fail(path, lineno, "more entries than the header promises");
    double re = 0.0, im = 0.0;
    char extra = 0;
    int got = std::sscanf(line.c_str(), "%lf %lf %c", &re, &im, &extra);
    if (got != 2) fail(path, lineno, "expected 're im', got '" + line + "'");
    long point = count / (static_cast<long>(n) * n);
    long inner = count % (static_cast<long>(n) * n);
    V.samples[point](static_cast<int>(inner / n), static_cast<int>(inner % n)) = Complex(re, im);
    ++count;
  }
  if (count != expected)
    throw std::runtime_error(path + ": expected " + std::to_string(expected) +
                             " entry lines, found " + std::to_string(count));
  return V;
}

}  // namespace speclab
