#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <string>

#include "speclab/config.hpp"

using namespace speclab;

namespace {

// Scratch config file, removed on scope exit.
struct TempFile {
  std::filesystem::path path;

  explicit TempFile(const std::string& content) {
    static const auto stamp =
        std::chrono::steady_clock::now().time_since_epoch().count();
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("speclab_cfg_" + std::to_string(stamp) + "_" + std::to_string(counter++) + ".cfg");
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

ExperimentConfig parse(const std::string& content) {
  TempFile f(content);
  return ExperimentConfig::from_file(f.path.string());
}

// The ConfigError message for the given content, or "" when parsing succeeds.
std::string error_of(const std::string& content) {
  TempFile f(content);
  try {
    ExperimentConfig::from_file(f.path.string());
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("an empty file yields the documented defaults") {
  ExperimentConfig cfg = parse("");
  CHECK(cfg.kind == OperatorKind::Dirac);
  CHECK(cfg.d == 1);
  CHECK(cfg.N == 32);
  CHECK(cfg.L == doctest::Approx(2.0 * PI));
  CHECK(cfg.m == 1.0);
  CHECK(cfg.source == PotentialSource::None);
  CHECK(cfg.p == 2.0);
  CHECK(cfg.tau < 0.0);
  CHECK(cfg.b == 0.0);
  CHECK(!cfg.window.has_value());
  CHECK(cfg.s_values.size() == 10);
  CHECK(cfg.out_dir == "out");
}

TEST_CASE("full round trip of every section") {
  ExperimentConfig cfg = parse(
      "# experiment description\n"
      "[operator]\n"
      "kind = kg\n"
      "d = 2\n"
      "N = 16\n"
      "L = 5.0\n"
      "m = 0.5   # trailing comment\n"
      "l = 2\n"
      "\n"
      "[potential]\n"
      "source = generator\n"
      "generator = random-complex\n"
      "amp = 0.3\n"
      "seed = 12345\n"
      "\n"
      "[analysis]\n"
      "p = 3.5\n"
      "tau = 0.2\n"
      "b = 4.0\n"
      "weights = kg-massive, kg-simple\n"
      "window = -1.0, -2.0, 1.0, -0.5\n"
      "grid = 10\n"
      "samples = 500\n"
      "s_values = 0.25, 0.5, 1.0\n"
      "bgk_alpha = 1.5\n"
      "bgk_beta = 2.0\n"
      "bgk_tau = 0.25\n"
      "bgk_family = 10, 20\n"
      "\n"
      "[output]\n"
      "dir = results\n");

  CHECK(cfg.kind == OperatorKind::KleinGordon);
  CHECK(cfg.d == 2);
  CHECK(cfg.N == 16);
  CHECK(cfg.L == 5.0);
  CHECK(cfg.m == 0.5);
  CHECK(cfg.l == 2);
  CHECK(cfg.source == PotentialSource::Generator);
  CHECK(cfg.generator.name == "random-complex");
  CHECK(cfg.generator.amp == 0.3);
  CHECK(cfg.generator.seed == 12345);
  CHECK(cfg.p == 3.5);
  CHECK(cfg.tau == 0.2);
  CHECK(cfg.b == 4.0);
  REQUIRE(cfg.weight_names.size() == 2);
  CHECK(cfg.weight_names[0] == "kg-massive");
  CHECK(cfg.weight_names[1] == "kg-simple");
  REQUIRE(cfg.window.has_value());
  CHECK(cfg.window->first == Complex(-1.0, -2.0));
  CHECK(cfg.window->second == Complex(1.0, -0.5));
  CHECK(cfg.grid_samples == 10);
  CHECK(cfg.samples == 500);
  REQUIRE(cfg.s_values.size() == 3);
  CHECK(cfg.s_values[2] == 1.0);
  CHECK(cfg.bgk_alpha == 1.5);
  CHECK(cfg.bgk_family == std::vector<int>{10, 20});
  CHECK(cfg.out_dir == "results");

  // derived objects are consistent with the fields
  FreeOperatorModel model = cfg.model();
  CHECK(model.kind == OperatorKind::KleinGordon);
  CHECK(model.block_dim() == 2);
  CHECK(model.grid.N == 16);
  TheoremWeight w = cfg.make_weight("kg-massive");
  CHECK(w.p == 3.5);
  CHECK(w.tau == 0.2);
  CHECK(w.m == 0.5);
  CHECK(w.d == 2);
}

TEST_CASE("syntax errors carry file and line") {
  CHECK(contains(error_of("[operator\nkind = dirac\n"), ":1: "));
  CHECK(contains(error_of("[operator\nkind = dirac\n"), "unterminated section"));
  CHECK(contains(error_of("kind = dirac\n"), "outside any [section]"));
  CHECK(contains(error_of("[operator]\njust words\n"), ":2: "));
  CHECK(contains(error_of("[operator]\njust words\n"), "expected key = value"));
  CHECK(contains(error_of("[operator]\n= 3\n"), "empty key"));
  CHECK(contains(error_of("[]\n"), "empty section"));

  std::string dup = error_of("[operator]\nm = 1\nm = 2\n");
  CHECK(contains(dup, ":3: "));
  CHECK(contains(dup, "duplicate key 'm'"));

  std::string unknown = error_of("[analysis]\np = 2.5\nbogus = 1\n");
  CHECK(contains(unknown, "unknown key 'bogus'"));
  CHECK(contains(unknown, "[analysis]"));

  CHECK_THROWS_AS(ExperimentConfig::from_file("/nonexistent/path/x.cfg"), ConfigError);
}

TEST_CASE("typed value errors") {
  CHECK(contains(error_of("[operator]\nN = sixteen\n"), "expected an integer"));
  CHECK(contains(error_of("[operator]\nm = heavy\n"), "expected a number"));
  CHECK(contains(error_of("[potential]\nseed = -3\n"), "expected an unsigned integer"));
  CHECK(contains(error_of("[analysis]\nbgk_family = 1.5\n"), "expected integers"));
  CHECK(contains(error_of("[analysis]\ns_values =\n"), "empty list"));
  CHECK(contains(error_of("[operator]\nkind = schroedinger\n"), "expected dirac or kg"));
  CHECK(contains(error_of("[potential]\nsource = slab\n"), "expected none, generator or file"));
  CHECK(contains(error_of("[analysis]\nweights = dirac-massive, nope\n"), "unknown weight id"));
  CHECK(contains(error_of("[analysis]\nwindow = 1, 2, 3\n"), "re_lo,im_lo,re_hi,im_hi"));
  CHECK(contains(error_of("[analysis]\nwindow = a, 0, 1, 1\n"), "bad number"));
}

TEST_CASE("cross-field validation") {
  CHECK(contains(error_of("[operator]\nd = 4\n"), "d must be 1, 2 or 3"));
  CHECK(contains(error_of("[operator]\nN = 7\n"), "even"));
  CHECK(contains(error_of("[operator]\nL = 0\n"), "positive"));
  CHECK(contains(error_of("[operator]\nm = -1\n"), "nonnegative"));
  CHECK(contains(error_of("[operator]\nd = 2\n[analysis]\np = 2\n"), "exceed the dimension"));
  // defaults give cap = min{p-d, 1} = 1, so 0.9 is legal; shrink the cap
  CHECK(contains(error_of("[analysis]\np = 1.5\ntau = 0.9\n"), "tau must lie in"));
  CHECK(contains(error_of("[analysis]\ntau = 1.0\n"), "tau must lie in"));  // endpoint excluded
  CHECK(contains(error_of("[analysis]\ntau = 0\n"), "tau must lie in"));
  CHECK(contains(error_of("[analysis]\ns_values = 0.5, 1.5\n"), "(0, 1]"));
  CHECK(contains(error_of("[analysis]\ngrid = 1\n"), "grid"));
  CHECK(contains(error_of("[analysis]\nbgk_tau = 0\n"), "bgk_tau"));
  CHECK(contains(error_of("[analysis]\nbgk_family = 0\n"), "bgk_family"));
  CHECK(contains(error_of("[potential]\nsource = file\n"), "potential.file is required"));
  CHECK(contains(error_of("[potential]\nsource = generator\ngenerator = vortex\n"),
                 "constant-antiherm, gaussian-bump or random-complex"));
  CHECK(contains(error_of("[potential]\nsource = generator\ngenerator = gaussian-bump\n"
                          "sigma = 0\n"),
                 "sigma"));
  CHECK(contains(error_of("[output]\ndir =\n"), "output.dir"));

  // window ordering and spectrum crossing
  CHECK(contains(error_of("[analysis]\nwindow = 1, 0, -1, 1\n"), "re_lo < re_hi"));
  CHECK(contains(error_of("[analysis]\nwindow = -2, -0.5, 2, 0.5\n"),
                 "crosses the essential spectrum"));
  // a gap window through the real axis is legitimate for the massive model
  ExperimentConfig ok = parse("[analysis]\nwindow = -0.5, -0.2, 0.5, 0.2\n");
  CHECK(ok.window.has_value());
}

TEST_CASE("tau default is deferred to the weight constructor") {
  ExperimentConfig cfg = parse("[analysis]\np = 2.0\n");
  TheoremWeight w = cfg.make_weight("dirac-massive");
  CHECK(w.tau == doctest::Approx(0.25));  // min{p-d, 1}/4 with p=2, d=1
}
