#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "speclab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"speclab: spectral laboratory for perturbed Dirac and Klein-Gordon models"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "exit status: 0 pass, 1 numerical-acceptance failure, 2 configuration error\n"
      "environment: SPECLAB_THREADS is the fallback for --threads");

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("--config", config_path, "configuration file (key = value with [sections])")
      ->required();
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "override the [potential] seed for generators");
  app.add_option("--out", out_dir, "output directory (overrides [output] dir)");
  app.add_option("--threads", threads, "worker threads (default: SPECLAB_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  for (const std::string& name : speclab::subcommand_names())
    app.add_subcommand(name)->silent(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // flag problems are configuration errors
  }

  speclab::RunOptions opts;
  opts.config_path = config_path;
  opts.out_override = out_dir;
  opts.threads = threads;
  if (seed_opt->count() > 0) opts.seed = seed;

  return speclab::run_subcommand(app.get_subcommands().front()->get_name(), opts);
}
