#include "speclab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "speclab/bgk.hpp"
#include "speclab/bounds.hpp"
#include "speclab/clifford.hpp"
#include "speclab/conformal.hpp"
#include "speclab/detfun.hpp"
#include "speclab/generators.hpp"
#include "speclab/ltsum.hpp"
#include "speclab/potential_io.hpp"
#include "speclab/report.hpp"

namespace speclab {

namespace {

struct RunContext {
  ExperimentConfig cfg;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;
  int threads = 1;
};

ReportRecord make_report(const RunContext& ctx, const std::string& id) {
  ReportRecord rec;
  rec.experiment_id = id;
  rec.config_hash = ctx.config_hash;
  rec.seed = ctx.seed;
  return rec;
}

std::vector<TheoremWeight> resolve_weights(const ExperimentConfig& cfg) {
  std::vector<TheoremWeight> out;
  out.reserve(cfg.weight_names.size());
  for (const std::string& name : cfg.weight_names) out.push_back(cfg.make_weight(name));
  return out;
}

std::vector<EigRow> eig_rows(const std::vector<std::pair<Complex, int>>& eigs,
                             const SpectrumModel& sm, const std::vector<TheoremWeight>& ws) {
  std::vector<EigRow> rows;
  rows.reserve(eigs.size());
  for (const auto& [lambda, mult] : eigs) {
    EigRow row;
    row.lambda = lambda;
    row.mult = mult;
    row.distance = sm.distance(lambda);
    for (const TheoremWeight& w : ws) row.weights.push_back(weight(w, lambda));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- clifford-check ------------------------------------------------------

int cmd_clifford(const RunContext& ctx) {
  ReportRecord rec = make_report(ctx, "clifford-check");
  CliffordRep rep = build_clifford(ctx.cfg.d);
  double anti = anticommutation_residual(rep);

  double herm = 0.0, trace = 0.0;
  std::vector<CMatrix> mats = rep.alphas;
  mats.push_back(rep.beta);
  for (const CMatrix& a : mats) {
    herm = std::max(herm, operator_norm(CMatrix(a - a.adjoint())));
    trace = std::max(trace, std::abs(a.trace()));
  }

  rec.add("d", static_cast<double>(ctx.cfg.d));
  rec.add("rep_dim", static_cast<double>(rep.n));
  rec.add("anticommutation_residual", anti);
  rec.add("hermiticity_residual", herm);
  rec.add("max_abs_trace", trace);
  bool pass = anti <= 1e-13 && herm <= 1e-13 && trace <= 1e-13;
  rec.add("pass", pass ? "yes" : "no");
  rec.emit(ctx.out_dir);
  return pass ? 0 : 1;
}

// ---- spectrum / lt-sum ----------------------------------------------------

int cmd_spectrum(const RunContext& ctx, bool with_sums) {
  ReportRecord rec = make_report(ctx, with_sums ? "lt-sum" : "spectrum");
  const ExperimentConfig& cfg = ctx.cfg;
  if (with_sums && cfg.weight_names.empty())
    throw ConfigError("lt-sum needs analysis.weights");
  FreeOperatorModel model = cfg.model();
  PotentialField V = build_potential(cfg, ctx.seed);
  CMatrix D = perturbed(free_dense(model, Basis::Position), potential_dense(V));
  SpectrumModel sm = model.spectrum_model();
  auto eigs = discrete_spectrum(D, sm);
  std::vector<TheoremWeight> ws = resolve_weights(cfg);

  rec.weight_names = cfg.weight_names;
  rec.rows = eig_rows(eigs, sm, ws);
  rec.add("eigenvalue_clusters", static_cast<double>(eigs.size()));
  rec.add("potential_lp", lp_norm(V, cfg.p));
  if (with_sums)
    for (size_t i = 0; i < ws.size(); ++i)
      rec.add("sum:" + cfg.weight_names[i], lt_sum(eigs, ws[i]));
  rec.emit(ctx.out_dir);
  return 0;
}

// ---- conformal-check ------------------------------------------------------

int cmd_conformal(const RunContext& ctx) {
  ReportRecord rec = make_report(ctx, "conformal-check");
  const ExperimentConfig& cfg = ctx.cfg;
  if (cfg.kind != OperatorKind::Dirac)
    throw ConfigError("conformal-check applies to the dirac operator");
  const double m = cfg.m;
  const int count = cfg.samples;
  std::mt19937_64 rng(ctx.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double R = 3.0 * (1.0 + m);
  SpectrumModel sm = SpectrumModel::dirac(m);

  double rt_worst = 0.0;  // roundtrip error relative to 1 + |lambda|
  int violations = 0;

  if (m > 0.0) {
    DiracDiscMap map(m);
    double cm1_min = std::numeric_limits<double>::infinity(), cm1_max = 0.0;
    double cm2_min = std::numeric_limits<double>::infinity(), cm2_max = 0.0;
    for (int i = 0; i < count; ++i) {
      Complex lam;
      do {
        lam = Complex(R * unit(rng), R * unit(rng));
      } while (sm.distance(lam) <= 1e-6 * (1.0 + std::abs(lam)));
      Complex u = map.to_disc(lam);
      rt_worst = std::max(rt_worst,
                          std::abs(map.from_disc(u) - lam) / (1.0 + std::abs(lam)));
      double dist = sm.distance(lam);
      double c1 = map.cm1_comparator(u) / dist;
      double c2 = map.cm2_comparator(lam) / (1.0 - std::abs(u));
      cm1_min = std::min(cm1_min, c1);
      cm1_max = std::max(cm1_max, c1);
      cm2_min = std::min(cm2_min, c2);
      cm2_max = std::max(cm2_max, c2);

      // Koebe bracket at the pre-image stage point.
      Complex z3 = map.stage_z3(lam);
      if (std::abs(z3) < 1.0 - 1e-9 && std::abs(1.0 + z3 * z3) > 1e-8) {
        auto [lo, hi] = map.koebe_bracket(z3);
        double dpsi = sm.distance(map.psi(z3));
        if (dpsi < lo * (1.0 - 1e-12) || dpsi > hi * (1.0 + 1e-12)) ++violations;
      }
    }
    rec.add("cm1_ratio_min", cm1_min);
    rec.add("cm1_ratio_max", cm1_max);
    rec.add("cm2_ratio_min", cm2_min);
    rec.add("cm2_ratio_max", cm2_max);
  } else {
    CayleyMap map(2.0);
    for (int i = 0; i < count; ++i) {
      Complex lam;
      do {
        lam = Complex(R * unit(rng), R * std::abs(unit(rng)));
      } while (!(lam.imag() > 1e-6 * (1.0 + std::abs(lam))));
      Complex u = map.to_disc(lam);
      rt_worst = std::max(rt_worst,
                          std::abs(map.from_disc(u) - lam) / (1.0 + std::abs(lam)));
      // Exact massless distortion: dist * |u-1|^2 / (1-|u|) = b (1+|u|).
      double lhsv = lam.imag() * std::norm(u - 1.0) / (1.0 - std::abs(u));
      double expect = map.b * (1.0 + std::abs(u));
      if (std::abs(lhsv - expect) > 1e-9 * expect) ++violations;
    }
  }

  rec.add("samples", static_cast<double>(count));
  rec.add("roundtrip_worst", rt_worst);
  rec.add("bracket_violations", static_cast<double>(violations));
  bool pass = rt_worst <= 1e-9 && violations == 0;
  rec.add("pass", pass ? "yes" : "no");
  rec.emit(ctx.out_dir);
  return pass ? 0 : 1;
}

// ---- resolvent-bound ------------------------------------------------------

int cmd_resolvent(const RunContext& ctx) {
  ReportRecord rec = make_report(ctx, "resolvent-bound");
  const ExperimentConfig& cfg = ctx.cfg;
  const double m = cfg.m;
  const int g = cfg.grid_samples;
  Complex lo, hi;
  if (cfg.window) {
    lo = cfg.window->first;
    hi = cfg.window->second;
  } else {
    double R = 3.0 * (1.0 + m);
    lo = Complex(-R, 0.05 * (1.0 + m));
    hi = Complex(R, R);
  }

  SpectrumModel sm = cfg.kind == OperatorKind::Dirac ? SpectrumModel::dirac(m)
                                                     : SpectrumModel::klein_gordon(m);
  std::vector<std::vector<std::string>> table;
  double khat = 0.0;
  bool all_finite = true;
  std::vector<double> ratios(static_cast<size_t>(g) * g, 0.0);
  std::vector<double> integrals(static_cast<size_t>(g) * g, 0.0);
  std::vector<double> cores(static_cast<size_t>(g) * g, 0.0);
  std::vector<char> valid(static_cast<size_t>(g) * g, 0);

  parallel_for(g * g, ctx.threads, [&](int idx) {
    int i = idx / g, j = idx % g;
    double re = lo.real() + (hi.real() - lo.real()) * i / (g - 1.0);
    double im = lo.imag() + (hi.imag() - lo.imag()) * j / (g - 1.0);
    Complex lam(re, im);
    if (!(sm.distance(lam) > 0.0)) return;
    ResolventSide side = side_for(lam);
    double integral = resolvent_lp_radial(lam, m, cfg.d, cfg.p, side);
    double core = det_br_core(lam, m, cfg.d, cfg.p);
    integrals[idx] = integral;
    cores[idx] = core;
    ratios[idx] = integral / core;
    valid[idx] = 1;
  });

  for (int idx = 0; idx < g * g; ++idx) {
    if (!valid[idx]) continue;
    if (!std::isfinite(ratios[idx])) {
      all_finite = false;
      continue;
    }
    khat = std::max(khat, ratios[idx]);
    int i = idx / g, j = idx % g;
    double re = lo.real() + (hi.real() - lo.real()) * i / (g - 1.0);
    double im = lo.imag() + (hi.imag() - lo.imag()) * j / (g - 1.0);
    table.push_back({g17(re), g17(im), g17(integrals[idx]), g17(cores[idx]), g17(ratios[idx])});
  }
  write_csv(ctx.out_dir + "/resolvent_ratio.csv", {"re", "im", "integral", "core", "ratio"},
            table);

  rec.add("grid", static_cast<double>(g));
  rec.add("khat", khat);
  rec.add("pass", all_finite ? "yes" : "no");
  rec.emit(ctx.out_dir);
  return all_finite ? 0 : 1;
}

// ---- det-zeros -------------------------------------------------------------

int cmd_det_zeros(const RunContext& ctx) {
  ReportRecord rec = make_report(ctx, "det-zeros");
  const ExperimentConfig& cfg = ctx.cfg;
  if (!cfg.window) throw ConfigError("det-zeros needs analysis.window");
  FreeOperatorModel model = cfg.model();
  PotentialField V = build_potential(cfg, ctx.seed);
  DetSetup setup(model, V, cfg.p, cfg.b);
  SpectrumModel sm = model.spectrum_model();

  Complex nb(0.0, setup.b());
  double fib_err = std::abs(setup.f_value(nb) - 1.0);

  std::vector<ZeroCluster> zeros = zeros_in_region(setup, cfg.window->first, cfg.window->second);

  // Reference eigenvalues inside the window from the dense solver.
  auto eigs = discrete_spectrum(setup.perturbed_position(), sm);
  std::vector<std::pair<Complex, int>> expected;
  for (const auto& [lam, mult] : eigs) {
    bool inside = lam.real() > cfg.window->first.real() && lam.real() < cfg.window->second.real() &&
                  lam.imag() > cfg.window->first.imag() && lam.imag() < cfg.window->second.imag();
    if (inside) expected.emplace_back(lam, mult);
  }

  // Multiset comparison: expand by multiplicity, sort, pair within 1e-6.
  auto expand = [](const std::vector<std::pair<Complex, int>>& src) {
    std::vector<Complex> flat;
    for (const auto& [z, k] : src) flat.insert(flat.end(), k, z);
    std::sort(flat.begin(), flat.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return flat;
  };
  std::vector<std::pair<Complex, int>> found;
  for (const ZeroCluster& z : zeros) found.emplace_back(z.location, z.multiplicity);
  std::vector<Complex> za = expand(found), zb = expand(expected);
  bool match = za.size() == zb.size();
  double worst = 0.0;
  if (match)
    for (size_t i = 0; i < za.size(); ++i) {
      double err = std::abs(za[i] - zb[i]) / (1.0 + std::abs(zb[i]));
      worst = std::max(worst, err);
      if (err > 1e-6) match = false;
    }

  std::vector<TheoremWeight> ws = resolve_weights(cfg);
  rec.weight_names = cfg.weight_names;
  rec.rows = eig_rows(found, sm, ws);
  rec.add("b", setup.b());
  rec.add("f_at_ib_error", fib_err);
  rec.add("zeros_found", static_cast<double>(za.size()));
  rec.add("eigenvalues_expected", static_cast<double>(zb.size()));
  rec.add("worst_match_error", worst);
  bool pass = match && fib_err <= 1e-9;
  rec.add("pass", pass ? "yes" : "no");
  rec.emit(ctx.out_dir);
  return pass ? 0 : 1;
}

// ---- bgk-check -------------------------------------------------------------

int cmd_bgk(const RunContext& ctx) {
  ReportRecord rec = make_report(ctx, "bgk-check");
  const ExperimentConfig& cfg = ctx.cfg;
  std::vector<BoundaryPair> pairs = {{Complex(1.0, 0.0), cfg.bgk_beta}};

  std::vector<std::vector<std::string>> table;
  double baseline = 0.0, worst = 0.0;
  for (size_t fi = 0; fi < cfg.bgk_family.size(); ++fi) {
    int count = cfg.bgk_family[fi];
    // Zeros accumulating radially toward zeta = 1.
    std::vector<std::pair<Complex, int>> zeros;
    for (int k = 1; k <= count; ++k)
      zeros.emplace_back(Complex(1.0 - 0.9 / k, 0.0), 1);
    DiscFunction h = synth_blaschke(zeros);
    double khat = fit_envelope(h, cfg.bgk_alpha, pairs);
    double zs = zero_sum(zeros, cfg.bgk_alpha, cfg.bgk_tau, pairs);
    double ratio = zs / std::max(khat, 1e-12);
    if (fi == 0) baseline = ratio;
    worst = std::max(worst, ratio);
    table.push_back({std::to_string(count), g17(khat), g17(zs), g17(ratio)});
  }
  write_csv(ctx.out_dir + "/bgk_family.csv", {"zeros", "khat", "zero_sum", "ratio"}, table);

  rec.add("alpha", cfg.bgk_alpha);
  rec.add("beta", cfg.bgk_beta);
  rec.add("tau", cfg.bgk_tau);
  rec.add("baseline_ratio", baseline);
  rec.add("max_ratio", worst);
  bool pass = worst <= 3.0 * std::max(baseline, 1e-12);
  rec.add("pass", pass ? "yes" : "no");
  rec.emit(ctx.out_dir);
  return pass ? 0 : 1;
}

// ---- sweep ------------------------------------------------------------------

int cmd_sweep(const RunContext& ctx) {
  ReportRecord rec = make_report(ctx, "sweep");
  const ExperimentConfig& cfg = ctx.cfg;
  if (cfg.weight_names.empty()) throw ConfigError("sweep needs analysis.weights");
  FreeOperatorModel model = cfg.model();
  PotentialField V = build_potential(cfg, ctx.seed);
  TheoremWeight w = cfg.make_weight(cfg.weight_names.front());

  ScalingFit fit = scaling_exponent(model, V, w, cfg.s_values);

  std::vector<std::vector<std::string>> table;
  for (size_t i = 0; i < fit.s_used.size(); ++i)
    table.push_back({g17(fit.s_used[i]), g17(fit.sums[i])});
  write_csv(ctx.out_dir + "/scaling.csv", {"s", "lt_sum"}, table);

  rec.add("weight", cfg.weight_names.front());
  rec.add("slope", fit.slope);
  rec.add("dropped", static_cast<double>(fit.dropped));
  rec.add("slope_budget", cfg.p + 0.3);
  bool pass = fit.slope <= cfg.p + 0.3;
  rec.add("pass", pass ? "yes" : "no");
  rec.emit(ctx.out_dir);
  return pass ? 0 : 1;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = {
      "clifford-check", "spectrum",  "conformal-check", "resolvent-bound",
      "det-zeros",      "lt-sum",    "bgk-check",       "sweep"};
  return names;
}

PotentialField build_potential(const ExperimentConfig& cfg, std::uint64_t seed) {
  FreeOperatorModel model = cfg.model();
  const int n = model.block_dim();
  switch (cfg.source) {
    case PotentialSource::None:
      return PotentialField(model.grid, n);
    case PotentialSource::Generator: {
      const GeneratorSpec& gen = cfg.generator;
      if (gen.name == "constant-antiherm")
        return gen_constant_antiherm(model.grid, n, gen.gamma);
      if (gen.name == "gaussian-bump")
        return gen_gaussian_bump(model.grid, n, gen.amp, gen.sigma, gen.center);
      return gen_random_complex(model.grid, n, seed, gen.amp);
    }
    case PotentialSource::File: {
      PotentialField V = read_potential(cfg.potential_file);
      if (V.grid.d != cfg.d || V.grid.N != cfg.N ||
          std::abs(V.grid.L - cfg.L) > 1e-12 * std::max(1.0, cfg.L) || V.n != n)
        throw ConfigError("potential file '" + cfg.potential_file +
                          "' does not match the configured operator (d, N, L, n)");
      return V;
    }
  }
  throw std::logic_error("build_potential: unhandled source");
}

int run_subcommand(const std::string& name, const RunOptions& opts) {
  try {
    if (opts.config_path.empty()) throw ConfigError("missing --config <path>");
    ExperimentConfig cfg = ExperimentConfig::from_file(opts.config_path);

    RunContext ctx{cfg, cfg.out_dir, cfg.generator.seed, 0, resolve_threads(opts.threads)};
    if (!opts.out_override.empty()) ctx.out_dir = opts.out_override;
    if (opts.seed) ctx.seed = *opts.seed;
    {
      std::ifstream in(opts.config_path, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      ctx.config_hash = fnv1a64(ss.str());
    }

    if (name == "clifford-check") return cmd_clifford(ctx);
    if (name == "spectrum") return cmd_spectrum(ctx, false);
    if (name == "lt-sum") return cmd_spectrum(ctx, true);
    if (name == "conformal-check") return cmd_conformal(ctx);
    if (name == "resolvent-bound") return cmd_resolvent(ctx);
    if (name == "det-zeros") return cmd_det_zeros(ctx);
    if (name == "bgk-check") return cmd_bgk(ctx);
    if (name == "sweep") return cmd_sweep(ctx);
    throw ConfigError("unknown subcommand '" + name + "'");
  } catch (const std::invalid_argument& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace speclab
