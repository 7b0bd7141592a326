#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "speclab/bgk.hpp"
#include "speclab/bounds.hpp"
#include "speclab/clifford.hpp"
#include "speclab/conformal.hpp"
#include "speclab/detfun.hpp"
#include "speclab/generators.hpp"
#include "speclab/ltsum.hpp"
#include "speclab/operators.hpp"
#include "speclab/potential_io.hpp"
#include "speclab/schatten.hpp"
#include "speclab/spectra.hpp"

namespace py = pybind11;
using namespace speclab;

namespace {

std::vector<BoundaryPair> to_pairs(const std::vector<std::pair<Complex, double>>& raw) {
  std::vector<BoundaryPair> out;
  out.reserve(raw.size());
  for (const auto& [zeta, beta] : raw) out.push_back({zeta, beta});
  return out;
}

DiscFunction wrap_disc(const std::function<Complex(Complex)>& f,
                       const std::optional<std::vector<std::pair<Complex, int>>>& zeros) {
  DiscFunction h;
  h.evaluator = f;
  h.known_zeros = zeros;
  h.validate();
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spectral laboratory core: grid operators, conformal maps, determinants, sums";

  // ---- clifford / spectra --------------------------------------------------
  py::class_<CliffordRep>(m, "CliffordRep")
      .def_readonly("d", &CliffordRep::d)
      .def_readonly("n", &CliffordRep::n)
      .def_readonly("alphas", &CliffordRep::alphas)
      .def_readonly("beta", &CliffordRep::beta);
  m.def("build_clifford", &build_clifford, py::arg("d"));
  m.def("anticommutation_residual", &anticommutation_residual, py::arg("rep"));

  py::class_<SpectrumModel>(m, "SpectrumModel")
      .def_static("dirac", &SpectrumModel::dirac, py::arg("m"))
      .def_static("klein_gordon", &SpectrumModel::klein_gordon, py::arg("m"))
      .def_readonly("m", &SpectrumModel::m)
      .def("distance", &SpectrumModel::distance, py::arg("lam"))
      .def("in_resolvent", &SpectrumModel::in_resolvent, py::arg("lam"));

  // ---- conformal -----------------------------------------------------------
  py::class_<DiracDiscMap>(m, "DiracDiscMap")
      .def(py::init<double, double>(), py::arg("m"), py::arg("b") = 0.0)
      .def_property_readonly("m", &DiracDiscMap::m)
      .def_property_readonly("b", &DiracDiscMap::b)
      .def_property_readonly("z_b", &DiracDiscMap::z_b)
      .def_property_readonly("u_plus", &DiracDiscMap::u_plus)
      .def_property_readonly("u_minus", &DiracDiscMap::u_minus)
      .def_property_readonly("u_i", &DiracDiscMap::u_i)
      .def_property_readonly("u_mi", &DiracDiscMap::u_mi)
      .def("stage_z3", &DiracDiscMap::stage_z3, py::arg("lam"))
      .def("to_disc", &DiracDiscMap::to_disc, py::arg("lam"))
      .def("from_disc", &DiracDiscMap::from_disc, py::arg("u"))
      .def("psi", &DiracDiscMap::psi, py::arg("z3"))
      .def("psi_prime", &DiracDiscMap::psi_prime, py::arg("z3"))
      .def("koebe_bracket", &DiracDiscMap::koebe_bracket, py::arg("z3"))
      .def("cm1_comparator", &DiracDiscMap::cm1_comparator, py::arg("u"))
      .def("cm2_comparator", &DiracDiscMap::cm2_comparator, py::arg("lam"));

  py::class_<CayleyMap>(m, "CayleyMap")
      .def(py::init<double>(), py::arg("b") = 2.0)
      .def_readonly("b", &CayleyMap::b)
      .def("to_disc", &CayleyMap::to_disc, py::arg("lam"))
      .def("from_disc", &CayleyMap::from_disc, py::arg("u"));

  // ---- schatten ------------------------------------------------------------
  m.def("schatten_norm", &schatten_norm, py::arg("a"), py::arg("p"));
  m.def("reg_det", &reg_det, py::arg("a"), py::arg("k"));
  m.def("ceil_index", &ceil_index, py::arg("p"));

  // ---- operators -----------------------------------------------------------
  py::class_<Grid>(m, "Grid")
      .def(py::init<int, int, double>(), py::arg("d"), py::arg("N"), py::arg("L"))
      .def_readonly("d", &Grid::d)
      .def_readonly("N", &Grid::N)
      .def_readonly("L", &Grid::L)
      .def("points", &Grid::points)
      .def("dx", &Grid::dx);

  py::class_<PotentialField>(m, "PotentialField")
      .def(py::init<const Grid&, int>(), py::arg("grid"), py::arg("n"))
      .def_readonly("n", &PotentialField::n)
      .def_property_readonly("grid", [](const PotentialField& v) { return v.grid; })
      .def("get", [](const PotentialField& v, int j) { return v.samples.at(j); }, py::arg("j"))
      .def("set",
           [](PotentialField& v, int j, const CMatrix& block) {
             if (block.rows() != v.n || block.cols() != v.n)
               throw std::invalid_argument("block must be n x n");
             v.samples.at(j) = block;
           },
           py::arg("j"), py::arg("block"));

  py::class_<FreeOperatorModel>(m, "FreeOperatorModel")
      .def_static("dirac", &FreeOperatorModel::dirac, py::arg("grid"), py::arg("m"))
      .def_static("klein_gordon", &FreeOperatorModel::klein_gordon, py::arg("grid"),
                  py::arg("m"), py::arg("l") = 1)
      .def_readonly("m", &FreeOperatorModel::m)
      .def_property_readonly("grid", [](const FreeOperatorModel& f) { return f.grid; })
      .def("block_dim", &FreeOperatorModel::block_dim)
      .def("dim", &FreeOperatorModel::dim)
      .def("spectrum_model", &FreeOperatorModel::spectrum_model);

  py::enum_<Basis>(m, "Basis").value("Fourier", Basis::Fourier).value("Position",
                                                                      Basis::Position);
  m.def("dft_matrix", &dft_matrix, py::arg("grid"), py::arg("block"));
  m.def("free_dense", &free_dense, py::arg("model"), py::arg("basis") = Basis::Position);
  m.def("potential_dense", &potential_dense, py::arg("potential"),
        py::arg("basis") = Basis::Position);
  m.def("perturbed", &perturbed, py::arg("free_op"), py::arg("pot"));
  m.def("lp_norm", &lp_norm, py::arg("potential"), py::arg("p"));
  m.def(
      "discrete_spectrum",
      [](const CMatrix& D, const SpectrumModel& sm) { return discrete_spectrum(D, sm); },
      py::arg("D"), py::arg("model"));

  // ---- generators ------------------------------------------------------------
  m.def("gen_constant_antiherm", &gen_constant_antiherm, py::arg("grid"), py::arg("n"),
        py::arg("gamma"));
  m.def("gen_gaussian_bump", &gen_gaussian_bump, py::arg("grid"), py::arg("n"), py::arg("amp"),
        py::arg("sigma"), py::arg("center"));
  m.def("gen_random_complex", &gen_random_complex, py::arg("grid"), py::arg("n"),
        py::arg("seed"), py::arg("amp"));
  m.def("write_potential", &write_potential, py::arg("path"), py::arg("potential"));
  m.def("read_potential", &read_potential, py::arg("path"));

  // ---- bounds ----------------------------------------------------------------
  m.def(
      "resolvent_lp_radial",
      [](Complex lam, double mass, int d, double p) {
        return resolvent_lp_radial(lam, mass, d, p, side_for(lam));
      },
      py::arg("lam"), py::arg("m"), py::arg("d"), py::arg("p"));
  m.def("det_br_core", &det_br_core, py::arg("lam"), py::arg("m"), py::arg("d"), py::arg("p"));
  m.def(
      "det_rs_check",
      [](const PotentialField& V, const FreeOperatorModel& model, Complex lam, double p) {
        DetRsResult r = det_rs_check(V, model, lam, p);
        py::dict out;
        out["lhs_p"] = r.lhs_p;
        out["rhs_p"] = r.rhs_p;
        out["ratio"] = r.ratio;
        out["s2_sq"] = r.s2_sq;
        out["kernel_sq"] = r.kernel_sq;
        return out;
      },
      py::arg("potential"), py::arg("model"), py::arg("lam"), py::arg("p"));
  m.def(
      "find_b_star",
      [](const PotentialField& V, const FreeOperatorModel& model, double p) {
        BStarResult r = find_b_star(V, model, p);
        py::dict out;
        out["b_star"] = r.b_star;
        out["sp_at_b"] = r.sp_at_b;
        out["op_at_b"] = r.op_at_b;
        out["sp_at_2b"] = r.sp_at_2b;
        out["resolvent_norm"] = r.resolvent_norm;
        return out;
      },
      py::arg("potential"), py::arg("model"), py::arg("p"));

  // ---- determinant ------------------------------------------------------------
  py::class_<DetSetup>(m, "DetSetup")
      .def(py::init<const FreeOperatorModel&, const PotentialField&, double, double>(),
           py::arg("model"), py::arg("potential"), py::arg("p"), py::arg("b") = 0.0)
      .def_property_readonly("b", &DetSetup::b)
      .def_property_readonly("p", &DetSetup::p)
      .def_property_readonly("order", &DetSetup::order)
      .def("f_value", &DetSetup::f_value, py::arg("lam"))
      .def("f_value_eig", &DetSetup::f_value_eig, py::arg("lam"))
      .def(
          "zeros_in_region",
          [](const DetSetup& s, Complex lo, Complex hi) {
            std::vector<std::pair<Complex, int>> out;
            for (const ZeroCluster& z : zeros_in_region(s, lo, hi))
              out.emplace_back(z.location, z.multiplicity);
            return out;
          },
          py::arg("lo"), py::arg("hi"));

  // ---- eigenvalue sums ----------------------------------------------------------
  py::enum_<WeightId>(m, "WeightId")
      .value("DiracMassive", WeightId::DiracMassive)
      .value("DiracMassiveLowP", WeightId::DiracMassiveLowP)
      .value("DiracMassless", WeightId::DiracMassless)
      .value("KgMassive", WeightId::KgMassive)
      .value("KgMassless", WeightId::KgMassless)
      .value("KgSimple", WeightId::KgSimple)
      .value("GapSelfAdjoint", WeightId::GapSelfAdjoint)
      .value("GapSelfAdjointLowP", WeightId::GapSelfAdjointLowP);
  m.def("parse_weight_id", &parse_weight_id, py::arg("name"));
  m.def("default_tau", &default_tau, py::arg("p"), py::arg("d"));

  py::class_<TheoremWeight>(m, "TheoremWeight")
      .def_static("make", &TheoremWeight::make, py::arg("id"), py::arg("d"), py::arg("p"),
                  py::arg("m"), py::arg("tau") = -1.0)
      .def_readonly("id", &TheoremWeight::id)
      .def_readonly("m", &TheoremWeight::m)
      .def_readonly("p", &TheoremWeight::p)
      .def_readonly("tau", &TheoremWeight::tau)
      .def_readonly("d", &TheoremWeight::d);
  m.def("weight", &weight, py::arg("w"), py::arg("lam"));
  m.def("lt_sum", &lt_sum, py::arg("eigs"), py::arg("w"));
  m.def(
      "regime_classify",
      [](const std::vector<Complex>& seq, double mass, double p, double tau) {
        RegimeReport r = regime_classify(seq, mass, p, tau);
        return std::make_pair(r.regime, r.reported_sum);
      },
      py::arg("seq"), py::arg("m"), py::arg("p"), py::arg("tau"));
  m.def(
      "scaling_exponent",
      [](const FreeOperatorModel& model, const PotentialField& V, const TheoremWeight& w,
         const std::vector<double>& s_values) {
        ScalingFit f = scaling_exponent(model, V, w, s_values);
        py::dict out;
        out["slope"] = f.slope;
        out["s_used"] = f.s_used;
        out["sums"] = f.sums;
        out["dropped"] = f.dropped;
        return out;
      },
      py::arg("model"), py::arg("potential"), py::arg("w"), py::arg("s_values"));

  // ---- disc-side engine -----------------------------------------------------------
  py::class_<DiscFunction>(m, "DiscFunction")
      .def("__call__", [](const DiscFunction& h, Complex z) { return h.evaluator(z); },
           py::arg("z"))
      .def_property_readonly("known_zeros",
                             [](const DiscFunction& h) { return h.known_zeros; });
  m.def(
      "zero_sum",
      [](const std::vector<std::pair<Complex, int>>& zeros, double alpha, double tau,
         const std::vector<std::pair<Complex, double>>& pairs) {
        return zero_sum(zeros, alpha, tau, to_pairs(pairs));
      },
      py::arg("zeros"), py::arg("alpha"), py::arg("tau"), py::arg("pairs"));
  m.def(
      "fit_envelope",
      [](const std::function<Complex(Complex)>& f, double alpha,
         const std::vector<std::pair<Complex, double>>& pairs, double rho_max) {
        return fit_envelope(wrap_disc(f, std::nullopt), alpha, to_pairs(pairs), rho_max);
      },
      py::arg("h"), py::arg("alpha"), py::arg("pairs"), py::arg("rho_max") = kRhoMaxDefault);
  m.def("synth_blaschke", &synth_blaschke, py::arg("zeros"));
  m.def(
      "check_ratio",
      [](const DiscFunction& h, double alpha,
         const std::vector<std::pair<Complex, double>>& pairs, double tau, double rho_max) {
        return check_ratio(h, alpha, to_pairs(pairs), tau, rho_max);
      },
      py::arg("h"), py::arg("alpha"), py::arg("pairs"), py::arg("tau"),
      py::arg("rho_max") = kRhoMaxDefault);
}
