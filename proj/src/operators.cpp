#include "speclab/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace speclab {

namespace {

// Anything past this dense dimension is outside the desk scale this code is
// meant for; refuse early instead of thrashing.
constexpr int kDenseCap = 4096;

}  // namespace

Grid::Grid(int d_, int N_, double L_) : d(d_), N(N_), L(L_) {
  if (d < 1 || d > 3) throw std::invalid_argument("Grid: d must be 1, 2 or 3");
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("Grid: N must be even and >= 2");
  if (!(L > 0.0)) throw std::invalid_argument("Grid: L must be positive");
}

int Grid::points() const {
  int p = 1;
  for (int i = 0; i < d; ++i) p *= N;
  return p;
}

std::array<int, 3> Grid::unflatten(int idx) const {
  std::array<int, 3> j{0, 0, 0};
  for (int axis = d - 1; axis >= 0; --axis) {
    j[axis] = idx % N;
    idx /= N;
  }
  return j;
}

std::array<double, 3> Grid::freq(int idx) const {
  std::array<int, 3> j = unflatten(idx);
  std::array<double, 3> xi{0.0, 0.0, 0.0};
  for (int axis = 0; axis < d; ++axis) {
    int k = j[axis] < N / 2 ? j[axis] : j[axis] - N;
    xi[axis] = 2.0 * PI * k / L;
  }
  return xi;
}

std::array<double, 3> Grid::point(int idx) const {
  std::array<int, 3> j = unflatten(idx);
  std::array<double, 3> x{0.0, 0.0, 0.0};
  for (int axis = 0; axis < d; ++axis) x[axis] = j[axis] * dx();
  return x;
}

double Grid::freq_norm2(int idx) const {
  std::array<double, 3> xi = freq(idx);
  return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
}

PotentialField::PotentialField(const Grid& g, int n_) : grid(g), n(n_) {
  if (n < 1) throw std::invalid_argument("PotentialField: block size must be >= 1");
  samples.assign(grid.points(), CMatrix::Zero(n, n));
}

void PotentialField::validate() const {
  if (static_cast<int>(samples.size()) != grid.points())
    throw std::invalid_argument("PotentialField: sample count does not match the grid");
  for (const auto& s : samples)
    if (s.rows() != n || s.cols() != n)
      throw std::invalid_argument("PotentialField: sample block has wrong shape");
}

FreeOperatorModel FreeOperatorModel::dirac(const Grid& grid, double m) {
  if (m < 0.0) throw std::invalid_argument("FreeOperatorModel: mass must be >= 0");
  FreeOperatorModel model;
  model.kind = OperatorKind::Dirac;
  model.m = m;
  model.grid = grid;
  model.rep = build_clifford(grid.d);
  model.l = model.rep.n;
  (void)model.dim();
  return model;
}

FreeOperatorModel FreeOperatorModel::klein_gordon(const Grid& grid, double m, int l) {
  if (m < 0.0) throw std::invalid_argument("FreeOperatorModel: mass must be >= 0");
  if (l < 1) throw std::invalid_argument("FreeOperatorModel: internal dimension must be >= 1");
  FreeOperatorModel model;
  model.kind = OperatorKind::KleinGordon;
  model.m = m;
  model.grid = grid;
  model.l = l;
  (void)model.dim();
  return model;
}

int FreeOperatorModel::block_dim() const {
  return kind == OperatorKind::Dirac ? rep.n : l;
}

int FreeOperatorModel::dim() const {
  long long total = static_cast<long long>(grid.points()) * block_dim();
  if (total > kDenseCap)
    throw std::invalid_argument("FreeOperatorModel: dense dimension " + std::to_string(total) +
                                " exceeds the desk-scale cap " + std::to_string(kDenseCap));
  return static_cast<int>(total);
}

CMatrix FreeOperatorModel::symbol(int freq_idx) const {
  std::array<double, 3> xi = grid.freq(freq_idx);
  if (kind == OperatorKind::Dirac) {
    CMatrix s = m * rep.beta;
    for (int axis = 0; axis < grid.d; ++axis) s += xi[axis] * rep.alphas[axis];
    return s;
  }
  double mu = std::sqrt(grid.freq_norm2(freq_idx) + m * m);
  return mu * CMatrix::Identity(l, l);
}

SpectrumModel FreeOperatorModel::spectrum_model() const {
  return kind == OperatorKind::Dirac ? SpectrumModel::dirac(m) : SpectrumModel::klein_gordon(m);
}

CMatrix dft_matrix(const Grid& grid, int block) {
  const int P = grid.points();
  const int dim = P * block;
  const double scale = 1.0 / std::sqrt(static_cast<double>(P));
  CMatrix F = CMatrix::Zero(dim, dim);
  for (int k = 0; k < P; ++k) {
    std::array<double, 3> xi = grid.freq(k);
    for (int j = 0; j < P; ++j) {
      std::array<double, 3> x = grid.point(j);
      double phase = 0.0;
      for (int axis = 0; axis < grid.d; ++axis) phase += xi[axis] * x[axis];
      Complex entry = scale * std::exp(Complex(0.0, -phase));
      for (int a = 0; a < block; ++a) F(k * block + a, j * block + a) = entry;
    }
  }
  return F;
}

CMatrix free_dense(const FreeOperatorModel& model, Basis basis) {
  const int P = model.grid.points();
  const int nb = model.block_dim();
  CMatrix A = CMatrix::Zero(model.dim(), model.dim());
  for (int k = 0; k < P; ++k) A.block(k * nb, k * nb, nb, nb) = model.symbol(k);
  if (basis == Basis::Fourier) return A;
  CMatrix F = dft_matrix(model.grid, nb);
  return F.adjoint() * A * F;
}

CMatrix potential_dense(const PotentialField& V, Basis basis) {
  V.validate();
  const int P = V.grid.points();
  CMatrix A = CMatrix::Zero(P * V.n, P * V.n);
  for (int j = 0; j < P; ++j) A.block(j * V.n, j * V.n, V.n, V.n) = V.samples[j];
  if (basis == Basis::Position) return A;
  CMatrix F = dft_matrix(V.grid, V.n);
  return F * A * F.adjoint();
}

CMatrix perturbed(const CMatrix& free_op, const CMatrix& pot) {
  if (free_op.rows() != pot.rows() || free_op.cols() != pot.cols())
    throw std::invalid_argument("perturbed: operator shapes do not match");
  return free_op + pot;
}

double lp_norm(const PotentialField& V, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: exponent must be >= 1");
  V.validate();
  double cell = std::pow(V.grid.dx(), V.grid.d);
  double sum = 0.0;
  for (const auto& s : V.samples) sum += std::pow(s.norm(), p);
  return std::pow(sum * cell, 1.0 / p);
}

std::vector<std::pair<Complex, int>> discrete_spectrum(const CMatrix& D,
                                                       const SpectrumModel& model,
                                                       double margin) {
  if (margin < 0.0) throw std::invalid_argument("discrete_spectrum: margin must be >= 0");
  std::vector<std::pair<Complex, int>> out;
  for (const auto& [ev, mult] : eig_dense(D).clustered())
    if (distance(ev, model) > margin) out.emplace_back(ev, mult);
  return out;
}

std::vector<std::pair<Complex, int>> discrete_spectrum(const CMatrix& D,
                                                       const SpectrumModel& model) {
  EigenResult res = eig_dense(D);
  double margin = 1e-6 + res.residual;
  std::vector<std::pair<Complex, int>> out;
  for (const auto& [ev, mult] : res.clustered())
    if (distance(ev, model) > margin) out.emplace_back(ev, mult);
  return out;
}

}  // namespace speclab
