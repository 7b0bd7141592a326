#pragma once

#include <array>
#include <utility>
#include <vector>

#include "speclab/clifford.hpp"
#include "speclab/numerics.hpp"
#include "speclab/spectra.hpp"
#include "speclab/util.hpp"

namespace speclab {

/// Periodic box [0, L)^d sampled at N points per axis (N even).  Fourier
/// frequencies are 2 pi k / L with k in {-N/2, ..., N/2 - 1} per axis;
/// indices run row-major with the last axis fastest, frequencies stored in
/// FFT order (0, 1, ..., N/2-1, -N/2, ..., -1).
struct Grid {
  int d = 1;
  int N = 2;
  double L = 2.0 * PI;

  Grid() = default;  // the member defaults already form a valid grid
  Grid(int d_, int N_, double L_);

  int points() const;                           // N^d
  double dx() const { return L / N; }
  std::array<int, 3> unflatten(int idx) const;  // per-axis index in [0, N)
  std::array<double, 3> freq(int idx) const;    // 2 pi k_signed / L per axis
  std::array<double, 3> point(int idx) const;   // j * dx per axis
  double freq_norm2(int idx) const;
};

/// Matrix-valued samples V(x_j), one n x n block per grid point.
struct PotentialField {
  Grid grid;
  int n = 1;
  std::vector<CMatrix> samples;

  PotentialField(const Grid& g, int n_);
  void validate() const;
};

/// Free Dirac or Klein-Gordon operator on the grid.  The Fourier-basis
/// matrix is block diagonal with blocks symbol(xi_k); Dirac blocks are
/// alpha . xi + m beta, Klein-Gordon blocks sqrt(|xi|^2 + m^2) Id_l.
struct FreeOperatorModel {
  OperatorKind kind = OperatorKind::Dirac;
  double m = 0.0;
  Grid grid;
  CliffordRep rep;  // Dirac only
  int l = 1;        // Klein-Gordon internal dimension

  static FreeOperatorModel dirac(const Grid& grid, double m);
  static FreeOperatorModel klein_gordon(const Grid& grid, double m, int l = 1);

  int block_dim() const;
  int dim() const;  // points * block_dim, capped at the dense desk scale
  CMatrix symbol(int freq_idx) const;
  SpectrumModel spectrum_model() const;
};

enum class Basis { Fourier, Position };

/// Unitary DFT matrix (frequency-major rows) tensored with Id_block:
/// entry ((k,a),(j,b)) = N^{-d/2} exp(-i xi_k . x_j) delta_ab.
CMatrix dft_matrix(const Grid& grid, int block);

/// Dense free operator in the requested basis.
CMatrix free_dense(const FreeOperatorModel& model, Basis basis);

/// Dense multiplication operator: block diagonal in position basis,
/// conjugated by the DFT for the Fourier basis.
CMatrix potential_dense(const PotentialField& V, Basis basis = Basis::Position);

/// free + potential with shape check; both must be in the same basis.
CMatrix perturbed(const CMatrix& free_op, const CMatrix& pot);

/// Discrete L^p norm (sum_j ||V(x_j)||_F^p dx^d)^{1/p}.
double lp_norm(const PotentialField& V, double p);

/// Eigenvalue clusters of D located off the model spectrum: clusters (at
/// 1e-8 relative) whose distance to the model spectrum exceeds the margin.
/// The two-argument form uses margin = 1e-6 + eigensolve residual.
std::vector<std::pair<Complex, int>> discrete_spectrum(const CMatrix& D,
                                                       const SpectrumModel& model,
                                                       double margin);
std::vector<std::pair<Complex, int>> discrete_spectrum(const CMatrix& D,
                                                       const SpectrumModel& model);

}  // namespace speclab
