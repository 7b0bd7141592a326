#include "speclab/clifford.hpp"

#include <stdexcept>

#include "speclab/numerics.hpp"

namespace speclab {

namespace {

CMatrix pauli(int i) {
  CMatrix s(2, 2);
  const Complex I(0.0, 1.0);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: index must be 1..3");
  }
  return s;
}

}  // namespace

CliffordRep build_clifford(int d) {
  if (d < 1 || d > 3)
    throw std::invalid_argument("build_clifford: d must be 1, 2 or 3, got " + std::to_string(d));
  CliffordRep rep;
  rep.d = d;
  if (d <= 2) {
    rep.n = 2;
    rep.alphas.push_back(pauli(1));
    if (d == 2) rep.alphas.push_back(pauli(2));
    rep.beta = pauli(3);
  } else {
    // 4x4: alpha_i = [[0, sigma_i], [sigma_i, 0]], beta = diag(Id, -Id).
    rep.n = 4;
    for (int i = 1; i <= 3; ++i) {
      CMatrix a = CMatrix::Zero(4, 4);
      a.block<2, 2>(0, 2) = pauli(i);
      a.block<2, 2>(2, 0) = pauli(i);
      rep.alphas.push_back(a);
    }
    CMatrix b = CMatrix::Zero(4, 4);
    b.block<2, 2>(0, 0) = CMatrix::Identity(2, 2);
    b.block<2, 2>(2, 2) = -CMatrix::Identity(2, 2);
    rep.beta = b;
  }
  return rep;
}

double anticommutation_residual(const CliffordRep& rep) {
  std::vector<const CMatrix*> gen;
  for (const auto& a : rep.alphas) gen.push_back(&a);
  gen.push_back(&rep.beta);
  const int n = rep.n;
  CMatrix id = CMatrix::Identity(n, n);
  double worst = 0.0;
  for (size_t i = 0; i < gen.size(); ++i)
    for (size_t j = i; j < gen.size(); ++j) {
      CMatrix r = (*gen[i]) * (*gen[j]) + (*gen[j]) * (*gen[i]);
      if (i == j) r -= 2.0 * id;
      worst = std::max(worst, operator_norm(r));
    }
  return worst;
}

}  // namespace speclab
