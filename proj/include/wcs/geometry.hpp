#pragma once

#include <array>

#include "wcs/jet.hpp"
#include "wcs/metric.hpp"

namespace wcs {

/// Frame F_1..F_4 = (lambda E1, mu E2, nu E3, d/drho) is indexed 0..3.
inline constexpr int kDim = 4;
inline constexpr int kCircle = 3;  // index of F_4 = d/drho

/// Rank-3 array over frame indices, entry (k, i, j).
template <typename T>
class FrameTensor {
 public:
  T& operator()(int k, int i, int j) { return data_[static_cast<std::size_t>(16 * k + 4 * i + j)]; }
  const T& operator()(int k, int i, int j) const { return data_[static_cast<std::size_t>(16 * k + 4 * i + j)]; }

 private:
  std::array<T, 64> data_{};
};

/// [F_i, F_j] = c(k, i, j) F_k, with the alpha-derivative carried in the jet.
struct StructureConstants : FrameTensor<Jet1> {};

/// nabla_{F_i} F_j = G(k, i, j) F_k for the Levi-Civita connection.
/// Entries are functions of alpha alone; the jet carries d/dalpha.
struct ChristoffelTable : FrameTensor<Jet1> {};

struct CoefficientSet {
  Jet1 U, V, W;  // algebraic in lambda, mu, nu
  Jet1 A, B, C;  // logarithmic derivatives of lambda, mu, nu
};

/// lambda, mu, nu at alpha with their first derivatives, plus A, B, C.
struct ScaleJets {
  Jet1 lambda, mu, nu;
  Jet1 A, B, C;
};

ScaleJets scale_jets(const BergerMetric& m, double alpha);

StructureConstants structure_constants(const BergerMetric& m, double alpha);

/// Christoffel symbols from the Koszul formula in an orthonormal frame,
/// 2 G(k,i,j) = c(k,i,j) - c(i,j,k) - c(j,i,k).
ChristoffelTable christoffel_koszul(const StructureConstants& c);
ChristoffelTable christoffel_koszul(const BergerMetric& m, double alpha);

/// Closed-form table for the scaled frame.
ChristoffelTable christoffel_table(const BergerMetric& m, double alpha);

CoefficientSet coefficient_set(const BergerMetric& m, double alpha);

/// Derivative of G(k,i,j) along the frame direction l. Every entry depends
/// on alpha only, so the three S^3 directions give exactly zero.
inline double frame_derivative(const ChristoffelTable& g, int l, int k, int i, int j) {
  return l == kCircle ? g(k, i, j).d(1) : 0.0;
}

}  // namespace wcs
