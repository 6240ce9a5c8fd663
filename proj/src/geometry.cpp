#include "wcs/geometry.hpp"

namespace wcs {

ScaleJets scale_jets(const BergerMetric& m, double alpha) {
  const Jet2 l = m.lambda().eval_jet2(alpha, m.a());
  const Jet2 u = m.mu().eval_jet2(alpha, m.a());
  const Jet2 n = m.nu().eval_jet2(alpha, m.a());
  ScaleJets s;
  s.lambda = truncate<1>(l);
  s.mu = truncate<1>(u);
  s.nu = truncate<1>(n);
  s.A = derivative(l) / s.lambda;
  s.B = derivative(u) / s.mu;
  s.C = derivative(n) / s.nu;
  return s;
}

StructureConstants structure_constants(const BergerMetric& m, double alpha) {
  const ScaleJets s = scale_jets(m, alpha);
  StructureConstants c;
  auto set = [&c](int k, int i, int j, const Jet1& v) {
    c(k, i, j) = v;
    c(k, j, i) = -v;
  };
  // [E1,E2] = 2E3, [E2,E3] = 2E1, [E1,E3] = -2E2 rescaled to the F frame.
  set(2, 0, 1, Jet1(2.0) * s.lambda * s.mu / s.nu);
  set(0, 1, 2, Jet1(2.0) * s.mu * s.nu / s.lambda);
  set(1, 0, 2, Jet1(-2.0) * s.lambda * s.nu / s.mu);
  // [d/drho, lambda E1] = lambda' E1 = A F1, and likewise for F2, F3.
  set(0, kCircle, 0, s.A);
  set(1, kCircle, 1, s.B);
  set(2, kCircle, 2, s.C);
  return c;
}

ChristoffelTable christoffel_koszul(const StructureConstants& c) {
  ChristoffelTable g;
  for (int k = 0; k < kDim; ++k)
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) g(k, i, j) = Jet1(0.5) * (c(k, i, j) - c(i, j, k) - c(j, i, k));
  return g;
}

ChristoffelTable christoffel_koszul(const BergerMetric& m, double alpha) {
  return christoffel_koszul(structure_constants(m, alpha));
}

ChristoffelTable christoffel_table(const BergerMetric& m, double alpha) {
  const ScaleJets s = scale_jets(m, alpha);
  const Jet1 l2 = s.lambda * s.lambda, m2 = s.mu * s.mu, n2 = s.nu * s.nu;
  const Jet1 lmn = s.lambda * s.mu * s.nu;

  ChristoffelTable g;
  const Jet1 g312 = (m2 * l2 - m2 * n2 + n2 * l2) / lmn;
  const Jet1 g321 = (-m2 * l2 - m2 * n2 + n2 * l2) / lmn;
  const Jet1 g231 = (n2 * l2 - l2 * m2 + m2 * n2) / lmn;
  g(2, 0, 1) = g312;
  g(1, 0, 2) = -g312;
  g(2, 1, 0) = g321;
  g(0, 1, 2) = -g321;
  g(1, 2, 0) = g231;
  g(0, 2, 1) = -g231;

  g(0, 0, kCircle) = -s.A;
  g(kCircle, 0, 0) = s.A;
  g(1, 1, kCircle) = -s.B;
  g(kCircle, 1, 1) = s.B;
  g(2, 2, kCircle) = -s.C;
  g(kCircle, 2, 2) = s.C;
  return g;
}

CoefficientSet coefficient_set(const BergerMetric& m, double alpha) {
  const ScaleJets s = scale_jets(m, alpha);
  const Jet1 l2 = s.lambda * s.lambda, m2 = s.mu * s.mu, n2 = s.nu * s.nu;
  const Jet1 lmn = s.lambda * s.mu * s.nu;
  CoefficientSet cs;
  cs.U = n2 * (m2 - l2) / lmn;
  cs.V = m2 * (n2 - l2) / lmn;
  cs.W = l2 * (n2 - m2) / lmn;
  cs.A = s.A;
  cs.B = s.B;
  cs.C = s.C;
  return cs;
}

}  // namespace wcs
