#include "wcs/chern_simons.hpp"

#include <cmath>
#include <numbers>

#include "wcs/geometry.hpp"
#include "wcs/symbols.hpp"

namespace wcs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

}  // namespace

void CSConfig::validate() const {
  if (!(s > 0.5)) throw std::invalid_argument("Sobolev parameter must exceed 1/2");
  if (!(integrality_tolerance > 0.0)) throw std::invalid_argument("integrality tolerance must be positive");
  quadrature.validate();
}

DensityTerms cs_density_terms(const BergerMetric& m, double s, double alpha) {
  const ChristoffelTable g = christoffel_table(m, alpha);
  const MatrixForm sigma0 = sigma0_connection(m, alpha);
  const MatrixForm sigma1 = sigma_minus1_connection_beta(g);
  const MatrixForm omega1 = curvature_form(g);

  DensityTerms t;
  t.connection_trace = evaluate3(trace(wedge(sigma1, sigma0, sigma0)));
  t.curvature_trace = evaluate3(trace(wedge(sigma0, omega1)));

  const Complex symbol = 2.0 * kI * s;  // 2is, with xi^{-1} integrated into R
  const Complex curvature = -kI / (8.0 * kPi * kPi * kPi) * kResidueConvention * symbol * t.curvature_trace;
  const Complex connection =
      kI / (48.0 * kPi * kPi * kPi) * kResidueConvention * symbol * 3.0 * t.connection_trace;
  t.D = curvature + connection;

  const double normalization = 2.0 * kPi * kPi / s;
  t.f = normalization * t.D.real();
  t.curvature_contribution = normalization * curvature.real();
  return t;
}

double cs_density(const BergerMetric& m, const CSConfig& cfg, double alpha) {
  const DensityTerms t = cs_density_terms(m, cfg.s, alpha);
  if (std::abs(t.D.imag()) > kImaginaryThreshold) throw ConventionError(alpha, t.D.imag());
  return t.f;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial:
      return "trivial";
    case Verdict::Nontrivial:
      return "nontrivial";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

double distance_to_integer(double x) {
  const double r = x - std::floor(x);
  return std::min(r, 1.0 - r);
}

CSReport cs_class(const BergerMetric& m, const CSConfig& cfg) {
  cfg.validate();
  CSReport rep;
  rep.s = cfg.s;
  if (m.lambda().depends_on_param() || m.mu().depends_on_param() || m.nu().depends_on_param()) rep.a = m.a();

  double max_imag = 0.0;
  auto density = [&](double alpha) {
    const DensityTerms t = cs_density_terms(m, cfg.s, alpha);
    const double im = std::abs(t.D.imag());
    if (im > kImaginaryThreshold) throw ConventionError(alpha, t.D.imag());
    max_imag = std::max(max_imag, im);
    return t.f;
  };

  QuadratureResult q = integrate_circle_detailed(density, cfg.quadrature);
  rep.integral = q.value;
  rep.quadrature_n = q.samples;

  const double h = 2.0 * kPi / q.samples;
  rep.samples.reserve(q.grid.size() + 1);
  bool identically_zero = true;
  for (std::size_t j = 0; j < q.grid.size(); ++j) {
    rep.samples.emplace_back(static_cast<double>(j) * h, q.grid[j]);
    identically_zero = identically_zero && q.grid[j] == 0.0;
  }
  rep.samples.emplace_back(2.0 * kPi, density(2.0 * kPi));
  rep.max_imag = max_imag;

  rep.class_value = cfg.s / 4.0 * rep.integral;
  rep.mod_z = rep.class_value - std::floor(rep.class_value);
  rep.alt_class_value = cfg.s * rep.integral;
  rep.alt_mod_z = rep.alt_class_value - std::floor(rep.alt_class_value);

  // A density that vanishes identically gives the zero form; anything else
  // that lands near an integer cannot be decided numerically.
  if (identically_zero) rep.verdict = Verdict::Trivial;
  else if (distance_to_integer(rep.class_value) > cfg.integrality_tolerance) rep.verdict = Verdict::Nontrivial;
  else rep.verdict = Verdict::Indeterminate;
  rep.nontrivial = rep.verdict == Verdict::Nontrivial;
  return rep;
}

double leading_order_density(const BergerMetric& m, double alpha) {
  const MatrixForm sigma0 = sigma0_connection(m, alpha);
  return evaluate3(trace(wedge(sigma0, sigma0, sigma0))).real();
}

std::vector<CSReport> sweep(const std::vector<int>& a_values, const CSConfig& cfg) {
  for (int a : a_values)
    if (a == 0) throw std::invalid_argument("sweep: a = 0 does not define a metric in the family");
  std::vector<CSReport> out;
  out.reserve(a_values.size());
  for (int a : a_values) out.push_back(cs_class(reference_family(a), cfg));
  return out;
}

}  // namespace wcs
