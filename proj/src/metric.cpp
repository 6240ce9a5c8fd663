#include "wcs/metric.hpp"

#include <numbers>

namespace wcs {

BergerMetric::BergerMetric(PeriodicExpr lambda, PeriodicExpr mu, PeriodicExpr nu, int a, int positivity_samples)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)), a_(a) {
  const double h = 2.0 * std::numbers::pi / positivity_samples;
  for (int j = 0; j < positivity_samples; ++j) {
    const double alpha = j * h;
    const std::pair<const char*, const PeriodicExpr*> scales[] = {{"lambda", &lambda_}, {"mu", &mu_}, {"nu", &nu_}};
    for (const auto& [name, e] : scales) {
      const double v = e->eval(alpha, a_);
      if (!(v > 0.0)) throw PositivityError(name, alpha, v);
    }
  }
}

bool BergerMetric::is_constant() const {
  return !lambda_.depends_on_alpha() && !mu_.depends_on_alpha() && !nu_.depends_on_alpha();
}

BergerMetric reference_family(int a) {
  if (a == 0) throw std::invalid_argument("the metric family needs a non-zero integer a");
  using E = PeriodicExpr;
  const E x = E::param() * E::alpha();
  const E one = E::constant(1.0), two = E::constant(2.0);
  return BergerMetric(one, two + (one / E::param()) * cos(x) * sin(x), two - cos(x), a);
}

BergerMetric round_metric() { return constant_metric(1.0, 1.0, 1.0); }

BergerMetric constant_metric(double lambda, double mu, double nu) {
  using E = PeriodicExpr;
  return BergerMetric(E::constant(lambda), E::constant(mu), E::constant(nu));
}

}  // namespace wcs
