#pragma once

#include <stdexcept>
#include <string>

#include "wcs/expr.hpp"

namespace wcs {

class PositivityError : public std::domain_error {
 public:
  PositivityError(const std::string& which, double alpha, double value)
      : std::domain_error(which + " is not positive at alpha=" + std::to_string(alpha) + " (value " +
                          std::to_string(value) + ")"),
        which_(which),
        alpha_(alpha) {}
  const std::string& which() const noexcept { return which_; }
  double alpha() const noexcept { return alpha_; }

 private:
  std::string which_;
  double alpha_;
};

/**
 * Metric on S^3 x S^1 for which lambda E1, mu E2, nu E3, d/drho are
 * orthonormal, E_i left-invariant on S^3 and lambda, mu, nu functions of
 * the circle coordinate only.
 */
class BergerMetric {
 public:
  static constexpr int kPositivitySamples = 1024;

  /// Throws PositivityError if a scale is non-positive on the sample grid.
  BergerMetric(PeriodicExpr lambda, PeriodicExpr mu, PeriodicExpr nu, int a = 0,
               int positivity_samples = kPositivitySamples);

  const PeriodicExpr& lambda() const { return lambda_; }
  const PeriodicExpr& mu() const { return mu_; }
  const PeriodicExpr& nu() const { return nu_; }
  int a() const { return a_; }

  /// True when none of the scales depends on alpha.
  bool is_constant() const;

 private:
  PeriodicExpr lambda_, mu_, nu_;
  int a_;
};

/// lambda = 1, mu = 2 + (1/a) cos(a alpha) sin(a alpha), nu = 2 - cos(a alpha).
/// Throws std::invalid_argument for a = 0.
BergerMetric reference_family(int a);

BergerMetric round_metric();

BergerMetric constant_metric(double lambda, double mu, double nu);

}  // namespace wcs
