#pragma once

#include <random>
#include <string>

#include "wcs/expr.hpp"
#include "wcs/metric.hpp"

namespace wcs {

/// Random expression tree touching every node kind, with constants drawn
/// from [-3, 3]. Denominators and negative-power bases are kept away from
/// zero. Returned as grammar source text.
std::string random_expr_source(std::mt19937_64& rng, int depth = 3);

/// Number of composite node shapes random_expr_source draws from.
inline constexpr int kRandomNodeShapes = 8;

/// One composite node of the given shape (0..kRandomNodeShapes-1) over
/// random leaves: constants, alpha, c*alpha.
std::string random_node_source(std::mt19937_64& rng, int shape);

/// Random positive scale function of alpha, as grammar source text.
std::string random_scale_source(std::mt19937_64& rng);

struct RandomMetric {
  std::string lambda, mu, nu;
  BergerMetric metric;
};

/// Three random scale expressions parsed into a metric.
RandomMetric random_metric(std::mt19937_64& rng);

}  // namespace wcs
