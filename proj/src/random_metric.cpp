#include "wcs/random_metric.hpp"

#include <cstdio>

#include "wcs/parser.hpp"

namespace wcs {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  return v < 0 ? "(" + s + ")" : s;
}

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

namespace {

std::string compose(std::mt19937_64& rng, int depth, int shape);

}  // namespace

std::string random_expr_source(std::mt19937_64& rng, int depth) {
  if (depth <= 0) return compose(rng, 0, 0);
  return compose(rng, depth, pick(rng, 0, kRandomNodeShapes - 1));
}

std::string random_node_source(std::mt19937_64& rng, int shape) { return compose(rng, 1, shape); }

namespace {

std::string compose(std::mt19937_64& rng, int depth, int shape) {
  if (depth <= 0) {
    switch (pick(rng, 0, 2)) {
      case 0:
        return num(uniform(rng, -3.0, 3.0));
      case 1:
        return "alpha";
      default:
        return num(uniform(rng, -3.0, 3.0)) + "*alpha";
    }
  }
  const std::string x = random_expr_source(rng, depth - 1);
  switch (shape) {
    case 0:
      return "(" + x + "+" + random_expr_source(rng, depth - 1) + ")";
    case 1:
      return "(" + x + "-" + random_expr_source(rng, depth - 1) + ")";
    case 2:
      return "(" + x + "*" + random_expr_source(rng, depth - 1) + ")";
    case 3:
      return "(" + x + "/(3.5+cos(" + random_expr_source(rng, depth - 1) + ")))";
    case 4:
      return "(" + x + ")^" + std::to_string(pick(rng, 0, 3));
    case 5:
      return "(2.5+sin(" + x + "))^" + std::to_string(pick(rng, -2, -1));
    case 6:
      return "sin(" + x + ")";
    default:
      return "cos(" + x + ")";
  }
}

}  // namespace

std::string random_scale_source(std::mt19937_64& rng) {
  const double c0 = uniform(rng, 1.5, 3.0);
  const double c1 = uniform(rng, -0.5, 0.5);
  const double c2 = uniform(rng, -0.5, 0.5);
  const int k1 = pick(rng, 1, 4), k2 = pick(rng, 1, 4), k3 = pick(rng, 0, 3);
  switch (pick(rng, 0, 3)) {
    case 0:
      return num(c0);
    case 1:
      return num(c0) + "+" + num(c1) + "*sin(" + std::to_string(k1) + "*alpha)";
    case 2:
      return num(c0) + "+" + num(c1) + "*cos(" + std::to_string(k1) + "*alpha)*sin(" + std::to_string(k2) +
             "*alpha)+" + num(c2) + "*cos(" + std::to_string(k3) + "*alpha)";
    default:
      return num(c0) + "+" + num(c1) + "*sin(" + std::to_string(k1) + "*alpha)/(2+cos(" + std::to_string(k2) +
             "*alpha))+" + num(c2) + "*(cos(" + std::to_string(k3) + "*alpha))^2";
  }
}

RandomMetric random_metric(std::mt19937_64& rng) {
  std::string l = random_scale_source(rng), m = random_scale_source(rng), n = random_scale_source(rng);
  BergerMetric metric(parse_expr(l), parse_expr(m), parse_expr(n));
  return {std::move(l), std::move(m), std::move(n), std::move(metric)};
}

}  // namespace wcs
