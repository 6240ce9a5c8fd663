#include "wcs/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace wcs {

void QuadratureSpec::validate() const {
  if (samples < 16 || samples % 2 != 0) {
    throw std::invalid_argument("quadrature sample count must be an even integer >= 16, got " + std::to_string(samples));
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
  if (max_refinements < 1) throw std::invalid_argument("quadrature needs at least one refinement");
}

QuadratureError::QuadratureError(double last, double previous, int samples)
    : std::runtime_error("quadrature did not converge: last estimates " + std::to_string(last) + " and " +
                         std::to_string(previous) + " at " + std::to_string(samples) + " subintervals"),
      last_(last),
      previous_(previous),
      samples_(samples) {}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Refine a periodic grid of n samples to 2n samples, reusing the old values.
std::vector<double> refine(const std::vector<double>& coarse, const std::function<double(double)>& f) {
  const std::size_t n = coarse.size();
  std::vector<double> fine(2 * n);
  const double h = kTwoPi / static_cast<double>(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    fine[2 * j] = coarse[j];
    fine[2 * j + 1] = f(static_cast<double>(2 * j + 1) * h);
  }
  return fine;
}

// Composite Simpson on a periodic grid with an even number of points.
double simpson(const std::vector<double>& g) {
  const std::size_t n = g.size();
  double even = 0.0, odd = 0.0;
  for (std::size_t j = 0; j < n; j += 2) even += g[j];
  for (std::size_t j = 1; j < n; j += 2) odd += g[j];
  const double h = kTwoPi / static_cast<double>(n);
  // endpoints f(0) and f(2 pi) coincide and each carry weight 1, so f(0)
  // enters with the interior even weight 2.
  return h / 3.0 * (2.0 * even + 4.0 * odd);
}

double trapezoid(const std::vector<double>& g) {
  double sum = 0.0;
  for (double v : g) sum += v;
  return kTwoPi / static_cast<double>(g.size()) * sum;
}

QuadratureResult simpson_richardson(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  std::vector<double> grid(static_cast<std::size_t>(spec.samples));
  const double h = kTwoPi / spec.samples;
  for (int j = 0; j < spec.samples; ++j) grid[static_cast<std::size_t>(j)] = f(j * h);
  double coarse = simpson(grid);
  double previous = coarse;
  for (int r = 0; r < spec.max_refinements; ++r) {
    grid = refine(grid, f);
    const double fine = simpson(grid);
    const double extrapolated = fine + (fine - coarse) / 15.0;
    if (std::abs(fine - coarse) < spec.tolerance) {
      return {extrapolated, coarse, static_cast<int>(grid.size()), std::move(grid)};
    }
    previous = coarse;
    coarse = fine;
  }
  throw QuadratureError(coarse, previous, static_cast<int>(grid.size()));
}

QuadratureResult romberg(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  std::vector<double> grid(static_cast<std::size_t>(spec.samples));
  const double h = kTwoPi / spec.samples;
  for (int j = 0; j < spec.samples; ++j) grid[static_cast<std::size_t>(j)] = f(j * h);
  std::vector<double> row{trapezoid(grid)};
  double last = row.back(), prev = row.back();
  for (int r = 0; r < spec.max_refinements; ++r) {
    grid = refine(grid, f);
    std::vector<double> next{trapezoid(grid)};
    double factor = 4.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      next.push_back(next[k] + (next[k] - row[k]) / (factor - 1.0));
      factor *= 4.0;
    }
    last = next.back();
    prev = row.back();
    if (std::abs(last - prev) < spec.tolerance) {
      return {last, prev, static_cast<int>(grid.size()), std::move(grid)};
    }
    row = std::move(next);
  }
  throw QuadratureError(last, prev, static_cast<int>(grid.size()));
}

}  // namespace

QuadratureResult integrate_circle_detailed(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  spec.validate();
  switch (spec.rule) {
    case QuadratureRule::Simpson:
      return simpson_richardson(f, spec);
    case QuadratureRule::Romberg:
      return romberg(f, spec);
  }
  throw std::invalid_argument("unknown quadrature rule");
}

}  // namespace wcs
