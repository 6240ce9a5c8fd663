#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcs {

enum class QuadratureRule { Simpson, Romberg };

struct QuadratureSpec {
  int samples = 4096;        ///< initial number of subintervals, even, >= 16
  double tolerance = 1e-8;   ///< absolute tolerance between successive refinements
  QuadratureRule rule = QuadratureRule::Simpson;
  int max_refinements = 6;   ///< doublings of the grid before giving up

  /// Throws std::invalid_argument on a malformed spec.
  void validate() const;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(double last, double previous, int samples);
  double last() const noexcept { return last_; }
  double previous() const noexcept { return previous_; }
  int samples() const noexcept { return samples_; }

 private:
  double last_;
  double previous_;
  int samples_;
};

struct QuadratureResult {
  double value = 0.0;
  double previous = 0.0;      ///< estimate one refinement earlier
  int samples = 0;            ///< subintervals of the finest grid used
  std::vector<double> grid;   ///< f(2 pi j / samples), j = 0..samples-1
};

/// Integral of f over [0, 2 pi]. f is assumed 2 pi-periodic, so f(2 pi) is
/// taken to be f(0) and never evaluated separately.
QuadratureResult integrate_circle_detailed(const std::function<double(double)>& f, const QuadratureSpec& spec);

inline double integrate_circle(const std::function<double(double)>& f, const QuadratureSpec& spec) {
  return integrate_circle_detailed(f, spec).value;
}

}  // namespace wcs
