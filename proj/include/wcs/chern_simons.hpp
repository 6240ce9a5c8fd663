#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wcs/forms.hpp"
#include "wcs/metric.hpp"
#include "wcs/quadrature.hpp"

namespace wcs {

/**
 * Residue convention constant R: the value assigned to the cosphere
 * integral of xi^{-1} over S*S^1. With R = -4 pi the transgression prefactors
 * -i/(8 pi^3) and i/(48 pi^3), the symbol prefactor 2is and R combine to
 * s/(2 pi^2) for the connection term, so f below is exactly the triple trace
 * Tr(sigma_{-1} ^ sigma_0 ^ sigma_0)(F1, F2, F3). The two-point evaluation
 * (R = 2) lands a factor -2 pi away from the reference integrals.
 */
inline constexpr double kResidueConvention = -4.0 * std::numbers::pi;

/// Largest |Im D(alpha)| tolerated before the density is rejected.
inline constexpr double kImaginaryThreshold = 1e-10;

class ConventionError : public std::runtime_error {
 public:
  ConventionError(double alpha, double imag)
      : std::runtime_error("Chern-Simons density has imaginary part " + std::to_string(imag) +
                           " at alpha=" + std::to_string(alpha)),
        alpha_(alpha),
        imag_(imag) {}
  double alpha() const noexcept { return alpha_; }
  double imag() const noexcept { return imag_; }

 private:
  double alpha_;
  double imag_;
};

struct CSConfig {
  double s = 1.0;  ///< Sobolev parameter, > 1/2
  QuadratureSpec quadrature{};
  double integrality_tolerance = 1e-3;

  void validate() const;
};

/// Pieces of the density at one alpha. Traces are evaluated on (F1, F2, F3)
/// and are coefficients of 2is/xi.
struct DensityTerms {
  Complex connection_trace;  ///< Tr(sigma_{-1}(theta) ^ sigma_0 ^ sigma_0)
  Complex curvature_trace;   ///< Tr(sigma_0(theta) ^ sigma_{-1}(Omega))
  Complex D;                 ///< transgression form coefficient of psi^1 psi^2 psi^3
  double f = 0.0;            ///< (2 pi^2 / s) Re D
  double curvature_contribution = 0.0;  ///< part of f coming from the curvature term
};

DensityTerms cs_density_terms(const BergerMetric& m, double s, double alpha);

/// f(alpha); throws ConventionError if |Im D| exceeds kImaginaryThreshold.
double cs_density(const BergerMetric& m, const CSConfig& cfg, double alpha);

enum class Verdict { Trivial, Nontrivial, Indeterminate };

std::string to_string(Verdict v);

struct CSReport {
  std::vector<std::pair<double, double>> samples;  ///< (alpha, f) on the quadrature grid, alpha in [0, 2 pi]
  double integral = 0.0;      ///< integral of f over the circle
  double class_value = 0.0;   ///< (s/4) * integral
  double mod_z = 0.0;         ///< class_value - floor(class_value)
  double alt_class_value = 0.0;  ///< s * integral, the other normalization
  double alt_mod_z = 0.0;
  Verdict verdict = Verdict::Trivial;
  bool nontrivial = false;
  double max_imag = 0.0;      ///< largest |Im D| seen
  int quadrature_n = 0;
  double s = 1.0;
  std::optional<int> a;
};

/// Distance from x to the nearest integer.
double distance_to_integer(double x);

/// Integrate the density and reduce the class mod Z.
CSReport cs_class(const BergerMetric& m, const CSConfig& cfg);

/// Tr(sigma_0 ^ sigma_0 ^ sigma_0) on (F1, F2, F3).
double leading_order_density(const BergerMetric& m, double alpha);

/// One report per a for reference_family(a); throws std::invalid_argument
/// for a = 0.
std::vector<CSReport> sweep(const std::vector<int>& a_values, const CSConfig& cfg);

}  // namespace wcs
