#pragma once

#include <Eigen/Dense>

#include "wcs/forms.hpp"
#include "wcs/geometry.hpp"

namespace wcs {

/**
 * Order-0 and order-(-1) symbols of the loop-space Levi-Civita connection
 * along constant loops beta(m)(alpha) = (m, alpha).
 *
 * Every order-(-1) quantity here is the coefficient of the fixed prefactor
 * 2 i s / xi; neither s nor xi is ever stored numerically. The frame is
 * orthonormal, so indices are raised and lowered with the identity.
 */

/// sigma_0(omega) as a matrix of 1-forms, filled from the coefficient set
/// U, V, W, A, B, C.
MatrixForm sigma0_connection(const BergerMetric& m, double alpha);

/// sigma_0(omega)^k_l = 1/2 (G^k_{lp} + G^l_{kp}) psi^p, straight from a table.
MatrixForm sigma0_from_christoffel(const ChristoffelTable& g);

/// Coefficient of 2is/xi in sigma_{-1}(omega(X)) along a beta loop
/// (gamma' = F_4), including the terms in X' = dX/dalpha.
Eigen::Matrix4d sigma_minus1_connection_dot(const ChristoffelTable& g, const Eigen::Vector4d& X,
                                            const Eigen::Vector4d& Xdot);
Eigen::Matrix4d sigma_minus1_connection_dot(const BergerMetric& m, double alpha, int X, const Eigen::Vector4d& Xdot);

/// Same symbol restricted to beta_*(TS^3), where X' = 0, packaged as a
/// matrix of 1-forms: the psi^l coefficient is the symbol on F_l, l = 1..3.
MatrixForm sigma_minus1_connection_beta(const ChristoffelTable& g);
MatrixForm sigma_minus1_connection_beta(const BergerMetric& m, double alpha);

/// Coefficient of 2is/xi in sigma_{-1}(Omega(X, Y)).
Eigen::Matrix4d sigma_minus1_curvature(const ChristoffelTable& g, const Eigen::Vector4d& X,
                                       const Eigen::Vector4d& Xdot, const Eigen::Vector4d& Y,
                                       const Eigen::Vector4d& Ydot);

/// Curvature symbol on a pair of S^3 frame vectors (indices 0..2) along beta.
/// Throws std::invalid_argument for an index outside the S^3 factor.
Eigen::Matrix4d sigma_minus1_curvature_beta(const BergerMetric& m, double alpha, int X, int Y);

/// The curvature symbol as a matrix of 2-forms over all frame pairs, with
/// constant (alpha-independent) frame vectors.
MatrixForm curvature_form(const ChristoffelTable& g);

/**
 * A symbol truncated after order -1: order0 + (2is/xi) orderMinus1.
 *
 * sigma_0 of the connection does not depend on xi, so in a product only the
 * leading terms survive to order -1:
 *   sigma_{-1}(PQ) = sigma_0(P) sigma_{-1}(Q) + sigma_{-1}(P) sigma_0(Q).
 * The product of two order-(-1) factors is order -2 and is dropped.
 */
struct SymbolPair {
  MatrixForm sigma0;
  MatrixForm sigmaMinus1;

  /// Number of order-(-1) factors a term may carry and still reach order -1.
  static constexpr int kMaxMinusOneFactors = 1;
};

SymbolPair wedge(const SymbolPair& a, const SymbolPair& b);

/// The order -2 part a.sigmaMinus1 ^ b.sigmaMinus1 that wedge() discards,
/// in units of (2is/xi)^2.
MatrixForm order_minus2_part(const SymbolPair& a, const SymbolPair& b);

SymbolPair connection_symbol_beta(const BergerMetric& m, double alpha);

}  // namespace wcs
