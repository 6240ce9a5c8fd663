#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "wcs/jet.hpp"

namespace wcs {

/// Raised when an expression cannot be evaluated at the requested point.
class EvaluationError : public std::domain_error {
 public:
  EvaluationError(const std::string& node, double alpha)
      : std::domain_error("division by zero in '" + node + "' at alpha=" + std::to_string(alpha)),
        node_(node),
        alpha_(alpha) {}
  const std::string& node() const noexcept { return node_; }
  double alpha() const noexcept { return alpha_; }

 private:
  std::string node_;
  double alpha_;
};

/**
 * Immutable expression in the circle coordinate alpha and an integer
 * parameter a. Nodes are shared, so copies are cheap.
 */
class PeriodicExpr {
 public:
  enum class Kind { Constant, Alpha, Param, Sum, Difference, Product, Quotient, Power, Sin, Cos };

  struct Node;  // opaque

  PeriodicExpr();  // the constant 0
  explicit PeriodicExpr(std::shared_ptr<const Node> n);

  static PeriodicExpr constant(double c);
  static PeriodicExpr alpha();
  static PeriodicExpr param();

  friend PeriodicExpr operator+(const PeriodicExpr& l, const PeriodicExpr& r);
  friend PeriodicExpr operator-(const PeriodicExpr& l, const PeriodicExpr& r);
  friend PeriodicExpr operator*(const PeriodicExpr& l, const PeriodicExpr& r);
  /// Throws std::invalid_argument when r is a constant subtree equal to zero.
  friend PeriodicExpr operator/(const PeriodicExpr& l, const PeriodicExpr& r);
  friend PeriodicExpr operator-(const PeriodicExpr& e);
  friend PeriodicExpr pow(const PeriodicExpr& base, int exponent);
  friend PeriodicExpr sin(const PeriodicExpr& e);
  friend PeriodicExpr cos(const PeriodicExpr& e);

  Kind kind() const;
  /// True when the subtree depends on neither alpha nor a.
  bool is_constant() const;
  bool depends_on_param() const;
  bool depends_on_alpha() const;

  std::string to_string() const;

  double eval(double alpha, int a) const;
  Jet2 eval_jet2(double alpha, int a) const;

 private:
  std::shared_ptr<const Node> node_;
};

/// Value and first two alpha-derivatives of e at alpha.
inline Jet2 eval_jet2(const PeriodicExpr& e, double alpha, int a) { return e.eval_jet2(alpha, a); }

}  // namespace wcs
