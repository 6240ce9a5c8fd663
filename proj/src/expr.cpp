#include "wcs/expr.hpp"

#include <charconv>
#include <cmath>
#include <vector>

namespace wcs {

struct PeriodicExpr::Node {
  Kind kind;
  double value = 0.0;  // Constant
  int exponent = 0;    // Power
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
  bool constant = true;
  bool uses_param = false;
  bool uses_alpha = false;
};

namespace {

using NodePtr = std::shared_ptr<const PeriodicExpr::Node>;

std::string format_number(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

PeriodicExpr::PeriodicExpr() : PeriodicExpr(constant(0.0)) {}

PeriodicExpr::PeriodicExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

PeriodicExpr PeriodicExpr::constant(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = c;
  return PeriodicExpr(std::move(n));
}

PeriodicExpr PeriodicExpr::alpha() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Alpha;
  n->constant = false;
  n->uses_alpha = true;
  return PeriodicExpr(std::move(n));
}

PeriodicExpr PeriodicExpr::param() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Param;
  n->constant = false;
  n->uses_param = true;
  return PeriodicExpr(std::move(n));
}

namespace {

NodePtr make_binary(PeriodicExpr::Kind k, const NodePtr& l, const NodePtr& r) {
  auto n = std::make_shared<PeriodicExpr::Node>();
  n->kind = k;
  n->lhs = l;
  n->rhs = r;
  n->constant = l->constant && r->constant;
  n->uses_param = l->uses_param || r->uses_param;
  n->uses_alpha = l->uses_alpha || r->uses_alpha;
  return n;
}

NodePtr make_unary(PeriodicExpr::Kind k, const NodePtr& arg, int exponent = 0) {
  auto n = std::make_shared<PeriodicExpr::Node>();
  n->kind = k;
  n->lhs = arg;
  n->exponent = exponent;
  n->constant = arg->constant;
  n->uses_param = arg->uses_param;
  n->uses_alpha = arg->uses_alpha;
  return n;
}

double value_of(double x) { return x; }
double value_of(const Jet2& x) { return x.value(); }

std::string describe(const PeriodicExpr::Node& n);

template <typename T>
T evaluate(const PeriodicExpr::Node& n, const T& alpha, int a) {
  using K = PeriodicExpr::Kind;
  using std::cos;
  using std::sin;
  switch (n.kind) {
    case K::Constant:
      return T(n.value);
    case K::Alpha:
      return alpha;
    case K::Param:
      return T(static_cast<double>(a));
    case K::Sum:
      return evaluate(*n.lhs, alpha, a) + evaluate(*n.rhs, alpha, a);
    case K::Difference:
      return evaluate(*n.lhs, alpha, a) - evaluate(*n.rhs, alpha, a);
    case K::Product:
      return evaluate(*n.lhs, alpha, a) * evaluate(*n.rhs, alpha, a);
    case K::Quotient: {
      const T den = evaluate(*n.rhs, alpha, a);
      if (value_of(den) == 0.0) throw EvaluationError(describe(n), value_of(alpha));
      return evaluate(*n.lhs, alpha, a) / den;
    }
    case K::Power: {
      const T base = evaluate(*n.lhs, alpha, a);
      if (n.exponent < 0 && value_of(base) == 0.0) throw EvaluationError(describe(n), value_of(alpha));
      if constexpr (std::is_same_v<T, double>) return std::pow(base, n.exponent);
      else return pow(base, n.exponent);
    }
    case K::Sin:
      return sin(evaluate(*n.lhs, alpha, a));
    case K::Cos:
      return cos(evaluate(*n.lhs, alpha, a));
  }
  return T(0.0);
}

}  // namespace

PeriodicExpr operator+(const PeriodicExpr& l, const PeriodicExpr& r) {
  return PeriodicExpr(make_binary(PeriodicExpr::Kind::Sum, l.node_, r.node_));
}

PeriodicExpr operator-(const PeriodicExpr& l, const PeriodicExpr& r) {
  return PeriodicExpr(make_binary(PeriodicExpr::Kind::Difference, l.node_, r.node_));
}

PeriodicExpr operator*(const PeriodicExpr& l, const PeriodicExpr& r) {
  return PeriodicExpr(make_binary(PeriodicExpr::Kind::Product, l.node_, r.node_));
}

PeriodicExpr operator/(const PeriodicExpr& l, const PeriodicExpr& r) {
  if (r.node_->constant && evaluate(*r.node_, 0.0, 0) == 0.0) {
    throw std::invalid_argument("division by the identically-zero expression '" + r.to_string() + "'");
  }
  return PeriodicExpr(make_binary(PeriodicExpr::Kind::Quotient, l.node_, r.node_));
}

PeriodicExpr operator-(const PeriodicExpr& e) { return PeriodicExpr::constant(0.0) - e; }

PeriodicExpr pow(const PeriodicExpr& base, int exponent) {
  if (exponent < 0 && base.node_->constant && evaluate(*base.node_, 0.0, 0) == 0.0) {
    throw std::invalid_argument("negative power of the identically-zero expression '" + base.to_string() + "'");
  }
  return PeriodicExpr(make_unary(PeriodicExpr::Kind::Power, base.node_, exponent));
}

PeriodicExpr sin(const PeriodicExpr& e) { return PeriodicExpr(make_unary(PeriodicExpr::Kind::Sin, e.node_)); }

PeriodicExpr cos(const PeriodicExpr& e) { return PeriodicExpr(make_unary(PeriodicExpr::Kind::Cos, e.node_)); }

PeriodicExpr::Kind PeriodicExpr::kind() const { return node_->kind; }

bool PeriodicExpr::is_constant() const { return node_->constant; }

bool PeriodicExpr::depends_on_param() const { return node_->uses_param; }

bool PeriodicExpr::depends_on_alpha() const { return node_->uses_alpha; }

std::string PeriodicExpr::to_string() const {
  const Node& n = *node_;
  auto sub = [](const NodePtr& p) { return PeriodicExpr(p).to_string(); };
  switch (n.kind) {
    case Kind::Constant:
      return n.value < 0 ? "(" + format_number(n.value) + ")" : format_number(n.value);
    case Kind::Alpha:
      return "alpha";
    case Kind::Param:
      return "a";
    case Kind::Sum:
      return "(" + sub(n.lhs) + "+" + sub(n.rhs) + ")";
    case Kind::Difference:
      return "(" + sub(n.lhs) + "-" + sub(n.rhs) + ")";
    case Kind::Product:
      return "(" + sub(n.lhs) + "*" + sub(n.rhs) + ")";
    case Kind::Quotient:
      return "(" + sub(n.lhs) + "/" + sub(n.rhs) + ")";
    case Kind::Power:
      return "(" + sub(n.lhs) + ")^" + std::to_string(n.exponent);
    case Kind::Sin:
      return "sin(" + sub(n.lhs) + ")";
    case Kind::Cos:
      return "cos(" + sub(n.lhs) + ")";
  }
  return {};
}

namespace {
std::string describe(const PeriodicExpr::Node& n) {
  return PeriodicExpr(std::make_shared<PeriodicExpr::Node>(n)).to_string();
}
}  // namespace

double PeriodicExpr::eval(double alpha, int a) const { return evaluate(*node_, alpha, a); }

Jet2 PeriodicExpr::eval_jet2(double alpha, int a) const { return evaluate(*node_, Jet2::variable(alpha), a); }

}  // namespace wcs
