#pragma once

#include <array>
#include <bit>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Dense>

namespace wcs {

using Complex = std::complex<double>;

namespace detail {

template <typename Coeff>
struct CoeffTraits {
  static Coeff zero() { return Coeff(0.0); }
  static double norm(const Coeff& c) { return std::abs(c); }
};

template <typename Scalar, int R, int C, int O, int MR, int MC>
struct CoeffTraits<Eigen::Matrix<Scalar, R, C, O, MR, MC>> {
  using M = Eigen::Matrix<Scalar, R, C, O, MR, MC>;
  static M zero() { return M::Zero(); }
  static double norm(const M& c) { return c.cwiseAbs().maxCoeff(); }
};

}  // namespace detail

/// Multi-index {i1 < i2 < ...} over the coframe psi^1..psi^4 as a bit mask.
using MultiIndex = unsigned;

constexpr MultiIndex multi_index(std::initializer_list<int> indices) {
  MultiIndex m = 0;
  for (int i : indices) m |= 1u << i;
  return m;
}

/// Sign of the shuffle that sorts I followed by J; 0 when they overlap.
constexpr int shuffle_sign(MultiIndex I, MultiIndex J) {
  if (I & J) return 0;
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    if (I & (1u << i)) inversions += std::popcount(J & ((1u << i) - 1u));
  return (inversions % 2) ? -1 : 1;
}

/**
 * Exterior form of fixed degree on the four-dimensional coframe, with
 * coefficients of type Coeff (a scalar or a fixed-size Eigen matrix).
 * Products of coefficients are taken in order, so matrix-valued forms
 * follow the matrix product in wedge().
 */
template <typename Coeff>
class Form {
 public:
  using Coefficient = Coeff;
  static constexpr int kDim = 4;

  explicit Form(int degree = 0) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw std::invalid_argument("form degree out of range");
    coeffs_.fill(detail::CoeffTraits<Coeff>::zero());
  }

  int degree() const { return degree_; }

  Coeff& operator[](MultiIndex I) {
    check(I);
    return coeffs_[I];
  }
  const Coeff& operator[](MultiIndex I) const {
    check(I);
    return coeffs_[I];
  }

  /// Largest coefficient magnitude.
  double max_abs() const {
    double m = 0.0;
    for (MultiIndex I = 0; I < 16; ++I)
      if (std::popcount(I) == degree_) m = std::max(m, detail::CoeffTraits<Coeff>::norm(coeffs_[I]));
    return m;
  }

  Form& operator+=(const Form& o) {
    same_degree(o);
    for (MultiIndex I = 0; I < 16; ++I) coeffs_[I] += o.coeffs_[I];
    return *this;
  }
  Form& operator-=(const Form& o) {
    same_degree(o);
    for (MultiIndex I = 0; I < 16; ++I) coeffs_[I] -= o.coeffs_[I];
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  friend Form operator*(const Complex& s, Form a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }

  template <typename F>
  auto map(F&& f) const -> Form<std::decay_t<decltype(f(std::declval<const Coeff&>()))>> {
    Form<std::decay_t<decltype(f(std::declval<const Coeff&>()))>> out(degree_);
    for (MultiIndex I = 0; I < 16; ++I)
      if (std::popcount(I) == degree_) out[I] = f(coeffs_[I]);
    return out;
  }

 private:
  void check(MultiIndex I) const {
    if (I >= 16 || std::popcount(I) != degree_) throw std::out_of_range("multi-index does not match form degree");
  }
  void same_degree(const Form& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
  }

  int degree_;
  std::array<Coeff, 16> coeffs_;
};

using MatrixForm = Form<Eigen::Matrix4cd>;
using ScalarForm = Form<Complex>;

/// A wedge B; throws std::invalid_argument when the degrees exceed 4.
template <typename Coeff>
Form<Coeff> wedge(const Form<Coeff>& a, const Form<Coeff>& b) {
  const int p = a.degree(), q = b.degree();
  if (p + q > Form<Coeff>::kDim) throw std::invalid_argument("wedge product degree exceeds 4");
  Form<Coeff> out(p + q);
  for (MultiIndex I = 0; I < 16; ++I) {
    if (std::popcount(I) != p) continue;
    for (MultiIndex J = 0; J < 16; ++J) {
      if (std::popcount(J) != q) continue;
      const int sign = shuffle_sign(I, J);
      if (sign == 0) continue;
      if (sign > 0) out[I | J] += a[I] * b[J];
      else out[I | J] -= a[I] * b[J];
    }
  }
  return out;
}

template <typename Coeff>
Form<Coeff> wedge(const Form<Coeff>& a, const Form<Coeff>& b, const Form<Coeff>& c) {
  return wedge(wedge(a, b), c);
}

inline ScalarForm trace(const MatrixForm& a) {
  return a.map([](const Eigen::Matrix4cd& m) { return m.trace(); });
}

/// Value on (F1, F2, F3): the psi^1 psi^2 psi^3 coefficient. Terms with psi^4
/// vanish on the S^3 frame.
inline Complex evaluate3(const ScalarForm& a) {
  if (a.degree() != 3) throw std::invalid_argument("evaluate3 needs a 3-form");
  return a[multi_index({0, 1, 2})];
}

/// Single-term form c psi^I.
template <typename Coeff>
Form<Coeff> monomial(std::initializer_list<int> indices, const Coeff& c) {
  Form<Coeff> f(static_cast<int>(indices.size()));
  f[multi_index(indices)] = c;
  return f;
}

}  // namespace wcs
