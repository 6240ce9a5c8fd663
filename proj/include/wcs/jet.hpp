#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace wcs {

/**
 * Truncated Taylor series in the circle coordinate alpha.
 *
 * Coefficients are stored in Taylor form, c[k] = f^(k)(alpha) / k!, so the
 * arithmetic below is ordinary truncated power-series arithmetic and every
 * derivative up to order N is exact (no step size anywhere).
 */
template <typename T, int N>
class Jet {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  using Scalar = T;
  static constexpr int order = N;

  constexpr Jet() : c_{} {}
  constexpr Jet(T value) : c_{} { c_[0] = value; }  // NOLINT: implicit lift

  /// The identity jet at x: (x, 1, 0, ...).
  static constexpr Jet variable(T x) {
    Jet j(x);
    if constexpr (N >= 1) j.c_[1] = T(1);
    return j;
  }

  static constexpr Jet from_taylor(const std::array<T, N + 1>& coeffs) {
    Jet j;
    j.c_ = coeffs;
    return j;
  }

  constexpr T value() const { return c_[0]; }
  constexpr T taylor(int k) const { return c_[k]; }
  constexpr const std::array<T, N + 1>& taylor() const { return c_; }

  /// k-th derivative with respect to alpha.
  constexpr T d(int k) const {
    T fact(1);
    for (int i = 2; i <= k; ++i) fact *= T(i);
    return c_[k] * fact;
  }

  constexpr Jet operator-() const {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }

  constexpr Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Jet& operator*=(const Jet& o) { return *this = *this * o; }
  constexpr Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend constexpr Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) {
      T acc(0);
      for (int i = 0; i <= k; ++i) acc += a.c_[i] * b.c_[k - i];
      r.c_[k] = acc;
    }
    return r;
  }

  // Caller guarantees b.value() != 0.
  friend constexpr Jet operator/(const Jet& a, const Jet& b) {
    Jet q;
    for (int k = 0; k <= N; ++k) {
      T acc = a.c_[k];
      for (int i = 1; i <= k; ++i) acc -= b.c_[i] * q.c_[k - i];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

 private:
  std::array<T, N + 1> c_;
};

using Jet1 = Jet<double, 1>;
using Jet2 = Jet<double, 2>;

/// sin and cos of a jet, computed together from s' = c u', c' = -s u'.
template <typename T, int N>
constexpr void sincos(const Jet<T, N>& u, Jet<T, N>& s, Jet<T, N>& c) {
  using std::cos;
  using std::sin;
  std::array<T, N + 1> sc{}, cc{};
  sc[0] = sin(u.taylor(0));
  cc[0] = cos(u.taylor(0));
  for (int k = 1; k <= N; ++k) {
    T as(0), ac(0);
    for (int j = 1; j <= k; ++j) {
      const T w = T(j) * u.taylor(j);
      as += w * cc[k - j];
      ac -= w * sc[k - j];
    }
    sc[k] = as / T(k);
    cc[k] = ac / T(k);
  }
  s = Jet<T, N>::from_taylor(sc);
  c = Jet<T, N>::from_taylor(cc);
}

template <typename T, int N>
constexpr Jet<T, N> sin(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sincos(u, s, c);
  return s;
}

template <typename T, int N>
constexpr Jet<T, N> cos(const Jet<T, N>& u) {
  Jet<T, N> s, c;
  sincos(u, s, c);
  return c;
}

/// Integer power by repeated squaring; negative exponents go through 1/u.
template <typename T, int N>
constexpr Jet<T, N> pow(const Jet<T, N>& u, int n) {
  if (n < 0) return Jet<T, N>(T(1)) / pow(u, -n);
  Jet<T, N> result(T(1));
  Jet<T, N> base = u;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

/// Drop the highest-order coefficients.
template <int M, typename T, int N>
constexpr Jet<T, M> truncate(const Jet<T, N>& u) {
  static_assert(M <= N);
  std::array<T, M + 1> c{};
  for (int k = 0; k <= M; ++k) c[k] = u.taylor(k);
  return Jet<T, M>::from_taylor(c);
}

/// d/dalpha of a jet; loses one order of exactness.
template <typename T, int N>
constexpr Jet<T, N - 1> derivative(const Jet<T, N>& u) {
  static_assert(N >= 1);
  std::array<T, N> c{};
  for (int k = 0; k < N; ++k) c[k] = T(k + 1) * u.taylor(k + 1);
  return Jet<T, N - 1>::from_taylor(c);
}

}  // namespace wcs
