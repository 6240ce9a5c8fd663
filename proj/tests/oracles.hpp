#pragma once

// Test-only reference computations. Nothing here calls into the jet,
// geometry, forms or symbols code paths it is used to check.

#include <array>
#include <cmath>
#include <functional>

#include <Eigen/Dense>

namespace oracle {

inline double central_d1(const std::function<double(double)>& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double five_point_d2(const std::function<double(double)>& f, double x, double h = 1e-3) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

/// max(|a-b|/max(1,|b|)): relative error with an absolute floor at 1.
inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

/// Scale functions with hand-written first and second derivatives:
/// row 0 = (lambda, mu, nu), row 1 = d/dalpha, row 2 = d^2/dalpha^2.
using ScaleRows = std::array<std::array<double, 3>, 3>;
using Scales = std::function<ScaleRows(double)>;

/// value + eps * derivative, just enough arithmetic for the Koszul formula.
struct Dual {
  double v = 0.0, d = 0.0;
};
inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }
inline Dual operator*(double k, Dual a) { return {k * a.v, k * a.d}; }

using Table = std::array<std::array<std::array<Dual, 4>, 4>, 4>;

/// Christoffel symbols G[k][i][j] of the scaled frame and their alpha
/// derivatives, from the Koszul formula with structure functions by hand.
inline Table christoffel_dual(const Scales& s, double alpha) {
  const ScaleRows r = s(alpha);
  Dual v[3], dv[3];
  for (int i = 0; i < 3; ++i) {
    v[i] = {r[0][i], r[1][i]};
    dv[i] = {r[1][i], r[2][i]};
  }
  Dual c[4][4][4] = {};
  auto set = [&](int k, int i, int j, Dual x) {
    c[k][i][j] = x;
    c[k][j][i] = -1.0 * x;
  };
  set(2, 0, 1, 2.0 * v[0] * v[1] / v[2]);
  set(0, 1, 2, 2.0 * v[1] * v[2] / v[0]);
  set(1, 0, 2, -2.0 * v[0] * v[2] / v[1]);
  for (int i = 0; i < 3; ++i) set(i, 3, i, dv[i] / v[i]);
  Table g{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g[k][i][j] = 0.5 * (c[k][i][j] - c[i][j][k] - c[j][i][k]);
  return g;
}

inline std::array<std::array<std::array<double, 4>, 4>, 4> christoffel(const Scales& s, double alpha) {
  const Table t = christoffel_dual(s, alpha);
  std::array<std::array<std::array<double, 4>, 4>, 4> g{};
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g[k][i][j] = t[k][i][j].v;
  return g;
}

/// Tr(S ^ s0 ^ s0)(F1,F2,F3) at alpha, where s0 and S are the order 0 and
/// order -1 connection symbols along constant loops (S per unit 2is/xi).
inline double triple_trace(const Scales& s, double alpha) {
  const Table t = christoffel_dual(s, alpha);
  auto g = [&](int k, int i, int j) { return t[k][i][j].v; };
  auto dG = [&](int k, int i, int j) { return t[k][i][j].d; };

  std::array<Eigen::Matrix4d, 3> s0, s1;
  for (int p = 0; p < 3; ++p) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        s0[p](a, b) = 0.5 * (g(a, b, p) + g(b, a, p));
        double x = dG(a, p, b) + dG(b, a, p);
        for (int k = 0; k < 4; ++k)
          x += g(a, p, k) * g(k, b, 3) - g(a, k, 3) * g(k, p, b) - g(b, k, 3) * g(k, a, p) - g(a, k, 3) * g(b, k, p);
        s1[p](a, b) = x;
      }
  }
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  double total = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double sign = i < 3 ? 1.0 : -1.0;
    total += sign * (s1[perms[i][0]] * s0[perms[i][1]] * s0[perms[i][2]]).trace();
  }
  return total;
}

/// lambda = 1, mu = 2 + sin(2 a x) / (2 a), nu = 2 - cos(a x).
inline Scales family_scales(int a) {
  return [a](double x) {
    const double A = a, t = 2 * A * x;
    return ScaleRows{{{1.0, 2.0 + std::sin(t) / (2 * A), 2.0 - std::cos(A * x)},
                      {0.0, std::cos(t), A * std::sin(A * x)},
                      {0.0, -2 * A * std::sin(t), A * A * std::cos(A * x)}}};
  };
}

/// Composite Simpson on [0, 2 pi] with n subintervals, no periodicity shortcut.
inline double simpson(const std::function<double(double)>& f, int n) {
  const double h = 2.0 * M_PI / n;
  double acc = f(0.0) + f(2.0 * M_PI);
  for (int j = 1; j < n; ++j) acc += (j % 2 ? 4.0 : 2.0) * f(j * h);
  return acc * h / 3.0;
}

}  // namespace oracle
