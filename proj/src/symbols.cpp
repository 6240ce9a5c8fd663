#include "wcs/symbols.hpp"

#include <cassert>

namespace wcs {

namespace {

Eigen::Matrix4cd to_complex(const Eigen::Matrix4d& m) { return m.cast<Complex>(); }

}  // namespace

MatrixForm sigma0_connection(const BergerMetric& m, double alpha) {
  const CoefficientSet c = coefficient_set(m, alpha);
  const double U = c.U.value(), V = c.V.value(), W = c.W.value();
  const double A = c.A.value(), B = c.B.value(), C = c.C.value();

  // One 4x4 matrix per coframe direction psi^1..psi^4.
  std::array<Eigen::Matrix4d, 4> d;
  for (auto& x : d) x.setZero();
  d[3](0, 0) = -A;
  d[3](1, 1) = -B;
  d[3](2, 2) = -C;
  d[2](0, 1) = d[2](1, 0) = U;
  d[1](0, 2) = d[1](2, 0) = -V;
  d[0](1, 2) = d[0](2, 1) = W;
  d[0](0, 3) = d[0](3, 0) = 0.5 * A;
  d[1](1, 3) = d[1](3, 1) = 0.5 * B;
  d[2](2, 3) = d[2](3, 2) = 0.5 * C;

  MatrixForm s(1);
  for (int p = 0; p < kDim; ++p) s[multi_index({p})] = to_complex(d[static_cast<std::size_t>(p)]);
  return s;
}

MatrixForm sigma0_from_christoffel(const ChristoffelTable& g) {
  MatrixForm s(1);
  for (int p = 0; p < kDim; ++p) {
    Eigen::Matrix4d coeff;
    for (int k = 0; k < kDim; ++k)
      for (int l = 0; l < kDim; ++l) coeff(k, l) = 0.5 * (g(k, l, p).value() + g(l, k, p).value());
    s[multi_index({p})] = to_complex(coeff);
  }
  return s;
}

Eigen::Matrix4d sigma_minus1_connection_dot(const ChristoffelTable& g, const Eigen::Vector4d& X,
                                            const Eigen::Vector4d& Xdot) {
  constexpr int n = kCircle;  // gamma' = F_4
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (int a = 0; a < kDim; ++a) {
    for (int b = 0; b < kDim; ++b) {
      double acc = 0.0;
      for (int l = 0; l < kDim; ++l) {
        double t = frame_derivative(g, l, a, b, n);
        for (int k = 0; k < kDim; ++k) {
          t += g(a, l, k).value() * g(k, b, n).value() - g(a, k, n).value() * g(k, l, b).value() -
               g(b, k, n).value() * g(k, a, l).value() - g(a, k, n).value() * g(b, k, l).value();
        }
        t += g(a, l, b).d(1) + g(b, a, l).d(1);
        acc += t * X(l);
        acc += (g(a, b, l).value() + g(b, a, l).value()) * Xdot(l);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

Eigen::Matrix4d sigma_minus1_connection_dot(const BergerMetric& m, double alpha, int X, const Eigen::Vector4d& Xdot) {
  if (X < 0 || X >= kDim) throw std::invalid_argument("frame index out of range");
  return sigma_minus1_connection_dot(christoffel_table(m, alpha), Eigen::Vector4d::Unit(X), Xdot);
}

MatrixForm sigma_minus1_connection_beta(const ChristoffelTable& g) {
  constexpr int n = kCircle;
  MatrixForm s(1);
  for (int l = 0; l < 3; ++l) {
    Eigen::Matrix4d coeff;
    for (int a = 0; a < kDim; ++a) {
      for (int b = 0; b < kDim; ++b) {
        const double spatial = frame_derivative(g, l, a, b, n);
        assert(spatial == 0.0);
        double quadratic = 0.0;
        for (int k = 0; k < kDim; ++k) {
          quadratic += g(a, l, k).value() * g(k, b, n).value() - g(a, k, n).value() * g(k, l, b).value() -
                       g(b, k, n).value() * g(k, a, l).value() - g(a, k, n).value() * g(b, k, l).value();
        }
        coeff(a, b) = spatial + quadratic + g(a, l, b).d(1) + g(b, a, l).d(1);
      }
    }
    s[multi_index({l})] = to_complex(coeff);
  }
  return s;
}

MatrixForm sigma_minus1_connection_beta(const BergerMetric& m, double alpha) {
  return sigma_minus1_connection_beta(christoffel_table(m, alpha));
}

Eigen::Matrix4d sigma_minus1_curvature(const ChristoffelTable& g, const Eigen::Vector4d& X,
                                       const Eigen::Vector4d& Xdot, const Eigen::Vector4d& Y,
                                       const Eigen::Vector4d& Ydot) {
  auto dG = [&g](int dir, int k, int i, int j) { return frame_derivative(g, dir, k, i, j); };
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (int k = 0; k < kDim; ++k) {
    for (int l = 0; l < kDim; ++l) {
      double acc = 0.0;
      for (int p = 0; p < kDim; ++p) {
        for (int r = 0; r < kDim; ++r) {
          acc += Xdot(p) * Y(r) * (dG(p, k, r, l) - dG(r, k, p, l) - dG(r, l, k, p));
          // d_{p4} reads as the alpha-derivative when p is the circle index.
          const double dp4 = p == kCircle ? g(k, r, l).d(1) + g(l, k, r).d(1) : 0.0;
          const double dr4 = r == kCircle ? g(k, p, l).d(1) + g(l, k, p).d(1) : 0.0;
          acc += X(p) * Y(r) * (dp4 - dr4);
          acc += X(p) * Ydot(r) * (dG(p, k, l, r) + dG(p, l, k, r) - dG(r, k, p, l));
        }
      }
      out(k, l) = acc;
    }
  }
  return out;
}

Eigen::Matrix4d sigma_minus1_curvature_beta(const BergerMetric& m, double alpha, int X, int Y) {
  if (X < 0 || X >= 3 || Y < 0 || Y >= 3) throw std::invalid_argument("curvature symbol on beta needs S^3 directions");
  const Eigen::Vector4d zero = Eigen::Vector4d::Zero();
  return sigma_minus1_curvature(christoffel_table(m, alpha), Eigen::Vector4d::Unit(X), zero,
                                Eigen::Vector4d::Unit(Y), zero);
}

MatrixForm curvature_form(const ChristoffelTable& g) {
  const Eigen::Vector4d zero = Eigen::Vector4d::Zero();
  MatrixForm f(2);
  for (int p = 0; p < kDim; ++p)
    for (int r = p + 1; r < kDim; ++r)
      f[multi_index({p, r})] =
          to_complex(sigma_minus1_curvature(g, Eigen::Vector4d::Unit(p), zero, Eigen::Vector4d::Unit(r), zero));
  return f;
}

SymbolPair wedge(const SymbolPair& a, const SymbolPair& b) {
  return {wedge(a.sigma0, b.sigma0), wedge(a.sigma0, b.sigmaMinus1) + wedge(a.sigmaMinus1, b.sigma0)};
}

MatrixForm order_minus2_part(const SymbolPair& a, const SymbolPair& b) { return wedge(a.sigmaMinus1, b.sigmaMinus1); }

SymbolPair connection_symbol_beta(const BergerMetric& m, double alpha) {
  return {sigma0_connection(m, alpha), sigma_minus1_connection_beta(m, alpha)};
}

}  // namespace wcs
