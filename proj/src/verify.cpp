#include "wcs/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "wcs/chern_simons.hpp"
#include "wcs/geometry.hpp"
#include "wcs/parser.hpp"
#include "wcs/random_metric.hpp"
#include "wcs/symbols.hpp"

namespace wcs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(const char* what, double worst, double limit) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s %.3e (limit %.1e)", what, worst, limit);
  return buf;
}

CheckResult below(std::string name, const char* what, double worst, double limit) {
  return {std::move(name), worst < limit, fmt(what, worst, limit)};
}

double fd_error(const std::function<double(double)>& f, const Jet2& j, double x) {
  const double h1 = 1e-5, h2 = 1e-3;
  const double d1 = (f(x + h1) - f(x - h1)) / (2 * h1);
  const double d2 = (-f(x + 2 * h2) + 16 * f(x + h2) - 30 * f(x) + 16 * f(x - h2) - f(x - 2 * h2)) / (12 * h2 * h2);
  const double e1 = std::abs(j.d(1) - d1) / std::max(1.0, std::abs(d1));
  const double e2 = std::abs(j.d(2) - d2) / std::max(1.0, std::abs(d2));
  return std::max(e1, e2);
}

double matrix_gap(const MatrixForm& a, const MatrixForm& b) { return (a - b).max_abs(); }

MatrixForm random_one_form(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatrixForm f(1);
  for (int p = 0; p < 4; ++p)
    f[multi_index({p})] = Eigen::Matrix4cd::NullaryExpr([&] { return Complex(u(rng), u(rng)); });
  return f;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<CheckResult> out;

  std::vector<RandomMetric> metrics;
  for (int i = 0; i < opts.random_metrics; ++i) metrics.push_back(random_metric(rng));
  std::vector<BergerMetric> family{reference_family(2), reference_family(8)};
  for (const auto& r : metrics) family.push_back(r.metric);

  // calculus
  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const PeriodicExpr e = parse_expr(random_node_source(rng, i % kRandomNodeShapes));
      const double x = angle(rng);
      worst = std::max(worst, fd_error([&](double t) { return e.eval(t, 0); }, e.eval_jet2(x, 0), x));
    }
    out.push_back(below("calculus: jets match finite differences", "max rel err", worst, 1e-6));
  }
  {
    QuadratureSpec spec;
    spec.samples = 64;
    double worst = 0.0;
    for (int k = 0; k <= spec.samples / 4; ++k) {
      const double I = integrate_circle([k](double t) { return std::cos(k * t) + std::sin(k * t); }, spec);
      worst = std::max(worst, std::abs(I - (k == 0 ? kTwoPi : 0.0)));
    }
    out.push_back(below("calculus: quadrature exact on trigonometric polynomials", "max abs err", worst, 1e-12));
  }

  // geometry
  {
    double table = 0.0, compat = 0.0, torsion = 0.0, jacobi = 0.0, logderiv = 0.0;
    for (int i = 0; i < 200; ++i) {
      const BergerMetric& m = family[static_cast<std::size_t>(i) % family.size()];
      const double x = angle(rng);
      const StructureConstants c = structure_constants(m, x);
      const ChristoffelTable g = christoffel_table(m, x), gk = christoffel_koszul(c);
      for (int k = 0; k < 4; ++k)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            table = std::max({table, std::abs(g(k, a, b).value() - gk(k, a, b).value()),
                              std::abs(g(k, a, b).d(1) - gk(k, a, b).d(1))});
            compat = std::max(compat, std::abs(g(k, a, b).value() + g(b, a, k).value()));
            torsion = std::max(torsion, std::abs(g(k, a, b).value() - g(k, b, a).value() - c(k, a, b).value()));
          }
      // sum over cyclic (i,j,k) of c(m,i,j) c(n,m,k) - F_k(c(n,i,j)) = 0
      for (int ii = 0; ii < 4; ++ii)
        for (int jj = 0; jj < 4; ++jj)
          for (int kk = 0; kk < 4; ++kk)
            for (int n = 0; n < 4; ++n) {
              double acc = 0.0;
              const int idx[3][3] = {{ii, jj, kk}, {jj, kk, ii}, {kk, ii, jj}};
              for (const auto& t : idx) {
                for (int mm = 0; mm < 4; ++mm) acc += c(mm, t[0], t[1]).value() * c(n, mm, t[2]).value();
                if (t[2] == kCircle) acc -= c(n, t[0], t[1]).d(1);
              }
              jacobi = std::max(jacobi, std::abs(acc));
            }
      const CoefficientSet cs = coefficient_set(m, x);
      const Jet2 l = m.lambda().eval_jet2(x, m.a()), u = m.mu().eval_jet2(x, m.a()), v = m.nu().eval_jet2(x, m.a());
      logderiv = std::max({logderiv, std::abs(cs.A.value() - l.d(1) / l.value()),
                           std::abs(cs.B.value() - u.d(1) / u.value()), std::abs(cs.C.value() - v.d(1) / v.value())});
    }
    out.push_back(below("geometry: closed-form table equals Koszul derivation", "max gap", table, 1e-12));
    out.push_back(below("geometry: metric compatibility", "max residual", compat, 1e-12));
    out.push_back(below("geometry: torsion-free", "max residual", torsion, 1e-12));
    out.push_back(below("geometry: Jacobi identity", "max residual", jacobi, 1e-12));
    out.push_back(below("geometry: A, B, C are logarithmic derivatives", "max gap", logderiv, 1e-12));
    const CoefficientSet r = coefficient_set(round_metric(), 0.7);
    const double worst_round = std::max({std::abs(r.U.value()), std::abs(r.V.value()), std::abs(r.W.value())});
    out.push_back(below("geometry: round metric has U = V = W = 0", "max |U,V,W|", worst_round, 1e-15));
  }

  // forms
  {
    double assoc = 0.0, cyclic = 0.0;
    for (int i = 0; i < 100; ++i) {
      const MatrixForm a = random_one_form(rng), b = random_one_form(rng), c = random_one_form(rng);
      assoc = std::max(assoc, matrix_gap(wedge(wedge(a, b), c), wedge(a, wedge(b, c))));
      const MatrixForm ab = wedge(a, b);
      // Tr(A ^ B) = (-1)^{pq} Tr(B ^ A) for p = 1, q = 2
      cyclic = std::max(cyclic, (trace(wedge(c, ab)) - trace(wedge(ab, c))).max_abs());
      cyclic = std::max(cyclic, (trace(wedge(a, b)) + trace(wedge(b, a))).max_abs());
    }
    out.push_back(below("forms: wedge is associative", "max gap", assoc, 1e-12));
    out.push_back(below("forms: graded trace cyclicity", "max gap", cyclic, 1e-12));
  }

  // symbols
  {
    double s0 = 0.0, sym = 0.0, dotbeta = 0.0, triple = 0.0, curv = 0.0;
    for (int i = 0; i < 200; ++i) {
      const BergerMetric& m = family[static_cast<std::size_t>(i) % family.size()];
      const double x = angle(rng);
      const ChristoffelTable g = christoffel_table(m, x);
      const MatrixForm a = sigma0_connection(m, x);
      s0 = std::max(s0, matrix_gap(a, sigma0_from_christoffel(g)));
      sym = std::max(sym, (a - a.map([](const Eigen::Matrix4cd& M) -> Eigen::Matrix4cd { return M.transpose(); })).max_abs());
      const MatrixForm beta = sigma_minus1_connection_beta(g);
      for (int l = 0; l < 3; ++l) {
        const Eigen::Matrix4d d = sigma_minus1_connection_dot(g, Eigen::Vector4d::Unit(l), Eigen::Vector4d::Zero());
        dotbeta = std::max(dotbeta, (beta[multi_index({l})] - d.cast<Complex>()).cwiseAbs().maxCoeff());
      }
      const SymbolPair theta{a, beta};
      const SymbolPair cube = wedge(wedge(theta, theta), theta);
      const Complex lhs = evaluate3(trace(cube.sigmaMinus1));
      const Complex rhs = 3.0 * evaluate3(trace(wedge(beta, a, a)));
      triple = std::max(triple, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) curv = std::max(curv, sigma_minus1_curvature_beta(m, x, p, q).cwiseAbs().maxCoeff());
    }
    out.push_back(below("symbols: sigma_0 from coefficients equals Christoffel formula", "max gap", s0, 1e-12));
    out.push_back(below("symbols: sigma_0 is symmetric", "max gap", sym, 1e-12));
    out.push_back(below("symbols: X'-form at X' = 0 equals beta restriction", "max gap", dotbeta, 1e-12));
    out.push_back(below("symbols: order -1 part of theta^3 is 3 Tr(s-1 s0 s0)", "max rel gap", triple, 1e-12));
    out.push_back(below("symbols: curvature symbol vanishes on beta_*(TS^3)", "max entry", curv, 1e-12));
  }

  // cs
  {
    double lead = 0.0, curv = 0.0, imag = 0.0, constant = 0.0, periodic = 0.0;
    const int per_metric = std::max(1, opts.alpha_samples / static_cast<int>(metrics.size()));
    for (const auto& r : metrics) {
      for (int i = 0; i < per_metric; ++i) {
        const double x = angle(rng);
        lead = std::max(lead, std::abs(leading_order_density(r.metric, x)));
        const DensityTerms t = cs_density_terms(r.metric, 1.0, x);
        curv = std::max(curv, std::abs(t.curvature_contribution));
        imag = std::max(imag, std::abs(t.D.imag()));
        if (r.metric.is_constant()) constant = std::max(constant, std::abs(t.f));
      }
      periodic = std::max(periodic, std::abs(cs_density_terms(r.metric, 1.0, 0.0).f -
                                             cs_density_terms(r.metric, 1.0, kTwoPi).f));
    }
    out.push_back(below("cs: Tr(s0^s0^s0) vanishes", "max |value|", lead, 1e-12));
    out.push_back(below("cs: curvature term does not contribute", "max |term|", curv, 1e-12));
    out.push_back(below("cs: density is real", "max |Im D|", imag, 1e-10));
    out.push_back(below("cs: density is periodic", "max |f(0)-f(2pi)|", periodic, 1e-10));
    const CSReport flat = cs_class(constant_metric(1.3, 0.7, 2.1), {});
    out.push_back(below("cs: constant metric gives zero density and class", "max |f|, |v|",
                        std::max(constant, std::abs(flat.class_value)), 1e-14));

    CSConfig cfg;
    const CSReport one = cs_class(reference_family(2), cfg);
    double lin = 0.0;
    for (double s : {0.6, 2.0, 3.5}) {
      cfg.s = s;
      lin = std::max(lin, std::abs(cs_class(reference_family(2), cfg).class_value - s * one.class_value));
    }
    out.push_back(below("cs: class value is linear in s", "max gap", lin, 1e-10));

    CSConfig fine;
    fine.quadrature.samples = 2 * cfg.quadrature.samples;
    const double doubled = std::abs(cs_class(reference_family(2), fine).integral - one.integral);
    out.push_back(below("cs: doubling the grid leaves the integral unchanged", "|delta|", doubled, 1e-8));

    const double fig1 = std::abs(one.integral / -26.0687 - 1.0);
    const double fig2 = std::abs(cs_class(reference_family(8), CSConfig{}).integral / -100.992 - 1.0);
    out.push_back(below("cs: a=2 integral reproduces -26.0687", "rel err", fig1, 5e-3));
    out.push_back(below("cs: a=8 integral reproduces -100.992", "rel err", fig2, 5e-3));
    out.push_back({"cs: a=2 class is nontrivial", one.nontrivial, "mod Z " + std::to_string(one.mod_z)});
  }
  return out;
}

}  // namespace wcs
