#include <gtest/gtest.h>

#include <random>

#include "wcs/forms.hpp"

using namespace wcs;
using Eigen::Matrix4cd;

namespace {

Matrix4cd elementary(int i, int j) {
  Matrix4cd m = Matrix4cd::Zero();
  m(i, j) = 1.0;
  return m;
}

MatrixForm random_form(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MatrixForm f(degree);
  for (MultiIndex I = 0; I < 16; ++I)
    if (std::popcount(I) == degree) f[I] = Matrix4cd::NullaryExpr([&] { return Complex(u(rng), u(rng)); });
  return f;
}

}  // namespace

TEST(Wedge, BasisAntisymmetry) {
  const MatrixForm a = monomial<Matrix4cd>({0}, Matrix4cd::Identity());
  const MatrixForm b = monomial<Matrix4cd>({1}, Matrix4cd::Identity());
  const MatrixForm ab = wedge(a, b), ba = wedge(b, a);
  EXPECT_EQ(ab.degree(), 2);
  EXPECT_TRUE(ab[multi_index({0, 1})].isApprox(Matrix4cd::Identity()));
  EXPECT_TRUE(ba[multi_index({0, 1})].isApprox(-Matrix4cd::Identity()));
}

TEST(Wedge, CoefficientsMultiplyAsMatrices) {
  const MatrixForm a = monomial<Matrix4cd>({0}, elementary(0, 1));
  const MatrixForm b = monomial<Matrix4cd>({1}, elementary(1, 2));
  EXPECT_EQ(wedge(a, b)[multi_index({0, 1})], elementary(0, 2));
  EXPECT_EQ(wedge(b, a).max_abs(), 0.0);  // E23 E12 = 0
}

TEST(Wedge, RepeatedIndexVanishes) {
  std::mt19937_64 rng(1);
  for (int p = 0; p < 4; ++p) {
    const MatrixForm a = monomial<Matrix4cd>({p}, random_form(rng, 0)[0]);
    EXPECT_EQ(wedge(a, a).max_abs(), 0.0);
  }
}

TEST(Wedge, DegreeOverflowIsRejected) {
  EXPECT_THROW(wedge(MatrixForm(3), MatrixForm(2)), std::invalid_argument);
  EXPECT_NO_THROW(wedge(MatrixForm(2), MatrixForm(2)));
}

TEST(Wedge, Associative) {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 100; ++n) {
    const MatrixForm a = random_form(rng, 1), b = random_form(rng, 1), c = random_form(rng, 1);
    EXPECT_LT((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).max_abs(), 1e-12);
  }
}

TEST(Wedge, Bilinear) {
  std::mt19937_64 rng(3);
  const Complex s(0.3, -1.2), t(2.0, 0.5);
  for (int n = 0; n < 20; ++n) {
    const MatrixForm a = random_form(rng, 1), b = random_form(rng, 2), c = random_form(rng, 2);
    const MatrixForm lhs = wedge(a, s * b + t * c);
    const MatrixForm rhs = s * wedge(a, b) + t * wedge(a, c);
    EXPECT_LT((lhs - rhs).max_abs(), 1e-12);
  }
}

TEST(Trace, IdentityAndOffDiagonal) {
  const MatrixForm f = monomial<Matrix4cd>({0, 1}, Matrix4cd::Identity());
  EXPECT_EQ(trace(f)[multi_index({0, 1})], Complex(4.0));
  EXPECT_EQ(trace(monomial<Matrix4cd>({0}, elementary(0, 1))).max_abs(), 0.0);
}

TEST(Trace, GradedCyclicity) {
  std::mt19937_64 rng(4);
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q)
      for (int n = 0; n < 10; ++n) {
        const MatrixForm a = random_form(rng, p), b = random_form(rng, q);
        const double sign = (p * q) % 2 ? -1.0 : 1.0;
        EXPECT_LT((trace(wedge(a, b)) - sign * trace(wedge(b, a))).max_abs(), 1e-12) << p << "," << q;
      }
}

TEST(Evaluate3, DualPairing) {
  EXPECT_EQ(evaluate3(monomial<Complex>({0, 1, 2}, 1.0)), Complex(1.0));
  EXPECT_EQ(evaluate3(monomial<Complex>({0, 1, 3}, 1.0)), Complex(0.0));
  const ScalarForm f = monomial<Complex>({0, 1, 2}, 2.0) - monomial<Complex>({1, 2, 3}, 5.0);
  EXPECT_EQ(evaluate3(f), Complex(2.0));
  EXPECT_THROW(evaluate3(ScalarForm(2)), std::invalid_argument);
}

TEST(Form, DegreeChecks) {
  MatrixForm f(2);
  EXPECT_THROW(f[multi_index({0})], std::out_of_range);
  EXPECT_THROW(MatrixForm(5), std::invalid_argument);
  EXPECT_THROW(MatrixForm(1) + MatrixForm(2), std::invalid_argument);
  // the top degree has exactly one slot
  MatrixForm top(4);
  EXPECT_NO_THROW(top[multi_index({0, 1, 2, 3})]);
}

TEST(ShuffleSign, KnownPermutations) {
  EXPECT_EQ(shuffle_sign(multi_index({0}), multi_index({1})), 1);
  EXPECT_EQ(shuffle_sign(multi_index({1}), multi_index({0})), -1);
  EXPECT_EQ(shuffle_sign(multi_index({2}), multi_index({0, 1})), 1);
  EXPECT_EQ(shuffle_sign(multi_index({1, 3}), multi_index({0, 2})), -1);
  EXPECT_EQ(shuffle_sign(multi_index({1}), multi_index({1, 2})), 0);
}
