#include <gtest/gtest.h>

#include <random>

#include "vermalab/exactla/linalg.hpp"

using namespace vermalab;

namespace {

QMat qmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return QMat::from_dense(r);
}

QVec qvec(const std::vector<long>& xs) {
  std::vector<Rational> r;
  for (long x : xs) r.emplace_back(x);
  return QVec(r.size(), r);
}

QMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> val(-4, 4), keep(0, 99);
  QMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng) < density) m.set(i, j, make_rational(val(rng), 1 + keep(rng) % 3));
  return m;
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(make_rational(0, 7).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  EXPECT_EQ(floor_div(make_rational(-7, 2)), -4);
}

TEST(RatFunc, ReductionAndInverse) {
  const RatFunc q = RatFunc::q();
  const RatFunc a = (q * q - RatFunc(1)) / (q - RatFunc(1));
  EXPECT_EQ(a, q + RatFunc(1));
  EXPECT_EQ(a.den(), Poly(1));
  const RatFunc b = (q + RatFunc(2)) / (RatFunc(3) * q * q + q);
  EXPECT_EQ(b * b.inverse(), RatFunc(1));
  EXPECT_EQ(b.den().lead(), 1);
  // reducing an already reduced fraction changes nothing
  const RatFunc again(b.num(), b.den());
  EXPECT_TRUE(again.num() == b.num() && again.den() == b.den());
  EXPECT_EQ(*a.evaluate(Rational(2)), 3);
  EXPECT_FALSE((RatFunc(1) / (q - RatFunc(1))).evaluate(Rational(1)).has_value());
  EXPECT_THROW(RatFunc(Poly(1), Poly()), std::domain_error);
}

TEST(RatFunc, RandomFieldAxioms) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  auto rand_poly = [&] {
    return Poly(std::vector<Rational>{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))});
  };
  for (int t = 0; t < 100; ++t) {
    Poly n = rand_poly(), d = rand_poly();
    if (n.is_zero() || d.is_zero()) continue;
    const RatFunc x(n, d);
    EXPECT_EQ(x * x.inverse(), RatFunc(1));
    const RatFunc y(rand_poly());
    EXPECT_EQ((x + y) * x, x * x + y * x);
  }
}

TEST(Nullspace, RankOneExample) {
  const auto ns = nullspace(qmat({{1, 2}, {2, 4}}));
  ASSERT_EQ(ns.size(), 1u);
  // Basis vectors are canonical up to sign convention: (2,-1) spans the same line as (-2,1).
  EXPECT_TRUE(proportionality(qvec({-2, 1}), ns[0]).has_value());
  EXPECT_EQ(ns[0], qvec({2, -1}));
}

TEST(Nullspace, IdentityHasTrivialKernel) { EXPECT_TRUE(nullspace(QMat::identity(3)).empty()); }

TEST(Nullspace, WeightZeroOfL4TensorV0) {
  // e on span{v0⊗w2, v1⊗w1, v2⊗w0} into weight 2 span{v0⊗w1, v1⊗w0}
  // e(v0⊗w2) = -2 v0⊗w1; e(v1⊗w1) = 4 v0⊗w1; e(v2⊗w0) = 3 v1⊗w0
  const auto ns = nullspace(qmat({{-2, 4, 0}, {0, 0, 3}}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(*proportionality(qvec({16, 8, 0}), ns[0]), make_rational(1, 8));
}

TEST(Nullspace, RandomRankNullity) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const QMat m = random_matrix(rng, 1 + t % 6, 1 + (t / 6) % 7, 45);
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), m.cols());
    for (const auto& v : ns) {
      EXPECT_TRUE(m.apply(v).is_zero());
      EXPECT_GT(sgn(v.entries().begin()->second), 0);
      Integer g = 0;
      for (const auto& [i, x] : v.entries()) {
        EXPECT_TRUE(is_integer(x));
        g = gcd(g, x.get_num());
      }
      EXPECT_EQ(g, 1);
    }
  }
}

TEST(Solve, Examples) {
  const QVec b = qvec({4, -1, 7});
  EXPECT_EQ(*solve(QMat::identity(3), b), b);
  const QMat m = qmat({{1, 2}, {2, 4}});
  const auto x = solve(m, qvec({1, 2}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), qvec({1, 2}));
  EXPECT_FALSE(solve(m, qvec({1, 1})).has_value());
  EXPECT_THROW(solve(m, qvec({1, 1, 1})), std::invalid_argument);
}

TEST(Solve, RandomConsistentSystems) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const QMat m = random_matrix(rng, 2 + t % 5, 2 + t % 4, 50);
    const QVec x0 = random_matrix(rng, m.cols(), 1, 70).column(0);
    const QVec b = m.apply(x0);
    const auto x = solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), b);
  }
}

TEST(GeneralizedKernel, JordanBlock) {
  const auto gk = generalized_kernel(qmat({{0, 1}, {0, 0}}), 2);
  ASSERT_EQ(gk.kernel.size(), 1u);
  ASSERT_EQ(gk.excess.size(), 1u);
  EXPECT_EQ(gk.kernel[0], qvec({1, 0}));
  EXPECT_EQ(gk.excess[0], qvec({0, 1}));
}

TEST(GeneralizedKernel, DiagonalNoExcess) {
  const auto gk = generalized_kernel(qmat({{0, 0}, {0, 5}}), 2);
  EXPECT_EQ(gk.kernel.size(), 1u);
  EXPECT_TRUE(gk.excess.empty());
  EXPECT_THROW(generalized_kernel(qmat({{0, 0, 1}, {0, 5, 1}}), 2), std::invalid_argument);
}

TEST(GeneralizedKernel, CasimirWeightMinusTwoOfL2TensorV0) {
  // columns (-8,-8,0), (8,8,0), (0,4,8)
  const QMat om = qmat({{-8, 8, 0}, {-8, 8, 4}, {0, 0, 8}});
  const auto gk = generalized_kernel(om, 2);
  ASSERT_EQ(gk.kernel.size(), 1u);
  EXPECT_EQ(gk.kernel[0], qvec({1, 1, 0}));
  ASSERT_EQ(gk.excess.size(), 1u);
  EXPECT_FALSE(om.apply(gk.excess[0]).is_zero());
  EXPECT_TRUE(om.power(2).apply(gk.excess[0]).is_zero());
}

TEST(GeneralizedKernel, RandomNilpotentExcess) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    // strictly upper triangular matrices are nilpotent
    QMat m = random_matrix(rng, 5, 5, 40);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j <= i; ++j) m.set(i, j, Rational(0));
    const auto gk = generalized_kernel(m, 2);
    EXPECT_EQ(gk.kernel.size() + gk.excess.size(), nullspace(m.power(2)).size());
    for (const auto& v : gk.excess) {
      EXPECT_FALSE(m.apply(v).is_zero());
      EXPECT_TRUE(m.power(2).apply(v).is_zero());
    }
  }
}

TEST(RatFuncLinalg, NullspaceOverQq) {
  const RatFunc q = RatFunc::q();
  SparseMat<RatFunc> m(2, 2);
  m.set(0, 0, q);
  m.set(0, 1, q * q);
  m.set(1, 0, RatFunc(1));
  m.set(1, 1, q);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(m.apply(ns[0]).is_zero());
  EXPECT_EQ(ns[0].get(0), RatFunc(1));
}
