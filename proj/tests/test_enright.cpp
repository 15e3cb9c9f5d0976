#include <gtest/gtest.h>

#include "vermalab/enright/audit.hpp"
#include "vermalab/enright/grothendieck.hpp"
#include "vermalab/enright/hwv.hpp"
#include "vermalab/enright/projective.hpp"
#include "vermalab/enright/pseudoadjoint.hpp"
#include "vermalab/enright/report.hpp"
#include "vermalab/sl2/projective.hpp"

using namespace vermalab;
using namespace vermalab::enright;

namespace {

std::vector<Rational> rats(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(IndexSets, Examples) {
  auto s = index_sets(4, 0);
  EXPECT_EQ(s.Iprime, (std::vector<int>{0, 2}));
  EXPECT_EQ(s.Idoubleprime, (std::vector<int>{-4, -2}));
  EXPECT_EQ(s.Itripleprime, (std::vector<int>{4}));
  s = index_sets(3, 0);
  EXPECT_EQ(s.Iprime, (std::vector<int>{1}));
  EXPECT_EQ(s.Idoubleprime, (std::vector<int>{-3}));
  EXPECT_EQ(s.Itripleprime, (std::vector<int>{-1, 3}));
  s = index_sets(0, 0);
  EXPECT_TRUE(s.Iprime.empty());
  EXPECT_TRUE(s.Idoubleprime.empty());
  EXPECT_EQ(s.Itripleprime, (std::vector<int>{0}));
}

TEST(IndexSets, PartitionForManyLambdas) {
  for (int n = 0; n <= 64; ++n)
    for (int lambda = -16; lambda <= 16; ++lambda) EXPECT_NO_THROW(index_sets(n, lambda));
}

TEST(PCoefficients, SpotValues) {
  EXPECT_EQ(p_coefficients(4, -2), rats({16, 8}));
  EXPECT_EQ(p_coefficients(2, -2), rats({1}));
  EXPECT_EQ(p_coefficients(6, -4), rats({24, 8}));
  EXPECT_THROW(p_coefficients(4, -3), std::invalid_argument);
  EXPECT_THROW(p_coefficients(2, -6), std::invalid_argument);
}

TEST(Hwv, Examples) {
  auto rec = highest_weight_vector(2, 2);
  EXPECT_EQ(rec.coefficients.size(), 1u);
  EXPECT_EQ(rec.coefficients.at({0, 0}), 1);

  rec = highest_weight_vector(4, 0);
  EXPECT_EQ(rec.coefficients.at({0, 2}), 2);
  EXPECT_EQ(rec.coefficients.at({1, 1}), 1);
  EXPECT_EQ(rec.pNormalized().at({0, 2}), 16);
  EXPECT_EQ(rec.pNormalized().at({1, 1}), 8);

  rec = highest_weight_vector(2, 0);
  EXPECT_EQ(rec.coefficients.size(), 1u);
  EXPECT_EQ(rec.coefficients.at({0, 1}), 1);
  EXPECT_THROW(highest_weight_vector(4, 4 - 1), std::invalid_argument);
}

TEST(Hwv, OracleAgreesWithClosedForm) {
  for (int n = 0; n <= 12; ++n) {
    auto sets = index_sets(n);
    std::vector<int> ss = sets.Iprime;
    ss.push_back(n);
    for (int s : ss) {
      const auto rec = highest_weight_vector(n, s);
      EXPECT_EQ(rec.kernelDim, 1u);
      const auto check = alpha_recursion_check(rec);
      EXPECT_TRUE(check.all_zero()) << n << " " << s;
    }
  }
}

TEST(AlphaRecursion, ResidualExamples) {
  auto c = alpha_recursion_check(highest_weight_vector(4, 0));
  ASSERT_EQ(c.residuals.size(), 1u);
  EXPECT_EQ(c.residuals[0], 0);
  EXPECT_TRUE(alpha_recursion_check(highest_weight_vector(2, 0)).residuals.empty());
  c = alpha_recursion_check(highest_weight_vector(6, 2));
  ASSERT_EQ(c.residuals.size(), 1u);
  EXPECT_TRUE(c.seedMatches);
  EXPECT_EQ(alpha_seed(4, -2), 16);
  EXPECT_EQ(alpha_seed(6, -4), 24);
}

TEST(ApplyF, Examples) {
  const auto m = tensor_module(2, 4);
  const QVec u = to_vector(m, {{{0, 1}, Rational(1)}});
  const auto fu = to_coeffs(m, apply_f_power(m, u, 1));
  EXPECT_EQ(fu.size(), 2u);
  EXPECT_EQ(fu.at({1, 1}), 1);
  EXPECT_EQ(fu.at({0, 2}), 1);
  EXPECT_EQ(apply_f_power(m, u, 0), u);
  EXPECT_THROW(apply_f_power(m, u, 10), std::out_of_range);
}

TEST(LowerHwv, RecursionAndProportionality) {
  const auto low = lower_highest_weight_vector(4, 0);
  EXPECT_EQ(low.q, rats({16, 24, 16}));
  for (int n = 2; n <= 10; ++n)
    for (int s : index_sets(n).Iprime) {
      const auto l = lower_highest_weight_vector(n, s);
      EXPECT_TRUE(all_zero(l.recursionResiduals)) << n << " " << s;
      EXPECT_TRUE(l.proportionalToClosedForm) << n << " " << s;
      EXPECT_TRUE(l.killedByE);
    }
  // proportional, but not equal, to the closed form at r = s
  const auto l = lower_highest_weight_vector(2, 0);
  EXPECT_EQ(l.q, rats({1, 1}));
  EXPECT_EQ(p_coefficients(2, 0), rats({8, 8}));
}

TEST(FPositivity, PowersOfHwvStayNonnegative) {
  for (int n = 1; n <= 8; ++n) {
    auto ss = index_sets(n).Iprime;
    ss.push_back(n);
    for (int s : ss) {
      const int depth = 14;
      const auto m = tensor_module(n, depth);
      const QVec u = to_vector(m, highest_weight_vector(n, s).pNormalized());
      for (int l = 0; l + (n - s) / 2 <= depth; ++l) EXPECT_TRUE(nonnegative_integral(apply_f_power(m, u, l)));
    }
  }
}

TEST(ProjGen, NTwoSZero) {
  const auto pg = projective_generator(2, 0);
  EXPECT_TRUE(pg.passed());
  EXPECT_EQ(pg.qList, rats({2, 1}));
  EXPECT_EQ(pg.m, 0);
  EXPECT_EQ(pg.omegaColumnsA, rats({-8, -8, 0}));
  EXPECT_EQ(pg.finalCoefficients, rats({2, 1}));
}

TEST(ProjGen, AllCasesUpToTen) {
  for (int n = 0; n <= 10; ++n)
    for (int s : index_sets(n).Iprime) {
      const auto pg = projective_generator(n, s);
      EXPECT_TRUE(pg.passed()) << n << " " << s;
      EXPECT_TRUE(pg.betaI0Zero);
      EXPECT_GE(pg.m, 0);
    }
  EXPECT_THROW(projective_generator(4, 4), std::invalid_argument);
}

TEST(ProjGen, FrozenCoefficients) {
  // frozen from an independent sympy computation of the same normalization
  auto pg = projective_generator(3, 1);
  EXPECT_EQ(pg.qList, rats({6, 8, 2}));
  EXPECT_EQ(pg.pList, rats({1, 2, 2}));
  pg = projective_generator(4, 0);
  EXPECT_EQ(pg.qList, rats({20, 27, 16}));
  EXPECT_EQ(pg.pList, rats({16, 24, 16}));
  pg = projective_generator(4, 2);
  EXPECT_EQ(pg.qList, rats({14, 33, 42, 6}));
  EXPECT_EQ(pg.pList, rats({1, 3, 6, 6}));
}

TEST(ProjGen, KernelShiftKeepsCasimirConditions) {
  const int n = 4, s = 0;
  const auto pg = projective_generator(n, s);
  const auto mod = tensor_module(n, projgen_depth(n, s));
  const auto idx = mod.weight_space(-s - 2);
  const QMat A = shifted(casimir_on_weight(mod, -s - 2), pg.c);
  const QVec u = restrict_to(to_vector(mod, lower_highest_weight_vector(n, s).coefficients), idx);
  const QVec a = restrict_to(to_vector(mod, pg.final_vector()), idx);
  for (int m = 0; m < 5; ++m) {
    const QVec am = a + Rational(m) * u;
    EXPECT_FALSE(A.apply(am).is_zero());
    EXPECT_TRUE(A.apply(A.apply(am)).is_zero());
  }
}

TEST(MinimalShift, UsesFloorNotCeiling) {
  EXPECT_EQ(minimal_shift(rats({-3}), rats({2})), 2);
  EXPECT_EQ(minimal_shift(rats({-2}), rats({1})), 3);
  EXPECT_EQ(minimal_shift(rats({5, 1}), rats({1, 1})), 0);
}

TEST(BetaRecursion, RandomVectorsGiveNonzeroResiduals) {
  // the residual map is not identically zero, so the checks have teeth
  TensorCoeffs junk{{{0, 2}, Rational(1)}, {{2, 0}, Rational(3)}};
  EXPECT_FALSE(all_zero(beta_residuals(2, 0, junk)));
}

TEST(Audit, Examples) {
  const auto rep = decomposition_audit(2, 6);
  EXPECT_TRUE(rep.passed());
  for (const auto& row : rep.rows) {
    if (row.mu == -4) EXPECT_EQ(row.lhs, 3);
    if (row.mu == 2) EXPECT_EQ(row.lhs, 1);
  }
  for (const auto& row : decomposition_audit(0, 4).rows) EXPECT_EQ(row.lhs, 1);
  EXPECT_THROW(decomposition_audit(4, 5), std::invalid_argument);
}

TEST(Audit, AllNUpToTwelve) {
  for (int n = 0; n <= 12; ++n) EXPECT_TRUE(decomposition_audit(n, 2 * n + 10).passed()) << n;
}

TEST(CasimirBlocks, Examples) {
  auto rep = casimir_blocks(2, -2, 6);
  EXPECT_TRUE(rep.passed());
  ASSERT_EQ(rep.blocks.size(), 2u);
  EXPECT_EQ(rep.blocks[0].c, 0);
  EXPECT_EQ(rep.blocks[0].kernelDim, 1u);
  EXPECT_EQ(rep.blocks[0].excessDim, 1u);
  EXPECT_EQ(rep.blocks[1].c, 8);
  EXPECT_EQ(rep.blocks[1].kernelDim, 1u);

  rep = casimir_blocks(2, 2, 6);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.dim, 1u);
  rep = casimir_blocks(0, 0, 3);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.blocks.size(), 1u);
}

TEST(CasimirBlocks, SweepSmallN) {
  for (int n = 0; n <= 6; ++n) {
    const int depth = 2 * n + 4;
    for (int mu : interior_weights(n, depth)) EXPECT_TRUE(casimir_blocks(n, mu, depth).passed()) << n << " " << mu;
  }
}

TEST(Pseudoadjoint, Examples) {
  auto rep = pseudoadjoint_check(sl2::build_verma(0, 20), Rational(0));
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.omegaMinusCZero);

  const auto tr = sl2::build_Tr(0, 2, 16);
  rep = pseudoadjoint_check(tr.module, Rational(0));
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.omegaMinusCZero);

  rep = pseudoadjoint_check(sl2::build_Ln(2), Rational(8));
  EXPECT_TRUE(rep.passed());
  EXPECT_TRUE(rep.omegaMinusCZero);

  EXPECT_THROW(pseudoadjoint_check(sl2::build_verma(0, 20), Rational(0), 4), std::invalid_argument);
  EXPECT_THROW(pseudoadjoint_check(sl2::build_verma(0, 5), Rational(0), 8), std::invalid_argument);
  // a wrong eigenvalue is detected
  EXPECT_FALSE(pseudoadjoint_check(sl2::build_verma(2, 20), Rational(0)).residualZero);
}

TEST(Decategorify, Examples) {
  auto F = formal_F(3, 0, 0);
  EXPECT_EQ(F.size(), 2u);
  EXPECT_EQ(F.at({1, 0}), 1);
  EXPECT_EQ(F.at({0, 1}), 1);
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(decategorify(n, n + 6).passed()) << n;
}

TEST(Report, CasesCoverIprimeAndItripleprime) {
  for (int n = 0; n <= 7; ++n) {
    const auto rep = enright_report(n, default_depth(n));
    const auto sets = index_sets(n, 0);
    EXPECT_EQ(rep.cases.size(), sets.Iprime.size() + sets.Itripleprime.size()) << n;
    for (const auto& c : rep.cases) {
      EXPECT_TRUE(c.passed()) << n << " " << c.s << " " << c.error;
      EXPECT_EQ(c.projective, sets.in_Iprime(c.s));
      EXPECT_EQ(c.m.has_value(), c.projective);
      EXPECT_EQ(c.q.empty(), !c.projective);
    }
    EXPECT_TRUE(rep.passed());
  }
}

TEST(Report, OddRankIncludesMinusOne) {
  const auto rep = enright_report(5, default_depth(5));
  ASSERT_FALSE(rep.cases.empty());
  EXPECT_EQ(rep.cases.front().s, -1);
  EXPECT_FALSE(rep.cases.front().projective);
  EXPECT_EQ(rep.cases.front().p, rats({320, 384, 192}));
}
