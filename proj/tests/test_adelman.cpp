#include <gtest/gtest.h>

#include <fstream>

#include "vermalab/adelman/fixture.hpp"

using namespace vermalab;
using namespace vermalab::adelman;

namespace {

QMat dense(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return QMat::from_dense(r);
}

}  // namespace

TEST(Morphisms, IdentityZeroAndEmbedded) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto X = random_object(rng), Y = random_object(rng);
    EXPECT_TRUE(is_morphism(TripleMorphism::identity(X)));
    EXPECT_TRUE(is_morphism(TripleMorphism::zero(X, Y)));
    EXPECT_TRUE(is_morphism(random_morphism(X, Y, rng)));
  }
  EXPECT_TRUE(is_morphism(embed(random_matrix(2, 1, rng))));
  // a triple that does not commute
  const DoubleArrow X(dense({{1}}), QMat(0, 1));
  const TripleMorphism bad(X, X, dense({{1}}), dense({{2}}), QMat(0, 0));
  EXPECT_FALSE(is_morphism(bad));
  EXPECT_THROW(DoubleArrow(QMat(2, 1), QMat(1, 3)), std::invalid_argument);
}

TEST(Homotopy, ReflexiveWitnessIsZero) {
  std::mt19937_64 rng(4);
  const auto X = random_object(rng), Y = random_object(rng);
  const auto f = random_morphism(X, Y, rng);
  const auto h = homotopic(f, f);
  ASSERT_TRUE(h);
  EXPECT_TRUE(h->s1.is_zero());
  EXPECT_TRUE(h->s2.is_zero());
}

TEST(Homotopy, EmbeddedObjectsAreFaithful) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const QMat f = random_matrix(3, 2, rng), g = random_matrix(3, 2, rng);
    EXPECT_EQ(homotopic(embed(f), embed(g)).has_value(), f == g);
    EXPECT_TRUE(homotopic(embed(f), embed(f)));
  }
}

TEST(Homotopy, ConstructedPositiveCase) {
  std::mt19937_64 rng(6);
  // Y = B' -> B -> 0, X = A' -> A -> 0; (s1 a', b' s1, 0) is a morphism for any s1
  const DoubleArrow X(random_matrix(3, 2, rng), QMat(0, 3));
  const DoubleArrow Y(random_matrix(2, 2, rng), QMat(0, 2));
  const QMat s1 = random_matrix(2, 3, rng);
  const TripleMorphism g(X, Y, s1 * X.m1, Y.m1 * s1, QMat(0, 0));
  ASSERT_TRUE(is_morphism(g));
  const auto h = homotopic(g, TripleMorphism::zero(X, Y));
  ASSERT_TRUE(h);
  EXPECT_TRUE(verify_homotopy(g, TripleMorphism::zero(X, Y), *h));
}

TEST(Homotopy, CongruenceOnHundredInstances) {
  const auto c = congruence_checks(100, 11);
  EXPECT_TRUE(c.all_pass());
  EXPECT_EQ(c.reflexive.passed, 100);
  EXPECT_EQ(c.postComposition.passed, 100);
}

TEST(Embed, Functorial) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const QMat f = random_matrix(3, 3, rng), g = random_matrix(3, 3, rng);
    EXPECT_EQ(embed(f * g), compose(embed(f), embed(g)));
  }
  EXPECT_EQ(embed(QMat::identity(2)), TripleMorphism::identity(embed(2)));
  EXPECT_EQ(embed(2).d2(), 2u);
}

TEST(Limits, IdentityAndZero) {
  std::mt19937_64 rng(8);
  int nonzero = 0;
  for (int i = 0; i < 25; ++i) {
    const auto X = random_object(rng);
    nonzero += !zero_equivalent(X);
    const auto id = TripleMorphism::identity(X), z = TripleMorphism::zero(X, X);
    EXPECT_TRUE(zero_equivalent(kernel(id).object));
    EXPECT_TRUE(zero_equivalent(cokernel(id).object));
    EXPECT_TRUE(is_homotopy_equivalence(kernel(z).map));
    EXPECT_TRUE(is_homotopy_equivalence(cokernel(z).map));
  }
  EXPECT_GT(nonzero, 5);  // the sample must include objects that are not zero
}

TEST(Limits, EmbeddedMonoAndEpi) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const std::size_t r = 1 + i % 3, c = 1 + (i / 3) % 3;
    const QMat f = random_low_rank(r, c, rng) + (i % 2 ? random_matrix(r, c, rng) : QMat(r, c));
    const std::size_t rk = rank(f);
    EXPECT_EQ(zero_equivalent(kernel(embed(f)).object), rk == c) << i;
    EXPECT_EQ(zero_equivalent(cokernel(embed(f)).object), rk == r) << i;
  }
  EXPECT_TRUE(zero_equivalent(kernel(embed(QMat::identity(1))).object));
  const auto ck = cokernel(embed(QMat(2, 1)));
  EXPECT_TRUE(is_homotopy_equivalence(ck.map));
}

TEST(Limits, UniversalPropertyTrials) {
  const auto u = universal_property_trials(100, 21, KernelReading::MiddleASumBpMinus);
  EXPECT_EQ(u.passed, 100);
  EXPECT_EQ(u.failed, 0);
}

TEST(Limits, WeakReadingsAreRejected) {
  // the middle-A reading misses elements that only vanish up to b'
  std::mt19937_64 rng(1);
  int failures = 0;
  for (int i = 0; i < 60 && failures == 0; ++i) {
    const auto t = random_instance(rng);
    failures += !check_kernel(t, kernel(t, KernelReading::MiddleA), rng).passed();
  }
  EXPECT_GT(failures, 0);
}

TEST(Interpretation, MatchesFixtureAndIsStable) {
  std::ifstream in(std::string(VERMALAB_FIXTURE_DIR) + "/adelman_interpretation.json");
  ASSERT_TRUE(in);
  const auto fixture = ordered_json::parse(in);
  const auto seed = fixture.at("seed").get<std::uint64_t>();
  const auto again = resolve_interpretation(fixture.at("trials").get<int>(), seed);
  EXPECT_EQ(interpretation_json(again, seed), fixture);
  const auto other = resolve_interpretation(40, 987654321);
  ASSERT_TRUE(other.chosen);
  EXPECT_EQ(reading_name(*other.chosen), fixture.at("kernel").get<std::string>());
  EXPECT_EQ(other.cokernelTrials.failed, 0);
}
