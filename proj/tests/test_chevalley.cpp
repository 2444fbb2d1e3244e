#include <gtest/gtest.h>

#include "tri3d4/chevalley.hpp"
#include "tri3d4/group.hpp"

using namespace tri3d4;

namespace {

Fq3 rnd3(const FieldTower& F, Rng& rng) { return Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))}; }
Fq3 rnd1(const FieldTower& F, Rng& rng) { return Fq3{static_cast<std::uint32_t>(rng.uniform(F.q()))}; }

}  // namespace

TEST(Chevalley, BasisEntries) {
  FieldTower F(3, 1);
  const Fq3 one = F.one(), minus = F.neg(F.one());
  Mat8 e1 = chevalley_e(F, 1);
  EXPECT_EQ(e1(1, 2), one);
  EXPECT_EQ(e1(7, 8), minus);
  Mat8 e5 = chevalley_e(F, 5);
  EXPECT_EQ(e5(1, 3), minus);
  EXPECT_EQ(e5(6, 8), one);
  Mat8 e12 = chevalley_e(F, 12);
  EXPECT_EQ(e12(1, 7), one);
  EXPECT_EQ(e12(2, 8), minus);
  for (int r = 1; r <= 12; ++r) {
    int nonzero = 0;
    for (Fq3 x : chevalley_e(F, r).a) nonzero += x.v != 0;
    EXPECT_EQ(nonzero, 2);
  }
  EXPECT_THROW(chevalley_e(F, 0), Error);
  EXPECT_THROW(chevalley_e(F, 13), Error);
}

TEST(Chevalley, TrialityHasOrderThree) {
  int moved = 0;
  for (int r = 1; r <= 12; ++r) {
    EXPECT_EQ(rho(rho(rho(r))), r);
    moved += rho(r) != r;
  }
  EXPECT_EQ(moved, 9);
  EXPECT_EQ(rho(2), 2);
  EXPECT_EQ(rho(11), 11);
  EXPECT_EQ(rho(12), 12);
}

TEST(Chevalley, UntwistedRootElementsAdd) {
  FieldTower F(3, 1);
  Rng rng(1);
  for (int r = 1; r <= 12; ++r)
    for (int n = 0; n < 20; ++n) {
      const Fq3 t = rnd3(F, rng), s = rnd3(F, rng);
      EXPECT_EQ(mat_mul(F, untwisted_root_element(F, r, t), untwisted_root_element(F, r, s)),
                untwisted_root_element(F, r, F.add(t, s)));
    }
}

TEST(Chevalley, TwistedRootSubgroupsAreAbelian) {
  FieldTower F(3, 1);
  Rng rng(2);
  for (int i = 1; i <= 6; ++i) {
    EXPECT_EQ(root_element(F, i, F.zero()), identity8());
    for (int n = 0; n < 100; ++n) {
      const Fq3 t = root_in_fq(i) ? rnd1(F, rng) : rnd3(F, rng);
      const Fq3 s = root_in_fq(i) ? rnd1(F, rng) : rnd3(F, rng);
      const Mat8 a = root_element(F, i, t), b = root_element(F, i, s);
      EXPECT_EQ(mat_mul(F, a, b), root_element(F, i, F.add(t, s)));
      EXPECT_EQ(mat_mul(F, a, b), mat_mul(F, b, a));
    }
  }
  EXPECT_THROW(root_element(F, 2, Fq3{5}), Error);
  EXPECT_THROW(root_element(F, 7, F.one()), Error);
  Mat8 x6 = root_element(F, 6, F.one());
  Mat8 expected = identity8();
  expected(1, 7) = F.one();
  expected(2, 8) = F.neg(F.one());
  EXPECT_EQ(x6, expected);
}

TEST(Chevalley, ClosedFormMatchesGeneratorProduct) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    Rng rng(p);
    const int trials = p == 3 ? 10000 : 2000;
    for (int n = 0; n < trials; ++n) {
      const UElem u = random_u(F, rng);
      const Mat8 m = closed_form_matrix(F, u);
      ASSERT_EQ(m, generator_product(F, u));
      ASSERT_TRUE(in_g(F, m));
    }
  }
  FieldTower F(3, 2);
  Rng rng(9);
  for (int n = 0; n < 500; ++n) {
    const UElem u = random_u(F, rng);
    ASSERT_EQ(closed_form_matrix(F, u), generator_product(F, u));
  }
}

TEST(Chevalley, ClosedFormRowThree) {
  FieldTower F(3, 1);
  EXPECT_EQ(closed_form_matrix(F, UElem{}), identity8());
  for (std::uint32_t a = 0; a < F.q3(); ++a) {
    UElem u;
    u.t1 = Fq3{a};
    const Mat8 m = closed_form_matrix(F, u);
    EXPECT_EQ(m(3, 4), F.frob(u.t1));
    EXPECT_EQ(m(3, 5), F.frob2(u.t1));
    EXPECT_EQ(m(3, 6), F.neg(F.mul(F.frob2(u.t1), F.frob(u.t1))));
  }
}
