#include <gtest/gtest.h>

#include <vector>

#include "tri3d4/monomial.hpp"

using namespace tri3d4;

namespace {

Mat8 random_matrix(const FieldTower& F, Rng& rng) {
  Mat8 m;
  for (auto& x : m.a) x = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  return m;
}

// Untwisted root element I + t e_{i,j} - t e_{9-j,9-i} of the orthogonal group.
Mat8 d4_root(const FieldTower& F, int i, int j, Fq3 t) {
  Mat8 m = identity8();
  m(i, j) = t;
  m(9 - j, 9 - i) = F.neg(t);
  return m;
}

Fq3 rnd3(const FieldTower& F, Rng& rng) { return Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))}; }
Fq3 rnd1(const FieldTower& F, Rng& rng) { return Fq3{static_cast<std::uint32_t>(rng.uniform(F.q()))}; }

}  // namespace

TEST(Monomial, ProjectionBasics) {
  FieldTower F(3, 1);
  EXPECT_EQ(pi(F, identity8()), Pattern{});
  Rng rng(11);
  for (int n = 0; n < 10000; ++n) {
    const Pattern A = random_pattern(F, rng);
    const Mat8 a = to_matrix(F, A);
    ASSERT_TRUE(in_v(F, a));
    ASSERT_EQ(pi(F, a), A);
    const Mat8 m = random_matrix(F, rng);
    const Pattern P = pi(F, m);
    ASSERT_EQ(pi(F, to_matrix(F, P)), P);
    ASSERT_EQ(pi(F, pi_J(m)), P);
    ASSERT_TRUE(in_v_perp(F, mat_sub(F, m, to_matrix(F, P))));
  }
}

TEST(Monomial, KappaBasics) {
  FieldTower F(3, 1);
  Pattern e12;
  e12.a12 = F.one();
  EXPECT_EQ(kappa_q(F, e12, e12), Fq{1});
  Rng rng(12);
  for (int n = 0; n < 2000; ++n) {
    const Pattern A = random_pattern(F, rng), B = random_pattern(F, rng);
    ASSERT_EQ(kappa_q(F, A, Pattern{}), Fq{0});
    ASSERT_EQ(kappa_q(F, A, B), kappa_q(F, B, A));
    ASSERT_EQ(kappa_q(F, A, B), kappa_q(F, to_matrix(F, A), to_matrix(F, B)));
  }
}

TEST(Monomial, GramNondegenerate) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    EXPECT_EQ(v_basis(F).size(), 12u);
    EXPECT_EQ(fq_rank(F, gram_matrix(F)), 12u);
  }
  // Oracle: no nonzero pattern is orthogonal to the whole basis.
  FieldTower F(3, 1);
  const auto basis = v_basis(F);
  for (std::uint64_t i = 1; i < pattern_count(F); ++i) {
    const Pattern A = pattern_from_index(F, i);
    bool hit = false;
    for (const auto& B : basis) hit = hit || kappa_q(F, A, B).v != 0;
    ASSERT_TRUE(hit) << i;
  }
}

TEST(Monomial, PatternIndexRoundTrip) {
  FieldTower F(3, 1);
  for (std::uint64_t i = 0; i < pattern_count(F); i += 97) ASSERT_EQ(pattern_index(F, pattern_from_index(F, i)), i);
}

TEST(Monomial, CocycleBijectiveOnU) {
  FieldTower F(3, 1);
  EXPECT_EQ(f_closed(F, UElem{}), Pattern{});
  std::vector<bool> seen(pattern_count(F), false);
  enumerate_u(F, [&](const UElem& u) {
    const Pattern A = f_closed(F, u);
    ASSERT_EQ(A, cocycle_f(F, closed_form_matrix(F, u)));
    ASSERT_EQ(f_inverse(F, A), u);
    const auto i = pattern_index(F, A);
    ASSERT_FALSE(seen[i]);
    seen[i] = true;
  });
}

TEST(Monomial, CocycleBijectiveSampled) {
  for (auto [p, k] : {std::pair{5u, 1u}, std::pair{3u, 2u}}) {
    FieldTower F(p, k);
    Rng rng(13);
    for (int n = 0; n < 3000; ++n) {
      const UElem u = random_u(F, rng);
      const Pattern A = f_closed(F, u);
      ASSERT_EQ(A, cocycle_f(F, closed_form_matrix(F, u)));
      ASSERT_EQ(f_inverse(F, A), u);
      const Pattern B = random_pattern(F, rng);
      ASSERT_EQ(f_closed(F, f_inverse(F, B)), B);
    }
  }
}

TEST(Monomial, CocycleIdentityOnG) {
  FieldTower F(3, 1);
  Rng rng(14);
  for (int n = 0; n < 100000; ++n) {
    const Mat8 x = random_g(F, rng), g = random_g(F, rng);
    const Pattern lhs = cocycle_f(F, mat_mul(F, x, g));
    const Pattern rhs = pattern_add(F, act_circ(F, cocycle_f(F, x), g), cocycle_f(F, g));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(Monomial, ProjectedIdentitiesOnG) {
  FieldTower F(3, 1);
  Rng rng(15);
  for (int n = 0; n < 10000; ++n) {
    const Mat8 g = random_g(F, rng), x = random_g(F, rng);
    const Pattern A = random_pattern(F, rng);
    ASSERT_TRUE(in_v(F, pi_J(mat_mul(F, to_matrix(F, A), transpose(g)))));
    const Mat8 lhs = mat_mul(F, to_matrix(F, cocycle_f(F, x)), g);
    const Mat8 rhs = mat_mul(F, mat_sub(F, x, identity8()), g);
    ASSERT_TRUE(in_v_perp(F, mat_sub(F, lhs, rhs)));
  }
}

TEST(Monomial, ActionsAreActions) {
  FieldTower F(3, 1);
  Rng rng(16);
  for (int n = 0; n < 3000; ++n) {
    const Mat8 g = random_g(F, rng), h = random_g(F, rng);
    const Pattern A = random_pattern(F, rng), B = random_pattern(F, rng);
    EXPECT_EQ(act_circ(F, A, identity8()), A);
    ASSERT_EQ(act_circ(F, act_circ(F, A, g), h), act_circ(F, A, mat_mul(F, g, h)));
    ASSERT_EQ(act_dot(F, act_dot(F, A, g), h), act_dot(F, A, mat_mul(F, g, h)));
    ASSERT_EQ(act_dot_inv(F, A, unitri_inv(F, g)), act_dot(F, A, g));
    ASSERT_EQ(act_circ(F, pattern_add(F, A, B), g), pattern_add(F, act_circ(F, A, g), act_circ(F, B, g)));
    ASSERT_EQ(act_dot(F, pattern_add(F, A, B), g), pattern_add(F, act_dot(F, A, g), act_dot(F, B, g)));
    const UElem u = random_u(F, rng);
    ASSERT_EQ(act_dot(F, A, u), act_dot(F, A, closed_form_matrix(F, u)));
  }
}

TEST(Monomial, Duality) {
  FieldTower F(3, 1);
  Rng rng(17);
  for (int n = 0; n < 10000; ++n) {
    const Mat8 g = random_g(F, rng);
    const Pattern A = random_pattern(F, rng), B = random_pattern(F, rng);
    ASSERT_EQ(kappa_q(F, act_dot(F, A, g), B), kappa_q(F, A, act_circ(F, B, unitri_inv(F, g))));
  }
}

TEST(Monomial, LeftAction) {
  FieldTower F(3, 1);
  Rng rng(18);
  for (int n = 0; n < 5000; ++n) {
    const UElem u = random_u(F, rng), v = random_u(F, rng);
    const Pattern A = random_pattern(F, rng);
    ASSERT_EQ(act_left(F, u, A), act_left_matrix(F, u, A));
    ASSERT_EQ(act_left(F, u, act_left(F, v, A)), act_left(F, u_mul(F, u, v), A));
  }
}

TEST(Monomial, TruncatedColumnMoves) {
  for (auto [p, k] : {std::pair{3u, 1u}, std::pair{5u, 1u}}) {
    FieldTower F(p, k);
    Rng rng(19);
    for (int n = 0; n < 2000; ++n) {
      const Pattern A = random_pattern(F, rng);
      const Fq3 t = rnd3(F, rng), s = rnd1(F, rng);
      auto x = [&](int i, Fq3 v) { return root_element(F, i, v); };
      auto e = [&](int i, int j, Fq3 v) { return d4_root(F, i, j, v); };
      ASSERT_EQ(act_dot(F, A, x(1, t)), act_dot(F, A, mat_mul(F, e(3, 4, F.frob(t)), e(3, 5, F.frob2(t)))));
      ASSERT_EQ(act_dot(F, A, x(2, s)), act_dot(F, A, e(2, 3, s)));
      ASSERT_EQ(act_dot(F, A, x(3, t)), act_dot(F, A, mat_mul(F, e(2, 4, F.frob(t)), e(2, 5, F.frob2(t)))));
      ASSERT_EQ(act_dot(F, A, x(4, t)), act_dot(F, A, e(2, 6, F.frob(t))));
      ASSERT_EQ(act_dot(F, A, x(5, s)), A);
      ASSERT_EQ(act_dot(F, A, x(6, s)), A);
    }
  }
}

TEST(Monomial, Characters) {
  FieldTower F(3, 1);
  Rng rng(20);
  for (int n = 0; n < 1000; ++n) {
    const UElem u = random_u(F, rng);
    ASSERT_EQ(chi(F, Pattern{}, u), CycInt::integer(3, 1));
    ASSERT_EQ(chi(F, random_pattern(F, rng), UElem{}), CycInt::integer(3, 1));
  }
  Pattern e17;
  e17.a17 = Fq{1};
  RootSum sum(3);
  enumerate_u(F, [&](const UElem& u) { sum.add(chi_exponent(F, e17, u), 1); });
  EXPECT_TRUE(sum.value().is_zero());
}
