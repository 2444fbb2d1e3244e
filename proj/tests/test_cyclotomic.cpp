#include <gtest/gtest.h>

#include <cmath>

#include "tri3d4/cyclotomic.hpp"
#include "tri3d4/random.hpp"

using namespace tri3d4;

namespace {

// Independent model: length-p vectors compared up to adding a constant vector.
std::vector<BigInt> naive_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::uint32_t p) {
  std::vector<BigInt> r(p);
  for (std::uint32_t i = 0; i < p; ++i)
    for (std::uint32_t j = 0; j < p; ++j) r[(i + j) % p] += a[i] * b[j];
  return r;
}

bool same_element(const std::vector<BigInt>& a, const CycInt& x) {
  const std::uint32_t p = x.p();
  std::vector<BigInt> full(p);
  for (std::uint32_t i = 0; i + 1 < p; ++i) full[i] = x.coeffs()[i];
  const BigInt shift = a[0] - full[0];
  for (std::uint32_t i = 0; i < p; ++i)
    if (a[i] - full[i] != shift) return false;
  return true;
}

}  // namespace

TEST(Cyclotomic, RelationVanishes) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CycInt s(p);
    for (std::uint32_t e = 0; e < p; ++e) s += CycInt::zeta_power(p, e);
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Cyclotomic, MultiplicationMatchesConvolution) {
  Rng rng(5);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int n = 0; n < 300; ++n) {
      std::vector<BigInt> a(p), b(p);
      for (auto& c : a) c = static_cast<long>(rng.uniform(41)) - 20;
      for (auto& c : b) c = static_cast<long>(rng.uniform(41)) - 20;
      const CycInt x = CycInt::from_root_counts(p, a), y = CycInt::from_root_counts(p, b);
      EXPECT_TRUE(same_element(naive_mul(a, b, p), x * y));
      std::vector<BigInt> sum(p);
      for (std::uint32_t i = 0; i < p; ++i) sum[i] = a[i] + b[i];
      EXPECT_TRUE(same_element(sum, x + y));
      EXPECT_EQ(CycInt::from_root_counts(p, a), x);
      EXPECT_EQ(x.conj().conj(), x);
      EXPECT_NEAR(std::abs(x.conj().to_complex() - std::conj(x.to_complex())), 0.0, 1e-9);
    }
  }
}

TEST(Cyclotomic, ThetaIsAnAdditiveCharacter) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    FieldTower F(p, k);
    EXPECT_EQ(theta(F, Fq{0}), CycInt::integer(p, 1));
    bool nontrivial = false;
    for (std::uint32_t s = 0; s < F.q(); ++s) {
      const CycInt ts = theta(F, Fq{s});
      nontrivial |= !(ts == CycInt::integer(p, 1));
      EXPECT_NEAR(std::abs(ts.to_complex()), 1.0, 1e-9);
      EXPECT_EQ(ts.conj(), theta(F, F.neg(Fq{s})));
      CycInt power = CycInt::integer(p, 1);
      for (std::uint32_t i = 0; i < p; ++i) power = power * ts;
      EXPECT_EQ(power, CycInt::integer(p, 1));
      for (std::uint32_t t = 0; t < F.q(); ++t)
        EXPECT_EQ(theta(F, F.add(Fq{s}, Fq{t})), ts * theta(F, Fq{t}));
    }
    EXPECT_TRUE(nontrivial);
    for (std::uint32_t c = 0; c < F.q(); ++c) {
      CycInt sum(p);
      for (std::uint32_t t = 0; t < F.q(); ++t) sum += theta(F, F.mul(Fq{c}, Fq{t}));
      EXPECT_EQ(sum, CycInt::integer(p, c == 0 ? F.q() : 0));
    }
  }
  FieldTower F(3, 1);
  const CycInt t1 = theta(F, Fq{1});
  EXPECT_EQ(t1 * t1 * t1, CycInt::integer(3, 1));
}

TEST(Cyclotomic, RationalConversion) {
  EXPECT_EQ(CycInt::integer(3, 3).to_rational(), 3);
  EXPECT_THROW(CycInt::zeta_power(3, 1).to_rational(), Error);
  const CycRat r(CycInt::integer(5, 6), BigInt(4));
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.num(), CycInt::integer(5, 3));
  const CycRat whole(CycInt::integer(3, 3), BigInt(1));
  EXPECT_TRUE(whole.is_integer());
  EXPECT_EQ(whole.num().to_rational(), 3);
  EXPECT_THROW(CycInt::integer(3, 5).divide_exact(2), Error);
  EXPECT_EQ(CycInt::integer(3, 6).divide_exact(3), CycInt::integer(3, 2));
}

TEST(Cyclotomic, RootSumAccumulates) {
  RootSum s(5);
  s.add(0, 3);
  s.add(2, -1);
  s.add(4, 7);
  CycInt expected = CycInt::integer(5, 3) - CycInt::zeta_power(5, 2) + CycInt::zeta_power(5, 4) * BigInt(7);
  EXPECT_EQ(s.value(), expected);
  EXPECT_EQ(to_bigint(-(static_cast<__int128>(1) << 100)), -(BigInt(1) << 100));
}
