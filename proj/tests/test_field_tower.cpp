#include <gtest/gtest.h>

#include <set>

#include "tri3d4/field_tower.hpp"
#include "tri3d4/random.hpp"

using namespace tri3d4;

namespace {

using Poly = std::vector<std::uint64_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  Poly r(2 * n, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = r.size(); d-- > n;) {
    const std::uint64_t c = r[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) r[d - n + i] = (r[d - n + i] + (p - c) * f[i]) % p;
  }
  r.resize(n);
  return r;
}

Poly x_pow(std::uint64_t e, const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  Poly result(n, 0), base(n, 0);
  result[0] = 1;
  if (n > 1) {
    base[1] = 1;
  } else {
    base[0] = (p - f[0]) % p;
  }
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

// x has multiplicative order p^n - 1 modulo f; for monic f this forces irreducibility too.
bool is_primitive(const std::vector<std::uint32_t>& coeffs, std::uint64_t p) {
  Poly f(coeffs.begin(), coeffs.end());
  const std::size_t n = f.size() - 1;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) order *= p;
  order -= 1;
  if (!is_one(x_pow(order, f, p))) return false;
  std::uint64_t m = order;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    if (is_one(x_pow(order / d, f, p))) return false;
    while (m % d == 0) m /= d;
  }
  return m == 1 || !is_one(x_pow(order / m, f, p));
}

// Reference product in F_{p^3} for k = 1, straight from polynomial arithmetic modulo mod_q3.
Fq3 reference_mul(const FieldTower& F, Fq3 a, Fq3 b) {
  const std::uint64_t p = F.p();
  Poly f;
  for (Fq c : F.mod_q3()) f.push_back(c.v);
  Poly x = {a.v % p, (a.v / p) % p, a.v / p / p};
  Poly y = {b.v % p, (b.v / p) % p, b.v / p / p};
  Poly r = poly_mulmod(x, y, f, p);
  return Fq3{static_cast<std::uint32_t>(r[0] + p * (r[1] + p * r[2]))};
}

Fq3 naive_pow(const FieldTower& F, Fq3 a, std::uint64_t e) {
  Fq3 r = F.one();
  for (std::uint64_t i = 0; i < e; ++i) r = F.mul(r, a);
  return r;
}

}  // namespace

TEST(FieldTower, ConwayEntriesArePrimitive) {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t>> cases = {{3, 1}, {3, 2}, {3, 3}, {3, 4},
                                                                     {5, 1}, {5, 2}, {5, 3}, {7, 1},
                                                                     {7, 2}, {7, 3}};
  for (auto [p, k] : cases) {
    FieldTower F(p, k);
    ASSERT_TRUE(F.mod_q_is_conway());
    EXPECT_TRUE(is_primitive(F.mod_q(), p)) << p << "^" << k;
  }
  for (std::uint32_t p : {3u, 5u, 7u}) {
    FieldTower F(p, 1);
    ASSERT_TRUE(F.mod_q3_is_conway());
    std::vector<std::uint32_t> cubic;
    for (Fq c : F.mod_q3()) cubic.push_back(c.v);
    EXPECT_TRUE(is_primitive(cubic, p));
  }
}

TEST(FieldTower, ModulusForThree) {
  FieldTower F(3, 1);
  EXPECT_EQ(F.q(), 3u);
  EXPECT_EQ(F.q3(), 27u);
  std::vector<std::uint32_t> cubic;
  for (Fq c : F.mod_q3()) cubic.push_back(c.v);
  EXPECT_EQ(cubic, (std::vector<std::uint32_t>{1, 2, 0, 1}));
}

TEST(FieldTower, EtaIsFirstSolution) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    FieldTower F(p, k);
    const std::uint64_t q = F.q();
    Fq3 expected{0};
    bool found = false;
    for (std::uint32_t i = 0; i < F.q3() && !found; ++i) {
      const Fq3 x{i};
      if (naive_pow(F, x, q) == x) continue;
      const Fq3 s = F.add(F.add(x, naive_pow(F, x, q)), naive_pow(F, x, q * q));
      if (s == F.one()) {
        expected = x;
        found = true;
      }
    }
    ASSERT_TRUE(found);
    EXPECT_EQ(F.eta(), expected);
    EXPECT_EQ(F.phi0(F.eta()).v, 1u);
    EXPECT_FALSE(F.in_fq(F.eta()));
    const Fq3 e = F.eta();
    const Fq3 ratio = F.div(e, naive_pow(F, e, q * q));
    EXPECT_NE(F.add(F.one(), ratio).v, 0u);
  }
}

TEST(FieldTower, ArithmeticMatchesPolynomialReference) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    for (std::uint32_t a = 0; a < F.q3(); ++a)
      for (std::uint32_t b = 0; b < F.q3(); ++b) {
        const Fq3 x{a}, y{b};
        ASSERT_EQ(F.mul(x, y), reference_mul(F, x, y));
        const std::uint32_t sum = ((a % p + b % p) % p) + p * (((a / p) % p + (b / p) % p) % p) +
                                  p * p * (((a / p / p) + (b / p / p)) % p);
        ASSERT_EQ(F.add(x, y).v, sum);
      }
  }
}

TEST(FieldTower, FieldAxiomsExhaustiveThree) {
  FieldTower F(3, 1);
  for (std::uint32_t a = 0; a < F.q3(); ++a) {
    const Fq3 x{a};
    EXPECT_EQ(F.add(x, F.zero()), x);
    EXPECT_EQ(F.add(x, F.neg(x)), F.zero());
    if (a == 0) continue;
    EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
    EXPECT_EQ(naive_pow(F, x, F.q3() - 1), F.one());
    EXPECT_EQ(F.pow(x, F.q3() - 1), F.one());
    for (std::uint32_t b = 0; b < F.q3(); ++b)
      for (std::uint32_t c = 0; c < F.q3(); c += 5) {
        const Fq3 y{b}, z{c};
        ASSERT_EQ(F.mul(x, F.add(y, z)), F.add(F.mul(x, y), F.mul(x, z)));
        ASSERT_EQ(F.mul(F.mul(x, y), z), F.mul(x, F.mul(y, z)));
      }
  }
  EXPECT_THROW(F.inv(F.zero()), Error);
  EXPECT_THROW(F.inv(Fq{0}), Error);
}

TEST(FieldTower, FrobeniusProperties) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {3, 2}}) {
    FieldTower F(p, k);
    for (std::uint32_t a = 0; a < F.q3(); ++a) {
      const Fq3 x{a};
      ASSERT_EQ(F.frob(x), F.pow(x, F.q()));
      ASSERT_EQ(F.frob(F.frob2(x)), x);
      ASSERT_EQ(F.frob(x) == x, F.in_fq(x));
    }
    Rng rng(7);
    for (int n = 0; n < 2000; ++n) {
      const Fq3 x{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
      const Fq3 y{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
      EXPECT_EQ(F.frob(F.add(x, y)), F.add(F.frob(x), F.frob(y)));
      EXPECT_EQ(F.frob(F.mul(x, y)), F.mul(F.frob(x), F.frob(y)));
    }
  }
}

TEST(FieldTower, PiQProperties) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    std::uint32_t kernel = 0;
    std::set<std::uint32_t> image;
    for (std::uint32_t a = 0; a < F.q3(); ++a) {
      const Fq3 x{a};
      const Fq y = F.pi_q(x);
      image.insert(y.v);
      if (y.v == 0) ++kernel;
      EXPECT_EQ(F.pi_q(embed(y)), y);
      // x - pi_q(x) lies in the kernel, so the kernel and F_q together span everything
      EXPECT_EQ(F.pi_q(F.sub(x, embed(y))).v, 0u);
      for (std::uint32_t s = 0; s < F.q(); ++s)
        ASSERT_EQ(F.pi_q(F.mul(embed(Fq{s}), x)), F.mul(Fq{s}, y));
    }
    EXPECT_EQ(kernel, F.q() * F.q());
    EXPECT_EQ(image.size(), F.q());
    for (std::uint32_t s = 0; s < F.q(); ++s) EXPECT_EQ(F.pi_q(Fq3{s}).v, s);
  }
  FieldTower F(3, 1);
  EXPECT_EQ(F.pi_q(F.zero()).v, 0u);
  EXPECT_EQ(F.phi0(F.zero()).v, 0u);
}

TEST(FieldTower, PhiZeroLandsInFq) {
  FieldTower F(3, 2);
  for (std::uint32_t a = 0; a < F.q3(); ++a) EXPECT_LT(F.phi0(Fq3{a}).v, F.q());
}

TEST(FieldTower, TransversalPartitions) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    for (std::uint32_t s = 1; s < F.q3(); s += (p == 3 ? 1 : 17)) {
      const Fq3 a{s};
      const auto reps = F.transversal(a);
      ASSERT_EQ(reps.size(), F.q() * F.q());
      EXPECT_EQ(reps.front(), F.zero());
      std::vector<int> hits(F.q3(), 0);
      for (Fq3 r : reps) {
        Fq3 least = r;
        for (std::uint32_t t = 0; t < F.q(); ++t) {
          const Fq3 y = F.add(r, F.mul(a, Fq3{t}));
          hits[y.v]++;
          least = std::min(least, y);
        }
        EXPECT_EQ(least, r);
      }
      for (int h : hits) ASSERT_EQ(h, 1);
    }
    EXPECT_THROW(F.transversal(F.zero()), Error);
  }
}

TEST(FieldTower, ZetaMapsAreBijections) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    Rng rng(11);
    const std::uint32_t trials = p == 3 ? F.q3() - 1 : 12;
    for (std::uint32_t n = 0; n < trials; ++n) {
      const Fq3 u{p == 3 ? n + 1 : static_cast<std::uint32_t>(1 + rng.uniform(F.q3() - 1))};
      std::set<std::uint32_t> seen;
      for (std::uint32_t a = 0; a < F.q3(); ++a) {
        const Fq3 t{a};
        seen.insert(F.add(F.mul(u, F.frob2(t)), F.mul(F.frob(u), F.frob(t))).v);
      }
      EXPECT_EQ(seen.size(), F.q3());
    }
  }
  FieldTower F(3, 1);
  std::set<std::uint32_t> seen;
  for (std::uint32_t a = 0; a < F.q3(); ++a) seen.insert(F.add(Fq3{a}, F.frob(Fq3{a})).v);
  EXPECT_EQ(seen.size(), F.q3());
}

TEST(FieldTower, DigitsRoundTrip) {
  FieldTower F(3, 2);
  for (std::uint32_t a = 0; a < F.q3(); ++a) {
    const auto d = F.digits(Fq3{a});
    ASSERT_EQ(d.size(), 6u);
    EXPECT_EQ(F.fq3_from_digits(d).v, a);
  }
  EXPECT_THROW(F.fq3_from_digits({1, 2}), Error);
  EXPECT_THROW(F.fq_from_digits({3, 0}), Error);
}

TEST(FieldTower, ExtensionDegreeTwoTrace) {
  FieldTower F(3, 2);
  EXPECT_EQ(F.q(), 9u);
  int zeros = 0;
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    const Fq x{a};
    Fq y = x;
    for (std::uint32_t j = 0; j < F.p(); ++j) y = j == 0 ? x : F.mul(y, x);
    // Tr(x) = x + x^3
    const Fq expected = F.add(x, y);
    EXPECT_EQ(expected.v, F.abs_trace(x));
    zeros += F.abs_trace(x) == 0;
  }
  EXPECT_EQ(zeros, 3);
}

TEST(FieldTower, PolynomialFallbackPath) {
  FieldTower F(43, 1);
  EXPECT_FALSE(F.table_backed());
  EXPECT_FALSE(F.mod_q3_is_conway());
  EXPECT_EQ(F.phi0(F.eta()).v, 1u);
  Rng rng(3);
  for (int n = 0; n < 200; ++n) {
    const Fq3 x{static_cast<std::uint32_t>(1 + rng.uniform(F.q3() - 1))};
    const Fq3 y{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
    EXPECT_EQ(F.mul(x, F.inv(x)), F.one());
    EXPECT_EQ(F.frob(x), F.pow(x, F.q()));
    EXPECT_EQ(F.frob(F.mul(x, y)), F.mul(F.frob(x), F.frob(y)));
    EXPECT_EQ(F.sub(F.add(x, y), y), x);
  }
}

TEST(FieldTower, RejectsBadParameters) {
  EXPECT_THROW(FieldTower(2, 1), Error);
  EXPECT_THROW(FieldTower(9, 1), Error);
  EXPECT_THROW(FieldTower(3, 0), Error);
  try {
    FieldTower(3, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}
