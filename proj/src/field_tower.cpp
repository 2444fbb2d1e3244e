#include "tri3d4/field_tower.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tri3d4 {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInSubfield: return "NotInSubfield";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotInFq: return "NotInFq";
    case ErrorKind::NotInU: return "NotInU";
    case ErrorKind::NotInG: return "NotInG";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NonIntegralDivision: return "NonIntegralDivision";
    case ErrorKind::NoEta: return "NoEta";
  }
  return "Unknown";
}

namespace {

// Conway polynomials, little-endian with the leading 1.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{3, 1}, {1, 1}},          {{3, 2}, {2, 2, 1}},       {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},          {{5, 2}, {2, 4, 1}},       {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},          {{7, 2}, {3, 6, 1}},       {{7, 3}, {4, 0, 6, 1}},
  };
  return table;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // over F_p, little-endian

// Remainder of a modulo the monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    a.pop_back();
  }
  return a;
}

bool is_irreducible_fp(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      g[d] = 1;
      Poly rem = poly_mod(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldTower::FieldTower(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q * q * q > (std::uint64_t{1} << 32))
      throw Error(ErrorKind::TooLarge, "p^{3k} exceeds 2^32");
  }
  q_ = static_cast<std::uint32_t>(q);
  q3_ = static_cast<std::uint32_t>(q * q * q);

  build_fq();
  choose_mod_q3();
  build_fq3_tables();
  find_eta();
}

void FieldTower::build_fq() {
  auto it = conway_table().find({p_, k_});
  if (it != conway_table().end()) {
    mod_q_ = it->second;
    mod_q_conway_ = true;
  } else {
    std::uint64_t count = q_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly f(k_ + 1, 0);
      std::uint64_t r = idx;
      for (std::uint32_t i = 0; i < k_; ++i) {
        f[i] = static_cast<std::uint32_t>(r % p_);
        r /= p_;
      }
      f[k_] = 1;
      if (is_irreducible_fp(f, p_)) {
        mod_q_ = f;
        break;
      }
    }
  }

  auto to_poly = [&](std::uint32_t idx) {
    Poly a(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      a[i] = idx % p_;
      idx /= p_;
    }
    return a;
  };
  auto from_poly = [&](const Poly& a) {
    std::uint32_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) idx = idx * p_ + a[i];
    return idx;
  };

  fq_add_.resize(std::size_t{q_} * q_);
  fq_mul_.resize(std::size_t{q_} * q_);
  fq_neg_.resize(q_);
  fq_inv_.assign(q_, 0);
  std::vector<Poly> polys(q_);
  for (std::uint32_t a = 0; a < q_; ++a) polys[a] = to_poly(a);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(k_);
    for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - polys[a][i]) % p_;
    fq_neg_[a] = from_poly(n);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      fq_add_[a * q_ + b] = from_poly(s);
      Poly m(2 * k_ - 1, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) m[i + j] = (m[i + j] + polys[a][i] * polys[b][j]) % p_;
      m = poly_mod(m, mod_q_, p_);
      m.resize(k_, 0);
      fq_mul_[a * q_ + b] = from_poly(m);
      if (fq_mul_[a * q_ + b] == 1) fq_inv_[a] = b;
    }
  }

  trace_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t x = a, acc = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      acc = fq_add_[acc * q_ + x];
      std::uint32_t y = 1;
      for (std::uint32_t j = 0; j < p_; ++j) y = fq_mul_[y * q_ + x];
      x = y;
    }
    if (acc >= p_) throw Error(ErrorKind::NotInSubfield, "absolute trace left F_p");
    trace_[a] = acc;
  }
}

void FieldTower::choose_mod_q3() {
  if (k_ == 1) {
    auto it = conway_table().find({p_, 3});
    if (it != conway_table().end()) {
      for (std::uint32_t c : it->second) mod_q3_.push_back(Fq{c});
      mod_q3_conway_ = true;
      return;
    }
  }
  // First monic cubic without a root in F_q, which for a cubic means irreducible.
  for (std::uint64_t idx = 0; idx < std::uint64_t{q_} * q_ * q_; ++idx) {
    const Fq c0{static_cast<std::uint32_t>(idx % q_)};
    const Fq c1{static_cast<std::uint32_t>((idx / q_) % q_)};
    const Fq c2{static_cast<std::uint32_t>(idx / (std::uint64_t{q_} * q_))};
    bool has_root = false;
    for (std::uint32_t x = 0; x < q_ && !has_root; ++x) {
      const Fq fx{x};
      Fq v = add(mul(add(mul(add(fx, c2), fx), c1), fx), c0);
      has_root = v.v == 0;
    }
    if (!has_root) {
      mod_q3_ = {c0, c1, c2, Fq{1}};
      return;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible cubic found");
}

Fq FieldTower::inv(Fq a) const {
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  return Fq{fq_inv_[a.v]};
}

Fq3 FieldTower::add_slow(Fq3 a, Fq3 b) const {
  const std::uint32_t a0 = a.v % q_, a1 = (a.v / q_) % q_, a2 = a.v / q_ / q_;
  const std::uint32_t b0 = b.v % q_, b1 = (b.v / q_) % q_, b2 = b.v / q_ / q_;
  return pack(fq_add_[a0 * q_ + b0], fq_add_[a1 * q_ + b1], fq_add_[a2 * q_ + b2]);
}

Fq3 FieldTower::neg_slow(Fq3 a) const {
  return pack(fq_neg_[a.v % q_], fq_neg_[(a.v / q_) % q_], fq_neg_[a.v / q_ / q_]);
}

Fq3 FieldTower::mul_slow(Fq3 a, Fq3 b) const {
  const Fq x[3] = {Fq{a.v % q_}, Fq{(a.v / q_) % q_}, Fq{a.v / q_ / q_}};
  const Fq y[3] = {Fq{b.v % q_}, Fq{(b.v / q_) % q_}, Fq{b.v / q_ / q_}};
  Fq r[5] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i + j] = add(r[i + j], mul(x[i], y[j]));
  // x^3 = -(m2 x^2 + m1 x + m0)
  for (int d = 4; d >= 3; --d) {
    const Fq c = r[d];
    if (c.v == 0) continue;
    for (int i = 0; i < 3; ++i) r[d - 3 + i] = sub(r[d - 3 + i], mul(c, mod_q3_[i]));
    r[d] = Fq{0};
  }
  return pack(r[0].v, r[1].v, r[2].v);
}

Fq3 FieldTower::frob_slow(Fq3 a) const {
  const Fq3 c0{a.v % q_}, c1{(a.v / q_) % q_}, c2{a.v / q_ / q_};
  return add_slow(c0, add_slow(mul_slow(c1, omega_q_), mul_slow(c2, omega_2q_)));
}

Fq3 FieldTower::pow(Fq3 a, std::uint64_t e) const {
  Fq3 result = one();
  Fq3 base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Fq3 FieldTower::inv(Fq3 a) const {
  if (a.v == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_{q^3}");
  if (!log_.empty()) return Fq3{exp_[(q3_ - 1) - log_[a.v]]};
  return pow(a, std::uint64_t{q3_} - 2);
}

void FieldTower::build_fq3_tables() {
  // Frobenius as an F_q-linear map: only the images of omega and omega^2 are needed.
  Fq3 omega{q_};
  Fq3 acc = one();
  {
    Fq3 base = omega;
    std::uint64_t e = q_;
    while (e > 0) {
      if (e & 1) acc = mul_slow(acc, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
  }
  omega_q_ = acc;
  omega_2q_ = mul_slow(acc, acc);

  if (q3_ > (1u << 16)) return;

  const std::uint64_t order = q3_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Fq3 a, std::uint64_t e) {
    Fq3 r = one();
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Fq3 gen{0};
  for (std::uint32_t cand = 2; cand < q3_; ++cand) {
    bool primitive = true;
    for (std::uint64_t r : factors)
      if (slow_pow(Fq3{cand}, order / r).v == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = Fq3{cand};
      break;
    }
  }

  exp_.resize(2 * order);
  log_.assign(q3_, 0);
  Fq3 x = one();
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = exp_[i + order] = x.v;
    log_[x.v] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, gen);
  }

  neg_.resize(q3_);
  frob_.resize(q3_);
  for (std::uint32_t a = 0; a < q3_; ++a) {
    neg_[a] = neg_slow(Fq3{a}).v;
    frob_[a] = frob_slow(Fq3{a}).v;
  }
  if (q3_ <= 2500) {
    add_.resize(std::size_t{q3_} * q3_);
    for (std::uint32_t a = 0; a < q3_; ++a)
      for (std::uint32_t b = 0; b < q3_; ++b) add_[a * q3_ + b] = add_slow(Fq3{a}, Fq3{b}).v;
  }
}

Fq FieldTower::phi0(Fq3 a) const {
  const Fq3 fa = frob(a);
  const Fq3 s = add(add(a, fa), frob(fa));
  if (!in_fq(s)) throw Error(ErrorKind::NotInSubfield, "phi0 value outside F_q");
  return Fq{s.v};
}

void FieldTower::find_eta() {
  bool found = false;
  for (std::uint32_t idx = 0; idx < q3_; ++idx) {
    const Fq3 x{idx};
    if (in_fq(x)) continue;
    if (phi0(x).v == 1) {
      eta_ = x;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::NoEta, "no eta with phi0(eta) = 1 outside F_q");

  const Fq3 e_q = frob(eta_), e_q2 = frob(e_q);
  ec_.e_1mq2 = div(eta_, e_q2);
  ec_.e_qm1 = div(e_q, eta_);
  ec_.e_q2mq = div(e_q2, e_q);
  const Fq3 d1 = add(one(), ec_.e_1mq2);
  const Fq3 d2 = add(one(), ec_.e_qm1);
  const Fq3 d3 = add(one(), ec_.e_q2mq);
  if (d1.v == 0 || d2.v == 0 || d3.v == 0)
    throw Error(ErrorKind::NoEta, "1 + eta^{1-q^2} vanishes");
  ec_.inv_1p_1mq2 = inv(d1);
  ec_.inv_1p_qm1 = inv(d2);
  ec_.inv_1p_q2mq = inv(d3);
}

std::vector<std::uint32_t> FieldTower::digits(Fq a) const {
  std::vector<std::uint32_t> d(k_);
  std::uint32_t v = a.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

std::vector<std::uint32_t> FieldTower::digits(Fq3 a) const {
  std::vector<std::uint32_t> d;
  d.reserve(3 * k_);
  std::uint32_t v = a.v;
  for (int c = 0; c < 3; ++c) {
    const auto part = digits(Fq{v % q_});
    d.insert(d.end(), part.begin(), part.end());
    v /= q_;
  }
  return d;
}

Fq FieldTower::fq_from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != k_) throw Error(ErrorKind::InvalidArgument, "F_q element needs k coefficients");
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
    v = v * p_ + d[i];
  }
  return Fq{v};
}

Fq3 FieldTower::fq3_from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != 3 * k_) throw Error(ErrorKind::InvalidArgument, "F_{q^3} element needs 3k coefficients");
  std::uint32_t c[3];
  for (int i = 0; i < 3; ++i)
    c[i] = fq_from_digits(std::vector<std::uint32_t>(d.begin() + i * k_, d.begin() + (i + 1) * k_)).v;
  return pack(c[0], c[1], c[2]);
}

Fq3 FieldTower::coset_rep(Fq3 a_star, Fq3 x) const {
  if (a_star.v == 0) throw Error(ErrorKind::ZeroScalar, "transversal of the zero scalar");
  Fq3 best = x;
  for (std::uint32_t s = 1; s < q_; ++s) {
    const Fq3 y = add(x, mul(a_star, Fq3{s}));
    if (y < best) best = y;
  }
  return best;
}

std::vector<Fq3> FieldTower::transversal(Fq3 a_star) const {
  if (a_star.v == 0) throw Error(ErrorKind::ZeroScalar, "transversal of the zero scalar");
  std::vector<Fq3> reps;
  reps.reserve(std::size_t{q_} * q_);
  for (std::uint32_t x = 0; x < q3_; ++x)
    if (coset_rep(a_star, Fq3{x}).v == x) reps.push_back(Fq3{x});
  return reps;
}

}  // namespace tri3d4
