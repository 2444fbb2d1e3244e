#include "tri3d4/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace tri3d4 {

namespace {

// Reduces a length-p vector over the relation 1 + zeta + ... + zeta^{p-1} = 0.
std::vector<BigInt> reduce(std::vector<BigInt> full) {
  const BigInt top = full.back();
  full.pop_back();
  if (top != 0)
    for (auto& c : full) c -= top;
  return full;
}

}  // namespace

BigInt to_bigint(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-r) : r;
}

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p - 1) {}

CycInt CycInt::integer(std::uint32_t p, const BigInt& n) {
  CycInt r(p);
  r.c_[0] = n;
  return r;
}

CycInt CycInt::zeta_power(std::uint32_t p, std::uint64_t e) {
  std::vector<BigInt> full(p);
  full[e % p] = 1;
  CycInt r(p);
  r.c_ = reduce(std::move(full));
  return r;
}

CycInt CycInt::from_root_counts(std::uint32_t p, const std::vector<BigInt>& counts) {
  if (counts.size() != p) throw Error(ErrorKind::InvalidArgument, "root counts need length p");
  CycInt r(p);
  r.c_ = reduce(counts);
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

BigInt CycInt::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::NotRational, "element has a nonzero zeta component");
  return c_[0];
}

CycInt CycInt::conj() const {
  std::vector<BigInt> full(p_);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) full[(p_ - i) % p_] = c_[i];
  CycInt r(p_);
  r.c_ = reduce(std::move(full));
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  const std::uint32_t p = a.p_;
  std::vector<BigInt> full(p);
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p; ++j) full[(i + j) % p] += a.c_[i] * b.c_[j];
  }
  CycInt r(p);
  r.c_ = reduce(std::move(full));
  return r;
}

CycInt CycInt::divide_exact(const BigInt& d) const {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "division of a cyclotomic integer by 0");
  CycInt r(p_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] % d != 0) throw Error(ErrorKind::NonIntegralDivision, "coefficient not divisible");
    r.c_[i] = c_[i] / d;
  }
  return r;
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(i) / p_;
    z += static_cast<double>(c_[i]) * std::polar(1.0, angle);
  }
  return z;
}

std::string CycInt::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt c = c_[i];
    if (any) {
      out << (c < 0 ? "-" : "+");
    } else if (c < 0) {
      out << "-";
    }
    if (c < 0) c = -c;
    if (i == 0 || c != 1) out << c;
    if (i > 0) {
      out << "z";
      if (i > 1) out << "^" << i;
    }
    any = true;
  }
  if (!any) out << "0";
  return out.str();
}

CycRat::CycRat(CycInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  BigInt g = den_;
  for (const auto& c : num_.coeffs()) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    num_ = num_.divide_exact(g);
    den_ /= g;
  }
}

std::string CycRat::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.str();
}

CycInt theta(const FieldTower& F, Fq t) { return CycInt::zeta_power(F.p(), F.abs_trace(t)); }

CycInt RootSum::value() const {
  std::vector<BigInt> full(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) full[i] = to_bigint(c_[i]);
  return CycInt::from_root_counts(static_cast<std::uint32_t>(c_.size()), full);
}

}  // namespace tri3d4
