#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tri3d4/field_tower.hpp"

namespace tri3d4 {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[zeta_p] over the basis 1, zeta, ..., zeta^{p-2}.
class CycInt {
 public:
  explicit CycInt(std::uint32_t p);

  static CycInt integer(std::uint32_t p, const BigInt& n);
  static CycInt zeta_power(std::uint32_t p, std::uint64_t e);
  // sum_i counts[i] zeta^i for a length-p vector
  static CycInt from_root_counts(std::uint32_t p, const std::vector<BigInt>& counts);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  BigInt to_rational() const;

  CycInt conj() const;
  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const BigInt& s);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const BigInt& s) { return a *= s; }
  friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  // Exact division by an integer; throws NonIntegralDivision when some coefficient is not divisible.
  CycInt divide_exact(const BigInt& d) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::vector<BigInt> c_;
};

class CycRat {
 public:
  CycRat(CycInt num, BigInt den);
  explicit CycRat(CycInt num) : CycRat(std::move(num), BigInt(1)) {}

  const CycInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  bool is_rational() const { return num_.is_rational(); }
  friend bool operator==(const CycRat& a, const CycRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  std::string to_string() const;

 private:
  CycInt num_;
  BigInt den_;
};

// theta(t) = zeta_p^{Tr(t)}
CycInt theta(const FieldTower& F, Fq t);
inline std::uint32_t theta_exponent(const FieldTower& F, Fq t) { return F.abs_trace(t); }

// Sums of integer multiples of p-th roots of unity with a 128-bit counter per exponent.
class RootSum {
 public:
  explicit RootSum(std::uint32_t p) : c_(p, 0) {}
  void add(std::uint32_t e, __int128 m = 1) { c_[e] += m; }
  void merge(const RootSum& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  CycInt value() const;

 private:
  std::vector<__int128> c_;
};

BigInt to_bigint(__int128 v);

}  // namespace tri3d4
