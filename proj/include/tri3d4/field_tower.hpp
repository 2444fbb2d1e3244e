#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tri3d4/errors.hpp"

namespace tri3d4 {

// An element of F_q is named by its index sum_j c_j p^j, where c_j are the coefficients over the
// power basis of mod_q. Index order is the canonical enumeration order.
struct Fq {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

// An element of F_{q^3} is named by c0 + c1 q + c2 q^2 with c_i the F_q indices of its coefficients over
// the power basis of mod_q3. F_q embeds as (x, 0, 0), so an embedded F_q element keeps its index.
struct Fq3 {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Fq3, Fq3) = default;
};

constexpr Fq3 embed(Fq x) noexcept { return Fq3{x.v}; }

class FieldTower {
 public:
  FieldTower(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t q3() const noexcept { return q3_; }
  bool table_backed() const noexcept { return !log_.empty(); }

  // Little-endian coefficient lists, leading coefficient included.
  const std::vector<std::uint32_t>& mod_q() const noexcept { return mod_q_; }
  const std::vector<Fq>& mod_q3() const noexcept { return mod_q3_; }
  bool mod_q_is_conway() const noexcept { return mod_q_conway_; }
  bool mod_q3_is_conway() const noexcept { return mod_q3_conway_; }

  Fq3 eta() const noexcept { return eta_; }
  Fq3 zero() const noexcept { return Fq3{0}; }
  Fq3 one() const noexcept { return Fq3{1}; }

  // F_{q^3} arithmetic
  Fq3 add(Fq3 a, Fq3 b) const {
    if (!add_.empty()) return Fq3{add_[a.v * q3_ + b.v]};
    return add_slow(a, b);
  }
  Fq3 neg(Fq3 a) const {
    if (!neg_.empty()) return Fq3{neg_[a.v]};
    return neg_slow(a);
  }
  Fq3 sub(Fq3 a, Fq3 b) const { return add(a, neg(b)); }
  Fq3 mul(Fq3 a, Fq3 b) const {
    if (a.v == 0 || b.v == 0) return Fq3{0};
    if (!log_.empty()) return Fq3{exp_[log_[a.v] + log_[b.v]]};
    return mul_slow(a, b);
  }
  Fq3 inv(Fq3 a) const;
  Fq3 div(Fq3 a, Fq3 b) const { return mul(a, inv(b)); }
  Fq3 pow(Fq3 a, std::uint64_t e) const;
  Fq3 frob(Fq3 a) const {
    if (!frob_.empty()) return Fq3{frob_[a.v]};
    return frob_slow(a);
  }
  Fq3 frob2(Fq3 a) const { return frob(frob(a)); }

  // F_q arithmetic, done on indices below q
  Fq add(Fq a, Fq b) const { return Fq{fq_add_[a.v * q_ + b.v]}; }
  Fq neg(Fq a) const { return Fq{fq_neg_[a.v]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const { return Fq{fq_mul_[a.v * q_ + b.v]}; }
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

  bool in_fq(Fq3 a) const noexcept { return a.v < q_; }
  Fq to_fq(Fq3 a) const {
    if (!in_fq(a)) throw Error(ErrorKind::NotInFq, "element is not in F_q");
    return Fq{a.v};
  }

  // t + t^q + t^{q^2}
  Fq phi0(Fq3 a) const;
  // phi0(eta * a)
  Fq pi_q(Fq3 a) const { return phi0(mul(eta_, a)); }
  // Tr_{F_q/F_p}, as a residue mod p
  std::uint32_t abs_trace(Fq a) const noexcept { return trace_[a.v]; }

  // Coefficients in F_p, 3k of them, least significant first.
  std::vector<std::uint32_t> digits(Fq3 a) const;
  std::vector<std::uint32_t> digits(Fq a) const;
  Fq3 fq3_from_digits(const std::vector<std::uint32_t>& d) const;
  Fq fq_from_digits(const std::vector<std::uint32_t>& d) const;

  // Coset representatives of a_star * F_q inside F_{q^3}: the least index in each coset, sorted.
  std::vector<Fq3> transversal(Fq3 a_star) const;
  Fq3 coset_rep(Fq3 a_star, Fq3 x) const;

  // Constants derived from eta, used by the projection and the cocycle inverse.
  struct EtaConstants {
    Fq3 e_1mq2;       // eta^{1-q^2}
    Fq3 inv_1p_1mq2;  // 1 / (1 + eta^{1-q^2})
    Fq3 e_qm1;        // eta^{q-1}
    Fq3 inv_1p_qm1;
    Fq3 e_q2mq;       // eta^{q^2-q}
    Fq3 inv_1p_q2mq;
  };
  const EtaConstants& eta_constants() const noexcept { return ec_; }

 private:
  void build_fq();
  void choose_mod_q3();
  void build_fq3_tables();
  void find_eta();

  Fq3 add_slow(Fq3 a, Fq3 b) const;
  Fq3 neg_slow(Fq3 a) const;
  Fq3 mul_slow(Fq3 a, Fq3 b) const;
  Fq3 frob_slow(Fq3 a) const;
  Fq3 pack(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2) const noexcept {
    return Fq3{c0 + q_ * (c1 + q_ * c2)};
  }

  std::uint32_t p_, k_, q_, q3_;
  std::vector<std::uint32_t> mod_q_;
  std::vector<Fq> mod_q3_;
  bool mod_q_conway_ = false;
  bool mod_q3_conway_ = false;

  std::vector<std::uint32_t> fq_add_, fq_mul_, fq_neg_, fq_inv_, trace_;

  std::vector<std::uint32_t> add_, neg_, frob_, log_, exp_;
  // x^q and x^{2q} over the power basis, for the table-free Frobenius
  Fq3 omega_q_{}, omega_2q_{};

  Fq3 eta_{};
  EtaConstants ec_{};
};

}  // namespace tri3d4
