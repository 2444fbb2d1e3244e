#pragma once

#include "tri3d4/field_tower.hpp"

namespace tri3d4 {

// Thin value wrapper so closed-form polynomial expressions read like the formulas they implement.
class FE {
 public:
  FE(const FieldTower& F, Fq3 v) : F_(&F), v_(v) {}
  FE(const FieldTower& F, Fq v) : F_(&F), v_(embed(v)) {}

  Fq3 v() const noexcept { return v_; }
  Fq fq() const { return F_->to_fq(v_); }
  bool is_zero() const noexcept { return v_.v == 0; }

  FE q() const { return FE(*F_, F_->frob(v_)); }
  FE q2() const { return FE(*F_, F_->frob2(v_)); }
  FE inv() const { return FE(*F_, F_->inv(v_)); }
  FE pi_q() const { return FE(*F_, F_->pi_q(v_)); }

  friend FE operator+(FE a, FE b) { return FE(*a.F_, a.F_->add(a.v_, b.v_)); }
  friend FE operator-(FE a, FE b) { return FE(*a.F_, a.F_->sub(a.v_, b.v_)); }
  friend FE operator*(FE a, FE b) { return FE(*a.F_, a.F_->mul(a.v_, b.v_)); }
  friend FE operator/(FE a, FE b) { return FE(*a.F_, a.F_->div(a.v_, b.v_)); }
  FE operator-() const { return FE(*F_, F_->neg(v_)); }
  friend bool operator==(FE a, FE b) { return a.v_ == b.v_; }

 private:
  const FieldTower* F_;
  Fq3 v_;
};

}  // namespace tri3d4
