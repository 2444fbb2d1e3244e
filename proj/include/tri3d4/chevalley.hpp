#pragma once

#include <compare>

#include "tri3d4/matrix.hpp"

namespace tri3d4 {

// x(t1, ..., t6) = x2(t2) x1(t1) x3(t3) x4(t4) x5(t5) x6(t6)
struct UElem {
  Fq3 t1{};
  Fq t2{};
  Fq3 t3{};
  Fq3 t4{};
  Fq t5{};
  Fq t6{};
  friend constexpr auto operator<=>(const UElem&, const UElem&) = default;
};

// Triality permutation (1 3 4)(5 6 7)(8 10 9) on root indices 1..12.
int rho(int r);

Mat8 chevalley_e(const FieldTower& F, int r);
// I + t e_r
Mat8 untwisted_root_element(const FieldTower& F, int r, Fq3 t);
// x_i(t) for i in 1..6; t must lie in F_q for i in {2, 5, 6}.
Mat8 root_element(const FieldTower& F, int i, Fq3 t);
bool root_in_fq(int i);

Mat8 generator_product(const FieldTower& F, const UElem& u);
Mat8 closed_form_matrix(const FieldTower& F, const UElem& u);

}  // namespace tri3d4
