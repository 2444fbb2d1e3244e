#include "tri3d4/chevalley.hpp"

#include "tri3d4/fe.hpp"

namespace tri3d4 {

namespace {

struct RootEntries {
  int i1, j1, s1;
  int i2, j2, s2;
};

constexpr RootEntries kRoots[12] = {
    {1, 2, 1, 7, 8, -1}, {2, 3, 1, 6, 7, -1}, {3, 4, 1, 5, 6, -1}, {3, 5, 1, 4, 6, -1},
    {1, 3, -1, 6, 8, 1}, {2, 4, 1, 5, 7, -1}, {2, 5, 1, 4, 7, -1}, {1, 4, 1, 5, 8, -1},
    {1, 5, 1, 4, 8, -1}, {2, 6, 1, 3, 7, -1}, {1, 6, 1, 3, 8, -1}, {1, 7, 1, 2, 8, -1},
};

}  // namespace

int rho(int r) {
  switch (r) {
    case 1: return 3;
    case 3: return 4;
    case 4: return 1;
    case 5: return 6;
    case 6: return 7;
    case 7: return 5;
    case 8: return 10;
    case 10: return 9;
    case 9: return 8;
    case 2: case 11: case 12: return r;
    default: throw Error(ErrorKind::IndexOutOfRange, "root index must be in 1..12");
  }
}

Mat8 chevalley_e(const FieldTower& F, int r) {
  if (r < 1 || r > 12) throw Error(ErrorKind::IndexOutOfRange, "root index must be in 1..12");
  const RootEntries& e = kRoots[r - 1];
  Mat8 m;
  m(e.i1, e.j1) = e.s1 > 0 ? F.one() : F.neg(F.one());
  m(e.i2, e.j2) = e.s2 > 0 ? F.one() : F.neg(F.one());
  return m;
}

Mat8 untwisted_root_element(const FieldTower& F, int r, Fq3 t) {
  return mat_add(F, identity8(), mat_scale(F, t, chevalley_e(F, r)));
}

bool root_in_fq(int i) { return i == 2 || i == 5 || i == 6; }

Mat8 root_element(const FieldTower& F, int i, Fq3 t) {
  if (i < 1 || i > 6) throw Error(ErrorKind::IndexOutOfRange, "root subgroup index must be in 1..6");
  if (root_in_fq(i)) {
    if (!F.in_fq(t)) throw Error(ErrorKind::NotInFq, "x_2, x_5, x_6 take parameters in F_q");
    const int r = i == 2 ? 2 : (i == 5 ? 11 : 12);
    return untwisted_root_element(F, r, t);
  }
  const int r = i == 1 ? 1 : (i == 3 ? 5 : 8);
  const Fq3 tq = F.frob(t), tq2 = F.frob(tq);
  Mat8 m = untwisted_root_element(F, r, t);
  m = mat_mul(F, m, untwisted_root_element(F, rho(r), tq));
  return mat_mul(F, m, untwisted_root_element(F, rho(rho(r)), tq2));
}

Mat8 generator_product(const FieldTower& F, const UElem& u) {
  Mat8 m = root_element(F, 2, embed(u.t2));
  m = mat_mul(F, m, root_element(F, 1, u.t1));
  m = mat_mul(F, m, root_element(F, 3, u.t3));
  m = mat_mul(F, m, root_element(F, 4, u.t4));
  m = mat_mul(F, m, root_element(F, 5, embed(u.t5)));
  return mat_mul(F, m, root_element(F, 6, embed(u.t6)));
}

Mat8 closed_form_matrix(const FieldTower& F, const UElem& u) {
  const FE a(F, u.t1), b(F, u.t2), c(F, u.t3), d(F, u.t4), e(F, u.t5), f(F, u.t6);
  const FE a1 = a.q(), a2 = a1.q(), c1 = c.q(), c2 = c1.q(), d1 = d.q(), d2 = d1.q();
  Mat8 m = identity8();
  auto set = [&m](int i, int j, FE x) { m(i, j) = x.v(); };

  set(1, 2, a);
  set(1, 3, -c);
  set(1, 4, a * c1 + d);
  set(1, 5, a * c2 + d2);
  set(1, 6, a * d1 + e);
  set(1, 7, -(a * c2 * c1) + c * d1 + f);
  set(1, 8, -(a * c1 * d2) - a * c2 * d - a * f + c * e - d2 * d);

  set(2, 3, b);
  set(2, 4, a1 * b + c1);
  set(2, 5, a2 * b + c2);
  set(2, 6, -(a2 * a1 * b) + d1);
  set(2, 7, -(a1 * b * c2) - a2 * b * c1 - b * d1 - c2 * c1);
  set(2, 8, -(a2 * a1 * b * c) - a1 * b * d2 - a2 * b * d - b * e - c1 * d2 - c2 * d - f);

  set(3, 4, a1);
  set(3, 5, a2);
  set(3, 6, -(a2 * a1));
  set(3, 7, -(a1 * c2) - a2 * c1 - d1);
  set(3, 8, -(a2 * a1 * c) - a1 * d2 - a2 * d - e);

  set(4, 6, -a2);
  set(4, 7, -c2);
  set(4, 8, -(a2 * c) - d2);

  set(5, 6, -a1);
  set(5, 7, -c1);
  set(5, 8, -(a1 * c) - d);

  set(6, 7, -b);
  set(6, 8, a * b + c);

  set(7, 8, -a);
  return m;
}

}  // namespace tri3d4
