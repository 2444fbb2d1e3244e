#include "tri3d4/monomial.hpp"

#include "tri3d4/fe.hpp"

namespace tri3d4 {

namespace {

bool in_j(int i, int j) { return (i == 1 && j >= 2 && j <= 7) || (i == 2 && j == 3); }

// (A14^{q^2} + A15 eta^{1-q^2}) / (1 + eta^{1-q^2})
Fq3 project_15(const FieldTower& F, Fq3 m14, Fq3 m15) {
  const auto& ec = F.eta_constants();
  return F.mul(F.add(F.frob2(m14), F.mul(m15, ec.e_1mq2)), ec.inv_1p_1mq2);
}

}  // namespace

Mat8 to_matrix(const FieldTower& F, const Pattern& A) {
  Mat8 m;
  m(1, 2) = A.a12;
  m(1, 3) = A.a13;
  m(1, 4) = a14(F, A);
  m(1, 5) = A.a15;
  m(1, 6) = embed(A.a16);
  m(1, 7) = embed(A.a17);
  m(2, 3) = embed(A.a23);
  return m;
}

Pattern pattern_add(const FieldTower& F, const Pattern& A, const Pattern& B) {
  return {F.add(A.a12, B.a12), F.add(A.a13, B.a13), F.add(A.a15, B.a15),
          F.add(A.a16, B.a16), F.add(A.a17, B.a17), F.add(A.a23, B.a23)};
}

Pattern pattern_sub(const FieldTower& F, const Pattern& A, const Pattern& B) {
  return {F.sub(A.a12, B.a12), F.sub(A.a13, B.a13), F.sub(A.a15, B.a15),
          F.sub(A.a16, B.a16), F.sub(A.a17, B.a17), F.sub(A.a23, B.a23)};
}

bool is_zero(const Pattern& A) { return A == Pattern{}; }

Mat8 pi_J(const Mat8& m) {
  Mat8 r;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (in_j(i, j)) r(i, j) = m(i, j);
  return r;
}

Pattern pi(const FieldTower& F, const Mat8& m) {
  Pattern A;
  A.a12 = m(1, 2);
  A.a13 = m(1, 3);
  A.a15 = project_15(F, m(1, 4), m(1, 5));
  A.a16 = F.pi_q(m(1, 6));
  A.a17 = F.pi_q(m(1, 7));
  A.a23 = F.pi_q(m(2, 3));
  return A;
}

bool in_v(const FieldTower& F, const Mat8& m) {
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      if (!in_j(i, j) && m(i, j).v != 0) return false;
  return m(1, 4) == F.frob(m(1, 5)) && F.in_fq(m(1, 6)) && F.in_fq(m(1, 7)) && F.in_fq(m(2, 3));
}

bool in_v_perp(const FieldTower& F, const Mat8& m) {
  if (m(1, 2).v != 0 || m(1, 3).v != 0) return false;
  const FE lhs(F, m(1, 4));
  const FE rhs = -(FE(F, m(1, 5)).q() * FE(F, F.eta_constants().e_qm1));
  if (!(lhs == rhs)) return false;
  return F.pi_q(m(1, 6)).v == 0 && F.pi_q(m(1, 7)).v == 0 && F.pi_q(m(2, 3)).v == 0;
}

Fq3 kappa(const FieldTower& F, const Mat8& a, const Mat8& b) {
  Fq3 s{0};
  for (int i = 0; i < 64; ++i) s = F.add(s, F.mul(a.a[i], b.a[i]));
  return s;
}

Fq kappa_q(const FieldTower& F, const Mat8& a, const Mat8& b) { return F.pi_q(kappa(F, a, b)); }

Fq kappa_q(const FieldTower& F, const Pattern& A, const Pattern& B) {
  Fq3 s = F.mul(A.a12, B.a12);
  s = F.add(s, F.mul(A.a13, B.a13));
  s = F.add(s, F.mul(a14(F, A), a14(F, B)));
  s = F.add(s, F.mul(A.a15, B.a15));
  const Fq r = F.add(F.add(F.mul(A.a16, B.a16), F.mul(A.a17, B.a17)), F.mul(A.a23, B.a23));
  return F.add(F.pi_q(s), r);
}

Pattern cocycle_f(const FieldTower& F, const Mat8& g) { return pi(F, g); }

Pattern f_closed(const FieldTower& F, const UElem& u) {
  const auto& ec = F.eta_constants();
  const FE t1(F, u.t1), t3(F, u.t3), t4(F, u.t4);
  const FE e(F, ec.e_1mq2), d(F, ec.inv_1p_1mq2);
  const FE x = (t1.q2() * t3 + t1 * t3.q2() * e) * d;
  Pattern A;
  A.a12 = u.t1;
  A.a13 = F.neg(u.t3);
  A.a15 = (x + t4.q2()).v();
  A.a16 = F.add(F.pi_q((t1 * t4.q()).v()), u.t5);
  A.a17 = F.add(F.pi_q((-(t1 * t3.q2() * t3.q()) + t3 * t4.q()).v()), u.t6);
  A.a23 = u.t2;
  return A;
}

UElem f_inverse(const FieldTower& F, const Pattern& A) {
  const auto& ec = F.eta_constants();
  const FE a12(F, A.a12), a13(F, A.a13), a15(F, A.a15);
  const FE e1(F, ec.e_qm1), d1(F, ec.inv_1p_qm1);
  const FE e2(F, ec.e_q2mq), d2(F, ec.inv_1p_q2mq);
  const FE t4 = a15.q() + (a12 * a13.q() + a12.q() * a13 * e1) * d1;
  const FE inner = a15.q2() + (a12.q() * a13.q2() + a12.q2() * a13.q() * e2) * d2;
  UElem u;
  u.t1 = A.a12;
  u.t2 = A.a23;
  u.t3 = F.neg(A.a13);
  u.t4 = t4.v();
  u.t5 = F.sub(A.a16, F.pi_q((a12 * inner).v()));
  u.t6 = F.add(A.a17, F.pi_q((a12 * a13.q2() * a13.q() + a13 * inner).v()));
  return u;
}

Pattern act_circ(const FieldTower& F, const Pattern& A, const Mat8& g) {
  return pi(F, mat_mul(F, to_matrix(F, A), g));
}

Pattern act_dot(const FieldTower& F, const Pattern& A, const Mat8& g) {
  return pi(F, mat_mul(F, to_matrix(F, A), transpose(mat_inv(F, g))));
}

Pattern act_dot_inv(const FieldTower& F, const Pattern& A, const Mat8& h) {
  // Only row 1 and the (2,3) entry of A h^T feed the projection.
  const Fq3 row[8] = {Fq3{0}, A.a12, A.a13, a14(F, A), A.a15, embed(A.a16), embed(A.a17), Fq3{0}};
  Fq3 out[8] = {};
  for (int j = 2; j <= 7; ++j) {
    Fq3 s{0};
    for (int k = 2; k <= 7; ++k)
      if (row[k - 1].v != 0) s = F.add(s, F.mul(row[k - 1], h(j, k)));
    out[j - 1] = s;
  }
  Pattern B;
  B.a12 = out[1];
  B.a13 = out[2];
  B.a15 = project_15(F, out[3], out[4]);
  B.a16 = F.pi_q(out[5]);
  B.a17 = F.pi_q(out[6]);
  B.a23 = F.pi_q(F.mul(embed(A.a23), h(3, 3)));
  return B;
}

Pattern act_dot(const FieldTower& F, const Pattern& A, const UElem& u) {
  return act_dot_inv(F, A, unitri_inv(F, closed_form_matrix(F, u)));
}

Pattern act_left(const FieldTower& F, const UElem& u, const Pattern& A) {
  Pattern B = A;
  B.a23 = F.sub(A.a23, F.pi_q(F.mul(u.t1, A.a13)));
  return B;
}

Pattern act_left_matrix(const FieldTower& F, const UElem& u, const Pattern& A) {
  const Mat8 inv_t = transpose(mat_inv(F, closed_form_matrix(F, u)));
  return pi(F, mat_mul(F, inv_t, to_matrix(F, A)));
}

std::uint32_t chi_exponent(const FieldTower& F, const Pattern& A, const UElem& u) {
  return F.abs_trace(kappa_q(F, A, f_closed(F, u)));
}

CycInt chi(const FieldTower& F, const Pattern& A, const UElem& u) {
  return CycInt::zeta_power(F.p(), chi_exponent(F, A, u));
}

std::uint64_t pattern_count(const FieldTower& F) { return u_order(F); }

Pattern pattern_from_index(const FieldTower& F, std::uint64_t idx) {
  const std::uint64_t q = F.q(), q3 = F.q3();
  Pattern A;
  A.a12 = Fq3{static_cast<std::uint32_t>(idx % q3)};
  idx /= q3;
  A.a13 = Fq3{static_cast<std::uint32_t>(idx % q3)};
  idx /= q3;
  A.a15 = Fq3{static_cast<std::uint32_t>(idx % q3)};
  idx /= q3;
  A.a16 = Fq{static_cast<std::uint32_t>(idx % q)};
  idx /= q;
  A.a17 = Fq{static_cast<std::uint32_t>(idx % q)};
  idx /= q;
  A.a23 = Fq{static_cast<std::uint32_t>(idx % q)};
  return A;
}

std::uint64_t pattern_index(const FieldTower& F, const Pattern& A) {
  const std::uint64_t q = F.q(), q3 = F.q3();
  std::uint64_t idx = A.a23.v;
  idx = idx * q + A.a17.v;
  idx = idx * q + A.a16.v;
  idx = idx * q3 + A.a15.v;
  idx = idx * q3 + A.a13.v;
  idx = idx * q3 + A.a12.v;
  return idx;
}

Pattern random_pattern(const FieldTower& F, Rng& rng) {
  Pattern A;
  A.a12 = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  A.a13 = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  A.a15 = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  A.a16 = Fq{static_cast<std::uint32_t>(rng.uniform(F.q()))};
  A.a17 = Fq{static_cast<std::uint32_t>(rng.uniform(F.q()))};
  A.a23 = Fq{static_cast<std::uint32_t>(rng.uniform(F.q()))};
  return A;
}

std::vector<Pattern> v_basis(const FieldTower& F) {
  // 1, omega, omega^2 in each cubic slot and 1 in each F_q slot
  std::vector<Pattern> out;
  const Fq3 cubic[3] = {Fq3{1}, Fq3{F.q()}, Fq3{F.q() * F.q()}};
  for (Fq3 b : cubic) out.push_back(Pattern{b, {}, {}, {}, {}, {}});
  for (Fq3 b : cubic) out.push_back(Pattern{{}, b, {}, {}, {}, {}});
  for (Fq3 b : cubic) out.push_back(Pattern{{}, {}, b, {}, {}, {}});
  out.push_back(Pattern{{}, {}, {}, Fq{1}, {}, {}});
  out.push_back(Pattern{{}, {}, {}, {}, Fq{1}, {}});
  out.push_back(Pattern{{}, {}, {}, {}, {}, Fq{1}});
  return out;
}

std::vector<std::vector<Fq>> gram_matrix(const FieldTower& F) {
  const auto basis = v_basis(F);
  std::vector<std::vector<Fq>> g(basis.size(), std::vector<Fq>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g[i][j] = kappa_q(F, basis[i], basis[j]);
  return g;
}

std::size_t fq_rank(const FieldTower& F, std::vector<std::vector<Fq>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].v == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const Fq s = F.inv(m[rank][c]);
    for (auto& x : m[rank]) x = F.mul(x, s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].v == 0) continue;
      const Fq f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace tri3d4
