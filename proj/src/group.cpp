#include "tri3d4/group.hpp"

#include "tri3d4/fe.hpp"

namespace tri3d4 {

UElem root_uelem(const FieldTower& F, int i, Fq3 t) {
  UElem u;
  switch (i) {
    case 1: u.t1 = t; break;
    case 2: u.t2 = F.to_fq(t); break;
    case 3: u.t3 = t; break;
    case 4: u.t4 = t; break;
    case 5: u.t5 = F.to_fq(t); break;
    case 6: u.t6 = F.to_fq(t); break;
    default: throw Error(ErrorKind::IndexOutOfRange, "root subgroup index must be in 1..6");
  }
  return u;
}

UElem extract_params(const FieldTower& F, const Mat8& m) {
  if (!is_upper_unitriangular(m)) throw Error(ErrorKind::NotInU, "not upper unitriangular");
  const FE t1(F, m(1, 2)), t3 = -FE(F, m(1, 3));
  const FE t4 = FE(F, m(1, 4)) - t1 * t3.q();
  const FE t5 = FE(F, m(1, 6)) - t1 * t4.q();
  const FE t6 = FE(F, m(1, 7)) + t1 * t3.q2() * t3.q() - t3 * t4.q();
  if (!F.in_fq(m(2, 3)) || !F.in_fq(t5.v()) || !F.in_fq(t6.v()))
    throw Error(ErrorKind::NotInU, "t2, t5, t6 must lie in F_q");
  UElem u{t1.v(), Fq{m(2, 3).v}, t3.v(), t4.v(), Fq{t5.v().v}, Fq{t6.v().v}};
  if (!(closed_form_matrix(F, u) == m)) throw Error(ErrorKind::NotInU, "entry identities fail");
  return u;
}

bool in_u(const FieldTower& F, const Mat8& m) {
  try {
    extract_params(F, m);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInU) return false;
    throw;
  }
}

UElem u_mul(const FieldTower& F, const UElem& a, const UElem& b) {
  return extract_params(F, unitri_mul(F, closed_form_matrix(F, a), closed_form_matrix(F, b)));
}

UElem u_inv(const FieldTower& F, const UElem& a) {
  return extract_params(F, unitri_inv(F, closed_form_matrix(F, a)));
}

UElem u_conj(const FieldTower& F, const UElem& u, const UElem& g) {
  const Mat8 gm = closed_form_matrix(F, g);
  const Mat8 m = unitri_mul(F, unitri_mul(F, unitri_inv(F, gm), closed_form_matrix(F, u)), gm);
  return extract_params(F, m);
}

UElem commutator(const FieldTower& F, int i, Fq3 ti, int j, Fq3 tj) {
  const Mat8 xi = root_element(F, i, ti), xj = root_element(F, j, tj);
  Mat8 m = unitri_mul(F, unitri_inv(F, xi), unitri_inv(F, xj));
  m = unitri_mul(F, unitri_mul(F, m, xi), xj);
  return extract_params(F, m);
}

UElem commutator_formula(const FieldTower& F, int i, Fq3 ti, int j, Fq3 tj) {
  // validates parameter fields
  root_uelem(F, i, ti);
  root_uelem(F, j, tj);
  if (i > j) return u_inv(F, commutator_formula(F, j, tj, i, ti));
  const FE one(F, F.one());
  const FE two = one + one;
  UElem u;
  if (i == 1 && j == 2) {
    const FE a(F, ti), b(F, tj);
    const FE n = a.q2() * a.q() * a;
    u.t3 = (-(b * a)).v();
    u.t4 = (b * a.q() * a).v();
    u.t5 = (-(b * n)).fq();
    u.t6 = (two * b * b * n).fq();
  } else if (i == 1 && j == 3) {
    const FE a(F, ti), c(F, tj);
    u.t4 = (a * c.q() + a.q() * c).v();
    u.t5 = (-(a.q() * a * c.q2()) - a.q2() * a.q() * c - a.q2() * a * c.q()).fq();
    u.t6 = (-(a * c.q2() * c.q()) - a.q() * c.q2() * c - a.q2() * c.q() * c).fq();
  } else if (i == 1 && j == 4) {
    const FE a(F, ti), d(F, tj);
    u.t5 = (a * d.q() + a.q() * d.q2() + a.q2() * d).fq();
  } else if (i == 3 && j == 4) {
    const FE c(F, ti), d(F, tj);
    u.t6 = (c * d.q() + c.q() * d.q2() + c.q2() * d).fq();
  } else if (i == 2 && j == 5) {
    u.t6 = F.mul(F.to_fq(ti), F.to_fq(tj));
  }
  return u;
}

std::vector<RootGen> generators(const FieldTower& F) {
  std::vector<RootGen> gens;
  for (int i = 1; i <= 6; ++i) {
    const std::uint32_t blocks = root_in_fq(i) ? 1 : 3;
    for (std::uint32_t c = 0, block = 1; c < blocks; ++c, block *= F.q())
      for (std::uint32_t j = 0, pj = 1; j < F.k(); ++j, pj *= F.p()) gens.push_back({i, Fq3{pj * block}});
  }
  return gens;
}

bool in_g(const FieldTower& F, const Mat8& m) {
  if (!is_upper_unitriangular(m)) return false;
  if (m(4, 5).v != 0) return false;
  if (!F.in_fq(m(2, 3)) || !F.in_fq(m(6, 7))) return false;
  return m(2, 5) == F.frob(m(2, 4)) && m(3, 5) == F.frob(m(3, 4)) && m(4, 6) == F.frob(m(5, 6)) &&
         m(4, 7) == F.frob(m(5, 7));
}

const std::vector<std::pair<int, int>>& g_positions() {
  static const std::vector<std::pair<int, int>> positions = [] {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j) {
        const bool skip = (i == 2 && j == 5) || (i == 3 && j == 5) || (i == 4 && (j == 5 || j == 6 || j == 7));
        if (!skip) out.emplace_back(i, j);
      }
    return out;
  }();
  return positions;
}

bool g_position_in_fq(int i, int j) { return (i == 2 && j == 3) || (i == 6 && j == 7); }

Mat8 g_factor_matrix(const FieldTower& F, int i, int j, Fq3 t) {
  Mat8 m = identity8();
  m(i, j) = t;
  if ((i == 2 || i == 3) && j == 4) m(i, 5) = F.frob(t);
  if (i == 5 && (j == 6 || j == 7)) m(4, j) = F.frob(t);
  return m;
}

Mat8 g_compose(const FieldTower& F, const std::vector<GFactor>& factors) {
  Mat8 m = identity8();
  for (const auto& f : factors) {
    if (g_position_in_fq(f.i, f.j) && !F.in_fq(f.t)) throw Error(ErrorKind::NotInFq, "parameter must lie in F_q");
    m = unitri_mul(F, m, g_factor_matrix(F, f.i, f.j, f.t));
  }
  return m;
}

std::vector<GFactor> g_decompose(const FieldTower& F, const Mat8& m) {
  if (!in_g(F, m)) throw Error(ErrorKind::NotInG, "matrix is not in G");
  // Peel factors off the right: the entry at the last remaining position is its parameter.
  const auto& pos = g_positions();
  std::vector<GFactor> out(pos.size());
  Mat8 r = m;
  for (std::size_t n = pos.size(); n-- > 0;) {
    const auto [i, j] = pos[n];
    const Fq3 t = r(i, j);
    out[n] = {i, j, t};
    r = unitri_mul(F, r, g_factor_matrix(F, i, j, F.neg(t)));
  }
  if (!(r == identity8())) throw Error(ErrorKind::NotInG, "decomposition left a nontrivial residue");
  return out;
}

std::uint64_t u_order(const FieldTower& F) {
  unsigned __int128 n = 1;
  for (int i = 0; i < 12; ++i) {
    n *= F.q();
    if (n > UINT64_MAX) throw Error(ErrorKind::TooLarge, "q^12 exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

UElem u_from_index(const FieldTower& F, std::uint64_t idx) {
  const std::uint64_t q = F.q(), q3 = F.q3();
  UElem u;
  u.t1 = Fq3{static_cast<std::uint32_t>(idx % q3)};
  idx /= q3;
  u.t2 = Fq{static_cast<std::uint32_t>(idx % q)};
  idx /= q;
  u.t3 = Fq3{static_cast<std::uint32_t>(idx % q3)};
  idx /= q3;
  u.t4 = Fq3{static_cast<std::uint32_t>(idx % q3)};
  idx /= q3;
  u.t5 = Fq{static_cast<std::uint32_t>(idx % q)};
  idx /= q;
  u.t6 = Fq{static_cast<std::uint32_t>(idx % q)};
  return u;
}

std::uint64_t u_index(const FieldTower& F, const UElem& u) {
  const std::uint64_t q = F.q(), q3 = F.q3();
  std::uint64_t idx = u.t6.v;
  idx = idx * q + u.t5.v;
  idx = idx * q3 + u.t4.v;
  idx = idx * q3 + u.t3.v;
  idx = idx * q + u.t2.v;
  idx = idx * q3 + u.t1.v;
  return idx;
}

void enumerate_u(const FieldTower& F, const std::function<void(const UElem&)>& visit) {
  const std::uint64_t n = u_order(F);
  if (n > (std::uint64_t{1} << 24)) throw Error(ErrorKind::TooLarge, "U is too large to enumerate");
  for (std::uint64_t i = 0; i < n; ++i) visit(u_from_index(F, i));
}

UElem random_u(const FieldTower& F, Rng& rng) {
  UElem u;
  u.t1 = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  u.t2 = Fq{static_cast<std::uint32_t>(rng.uniform(F.q()))};
  u.t3 = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  u.t4 = Fq3{static_cast<std::uint32_t>(rng.uniform(F.q3()))};
  u.t5 = Fq{static_cast<std::uint32_t>(rng.uniform(F.q()))};
  u.t6 = Fq{static_cast<std::uint32_t>(rng.uniform(F.q()))};
  return u;
}

std::vector<GFactor> random_g_factors(const FieldTower& F, Rng& rng) {
  std::vector<GFactor> out;
  for (const auto& [i, j] : g_positions()) {
    const std::uint64_t n = g_position_in_fq(i, j) ? F.q() : F.q3();
    out.push_back({i, j, Fq3{static_cast<std::uint32_t>(rng.uniform(n))}});
  }
  return out;
}

Mat8 random_g(const FieldTower& F, Rng& rng) { return g_compose(F, random_g_factors(F, rng)); }

}  // namespace tri3d4
