#include "tri3d4/orbits.hpp"

#include <algorithm>
#include <unordered_set>

#include "tri3d4/fe.hpp"

namespace tri3d4 {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_budget(std::uint64_t n, std::uint64_t budget, const char* what) {
  if (n > budget) throw Error(ErrorKind::BudgetExceeded, std::string(what) + " exceeds the budget");
}

const std::vector<Position>& j_positions() {
  static const std::vector<Position> j = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}};
  return j;
}

bool nonzero_at(const Pattern& A, Position pos) {
  if (pos == Position{2, 3}) return A.a23.v != 0;
  switch (pos.second) {
    case 2: return A.a12.v != 0;
    case 3: return A.a13.v != 0;
    case 4:
    case 5: return A.a15.v != 0;
    case 6: return A.a16.v != 0;
    case 7: return A.a17.v != 0;
  }
  return false;
}

template <class Visit>
void for_fq3(const FieldTower& F, Visit&& visit) {
  for (std::uint32_t v = 0; v < F.q3(); ++v) visit(Fq3{v});
}
template <class Visit>
void for_fq(const FieldTower& F, Visit&& visit) {
  for (std::uint32_t v = 0; v < F.q(); ++v) visit(Fq{v});
}

void sort_by_index(const FieldTower& F, std::vector<UElem>& v) {
  std::sort(v.begin(), v.end(),
            [&](const UElem& a, const UElem& b) { return u_index(F, a) < u_index(F, b); });
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::F12: return "F12";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
    case Family::F5: return "F5";
    case Family::F6: return "F6";
  }
  return "?";
}

Family family_of(const Pattern& A) {
  if (A.a17.v != 0) return Family::F6;
  if (A.a16.v != 0) return Family::F5;
  if (A.a15.v != 0) return Family::F4;
  if (A.a13.v != 0) return Family::F3;
  return Family::F12;
}

Pattern canonical(const FieldTower& F, const Pattern& A) {
  Pattern C;
  C.a23 = A.a23;
  switch (family_of(A)) {
    case Family::F6: {
      const FE a12(F, A.a12), a13(F, A.a13), a15(F, A.a15), a16(F, A.a16), a17(F, A.a17);
      C.a12 = (a12 + (a13 * a16 + a15.q() * a15) / a17).v();
      C.a17 = A.a17;
      break;
    }
    case Family::F5: {
      const FE a13(F, A.a13), a15(F, A.a15), a16(F, A.a16);
      C.a13 = (a13 + a15.q() * a15 / a16).v();
      C.a16 = A.a16;
      break;
    }
    case Family::F4: C.a15 = A.a15; break;
    case Family::F3:
      C.a13 = A.a13;
      C.a12 = F.coset_rep(A.a13, A.a12);
      break;
    case Family::F12: C = A; break;
  }
  return C;
}

std::uint64_t orbit_size(const FieldTower& F, Family f) {
  const std::uint64_t q = F.q();
  switch (f) {
    case Family::F12: return 1;
    case Family::F3: return q;
    case Family::F4:
    case Family::F5: return ipow(q, 6);
    case Family::F6: return ipow(q, 7);
  }
  return 0;
}

std::uint64_t stabilizer_size(const FieldTower& F, Family f) { return u_order(F) / orbit_size(F, f); }

GeneratorAction::GeneratorAction(const FieldTower& F) : F_(&F) {
  for (const auto& g : generators(F)) inv_.push_back(unitri_inv(F, root_element(F, g.i, g.t)));
}

std::vector<Pattern> orbit_bfs(const FieldTower& F, const Pattern& A, std::uint64_t budget) {
  const GeneratorAction gens(F);
  std::unordered_set<std::uint64_t> seen{pattern_index(F, A)};
  std::vector<Pattern> out{A};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Pattern B = gens.apply(out[head], g);
      if (seen.insert(pattern_index(F, B)).second) {
        out.push_back(B);
        check_budget(out.size(), budget, "orbit");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pattern> orbit_closed(const FieldTower& F, const Pattern& A, std::uint64_t budget) {
  const std::uint64_t q3 = F.q3();
  check_budget(q3 * q3 * q3 * F.q(), budget, "orbit parameter sweep");
  const FE a12(F, A.a12), a13(F, A.a13), a15(F, A.a15), a16(F, A.a16), a17(F, A.a17);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Pattern> out;
  for_fq(F, [&](Fq s2) {
    const FE t2(F, s2);
    for_fq3(F, [&](Fq3 s1) {
      const FE t1(F, s1);
      const FE t1q = t1.q(), t1q2 = t1.q2();
      for_fq3(F, [&](Fq3 s3) {
        const FE t3(F, s3);
        const FE t3q = t3.q(), t3q2 = t3.q2();
        const FE b13_fixed = a13 - a15.q() * t1q - a15 * t1q2 - a16 * t1q2 * t1q - a17 * t2 * t1q2 * t1q;
        const FE b12_fixed = a12 - a13 * t2 - a15.q() * t3q - a16 * t1q2 * t3q - a17 * t2 * t1q2 * t3q -
                             a15 * t3q2 - a16 * t1q * t3q2 - a17 * t2 * t1q * t3q2 - a17 * t3q2 * t3q;
        Pattern B;
        B.a15 = (a15 + a16 * t1q + a17 * t2 * t1q + a17 * t3q).v();
        B.a16 = (a16 + a17 * t2).fq();
        B.a17 = A.a17;
        B.a23 = A.a23;
        for_fq3(F, [&](Fq3 s4) {
          const FE t4q = FE(F, s4).q();
          B.a12 = (b12_fixed - a16 * t4q - a17 * t2 * t4q).v();
          B.a13 = (b13_fixed + a17 * t4q).v();
          if (seen.insert(pattern_index(F, B)).second) out.push_back(B);
        });
      });
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool stabilizes(const FieldTower& F, const Pattern& A, const UElem& u) { return act_dot(F, A, u) == A; }

std::vector<UElem> stabilizer_closed(const FieldTower& F, const Pattern& A, std::uint64_t budget) {
  const Family fam = family_of(A);
  check_budget(stabilizer_size(F, fam), budget, "stabilizer");
  std::vector<UElem> out;
  out.reserve(stabilizer_size(F, fam));
  auto tail = [&](UElem u) {
    for_fq(F, [&](Fq t5) {
      for_fq(F, [&](Fq t6) {
        u.t5 = t5;
        u.t6 = t6;
        out.push_back(u);
      });
    });
  };
  const FE a13(F, A.a13), a15(F, A.a15), a16(F, A.a16), a17(F, A.a17);
  switch (fam) {
    case Family::F12: enumerate_u(F, [&](const UElem& u) { out.push_back(u); }); break;
    case Family::F3:
      for_fq3(F, [&](Fq3 t1) {
        for_fq3(F, [&](Fq3 t3) {
          for_fq3(F, [&](Fq3 t4) { tail(UElem{t1, Fq{0}, t3, t4, {}, {}}); });
        });
      });
      break;
    case Family::F4: {
      const FE two = FE(F, F.one()) + FE(F, F.one());
      const FE c = -((a13.q2() * a15.q() + a13.q() * a15 - a13 * a15.q2()) / (two * a15.q() * a15));
      for_fq(F, [&](Fq t2) {
        for_fq3(F, [&](Fq3 t4) { tail(UElem{Fq3{0}, t2, (c * FE(F, t2)).v(), t4, {}, {}}); });
      });
      break;
    }
    case Family::F5:
      for_fq(F, [&](Fq t2) {
        for_fq3(F, [&](Fq3 s3) {
          const FE t3(F, s3);
          const FE t4 = (-(a13.q2() * FE(F, t2)) - a15 * t3 - a15.q2() * t3.q()) / a16;
          tail(UElem{Fq3{0}, t2, s3, t4.v(), {}, {}});
        });
      });
      break;
    case Family::F6:
      for_fq3(F, [&](Fq3 s1) {
        const FE t1(F, s1);
        const FE t3 = -(a16 * t1 / a17);
        const FE t4 = (a15 * t1 + a15.q2() * t1.q() + a16 * t1.q() * t1) / a17;
        tail(UElem{s1, Fq{0}, t3.v(), t4.v(), {}, {}});
      });
      break;
  }
  sort_by_index(F, out);
  return out;
}

std::vector<UElem> stabilizer_brute(const FieldTower& F, const Pattern& A) {
  // v stabilizes A iff v^{-1} does, so the inverse-free test A.(v^{-1}) = A selects the same set.
  std::vector<UElem> out;
  enumerate_u(F, [&](const UElem& v) {
    if (act_dot_inv(F, A, closed_form_matrix(F, v)) == A) out.push_back(v);
  });
  return out;
}

std::vector<Position> support(const Pattern& A) {
  std::vector<Position> out;
  for (const auto& pos : j_positions())
    if (nonzero_at(A, pos)) out.push_back(pos);
  return out;
}

std::vector<Position> hook(int i) {
  std::vector<Position> out;
  for (const auto& pos : j_positions())
    if (pos.second == i || pos.first == 9 - i) out.push_back(pos);
  return out;
}

StructureReport structure(const Pattern& A) {
  StructureReport r;
  for (int row = 1; row <= 2; ++row) {
    Position last{0, 0};
    for (const auto& pos : j_positions())
      if (pos.first == row && nonzero_at(A, pos)) last = pos;
    if (last.first != 0) r.main.push_back(last);
  }
  for (const auto& pos : j_positions()) {
    if (pos.second > 4) continue;
    if (std::find(r.main.begin(), r.main.end(), Position{pos.first, 9 - pos.second}) != r.main.end())
      r.minor.push_back(pos);
  }
  for (const auto& pos : r.main) {
    if (pos == Position{2, 3}) r.verge.a23 = A.a23;
    else if (pos.second == 2) r.verge.a12 = A.a12;
    else if (pos.second == 3) r.verge.a13 = A.a13;
    else if (pos.second == 5) r.verge.a15 = A.a15;
    else if (pos.second == 6) r.verge.a16 = A.a16;
    else if (pos.second == 7) r.verge.a17 = A.a17;
  }
  r.core = r.main;
  r.core.insert(r.core.end(), r.minor.begin(), r.minor.end());
  std::sort(r.core.begin(), r.core.end());
  r.staircase = true;
  for (std::size_t a = 0; a < r.main.size(); ++a)
    for (std::size_t b = a + 1; b < r.main.size(); ++b)
      if (r.main[a].second == r.main[b].second) r.staircase = false;
  r.hook_separated = true;
  for (int i = 1; i <= 8; ++i) {
    const auto h = hook(i);
    const auto hits = std::count_if(r.main.begin(), r.main.end(),
                                    [&](const Position& pos) { return std::find(h.begin(), h.end(), pos) != h.end(); });
    if (hits > 1) r.hook_separated = false;
  }
  return r;
}

StaircaseReduction staircase_reduce(const FieldTower& F, const Pattern& A) {
  StaircaseReduction r{A, {}};
  if (A.a23.v == 0) return r;
  if (family_of(A) == Family::F3) {
    // x1(t1) with pi_q(t1 A13) = A23 clears the (2,3) entry through the left action.
    const UElem x = root_uelem(F, 1, F.div(embed(A.a23), A.a13));
    r.rep = act_left(F, x, A);
    r.witness.push_back(x);
  } else if (A.a17.v != 0) {
    const Fq s5 = F.neg(F.div(A.a23, A.a17));
    r.rep.a23 = F.add(A.a23, F.mul(s5, A.a17));
    r.witness.push_back(root_uelem(F, 5, embed(s5)));
  }
  return r;
}

CycInt psi(const FieldTower& F, const std::vector<Pattern>& orbit, const UElem& u) {
  const Mat8 h = unitri_inv(F, closed_form_matrix(F, u));
  const Pattern fu = f_closed(F, u);
  RootSum sum(F.p());
  for (const auto& C : orbit)
    if (act_dot_inv(F, C, h) == C) sum.add(F.abs_trace(kappa_q(F, C, fu)));
  return sum.value();
}

CycInt psi(const FieldTower& F, const Pattern& A, const UElem& u) { return psi(F, orbit_bfs(F, A), u); }

CycRat inner_product_psi(const FieldTower& F, const Pattern& A, const Pattern& B) {
  const auto orbit_b = orbit_bfs(F, B);
  const std::uint64_t stab_a = stabilizer_size(F, family_of(A));
  const std::uint64_t stab_b = stabilizer_size(F, family_of(B));
  RootSum sum(F.p());
  auto accumulate = [&](const Pattern& D, const std::vector<UElem>& candidates, const Pattern& other) {
    const Pattern diff = pattern_sub(F, A, D);
    for (const auto& y : candidates)
      if (stabilizes(F, other, y)) sum.add(F.abs_trace(kappa_q(F, diff, f_closed(F, y))));
  };
  if (stab_a <= stab_b) {
    const auto sa = stabilizer_closed(F, A);
    for (const auto& D : orbit_b) accumulate(D, sa, D);
  } else {
    for (const auto& D : orbit_b) accumulate(D, stabilizer_closed(F, D), A);
  }
  return CycRat(sum.value(), BigInt(stab_a));
}

CycRat inner_product_psi_direct(const FieldTower& F, const Pattern& A, const Pattern& B) {
  const auto oa = orbit_bfs(F, A), ob = orbit_bfs(F, B);
  const std::uint32_t p = F.p();
  std::vector<__int128> acc(p, 0);
  std::vector<std::int64_t> ca(p), cb(p);
  enumerate_u(F, [&](const UElem& u) {
    const Mat8 h = unitri_inv(F, closed_form_matrix(F, u));
    const Pattern fu = f_closed(F, u);
    std::fill(ca.begin(), ca.end(), 0);
    std::fill(cb.begin(), cb.end(), 0);
    for (const auto& C : oa)
      if (act_dot_inv(F, C, h) == C) ++ca[F.abs_trace(kappa_q(F, C, fu))];
    for (const auto& C : ob)
      if (act_dot_inv(F, C, h) == C) ++cb[F.abs_trace(kappa_q(F, C, fu))];
    for (std::uint32_t e1 = 0; e1 < p; ++e1)
      if (ca[e1] != 0)
        for (std::uint32_t e2 = 0; e2 < p; ++e2) acc[(e1 + p - e2) % p] += static_cast<__int128>(ca[e1]) * cb[e2];
  });
  RootSum sum(p);
  for (std::uint32_t e = 0; e < p; ++e) sum.add(e, acc[e]);
  return CycRat(sum.value(), BigInt(u_order(F)));
}

std::vector<Pattern> canonical_representatives(const FieldTower& F, Family f) {
  std::vector<Pattern> out;
  switch (f) {
    case Family::F12:
      for_fq(F, [&](Fq a23) { for_fq3(F, [&](Fq3 a12) { out.push_back(Pattern{a12, {}, {}, {}, {}, a23}); }); });
      break;
    case Family::F3:
      for_fq3(F, [&](Fq3 a13) {
        if (a13.v == 0) return;
        const auto reps = F.transversal(a13);
        for (Fq3 a12 : reps)
          for_fq(F, [&](Fq a23) { out.push_back(Pattern{a12, a13, {}, {}, {}, a23}); });
      });
      break;
    case Family::F4:
      for_fq3(F, [&](Fq3 a15) {
        if (a15.v == 0) return;
        for_fq(F, [&](Fq a23) { out.push_back(Pattern{{}, {}, a15, {}, {}, a23}); });
      });
      break;
    case Family::F5:
      for_fq(F, [&](Fq a16) {
        if (a16.v == 0) return;
        for_fq3(F, [&](Fq3 a13) {
          for_fq(F, [&](Fq a23) { out.push_back(Pattern{{}, a13, {}, a16, {}, a23}); });
        });
      });
      break;
    case Family::F6:
      for_fq(F, [&](Fq a17) {
        if (a17.v == 0) return;
        for_fq3(F, [&](Fq3 a12) {
          for_fq(F, [&](Fq a23) { out.push_back(Pattern{a12, {}, {}, {}, a17, a23}); });
        });
      });
      break;
  }
  return out;
}

std::map<Family, FamilyCensus> orbit_census(const FieldTower& F) {
  std::map<Family, FamilyCensus> out;
  for (Family f : {Family::F12, Family::F3, Family::F4, Family::F5, Family::F6}) {
    const auto reps = canonical_representatives(F, f);
    out[f].orbits = reps.size();
    out[f].size_histogram[orbit_size(F, f)] = reps.size();
  }
  return out;
}

OrbitPartitionReport verify_orbit_partition(const FieldTower& F) {
  const std::uint64_t n = pattern_count(F);
  check_budget(n, 1u << 24, "pattern space");
  OrbitPartitionReport r;
  std::vector<std::uint32_t> count(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Pattern A = pattern_from_index(F, i);
    const Pattern C = canonical(F, A);
    if (family_of(C) != family_of(A) || canonical(F, C) != C) ++r.violations;
    ++count[pattern_index(F, C)];
    ++r.patterns;
  }
  std::uint64_t covered = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (count[i] == 0) continue;
    const Pattern C = pattern_from_index(F, i);
    const auto orbit = orbit_bfs(F, C);
    if (orbit.size() != count[i] || orbit.size() != orbit_size(F, family_of(C))) ++r.violations;
    for (const auto& D : orbit)
      if (canonical(F, D) != C) ++r.violations;
    auto& fc = r.census[family_of(C)];
    ++fc.orbits;
    ++fc.size_histogram[orbit.size()];
    covered += orbit.size();
  }
  if (covered != n) ++r.violations;
  return r;
}

}  // namespace tri3d4
