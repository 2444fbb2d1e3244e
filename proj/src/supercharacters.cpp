#include "tri3d4/supercharacters.hpp"

#include <algorithm>
#include <atomic>

#include "tri3d4/fe.hpp"
#include "tri3d4/matrix.hpp"
#include "tri3d4/parallel.hpp"

namespace tri3d4 {

std::string to_string(CharFamily f) {
  switch (f) {
    case CharFamily::Lin:
      return "Lin";
    case CharFamily::F3:
      return "F3";
    case CharFamily::F4:
      return "F4";
    case CharFamily::F5:
      return "F5";
    case CharFamily::F6:
      return "F6";
  }
  return "?";
}

std::vector<SupercharId> supercharacter_ids(const FieldTower& F) {
  const std::uint32_t q = F.q(), q3 = F.q3();
  std::vector<SupercharId> ids;
  ids.push_back({CharFamily::Lin, Fq3{0}, Fq3{0}});
  for (std::uint32_t a = 1; a < q3; ++a) ids.push_back({CharFamily::Lin, Fq3{a}, Fq3{0}});
  for (std::uint32_t b = 1; b < q; ++b) ids.push_back({CharFamily::Lin, Fq3{0}, Fq3{b}});
  for (std::uint32_t b = 1; b < q; ++b)
    for (std::uint32_t a = 1; a < q3; ++a) ids.push_back({CharFamily::Lin, Fq3{a}, Fq3{b}});
  for (std::uint32_t a = 1; a < q3; ++a)
    for (Fq3 bar : F.transversal(Fq3{a})) ids.push_back({CharFamily::F3, Fq3{a}, bar});
  for (std::uint32_t a = 1; a < q3; ++a) ids.push_back({CharFamily::F4, Fq3{a}, Fq3{0}});
  for (std::uint32_t a = 1; a < q; ++a) ids.push_back({CharFamily::F5, Fq3{a}, Fq3{0}});
  for (std::uint32_t a = 1; a < q; ++a) ids.push_back({CharFamily::F6, Fq3{a}, Fq3{0}});
  return ids;
}

std::uint64_t basis_size(const FieldTower& F, const SupercharId& id) {
  const std::uint64_t q = F.q(), q3 = F.q3();
  switch (id.family) {
    case CharFamily::Lin:
      return 1;
    case CharFamily::F3:
      return q;
    case CharFamily::F4:
      return q3 * q3 * q;
    case CharFamily::F5:
    case CharFamily::F6:
      return q3 * q3 * q3 * q;
  }
  return 0;
}

void supermodule_basis(const FieldTower& F, const SupercharId& id, const std::function<void(const Pattern&)>& visit) {
  const std::uint32_t q = F.q(), q3 = F.q3();
  Pattern C;
  switch (id.family) {
    case CharFamily::Lin:
      if (!F.in_fq(id.b)) throw Error(ErrorKind::InvalidArgument, "A23 must lie in F_q");
      C.a12 = id.a;
      C.a23 = F.to_fq(id.b);
      visit(C);
      return;
    case CharFamily::F3:
      if (id.a.v == 0) throw Error(ErrorKind::InvalidArgument, "F3 needs A13* != 0");
      C.a13 = id.a;
      for (std::uint32_t s = 0; s < q; ++s) {
        C.a12 = F.add(id.b, F.mul(Fq3{s}, id.a));
        visit(C);
      }
      return;
    case CharFamily::F4:
      if (id.a.v == 0) throw Error(ErrorKind::InvalidArgument, "F4 needs A15* != 0");
      C.a15 = id.a;
      for (std::uint32_t c23 = 0; c23 < q; ++c23)
        for (std::uint32_t c13 = 0; c13 < q3; ++c13)
          for (std::uint32_t c12 = 0; c12 < q3; ++c12) {
            C.a12 = Fq3{c12};
            C.a13 = Fq3{c13};
            C.a23 = Fq{c23};
            visit(C);
          }
      return;
    case CharFamily::F5:
    case CharFamily::F6: {
      const bool five = id.family == CharFamily::F5;
      if (id.a.v == 0 || !F.in_fq(id.a)) throw Error(ErrorKind::InvalidArgument, "parameter must lie in F_q^x");
      if (five)
        C.a16 = F.to_fq(id.a);
      else
        C.a17 = F.to_fq(id.a);
      for (std::uint32_t last = 0; last < q; ++last)
        for (std::uint32_t c15 = 0; c15 < q3; ++c15)
          for (std::uint32_t c13 = 0; c13 < q3; ++c13)
            for (std::uint32_t c12 = 0; c12 < q3; ++c12) {
              C.a12 = Fq3{c12};
              C.a13 = Fq3{c13};
              C.a15 = Fq3{c15};
              if (five)
                C.a23 = Fq{last};
              else
                C.a16 = Fq{last};
              visit(C);
            }
      return;
    }
  }
}

RootSum psi_super_definitional(const FieldTower& F, const SupercharId& id, const Mat8& u_inv, const Pattern& fu) {
  RootSum sum(F.p());
  supermodule_basis(F, id, [&](const Pattern& C) {
    if (act_dot_inv(F, C, u_inv) == C) sum.add(F.abs_trace(kappa_q(F, C, fu)));
  });
  return sum;
}

CycInt psi_super_definitional(const FieldTower& F, const SupercharId& id, const UElem& u) {
  return psi_super_definitional(F, id, unitri_inv(F, closed_form_matrix(F, u)), f_closed(F, u)).value();
}

CycInt to_cyc(std::uint32_t p, const TableEntry& e) {
  return CycInt::zeta_power(p, e.exp) * BigInt(e.coef);
}

TableEntry psi_super_closed(const FieldTower& F, const SupercharId& id, const SuperclassId& cls) {
  const std::int64_t q = F.q();
  auto tr = [&](Fq3 x) { return F.abs_trace(F.to_fq(x)); };
  auto trpi = [&](Fq3 x) { return F.abs_trace(F.pi_q(x)); };
  const std::uint32_t p = F.p();
  const FE a(F, id.a), b(F, id.b), t(F, cls.a), s(F, cls.b);
  switch (id.family) {
    case CharFamily::Lin:
      switch (cls.family) {
        case ClassFamily::C13:
          return {1, trpi((a * t).v())};
        case ClassFamily::C2:
          return {1, tr((b * t).v())};
        case ClassFamily::C12:
          return {1, (trpi((a * t).v()) + tr((b * s).v())) % p};
        default:
          return {1, 0};
      }
    case CharFamily::F3:
      switch (cls.family) {
        case ClassFamily::C13: {
          if (F.pi_q((a * t).v()).v != 0) return {0, 0};
          return {q, trpi((b * t - s * a).v())};
        }
        case ClassFamily::C2:
        case ClassFamily::C12:
          return {0, 0};
        case ClassFamily::C3:
          return {q, trpi((-(a * t)).v())};
        default:
          return {q, 0};
      }
    case CharFamily::F4: {
      const std::int64_t d = q * q * q * q * q * q * q;
      switch (cls.family) {
        case ClassFamily::C0:
        case ClassFamily::C5:
        case ClassFamily::C6:
          return {d, 0};
        case ClassFamily::C4:
          return {d, (trpi((a.q() * t).v()) + trpi((a * t.q2()).v())) % p};
        default:
          return {0, 0};
      }
    }
    case CharFamily::F5:
    case CharFamily::F6: {
      std::int64_t d = 1;
      for (int i = 0; i < 10; ++i) d *= q;
      const ClassFamily top = id.family == CharFamily::F5 ? ClassFamily::C5 : ClassFamily::C6;
      if (cls.family == ClassFamily::C0) return {d, 0};
      if (cls.family == top) return {d, tr((a * t).v())};
      if (id.family == CharFamily::F5 && cls.family == ClassFamily::C6) return {d, 0};
      return {0, 0};
    }
  }
  return {0, 0};
}

SupercharTable build_table(const FieldTower& F) {
  SupercharTable t;
  t.p = F.p();
  t.k = F.k();
  t.q = F.q();
  t.rows = supercharacter_ids(F);
  SuperclassCatalog cat(F);
  t.cols = cat.ids();
  for (std::size_t c = 0; c < cat.size(); ++c) t.class_sizes.push_back(cat.size_of(c));
  if (t.rows.size() != t.cols.size()) throw Error(ErrorKind::InvalidArgument, "table is not square");
  t.cells.resize(t.rows.size() * t.cols.size());
  parallel_chunks(t.rows.size(), [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t r = b; r < e; ++r)
      for (std::size_t c = 0; c < t.cols.size(); ++c) t.at(r, c) = psi_super_closed(F, t.rows[r], t.cols[c]);
  });
  return t;
}

namespace {

std::vector<__int128> pair_buckets(const SupercharTable& t, std::size_t r1, std::size_t r2) {
  std::vector<__int128> bucket(t.p, 0);
  const std::size_t n = t.cols.size();
  const TableEntry* x = &t.cells[r1 * n];
  const TableEntry* y = &t.cells[r2 * n];
  for (std::size_t c = 0; c < n; ++c) {
    if (x[c].coef == 0 || y[c].coef == 0) continue;
    const __int128 m = static_cast<__int128>(t.class_sizes[c]) * x[c].coef * y[c].coef;
    bucket[(x[c].exp + t.p - y[c].exp) % t.p] += m;
  }
  return bucket;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  for (a %= m; e; e >>= 1, a = mul_mod(a, a, m))
    if (e & 1) r = mul_mod(r, a, m);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::size_t rank_mod(std::vector<std::uint32_t> m, std::size_t n, std::uint64_t ell) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m[piv * n + col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != rank)
      std::swap_ranges(m.begin() + piv * n, m.begin() + (piv + 1) * n, m.begin() + rank * n);
    const std::uint64_t inv = pow_mod(m[rank * n + col], ell - 2, ell);
    std::uint32_t* prow = &m[rank * n];
    for (std::size_t j = col; j < n; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % ell);
    parallel_chunks(n - rank - 1, [&](unsigned, std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t i = rank + 1 + b; i < rank + 1 + e; ++i) {
        std::uint32_t* row = &m[i * n];
        const std::uint64_t f = row[col];
        if (f == 0) continue;
        const std::uint64_t g = ell - f;
        for (std::size_t j = col; j < n; ++j) row[j] = static_cast<std::uint32_t>((row[j] + g * prow[j]) % ell);
      }
    });
    ++rank;
  }
  return rank;
}

}  // namespace

CycRat inner_product_super(const SupercharTable& t, std::size_t r1, std::size_t r2) {
  const auto bucket = pair_buckets(t, r1, r2);
  std::vector<BigInt> counts;
  for (auto v : bucket) counts.push_back(to_bigint(v));
  BigInt order = 1;
  for (int i = 0; i < 12; ++i) order *= t.q;
  return CycRat(CycInt::from_root_counts(t.p, counts), order);
}

InvertibilityCertificate certify_invertible(const SupercharTable& t, int attempts) {
  const std::size_t n = t.rows.size();
  if (t.cols.size() != n) throw Error(ErrorKind::InvalidArgument, "table is not square");
  InvertibilityCertificate cert;
  std::uint64_t ell = (std::uint64_t{1} << 30) / t.p * t.p + 1;
  for (int a = 0; a < attempts; ++a) {
    while (!is_prime(ell)) ell += t.p;
    std::uint64_t omega = 1;
    for (std::uint64_t g = 2; omega == 1; ++g) omega = pow_mod(g, (ell - 1) / t.p, ell);
    std::vector<std::uint64_t> powers(t.p, 1);
    for (std::uint32_t e = 1; e < t.p; ++e) powers[e] = mul_mod(powers[e - 1], omega, ell);
    std::vector<std::uint32_t> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const TableEntry& c = t.cells[i];
      const std::int64_t r = c.coef % static_cast<std::int64_t>(ell);
      const std::uint64_t coef = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(ell) : r);
      m[i] = static_cast<std::uint32_t>(mul_mod(coef, powers[c.exp], ell));
    }
    cert.ell = ell;
    cert.omega = omega;
    cert.rank = rank_mod(std::move(m), n, ell);
    if (cert.rank == n) {
      cert.invertible = true;
      return cert;
    }
    ell += t.p;
  }
  return cert;
}

AxiomReport verify_axioms(const FieldTower& F, const SupercharTable& t, const AxiomOptions& opt) {
  AxiomReport rep;
  const std::size_t n = t.rows.size();
  rep.characters = n;
  rep.classes = t.cols.size();
  rep.identity_class = !t.cols.empty() && t.cols[0].family == ClassFamily::C0 && t.class_sizes[0] == 1;

  for (std::size_t r = 0; r < n; ++r) {
    const TableEntry& e = t.at(r, 0);
    if (e.exp != 0 || e.coef < 0 || static_cast<std::uint64_t>(e.coef) != basis_size(F, t.rows[r]))
      ++rep.degree_failures;
  }

  std::atomic<std::uint64_t> checks{0}, failures{0};
  auto compare = [&](std::size_t r, const SuperclassId& cls, const Mat8& h, const Pattern& fu) {
    const CycInt def = psi_super_definitional(F, t.rows[r], h, fu).value();
    const TableEntry closed = psi_super_closed(F, t.rows[r], cls);
    ++checks;
    if (!(def == to_cyc(F.p(), closed))) ++failures;
  };

  if (opt.all_representatives) {
    parallel_chunks(t.cols.size(), [&](unsigned, std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t c = b; c < e; ++c) {
        const UElem u = representative(F, t.cols[c]);
        const Mat8 h = unitri_inv(F, closed_form_matrix(F, u));
        const Pattern fu = f_closed(F, u);
        for (std::size_t r = 0; r < n; ++r) compare(r, t.cols[c], h, fu);
      }
    });
  }

  if (opt.unit_representatives) {
    std::vector<SuperclassId> units = {{ClassFamily::C0, {}, {}}};
    for (ClassFamily f : {ClassFamily::C13, ClassFamily::C2, ClassFamily::C12, ClassFamily::C3, ClassFamily::C4,
                          ClassFamily::C5, ClassFamily::C6})
      units.push_back({f, F.one(), f == ClassFamily::C12 ? F.one() : F.zero()});
    for (const auto& cls : units) {
      const UElem u = representative(F, cls);
      const Mat8 h = unitri_inv(F, closed_form_matrix(F, u));
      const Pattern fu = f_closed(F, u);
      parallel_chunks(n, [&](unsigned, std::uint64_t b, std::uint64_t e) {
        for (std::uint64_t r = b; r < e; ++r)
          if (basis_size(F, t.rows[r]) <= opt.max_basis || t.rows[r].a == F.one()) compare(r, cls, h, fu);
      });
    }
  }

  {
    Rng rng(opt.seed);
    for (std::uint64_t i = 0; i < opt.random_pairs; ++i) {
      std::size_t r = rng.uniform(n);
      while (basis_size(F, t.rows[r]) > opt.max_basis) r = rng.uniform(n);
      const UElem u = random_u(F, rng);
      compare(r, classify_element(F, u), unitri_inv(F, closed_form_matrix(F, u)), f_closed(F, u));
    }
  }

  if (opt.exhaustive_constancy) {
    std::vector<std::size_t> small;
    for (std::size_t r = 0; r < n; ++r)
      if (t.rows[r].family == CharFamily::Lin || t.rows[r].family == CharFamily::F3) small.push_back(r);
    parallel_chunks(u_order(F), [&](unsigned, std::uint64_t b, std::uint64_t e) {
      for (std::uint64_t i = b; i < e; ++i) {
        const UElem u = u_from_index(F, i);
        const Mat8 h = unitri_inv(F, closed_form_matrix(F, u));
        const Pattern fu = f_closed(F, u);
        const SuperclassId cls = classify_element(F, u);
        for (std::size_t r : small) compare(r, cls, h, fu);
      }
    });
  }
  rep.constancy_checks = checks;
  rep.constancy_failures = failures;

  auto check_pair = [&](std::size_t r1, std::size_t r2) {
    const auto bucket = pair_buckets(t, r1, r2);
    ++rep.orthogonality_pairs;
    if (r1 == r2) {
      bool ok = bucket[0] > 0;
      for (std::uint32_t e = 1; e < t.p; ++e) ok = ok && bucket[e] == 0;
      if (!ok) ++rep.norm_failures;
    } else {
      for (std::uint32_t e = 1; e < t.p; ++e)
        if (bucket[e] != bucket[0]) {
          ++rep.orthogonality_failures;
          break;
        }
    }
  };
  if (opt.all_pairs) {
    for (std::size_t r1 = 0; r1 < n; ++r1)
      for (std::size_t r2 = r1; r2 < n; ++r2) check_pair(r1, r2);
  } else {
    Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t r = 0; r < n; ++r) check_pair(r, r);
    for (std::uint64_t i = 0; i < opt.sampled_pairs; ++i) {
      const std::size_t r1 = rng.uniform(n), r2 = rng.uniform(n);
      check_pair(r1, r2);
    }
  }

  if (opt.invertibility) {
    rep.invertibility_checked = true;
    rep.certificate = certify_invertible(t);
  }
  return rep;
}

}  // namespace tri3d4
