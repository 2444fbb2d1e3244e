#include "tri3d4/suites.hpp"

#include <algorithm>
#include <set>

#include "tri3d4/matrix.hpp"
#include "tri3d4/orbits.hpp"
#include "tri3d4/parallel.hpp"

namespace tri3d4 {

namespace {

struct Counter {
  std::uint64_t checks = 0, failures = 0;
  void operator()(bool ok) {
    ++checks;
    failures += !ok;
  }
  Json json() const { return Json{{"checks", checks}, {"failures", failures}}; }
};

Fq3 random_param(const FieldTower& F, Rng& rng, int i) {
  return Fq3{static_cast<std::uint32_t>(rng.uniform(root_in_fq(i) ? F.q() : F.q3()))};
}

SuiteResult field_suite(const FieldTower& F, const SuiteOptions& opt) {
  Counter axioms, frob, proj, cosets;
  Rng rng(opt.seed);
  const std::uint64_t n3 = F.q3();
  const bool exhaustive = n3 * n3 <= opt.budget || exhaustive_scale(F);
  auto check_pair = [&](Fq3 a, Fq3 b, Fq3 c) {
    axioms(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
    axioms(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    axioms(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    axioms(F.add(a, F.neg(a)) == F.zero());
    if (a.v != 0) axioms(F.mul(a, F.inv(a)) == F.one());
    frob(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
    frob(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
  };
  if (exhaustive) {
    for (std::uint32_t a = 0; a < n3; ++a)
      for (std::uint32_t b = 0; b < n3; ++b) check_pair(Fq3{a}, Fq3{b}, Fq3{static_cast<std::uint32_t>(rng.uniform(n3))});
  } else {
    for (std::uint64_t i = 0; i < opt.budget; ++i)
      check_pair(Fq3{static_cast<std::uint32_t>(rng.uniform(n3))}, Fq3{static_cast<std::uint32_t>(rng.uniform(n3))},
                 Fq3{static_cast<std::uint32_t>(rng.uniform(n3))});
  }
  const std::uint64_t singles = std::min<std::uint64_t>(n3, std::max<std::uint64_t>(opt.budget, 1));
  for (std::uint64_t i = 0; i < singles; ++i) {
    const Fq3 a = singles == n3 ? Fq3{static_cast<std::uint32_t>(i)} : Fq3{static_cast<std::uint32_t>(rng.uniform(n3))};
    frob(F.frob(F.frob2(a)) == a);
    frob(F.in_fq(a) == (F.frob(a) == a));
    const Fq s = F.pi_q(a);
    proj(F.pi_q(embed(s)) == s);
    proj(F.in_fq(embed(F.phi0(a))));
  }
  const Fq3 star{static_cast<std::uint32_t>(1 + rng.uniform(n3 - 1))};
  const auto reps = F.transversal(star);
  cosets(reps.size() == n3 / F.q());
  std::set<Fq3> seen;
  for (std::uint32_t x = 0; x < n3 && n3 <= (1u << 20); ++x) seen.insert(F.coset_rep(star, Fq3{x}));
  cosets(seen.size() == reps.size() && std::equal(seen.begin(), seen.end(), reps.begin()));

  SuiteResult r{"field", false, {}};
  r.details = Json{{"exhaustive", exhaustive}, {"axioms", axioms.json()}, {"frobenius", frob.json()},
                   {"projection", proj.json()}, {"transversal", cosets.json()}};
  r.pass = axioms.failures + frob.failures + proj.failures + cosets.failures == 0;
  return r;
}

SuiteResult group_suite(const FieldTower& F, const SuiteOptions& opt) {
  Counter closed, comm, axioms;
  Rng rng(opt.seed);
  for (std::uint64_t n = 0; n < opt.budget; ++n) {
    const UElem u = random_u(F, rng);
    closed(closed_form_matrix(F, u) == generator_product(F, u));
  }
  // Full (ti, tj) grids when they are small, otherwise the same number of samples per pair.
  const std::uint64_t per_pair = std::max<std::uint64_t>(opt.budget / 36, 1);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      const std::uint64_t ni = root_in_fq(i) ? F.q() : F.q3(), nj = root_in_fq(j) ? F.q() : F.q3();
      if (ni * nj <= per_pair || exhaustive_scale(F)) {
        for (std::uint32_t a = 0; a < ni; ++a)
          for (std::uint32_t b = 0; b < nj; ++b)
            comm(commutator(F, i, Fq3{a}, j, Fq3{b}) == commutator_formula(F, i, Fq3{a}, j, Fq3{b}));
      } else {
        for (std::uint64_t n = 0; n < per_pair; ++n) {
          const Fq3 a = random_param(F, rng, i), b = random_param(F, rng, j);
          comm(commutator(F, i, a, j, b) == commutator_formula(F, i, a, j, b));
        }
      }
    }
  for (std::uint64_t n = 0; n < opt.budget; ++n) {
    const UElem a = random_u(F, rng), b = random_u(F, rng), c = random_u(F, rng);
    axioms(u_mul(F, u_mul(F, a, b), c) == u_mul(F, a, u_mul(F, b, c)));
    axioms(u_mul(F, a, u_inv(F, a)) == UElem{});
    axioms(closed_form_matrix(F, u_mul(F, a, b)) == unitri_mul(F, closed_form_matrix(F, a), closed_form_matrix(F, b)));
    axioms(u_from_index(F, u_index(F, a)) == a);
  }
  SuiteResult r{"group", false, {}};
  r.details = Json{{"closed_form", closed.json()}, {"commutators", comm.json()}, {"multiplication", axioms.json()}};
  r.pass = closed.failures + comm.failures + axioms.failures == 0;
  return r;
}

SuiteResult cocycle_suite(const FieldTower& F, const SuiteOptions& opt) {
  Counter gram, bijection, identity;
  const std::size_t rank = fq_rank(F, gram_matrix(F));
  gram(rank == 12);
  Rng rng(opt.seed);
  const bool exhaustive = exhaustive_scale(F);
  if (exhaustive) {
    std::vector<bool> seen(pattern_count(F), false);
    enumerate_u(F, [&](const UElem& u) {
      const Pattern A = f_closed(F, u);
      const std::uint64_t i = pattern_index(F, A);
      bijection(!seen[i] && f_inverse(F, A) == u);
      seen[i] = true;
    });
  } else {
    for (std::uint64_t n = 0; n < opt.budget; ++n) {
      const UElem u = random_u(F, rng);
      bijection(f_inverse(F, f_closed(F, u)) == u);
      const Pattern B = random_pattern(F, rng);
      bijection(f_closed(F, f_inverse(F, B)) == B);
    }
  }
  const std::uint64_t matrix_checks = std::min<std::uint64_t>(opt.budget, 10000);
  for (std::uint64_t n = 0; n < matrix_checks; ++n) {
    const UElem u = random_u(F, rng);
    bijection(f_closed(F, u) == cocycle_f(F, closed_form_matrix(F, u)));
  }
  for (std::uint64_t n = 0; n < opt.budget; ++n) {
    const Mat8 x = random_g(F, rng), g = random_g(F, rng);
    identity(cocycle_f(F, mat_mul(F, x, g)) == pattern_add(F, act_circ(F, cocycle_f(F, x), g), cocycle_f(F, g)));
  }
  SuiteResult r{"cocycle", false, {}};
  r.details = Json{{"gram_rank", rank},       {"gram", gram.json()},         {"exhaustive_bijection", exhaustive},
                   {"bijection", bijection.json()}, {"cocycle_identity", identity.json()}};
  r.pass = gram.failures + bijection.failures + identity.failures == 0;
  return r;
}

SuiteResult orbit_suite(const FieldTower& F, const SuiteOptions& opt) {
  Counter census, moves, stabilizers;
  Rng rng(opt.seed);
  const auto closed = orbit_census(F);
  std::uint64_t total = 0;
  Json fams = Json::array();
  for (const auto& [f, c] : closed) {
    total += c.orbits * orbit_size(F, f);
    census(orbit_size(F, f) * stabilizer_size(F, f) == u_order(F));
    fams.push_back(Json{{"family", to_string(f)}, {"orbits", c.orbits}, {"orbit_size", orbit_size(F, f)}});
  }
  census(total == pattern_count(F));
  const bool exhaustive = exhaustive_scale(F);
  std::uint64_t partition_violations = 0;
  if (exhaustive) {
    const auto rep = verify_orbit_partition(F);
    partition_violations = rep.violations;
    census(rep.violations == 0 && rep.patterns == pattern_count(F));
    for (const auto& [f, c] : closed) census(rep.census.count(f) && rep.census.at(f).orbits == c.orbits);
  }
  for (std::uint64_t n = 0; n < opt.budget; ++n) {
    const Pattern A = random_pattern(F, rng);
    const UElem u = random_u(F, rng);
    const Pattern B = act_dot(F, A, u);
    const Pattern C = canonical(F, A);
    moves(family_of(B) == family_of(A) && canonical(F, B) == C && canonical(F, C) == C);
  }
  // Brute force at q = 3, closed-form membership plus the orbit-stabilizer count elsewhere.
  const int per_family = 20;
  for (Family f : {Family::F12, Family::F3, Family::F4, Family::F5, Family::F6}) {
    const auto reps = canonical_representatives(F, f);
    for (int n = 0; n < per_family; ++n) {
      const Pattern A = reps[rng.uniform(reps.size())];
      if (!exhaustive && (f == Family::F12 || f == Family::F3)) {
        // Too large to list: U itself, and the t2 = 0 subgroup.
        for (int m = 0; m < 50; ++m) {
          UElem u = random_u(F, rng);
          if (f == Family::F3) {
            stabilizers(stabilizes(F, A, u) == (u.t2.v == 0));
            u.t2 = Fq{};
          }
          stabilizers(stabilizes(F, A, u));
        }
        continue;
      }
      const auto stab = stabilizer_closed(F, A);
      stabilizers(stab.size() == stabilizer_size(F, f));
      if (exhaustive) {
        stabilizers(stabilizer_brute(F, A) == stab);
      } else {
        for (int m = 0; m < 50; ++m) stabilizers(stabilizes(F, A, stab[rng.uniform(stab.size())]));
      }
    }
  }
  SuiteResult r{"orbit", false, {}};
  r.details = Json{{"families", fams},
                   {"exhaustive", exhaustive},
                   {"partition_violations", partition_violations},
                   {"census", census.json()},
                   {"invariance", moves.json()},
                   {"stabilizers", stabilizers.json()}};
  r.pass = census.failures + moves.failures + stabilizers.failures == 0;
  return r;
}

SuiteResult partition_suite(const FieldTower& F, const SuiteOptions& opt) {
  const auto rep = verify_partition(F, opt.seed, opt.budget);
  Json fams = Json::object();
  for (const auto& [f, c] : rep.observed_by_family) fams[to_string(f)] = c;
  SuiteResult r{"partition", rep.ok(), {}};
  r.details = Json{{"exhaustive", rep.exhaustive},
                   {"elements", rep.elements},
                   {"ids_expected", rep.ids_expected},
                   {"ids_observed", rep.ids_observed},
                   {"size_mismatches", rep.size_mismatches},
                   {"member_mismatches", rep.member_mismatches},
                   {"conjugation_checks", rep.conjugation_checks},
                   {"conjugation_violations", rep.conjugation_violations},
                   {"biorbit_trials", rep.biorbit_trials},
                   {"biorbit_hits", rep.biorbit_hits},
                   {"biorbit_violations", rep.biorbit_violations},
                   {"observed_by_family", fams}};
  return r;
}

// Table shape, degrees and the cheap-family constancy scan.
SuiteResult table_suite(const FieldTower& F, const SuiteOptions& opt) {
  const auto t = build_table(F);
  Counter shape, degrees;
  shape(t.rows.size() == superclass_count(F) && t.cols.size() == superclass_count(F));
  std::uint64_t sum = 0;
  for (auto s : t.class_sizes) sum += s;
  shape(sum == u_order(F));
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    degrees(t.at(r, 0).exp == 0 && t.at(r, 0).coef == static_cast<std::int64_t>(basis_size(F, t.rows[r])));
  AxiomOptions a;
  a.seed = opt.seed;
  a.all_representatives = false;
  a.random_pairs = 0;
  a.all_pairs = false;
  a.sampled_pairs = 0;
  a.invertibility = false;
  const bool exhaustive = exhaustive_scale(F);
  if (exhaustive) {
    a.exhaustive_constancy = true;
  } else {
    a.random_pairs = std::min<std::uint64_t>(opt.budget, 1000);
    a.max_basis = 100000;
  }
  const auto rep = verify_axioms(F, t, a);
  SuiteResult r{"table", false, {}};
  r.details = Json{{"characters", t.rows.size()},
                   {"classes", t.cols.size()},
                   {"shape", shape.json()},
                   {"degrees", degrees.json()},
                   {"exhaustive_constancy", exhaustive},
                   {"constancy", Json{{"checks", rep.constancy_checks}, {"failures", rep.constancy_failures}}}};
  r.pass = shape.failures + degrees.failures + rep.constancy_failures == 0;
  return r;
}

SuiteResult axioms_suite(const FieldTower& F, const SuiteOptions& opt) {
  const auto t = build_table(F);
  AxiomOptions a;
  a.seed = opt.seed;
  a.random_pairs = std::min<std::uint64_t>(opt.budget, 1000);
  if (!exhaustive_scale(F)) {
    a.all_representatives = false;
    a.unit_representatives = true;
    a.max_basis = 100000;
    a.all_pairs = false;
    a.sampled_pairs = std::min<std::uint64_t>(opt.budget, 100000);
    a.invertibility = false;
  }
  const auto rep = verify_axioms(F, t, a);
  SuiteResult r{"axioms", rep.ok(), {}};
  r.details = Json{{"characters", rep.characters},
                   {"classes", rep.classes},
                   {"identity_class", rep.identity_class},
                   {"degree_failures", rep.degree_failures},
                   {"constancy", Json{{"checks", rep.constancy_checks}, {"failures", rep.constancy_failures}}},
                   {"orthogonality", Json{{"pairs", rep.orthogonality_pairs},
                                          {"failures", rep.orthogonality_failures},
                                          {"norm_failures", rep.norm_failures}}},
                   {"invertibility_checked", rep.invertibility_checked}};
  if (rep.invertibility_checked)
    r.details["invertibility"] = Json{{"invertible", rep.certificate.invertible},
                                      {"ell", rep.certificate.ell},
                                      {"omega", rep.certificate.omega},
                                      {"rank", rep.certificate.rank}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"field", "group", "cocycle", "orbit", "partition", "table", "axioms"};
  return names;
}

bool exhaustive_scale(const FieldTower& F) { return u_order(F) <= (std::uint64_t{1} << 24); }

SuiteResult run_suite(const FieldTower& F, const std::string& name, const SuiteOptions& opt) {
  if (opt.budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
  if (name == "field") return field_suite(F, opt);
  if (name == "group") return group_suite(F, opt);
  if (name == "cocycle") return cocycle_suite(F, opt);
  if (name == "orbit") return orbit_suite(F, opt);
  if (name == "partition") return partition_suite(F, opt);
  if (name == "table") return table_suite(F, opt);
  if (name == "axioms") return axioms_suite(F, opt);
  throw Error(ErrorKind::InvalidArgument, "unknown suite: " + name);
}

}  // namespace tri3d4
