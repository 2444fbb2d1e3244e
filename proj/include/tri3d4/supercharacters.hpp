#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tri3d4/monomial.hpp"
#include "tri3d4/superclasses.hpp"

namespace tri3d4 {

enum class CharFamily { Lin, F3, F4, F5, F6 };
std::string to_string(CharFamily f);

// Parameters: Lin (A12, A23), F3 (A13*, A12bar), F4 (A15*, -), F5 (A16*, -), F6 (A17*, -). F_q values are embedded.
struct SupercharId {
  CharFamily family = CharFamily::Lin;
  Fq3 a{};
  Fq3 b{};
  friend constexpr auto operator<=>(const SupercharId&, const SupercharId&) = default;
};

// Table row order: Lin (0,0), Lin (A12 != 0, 0), Lin (0, A23 != 0), Lin (both), F3, F4, F5, F6.
std::vector<SupercharId> supercharacter_ids(const FieldTower& F);
std::uint64_t basis_size(const FieldTower& F, const SupercharId& id);
void supermodule_basis(const FieldTower& F, const SupercharId& id, const std::function<void(const Pattern&)>& visit);

// Sum of chi_C(u) over the basis patterns C fixed by u.
CycInt psi_super_definitional(const FieldTower& F, const SupercharId& id, const UElem& u);
// Same, with u^{-1} as a matrix and f(u) precomputed.
RootSum psi_super_definitional(const FieldTower& F, const SupercharId& id, const Mat8& u_inv, const Pattern& fu);

// Every table cell is coef * zeta_p^exp.
struct TableEntry {
  std::int64_t coef = 0;
  std::uint32_t exp = 0;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};
CycInt to_cyc(std::uint32_t p, const TableEntry& e);

TableEntry psi_super_closed(const FieldTower& F, const SupercharId& id, const SuperclassId& cls);

struct SupercharTable {
  std::uint32_t p = 0, k = 0, q = 0;
  std::vector<SupercharId> rows;
  std::vector<SuperclassId> cols;
  std::vector<std::uint64_t> class_sizes;
  std::vector<TableEntry> cells;  // row-major

  const TableEntry& at(std::size_t r, std::size_t c) const { return cells[r * cols.size() + c]; }
  TableEntry& at(std::size_t r, std::size_t c) { return cells[r * cols.size() + c]; }
};
SupercharTable build_table(const FieldTower& F);

// (1/|U|) sum_K |K| Psi_1(K) conj(Psi_2(K))
CycRat inner_product_super(const SupercharTable& t, std::size_t r1, std::size_t r2);

// Rank of the table over F_l, with zeta sent to an element of order p, for primes l = 1 mod p.
// Full rank at any such l certifies invertibility over Q(zeta_p).
struct InvertibilityCertificate {
  bool invertible = false;
  std::uint64_t ell = 0;
  std::uint64_t omega = 0;
  std::size_t rank = 0;
};
InvertibilityCertificate certify_invertible(const SupercharTable& t, int attempts = 3);

struct AxiomOptions {
  std::uint64_t seed = 42;
  std::uint64_t random_pairs = 1000;
  bool all_representatives = true;    // definitional vs closed on one representative per superclass
  bool unit_representatives = false;  // one class per family with parameters 1 (C13: t3bar = 0)
  std::uint64_t max_basis = UINT64_MAX;  // random draws skip larger bases; unit checks keep only parameter 1 there
  bool exhaustive_constancy = false;  // Lin and F3 over all of U
  bool all_pairs = true;              // orthogonality of all pairs; otherwise `sampled_pairs`
  std::uint64_t sampled_pairs = 10000;
  bool invertibility = true;
};

struct AxiomReport {
  std::uint64_t characters = 0, classes = 0;
  bool identity_class = false;
  std::uint64_t degree_failures = 0;
  std::uint64_t constancy_checks = 0, constancy_failures = 0;
  std::uint64_t orthogonality_pairs = 0, orthogonality_failures = 0;
  std::uint64_t norm_failures = 0;
  bool invertibility_checked = false;
  InvertibilityCertificate certificate;
  bool ok() const {
    return characters == classes && identity_class && degree_failures == 0 && constancy_failures == 0 &&
           orthogonality_failures == 0 && norm_failures == 0 && (!invertibility_checked || certificate.invertible);
  }
};
AxiomReport verify_axioms(const FieldTower& F, const SupercharTable& t, const AxiomOptions& opt);

}  // namespace tri3d4
