#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tri3d4/monomial.hpp"

namespace tri3d4 {

enum class Family { F12, F3, F4, F5, F6 };
std::string to_string(Family f);

Family family_of(const Pattern& A);
// Orbit representative: equal for two patterns exactly when they share a U-orbit.
Pattern canonical(const FieldTower& F, const Pattern& A);

std::uint64_t orbit_size(const FieldTower& F, Family f);
std::uint64_t stabilizer_size(const FieldTower& F, Family f);

// x_i(b) for the generating set, with their inverse matrices for the dot action.
class GeneratorAction {
 public:
  explicit GeneratorAction(const FieldTower& F);
  std::size_t size() const noexcept { return inv_.size(); }
  Pattern apply(const Pattern& A, std::size_t g) const { return act_dot_inv(*F_, A, inv_[g]); }

 private:
  const FieldTower* F_;
  std::vector<Mat8> inv_;
};

// Both return the orbit sorted by pattern order. BudgetExceeded when it grows past the budget.
std::vector<Pattern> orbit_bfs(const FieldTower& F, const Pattern& A, std::uint64_t budget = 1u << 22);
std::vector<Pattern> orbit_closed(const FieldTower& F, const Pattern& A, std::uint64_t budget = 1u << 24);

bool stabilizes(const FieldTower& F, const Pattern& A, const UElem& u);
// The parametrized stabilizer of the family of A, in u_index order of its free parameters.
std::vector<UElem> stabilizer_closed(const FieldTower& F, const Pattern& A, std::uint64_t budget = 1u << 24);
// Scans all of U; sorted by u_index.
std::vector<UElem> stabilizer_brute(const FieldTower& F, const Pattern& A);

using Position = std::pair<int, int>;
struct StructureReport {
  std::vector<Position> main;
  std::vector<Position> minor;
  Pattern verge;
  std::vector<Position> core;
  bool staircase = false;
  bool hook_separated = false;
};
std::vector<Position> support(const Pattern& A);
std::vector<Position> hook(int i);
StructureReport structure(const Pattern& A);

struct StaircaseReduction {
  Pattern rep;
  std::vector<UElem> witness;
};
StaircaseReduction staircase_reduce(const FieldTower& F, const Pattern& A);

// psi_A(u) over a precomputed orbit of A.
CycInt psi(const FieldTower& F, const std::vector<Pattern>& orbit, const UElem& u);
CycInt psi(const FieldTower& F, const Pattern& A, const UElem& u);
// Stabilizer formula: sum over D in O(B) of the averaged character over Stab(A, D).
CycRat inner_product_psi(const FieldTower& F, const Pattern& A, const Pattern& B);
// (1/|U|) sum_u psi_A(u) conj(psi_B(u)); enumerates U.
CycRat inner_product_psi_direct(const FieldTower& F, const Pattern& A, const Pattern& B);

// Canonical representatives of every orbit, family by family (F12, F3, F4, F5, F6).
std::vector<Pattern> canonical_representatives(const FieldTower& F, Family f);

struct FamilyCensus {
  std::uint64_t orbits = 0;
  std::map<std::uint64_t, std::uint64_t> size_histogram;
};
// Counts orbits from the canonical representatives and the stabilizer sizes.
std::map<Family, FamilyCensus> orbit_census(const FieldTower& F);
// Classifies every pattern and checks each canonical class against its BFS orbit (q^12 <= 2^24).
struct OrbitPartitionReport {
  std::map<Family, FamilyCensus> census;
  std::uint64_t patterns = 0;
  std::uint64_t violations = 0;
};
OrbitPartitionReport verify_orbit_partition(const FieldTower& F);

}  // namespace tri3d4
