#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tri3d4/group.hpp"

namespace tri3d4 {

// Listed in the column order of the supercharacter table.
enum class ClassFamily { C0, C13, C2, C12, C3, C4, C5, C6 };
std::string to_string(ClassFamily f);

// Parameters: C13 (t1*, t3bar), C12 (t1*, t2*), C2 (t2*, -), C3/C4/C5/C6 (t*, -). F_q values are embedded.
struct SuperclassId {
  ClassFamily family = ClassFamily::C0;
  Fq3 a{};
  Fq3 b{};
  friend constexpr auto operator<=>(const SuperclassId&, const SuperclassId&) = default;
};

SuperclassId classify_element(const FieldTower& F, const UElem& u);

// Which biorbit of C2(t2*) an element lies in: x2 x4(t4*) when t4* != 0, else x2 x5(t5*).
struct C2Sublabel {
  bool via_x4 = false;
  Fq3 t4_star{};
  Fq t5_star{};
};
C2Sublabel c2_sublabel(const FieldTower& F, const UElem& u);

std::uint64_t superclass_size(const FieldTower& F, ClassFamily f);
std::uint64_t superclass_count(const FieldTower& F);
UElem representative(const FieldTower& F, const SuperclassId& id);
// Closed-form parametrization of the members; BudgetExceeded beyond the budget.
void superclass_members(const FieldTower& F, const SuperclassId& id, const std::function<void(const UElem&)>& visit,
                        std::uint64_t budget = 1u << 24);

// All ids in table column order with parameters in index order.
class SuperclassCatalog {
 public:
  explicit SuperclassCatalog(const FieldTower& F);
  const std::vector<SuperclassId>& ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  std::size_t index(const SuperclassId& id) const;
  std::uint64_t size_of(std::size_t i) const noexcept { return sizes_[i]; }

 private:
  std::vector<SuperclassId> ids_;
  std::vector<std::uint64_t> sizes_;
  std::map<SuperclassId, std::size_t> lookup_;
};

struct PartitionReport {
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t elements = 0;
  std::uint64_t ids_expected = 0;
  std::uint64_t ids_observed = 0;
  std::uint64_t size_mismatches = 0;
  std::uint64_t member_mismatches = 0;
  std::uint64_t conjugation_checks = 0;
  std::uint64_t conjugation_violations = 0;
  std::uint64_t biorbit_trials = 0;
  std::uint64_t biorbit_hits = 0;
  std::uint64_t biorbit_violations = 0;
  std::map<ClassFamily, std::uint64_t> observed_by_family;
  bool ok() const {
    return ids_observed == ids_expected && size_mismatches == 0 && member_mismatches == 0 &&
           conjugation_violations == 0 && biorbit_violations == 0;
  }
};

// Exhaustive over U when q^12 <= 2^24; otherwise samples `samples` elements.
PartitionReport verify_partition(const FieldTower& F, std::uint64_t seed, std::uint64_t samples);

}  // namespace tri3d4
