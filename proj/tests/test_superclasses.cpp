#include <gtest/gtest.h>

#include <set>

#include "tri3d4/superclasses.hpp"

using namespace tri3d4;

TEST(Superclasses, ClassifyExamples) {
  FieldTower F(3, 1);
  EXPECT_EQ(classify_element(F, UElem{}).family, ClassFamily::C0);
  const auto c6 = classify_element(F, UElem{{}, {}, {}, {}, {}, Fq{1}});
  EXPECT_EQ(c6.family, ClassFamily::C6);
  EXPECT_EQ(c6.a, Fq3{1});
  EXPECT_EQ(superclass_size(F, ClassFamily::C6), 1u);
  Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    UElem u = random_u(F, rng);
    u.t1 = {};
    u.t2 = {};
    u.t3 = Fq3{7};
    EXPECT_EQ(classify_element(F, u), (SuperclassId{ClassFamily::C3, Fq3{7}, {}}));
  }
  EXPECT_EQ(superclass_size(F, ClassFamily::C12), 6561u);
  EXPECT_EQ(superclass_size(F, ClassFamily::C13), 729u);
}

TEST(Superclasses, CatalogCountAndSizes) {
  for (std::uint32_t p : {3u, 5u}) {
    FieldTower F(p, 1);
    const SuperclassCatalog cat(F);
    const std::uint64_t q = p;
    EXPECT_EQ(cat.size(), q * q * q * q * q + q * q * q * q + q * q * q - q * q + 2 * q - 3);
    EXPECT_EQ(cat.size(), superclass_count(F));
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      total += cat.size_of(i);
      EXPECT_EQ(cat.index(cat.ids()[i]), i);
      EXPECT_EQ(classify_element(F, representative(F, cat.ids()[i])), cat.ids()[i]);
    }
    EXPECT_EQ(total, u_order(F));
    EXPECT_EQ(cat.ids().front().family, ClassFamily::C0);
  }
  FieldTower F(3, 1);
  EXPECT_EQ(SuperclassCatalog(F).size(), 345u);
}

TEST(Superclasses, C2Sublabels) {
  FieldTower F(3, 1);
  const SuperclassId id{ClassFamily::C2, Fq3{2}, {}};
  std::map<std::pair<bool, std::uint32_t>, std::uint64_t> by_label;
  superclass_members(F, id, [&](const UElem& u) {
    const auto s = c2_sublabel(F, u);
    ++by_label[{s.via_x4, s.via_x4 ? s.t4_star.v : s.t5_star.v}];
  });
  // q^3 - 1 biorbits of size q^5 and q of size q^4
  EXPECT_EQ(by_label.size(), 26u + 3u);
  for (const auto& [label, n] : by_label) EXPECT_EQ(n, label.first ? 243u : 81u);
}

TEST(Superclasses, ExhaustivePartitionAtThree) {
  FieldTower F(3, 1);
  const auto r = verify_partition(F, 42, 2000);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.elements, 531441u);
  EXPECT_EQ(r.ids_expected, 345u);
  EXPECT_EQ(r.ids_observed, 345u);
  EXPECT_EQ(r.size_mismatches, 0u);
  EXPECT_EQ(r.member_mismatches, 0u);
  EXPECT_EQ(r.conjugation_checks, 531441u * 12u);
  EXPECT_EQ(r.conjugation_violations, 0u);
  EXPECT_EQ(r.biorbit_violations, 0u);
  EXPECT_TRUE(r.ok());
  const std::uint64_t q = 3;
  EXPECT_EQ(r.observed_by_family.at(ClassFamily::C2), (q - 1) * ((q * q * q - 1) * 243 + 243));
}

TEST(Superclasses, SampledPartitionAtFive) {
  FieldTower F(5, 1);
  const auto r = verify_partition(F, 7, 20000);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.conjugation_violations, 0u);
  EXPECT_EQ(r.member_mismatches, 0u);
  EXPECT_TRUE(r.ok());
}
