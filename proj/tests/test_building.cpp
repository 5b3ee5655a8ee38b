#include <gtest/gtest.h>

#include "support.hpp"

using namespace parabolica;

TEST(IncidenceModels, Counts) {
  IncidenceSystem s2 = incidence_model_subsets(2);
  EXPECT_EQ(s2.size(), 6u);
  // each of the 3 pairs contains 2 singletons
  EXPECT_EQ(s2.edge_count(), 6u);
  EXPECT_EQ(full_flags(s2).size(), 6u);
  EXPECT_EQ(flags(s2, {}).size(), 1u);
  EXPECT_EQ(flags(s2, {1}).size(), 3u);

  IncidenceSystem r2 = incidence_model_admissible(2);
  EXPECT_EQ(r2.size(), 8u);
  EXPECT_EQ(full_flags(r2).size(), 8u);

  IncidenceSystem s1 = incidence_model_subsets(1);
  EXPECT_EQ(s1.size(), 2u);
  EXPECT_EQ(s1.edge_count(), 0u);

  EXPECT_EQ(incidence_model_admissible(3).size(), 26u);
  EXPECT_THROW(IncidenceSystem({1}).add("x", 2), DomainError);
}

TEST(IncidenceModels, FaceMaps) {
  IncidenceSystem s3 = incidence_model_subsets(3);
  for (const auto& f : full_flags(s3)) {
    Flag g = face(s3, f, {1, 3});
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(s3.type(g[0]), 1);
    EXPECT_EQ(s3.type(g[1]), 3);
  }
  auto complex = flag_complex(s3);
  EXPECT_EQ(complex.at({1, 2, 3}).size(), 24u);  // chains in a 4-set
  EXPECT_EQ(complex.at({}).size(), 1u);
}

TEST(Chambers, FromIncidenceAreThin) {
  FlagChambers fc = chambers_from_incidence(incidence_model_subsets(2));
  EXPECT_EQ(fc.system.size(), 6u);
  EXPECT_TRUE(fc.system.is_thin());
  EXPECT_TRUE(fc.system.is_connected());
  for (auto l : fc.system.labels())
    for (std::size_t c = 0; c < fc.system.size(); ++c) EXPECT_EQ(fc.system.panel(l, c).size(), 2u);

  ChamberSystem one({1, 2}, {"c"});
  EXPECT_EQ(one.panel(1, 0).size(), 1u);
  Coresidues cr = coresidues(one);
  EXPECT_EQ(cr.incidence.size(), 2u);
  EXPECT_EQ(cr.incidence.edge_count(), 1u);
}

TEST(Models, SizesAndGroups) {
  EXPECT_EQ(apartment_model_A(1).size(), 2u);
  EXPECT_EQ(apartment_model_A(1).structure_group_order(), 2u);
  EXPECT_EQ(apartment_model_A(2).size(), 6u);
  EXPECT_EQ(apartment_model_A(2).structure_group_order(), 6u);
  EXPECT_EQ(apartment_model_B(2).size(), 8u);
  EXPECT_EQ(apartment_model_B(2).structure_group_order(), 8u);
  EXPECT_EQ(apartment_model_A(3).size(), 24u);
  EXPECT_EQ(apartment_model_B(3).size(), 48u);
}

TEST(WDistance, Examples) {
  ThinChamberSystem a2 = apartment_model_A(2);
  WDistance d(a2);
  EXPECT_TRUE(d(0, 0).empty());
  std::size_t longest = 0;
  for (std::size_t c = 0; c < a2.size(); ++c) longest = std::max(longest, d(0, c).size());
  EXPECT_EQ(longest, 3u);
  EXPECT_TRUE(d.axiom_violations().empty());
  for (std::size_t b = 0; b < a2.size(); ++b)
    for (std::size_t c = 0; c < a2.size(); ++c) {
      EXPECT_EQ(a2.apply(b, d(b, c)), c);
      EXPECT_EQ(d(c, b), d.canonical(WDistance::inverse(d(b, c))));
      // path composition: walking δ(b,c) then δ(c,e) from b lands on e
      for (std::size_t e = 0; e < a2.size(); ++e) {
        GroupWord w = d(b, c);
        w.insert(w.end(), d(c, e).begin(), d(c, e).end());
        EXPECT_EQ(a2.apply(b, w), e);
      }
    }
  EXPECT_TRUE(WDistance(apartment_model_B(3)).axiom_violations().empty());
}

TEST(Isomorphism, LabelPreserving) {
  auto a = apartment_model_A(2);
  for (std::size_t c = 0; c < a.size(); ++c) EXPECT_TRUE(label_isomorphism(a, 0, a, c).has_value());
  EXPECT_FALSE(label_isomorphism(apartment_model_A(2), 0, apartment_model_B(2), 0).has_value());
}

TEST(Reconstruction, ModelsAreRecovered) {
  for (const auto& g : {incidence_model_subsets(2), incidence_model_subsets(3), incidence_model_admissible(2)}) {
    Reconstruction r = reconstruct(g);
    EXPECT_TRUE(r.flag_regular);
    EXPECT_TRUE(r.residually_connected);
    EXPECT_TRUE(r.isomorphism);
  }
  // two incident points, no other structure: not flag regular over {1,2}
  IncidenceSystem bad({1, 2});
  bad.add("a", 1);
  bad.add("b", 2);
  bad.add("c", 2);
  bad.connect(0, 1);
  EXPECT_FALSE(is_flag_regular(bad));
}

TEST(Dot, Output) {
  std::string dot = to_dot(incidence_model_subsets(2), "s");
  EXPECT_EQ(dot.rfind("graph s {", 0), 0u);
  EXPECT_NE(dot.find("label=\"{1,2}\""), std::string::npos);
  EXPECT_EQ(dot_quote("a\"b"), "\"a\\\"b\"");
}
