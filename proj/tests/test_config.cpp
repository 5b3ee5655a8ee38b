#include <gtest/gtest.h>

#include "support.hpp"

using namespace parabolica;

TEST(Simplex, StandardPoints) {
  auto g = gl(3);
  std::vector<Vector> pts{unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)};
  StandardConfiguration c = simplex_configuration(g, pts);
  EXPECT_EQ(c.assignment.size(), 6u);
  EXPECT_EQ(c.levi.dim(), 3u);
  // images are costandard exactly when the subsets are nested
  for (std::size_t a = 0; a < c.elements.size(); ++a)
    for (std::size_t b = a + 1; b < c.elements.size(); ++b) {
      const auto &x = c.elements[a], &y = c.elements[b];
      auto nested = [](std::vector<int> s, std::vector<int> t) {
        return std::includes(t.begin(), t.end(), s.begin(), s.end());
      };
      bool incident = x.size() != y.size() && (nested(x, y) || nested(y, x));
      EXPECT_EQ(is_costandard(c.assignment[a], c.assignment[b]), incident);
    }
  auto g2 = gl(2);
  EXPECT_EQ(simplex_configuration(g2, {unit_vector(2, 0), unit_vector(2, 1)}).assignment.size(), 2u);
  EXPECT_THROW(simplex_configuration(g, {unit_vector(3, 0), unit_vector(3, 0), unit_vector(3, 2)}), DomainError);
}

TEST(Cross, Examples) {
  auto s = so(3, 2);
  std::vector<Vector> pos{unit_vector(5, so_index_e(1)), unit_vector(5, so_index_e(2))};
  std::vector<Vector> neg{unit_vector(5, so_index_f(2, 1, 1)), unit_vector(5, so_index_f(2, 1, 2))};
  EXPECT_EQ(cross_configuration(s, pos, neg).assignment.size(), 8u);
  EXPECT_EQ(cross_configuration(s, {pos[0]}, {neg[0]}).assignment.size(), 2u);
  EXPECT_THROW(cross_configuration(s, {pos[0]}, {neg[1]}), DomainError);
  auto o = so(4, 3);
  std::vector<Vector> p3, n3;
  for (int i = 1; i <= 3; ++i) {
    p3.push_back(unit_vector(7, so_index_e(i)));
    n3.push_back(unit_vector(7, so_index_f(3, 1, i)));
  }
  EXPECT_EQ(cross_configuration(o, p3, n3).assignment.size(), 26u);
}

TEST(Projection, WholeAlgebraKeepsTypes) {
  auto g = gl(3);
  TypeSystem ts = catalog_type_system(g);
  StandardConfiguration c = simplex_configuration(g, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)});
  ProjectedConfiguration pc = project_configuration(ts, make_parabolic(g.algebra, g.algebra->whole()), c);
  EXPECT_EQ(pc.source.size(), 6u);
  EXPECT_EQ(pc.g_type, pc.q0_type);
  EXPECT_EQ(pc.incidence.edge_count(), c.model.edge_count());
}

TEST(Projection, CentreOnAFaceIsRejected) {
  auto g = gl(3);
  TypeSystem ts = catalog_type_system(g);
  StandardConfiguration c = simplex_configuration(g, {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)});
  ParabolicData q = flag_stabilizer(g, make_flag(g, {{unit_vector(3, 0)}}));
  EXPECT_THROW(project_configuration(ts, q, c), DomainError);
}

TEST(Report, QuadrilateralAndOctahedron) {
  auto t = commands::config_project(commands::tetrahedron_witness());
  const auto& m = t.report.at("incidence")[0];
  EXPECT_EQ(m.at("row_sums"), commands::json({3, 3, 3, 3}));
  EXPECT_EQ(m.at("column_sums"), commands::json({2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(t.report.at("nu"), commands::json({{"1", 1}, {"2", 2}}));
  EXPECT_EQ(t.dot.rfind("graph quadrilateral {", 0), 0u);

  auto o = commands::config_project(commands::octahedron_witness());
  const auto& mo = o.report.at("incidence")[0];
  EXPECT_EQ(mo.at("matrix").size(), 12u);
  EXPECT_EQ(mo.at("matrix")[0].size(), 8u);
  for (const auto& x : mo.at("row_sums")) EXPECT_EQ(x, 2);
  for (const auto& x : mo.at("column_sums")) EXPECT_EQ(x, 3);
  EXPECT_EQ(o.report.at("source_elements"), 26);
}

TEST(Report, SingleElement) {
  IncidenceSystem g({1, 2});
  g.add("x", 1);
  IncidenceReport r = incidence_report(g);
  EXPECT_EQ(r.types, std::vector<int>{1});
  EXPECT_TRUE(r.matrices.empty());
}
