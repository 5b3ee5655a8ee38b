#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace parabolica;
using namespace testing_support;

TEST(Types, StandardParabolicsHaveTheirTypes) {
  for (const auto& cat : {gl(3), gl(4), so(3, 2)}) {
    TypeSystem ts = catalog_type_system(cat);
    EXPECT_EQ(ts.rank(), cat.family == "so" ? 2u : static_cast<std::size_t>(cat.p - 1));
    EXPECT_EQ(ts.type_of(ts.reference()), ts.all_labels());
    EXPECT_TRUE(ts.type_of(make_parabolic(cat.algebra, cat.algebra->whole())).empty());
    for (auto l : ts.labels()) EXPECT_EQ(ts.type_of(ts.maximal(l)), TypeSet{l});
  }
}

// Label j on gl(n) is the stabilizer of a j-dimensional subspace.
TEST(Types, CatalogLabelsAreSubspaceDimensions) {
  auto g = gl(4);
  TypeSystem ts = catalog_type_system(g);
  for (int j = 1; j <= 3; ++j) {
    std::vector<Vector> span;
    for (int i = 0; i < j; ++i) span.push_back(unit_vector(4, static_cast<std::size_t>(i)));
    ParabolicData p = flag_stabilizer(g, make_flag(g, {span}));
    EXPECT_EQ(ts.type_of(p), TypeSet{j});
  }
  auto s = so(4, 3);
  TypeSystem tss = catalog_type_system(s);
  for (int j = 1; j <= 3; ++j) {
    std::vector<Vector> span;
    for (int i = 1; i <= j; ++i) span.push_back(unit_vector(7, so_index_e(i)));
    EXPECT_EQ(tss.type_of(flag_stabilizer(s, make_flag(s, {span}))), TypeSet{j});
  }
}

TEST(Duality, Examples) {
  TypeSystem g3 = catalog_type_system(gl(3));
  EXPECT_EQ(g3.duality(), (TypeMap{{1, 2}, {2, 1}}));
  TypeSystem g5 = catalog_type_system(gl(5));
  EXPECT_EQ(g5.duality(), (TypeMap{{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
  for (const auto& cat : {so(3, 2), so(4, 2), so(4, 3)}) {
    TypeMap op = catalog_type_system(cat).duality();
    for (auto [k, v] : op) EXPECT_EQ(k, v);
    EXPECT_TRUE(is_involution(op));
  }
}

// so(4,2): the minimal Levi carries a compact so(2) in its center, which the
// split part discards.
TEST(SplitPart, DropsAnisotropicCenter) {
  auto s = so(4, 2);
  const LieAlgebra& g = *s.algebra;
  auto ml = standard_minimal_levi(s);
  Subspace z = center_of(g, ml.levi);
  EXPECT_EQ(z.dim(), 3u);
  EXPECT_EQ(split_part(g, z), standard_cartan(s));
  auto h = gl(3);
  Subspace zc = center_of(*h.algebra, standard_minimal_levi(h).levi);
  EXPECT_EQ(split_part(*h.algebra, zc), zc);
  TypeSystem ts = catalog_type_system(s);
  for (auto l : ts.labels()) EXPECT_EQ(ts.type_of(opposite(ts.maximal(l))), TypeSet{l});
}

TEST(QuotientTypes, WholeAlgebraIsIdentity) {
  TypeSystem ts = catalog_type_system(gl(3));
  QuotientTypes qt = quotient_types(ts, make_parabolic(ts.algebra(), ts.algebra()->whole()));
  EXPECT_TRUE(qt.type_q.empty());
  EXPECT_EQ(qt.iota, (TypeMap{{1, 1}, {2, 2}}));
  EXPECT_EQ(qt.nu, (TypeMap{{1, 1}, {2, 2}}));
}

// Projection from a line in gl(4): the quotient is gl(3)-like with labels
// shifted by one (ι) and, after dualities, ν = id.
TEST(QuotientTypes, LineInGl4) {
  auto g = gl(4);
  TypeSystem ts = catalog_type_system(g);
  QuotientTypes qt = quotient_types(ts, ts.maximal(1));
  EXPECT_EQ(qt.type_q, TypeSet{1});
  EXPECT_EQ(qt.iota, (TypeMap{{1, 2}, {2, 3}}));
  EXPECT_EQ(qt.nu, (TypeMap{{1, 1}, {2, 2}}));
  EXPECT_EQ(qt.q0->rank(), 2u);
}

TEST(Apartments, Sizes) {
  for (auto [cat, size] : {std::pair{gl(2), 2u}, {gl(3), 6u}, {so(3, 2), 8u}}) {
    TypeSystem ts = catalog_type_system(cat);
    LieApartment ap = lie_apartment(ts, standard_cartan(cat));
    EXPECT_EQ(ap.thin.size(), size);
    EXPECT_TRUE(label_isomorphism(ap.thin, 0, matching_model(cat), 0).has_value());
    for (std::size_t c = 0; c < ap.chambers.size(); ++c) EXPECT_EQ(ap.index_of(ap.chambers[c]), c);
  }
}

TEST(Delta, Examples) {
  TypeSystem ts = catalog_type_system(gl(3));
  EXPECT_TRUE(delta_parabolic(ts, ts.reference(), ts.reference()).empty());
  EXPECT_EQ(delta_parabolic(ts, ts.reference(), opposite(ts.reference())).size(), 3u);
}

// Two apartments through the reference chamber, glued by automorphisms
// fixing it, agree on their overlap.
TEST(Building, GluedApartmentsAgree) {
  std::mt19937_64 rng(31);
  for (const auto& cat : {gl(3), so(3, 2)}) {
    TypeSystem ts = catalog_type_system(cat);
    const LieAlgebra& g = *cat.algebra;
    std::vector<Matrix> autos;
    const auto nil = ts.reference().nilradical;
    for (int t = 0; t < 3; ++t) {
      Element x = zero_vector(g.dim());
      for (const auto& v : nil.basis_vectors()) x = x + Rational(std::uniform_int_distribution<int>(-1, 2)(rng)) * v;
      if (is_zero(x)) x = nil.basis_vector(0);
      autos.push_back(g.exp_ad(x));
    }
    BuildingReport rep = verify_building(ts, standard_cartan(cat), autos);
    EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());
    EXPECT_GT(rep.overlap, 0u);
  }
}
