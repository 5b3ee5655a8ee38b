#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace parabolica;
using namespace testing_support;

TEST(Catalog, Dimensions) {
  EXPECT_EQ(gl(3).algebra->dim(), 9u);
  EXPECT_EQ(sl(2).algebra->dim(), 3u);
  EXPECT_TRUE(sl(2).algebra->trace_form().is_nondegenerate());
  for (auto [p, q] : {std::pair{3, 2}, {2, 2}, {4, 3}, {3, 1}}) {
    const int m = p + q;
    EXPECT_EQ(so(p, q).algebra->dim(), static_cast<std::size_t>(m * (m - 1) / 2));
  }
  EXPECT_THROW(gl(0), DomainError);
  EXPECT_THROW(so(1, 2), DomainError);
}

// Realizations preserve the form: x^T B + B x = 0.
TEST(Catalog, OrthogonalRealizationPreservesForm) {
  auto s = so(3, 2);
  const Matrix& b = *s.gram;
  for (const auto& x : s.algebra->realization()) EXPECT_TRUE((x.transpose() * b + b * x).is_zero());
}

TEST(Flags, StabilizerDimensions) {
  auto g = gl(3);
  EXPECT_EQ(standard_borel(g).dim(), 6u);
  EXPECT_EQ(flag_stabilizer(g, make_flag(g, {{unit_vector(3, 0)}})).dim(), 7u);
  auto s = so(3, 2);
  ParabolicData line = flag_stabilizer(s, make_flag(s, {{unit_vector(5, so_index_e(1))}}));
  EXPECT_EQ(line.dim(), 7u);
  EXPECT_THROW(make_flag(s, {{unit_vector(5, so_index_w(2, 1))}}), DomainError);  // anisotropic
}

TEST(Flags, RecoveredFromParabolics) {
  auto g = gl(3);
  FlagSpec f = flag_from_parabolic(g, standard_borel(g));
  FlagSpec std_flag = standard_full_flag(g);
  ASSERT_EQ(f.chain.size(), std_flag.chain.size());
  for (std::size_t i = 0; i < f.chain.size(); ++i) EXPECT_EQ(f.chain[i], std_flag.chain[i]);
  EXPECT_TRUE(flag_from_parabolic(g, make_parabolic(g.algebra, g.algebra->whole())).chain.empty());

  auto s = so(3, 2);
  Subspace l = Subspace::span(5, {unit_vector(5, so_index_e(1))});
  FlagSpec fl = flag_from_parabolic(s, flag_stabilizer(s, make_flag(s, {{unit_vector(5, so_index_e(1))}})));
  ASSERT_EQ(fl.chain.size(), 1u);
  EXPECT_EQ(fl.chain[0], l);
}

TEST(MinimalLevi, Examples) {
  auto g = gl(3);
  auto ml = standard_minimal_levi(g);
  EXPECT_EQ(ml.levi, ml.cartan);
  EXPECT_EQ(ml.levi.dim(), 3u);
  EXPECT_EQ(standard_minimal_levi(so(3, 2)).levi.dim(), 2u);
  auto m42 = standard_minimal_levi(so(4, 2));
  EXPECT_EQ(m42.levi.dim(), 3u);
  EXPECT_EQ(m42.cartan.dim(), 2u);
}

TEST(Negatives, FailEveryCondition) {
  for (const auto& cat : {gl(2), gl(3), sl(3), so(3, 2), so(4, 2)})
    for (const auto& n : curated_negatives(cat))
      EXPECT_TRUE(parabolic_conditions(*cat.algebra, n.space).none()) << cat.name() << " " << n.name;
}

TEST(Properties, RandomAutomorphismsPreserveStructure) {
  std::mt19937_64 rng(21);
  for (const auto& cat : {gl(3), so(3, 2)}) {
    auto ml = standard_minimal_levi(cat);
    const LieAlgebra& g = *cat.algebra;
    const Matrix gram = g.trace_form().gram();
    ParabolicData b = standard_borel(cat);
    for (int t = 0; t < 10; ++t) {
      Matrix a = random_inner_automorphism(*ml.root_datum, rng);
      EXPECT_TRUE(g.is_automorphism(a));
      EXPECT_EQ(a.transpose() * gram * a, gram);
      ParabolicData c = transform(b, a);
      EXPECT_EQ(c.dim(), b.dim());
      EXPECT_TRUE(parabolic_conditions(g, c.space).all());
    }
  }
}
