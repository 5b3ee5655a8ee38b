#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace parabolica;
using namespace testing_support;

namespace {

ParabolicData borel_gl(const CatalogAlgebra& g, int n) { return make_parabolic(g.algebra, gl_upper(*g.algebra, n)); }

// Stabilizer of span{e1} in gl(3): first column zero below the diagonal.
Subspace line_stabilizer_gl3(const LieAlgebra& a) {
  return span_of(a, {"E11", "E12", "E13", "E22", "E23", "E32", "E33"});
}

}  // namespace

TEST(Recognition, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  EXPECT_TRUE(is_parabolic(a, a.whole()).parabolic);
  EXPECT_TRUE(is_parabolic(a, gl_upper(a, 2)).parabolic);
  auto cartan = is_parabolic(a, gl_cartan(a, 2));
  EXPECT_FALSE(cartan.parabolic);
  EXPECT_EQ(cartan.perp, span_of(a, {"E12", "E21"}));
  EXPECT_TRUE(parabolic_conditions(a, gl_upper(a, 2)).all());
  EXPECT_TRUE(parabolic_conditions(a, gl_cartan(a, 2)).none());
}

TEST(Nilradical, Examples) {
  auto g = gl(2);
  ParabolicData b = borel_gl(g, 2);
  EXPECT_EQ(b.nilradical, span_of(*g.algebra, {"E12"}));
  LeviQuotient lq = levi_quotient(b);
  EXPECT_EQ(lq.algebra->dim(), 2u);
  EXPECT_TRUE(lq.algebra->derived_algebra().is_zero());

  ParabolicData whole = make_parabolic(g.algebra, g.algebra->whole());
  EXPECT_TRUE(whole.nilradical.is_zero());
  EXPECT_EQ(levi_quotient(whole).algebra->dim(), 4u);

  auto h = gl(3);
  ParabolicData p = make_parabolic(h.algebra, line_stabilizer_gl3(*h.algebra));
  EXPECT_EQ(p.nilradical, span_of(*h.algebra, {"E12", "E13"}));
  LeviQuotient lp = levi_quotient(p);
  EXPECT_EQ(lp.algebra->dim(), 5u);
  EXPECT_EQ(lp.algebra->center().dim(), 2u);             // gl1 + gl2
  EXPECT_EQ(lp.algebra->derived_algebra().dim(), 3u);    // sl2
  EXPECT_EQ(relative_nilradical(*h.algebra, p.space), intrinsic_nilradical(*h.algebra, p.space));
}

// Lifts are constrained to [g,g], so on gl(2) the Borel lift is
// diag(-1/2, 1/2): ad-eigenvalue -1 on E12 and +1 on E21.
TEST(GradingLift, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  ParabolicData b = borel_gl(g, 2);
  GradingLift l = grading_lift(b);
  EXPECT_EQ(l.xi, combo(a, {{Rational(-1, 2), "E11"}, {Rational(1, 2), "E22"}}));
  EXPECT_EQ(eigen_dims(a, l.xi, {-1, 0, 1}), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(is_grading_lift(b, l.xi));
  EXPECT_TRUE(is_grading_lift(b, l.xi + el(a, "E12")));  // torsor under nil(b)

  ParabolicData whole = make_parabolic(g.algebra, a.whole());
  EXPECT_TRUE(is_zero(grading_lift(whole).xi));

  auto h = gl(3);
  ParabolicData p = make_parabolic(h.algebra, line_stabilizer_gl3(*h.algebra));
  GradingLift lp = grading_lift(p);
  EXPECT_EQ(eigen_dims(*h.algebra, lp.xi, {-1, 0, 1}), (std::vector<std::size_t>{2, 5, 2}));
}

TEST(Opposite, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  ParabolicData b = borel_gl(g, 2);
  ParabolicData lower = opposite(b);
  EXPECT_EQ(lower.space, span_of(a, {"E11", "E22", "E21"}));
  ParabolicData whole = make_parabolic(g.algebra, a.whole());
  EXPECT_EQ(opposite(whole, zero_vector(4)).space, a.whole());
  GradingLift l = grading_lift(b);
  EXPECT_EQ(opposite(opposite(b, l.xi), -l.xi).space, b.space);

  EXPECT_TRUE(is_opposite(b, lower));
  EXPECT_TRUE(is_weakly_opposite(b, lower));
  EXPECT_FALSE(is_costandard(b, lower));
  EXPECT_TRUE(is_costandard(b, b));
  EXPECT_TRUE(is_weakly_opposite(b, b) == (b.space == a.whole()));
  EXPECT_FALSE(is_opposite(b, b));
  EXPECT_TRUE(is_opposite(whole, whole));
}

TEST(Opposite, LineAndPlaneStabilizersAreCostandard) {
  auto h = gl(3);
  const LieAlgebra& a = *h.algebra;
  ParabolicData line = make_parabolic(h.algebra, line_stabilizer_gl3(a));
  ParabolicData plane = make_parabolic(h.algebra, span_of(a, {"E11", "E12", "E13", "E21", "E22", "E23", "E33"}));
  EXPECT_TRUE(is_costandard(line, plane));
  EXPECT_FALSE(is_weakly_opposite(line, plane));
}

TEST(Projection, Examples) {
  auto h = gl(3);
  const LieAlgebra& a = *h.algebra;
  ParabolicData q = make_parabolic(h.algebra, line_stabilizer_gl3(a));
  ParabolicData whole = make_parabolic(h.algebra, a.whole());
  Projection pg = project(q, whole);
  EXPECT_EQ(pg.in_g.space, q.space);
  EXPECT_EQ(pg.in_q0.space, pg.levi.algebra->whole());

  Projection po = project(q, opposite(q));
  EXPECT_EQ(po.in_g.space, q.space);
  EXPECT_EQ(po.in_q0.space, po.levi.algebra->whole());

  // costandard pair: the Borel inside q projects to a Borel of q0 = gl1+gl2
  ParabolicData b = make_parabolic(h.algebra, gl_upper(a, 3));
  Projection pb = project(q, b);
  EXPECT_EQ(pb.in_g.space, b.space);
  EXPECT_EQ(pb.in_q0.space.dim(), 4u);
  EXPECT_EQ(pb.in_q0.nilradical.dim(), 1u);
}

TEST(CompatibleLifts, CommuteAndGiveCommonLevi) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  ParabolicData b = borel_gl(g, 2), lower = opposite(b);
  auto lifts = compatible_lifts(b, lower);
  EXPECT_TRUE(is_zero(a.bracket(lifts.xi_p, lifts.xi_q)));
  EXPECT_TRUE(gl_cartan(a, 2).contains(lifts.xi_p));
  EXPECT_TRUE(gl_cartan(a, 2).contains(lifts.xi_q));
  EXPECT_EQ(common_levi(b, lower, true), gl_cartan(a, 2));
  EXPECT_EQ(common_levi(b, b, true), gl_cartan(a, 2));

  auto h = gl(3);
  auto rd = root_decomposition(h.algebra, gl_cartan(*h.algebra, 3));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    ParabolicData p = transform(borel_gl(h, 3), random_inner_automorphism(rd, rng));
    ParabolicData q = transform(opposite(borel_gl(h, 3)), random_inner_automorphism(rd, rng));
    Subspace l = common_levi(p, q, true);
    EXPECT_EQ(l.dim(), 3u);
    EXPECT_TRUE(intersect(p.space, q.space).contains(l));
    EXPECT_TRUE(h.algebra->bracket_spaces(l, l).is_zero());
  }
}

TEST(LowestWeightLine, Examples) {
  auto g = gl(2);
  ParabolicData b = borel_gl(g, 2);
  auto l = lowest_weight_line(b);
  EXPECT_EQ(l.module_dim, 4u);
  EXPECT_EQ(l.stabilizer, b.space);
  auto w = lowest_weight_line(make_parabolic(g.algebra, g.algebra->whole()));
  EXPECT_EQ(w.module_dim, 1u);
  EXPECT_EQ(w.stabilizer, g.algebra->whole());
  auto h = gl(3);
  auto l3 = lowest_weight_line(borel_gl(h, 3));
  EXPECT_EQ(l3.module_dim, 84u);
  EXPECT_EQ(l3.stabilizer, gl_upper(*h.algebra, 3));
  EXPECT_TRUE(l3.stabilizer_matches);
}

TEST(LowestWeightLine, BudgetIsEnforced) {
  auto h = gl(4);
  setenv("PARABOLICA_WEDGE_BUDGET", "10", 1);
  EXPECT_THROW(lowest_weight_line(borel_gl(h, 4)), DomainError);
  unsetenv("PARABOLICA_WEDGE_BUDGET");
}

// Random conjugates of standard parabolics: the filtration, nilradical and
// perp are all transported by the automorphism.
TEST(Properties, ConjugationEquivariance) {
  auto h = so(3, 2);
  TypeSystem ts = catalog_type_system(h);
  std::mt19937_64 rng(17);
  for (const auto& J : std::vector<TypeSet>{{}, {1}, {2}, {1, 2}}) {
    ParabolicData p = ts.standard_parabolic(J);
    for (int t = 0; t < 5; ++t) {
      Matrix phi = random_inner_automorphism(*ts.standard().ss.rd, rng);
      ParabolicData q = make_parabolic(h.algebra, image(phi, p.space));
      EXPECT_EQ(q.nilradical, image(phi, p.nilradical));
      for (int k = p.filtration.lo(); k <= p.filtration.hi(); ++k)
        EXPECT_EQ(q.filtration.level(k), image(phi, p.filtration.level(k)));
    }
  }
}
