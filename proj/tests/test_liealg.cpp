#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace parabolica;
using namespace testing_support;

TEST(Bracket, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  EXPECT_EQ(a.bracket(el(a, "E11"), el(a, "E12")), el(a, "E12"));
  Element x = combo(a, {{3, "E11"}, {-2, "E21"}, {1, "E12"}});
  EXPECT_TRUE(is_zero(a.bracket(x, x)));
  EXPECT_EQ(a.bracket_spaces(gl_cartan(a, 2), a.whole()), span_of(a, {"E12", "E21"}));
}

TEST(Transporter, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  Subspace b = gl_upper(a, 2);
  EXPECT_EQ(a.normalizer(b), b);
  EXPECT_EQ(a.transporter(a.zero(), b), a.whole());
  for (int n = 1; n <= 4; ++n) {
    auto h = gl(n);
    Element id = zero_vector(h.algebra->dim());
    for (int i = 1; i <= n; ++i) id = id + el(*h.algebra, "E" + std::to_string(i) + std::to_string(i));
    EXPECT_EQ(h.algebra->centralizer(h.algebra->whole()), Subspace::span(h.algebra->dim(), {id}));
    EXPECT_EQ(h.algebra->center(), Subspace::span(h.algebra->dim(), {id}));
  }
}

TEST(LowerCentralSeries, Examples) {
  auto g = gl(3);
  const LieAlgebra& a = *g.algebra;
  auto series = a.lower_central_series(gl_upper(a, 3, true));
  ASSERT_GE(series.size(), 3u);
  EXPECT_EQ(series[0].dim(), 3u);
  EXPECT_EQ(series[1].dim(), 1u);
  EXPECT_EQ(series[2].dim(), 0u);
  EXPECT_TRUE(a.is_nilpotent_subalgebra(gl_upper(a, 3, true)));
  EXPECT_TRUE(a.is_nilpotent_subalgebra(gl_cartan(a, 3)));
  auto s = sl(2);
  EXPECT_FALSE(s.algebra->is_nilpotent_subalgebra(s.algebra->whole()));
}

TEST(Filtration, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  Filtration f = a.induced_filtration(span_of(a, {"E12"}), gl_upper(a, 2));
  EXPECT_TRUE(f.level(-2).is_zero());
  EXPECT_EQ(f.level(-1), span_of(a, {"E12"}));
  EXPECT_EQ(f.level(0), gl_upper(a, 2));
  EXPECT_EQ(f.level(1), a.whole());
  Filtration t = a.induced_filtration(a.zero(), a.whole());
  EXPECT_TRUE(t.level(-1).is_zero());
  EXPECT_EQ(t.level(0), a.whole());

  auto h = gl(3);
  const LieAlgebra& b = *h.algebra;
  Filtration f3 = b.induced_filtration(gl_upper(b, 3, true), gl_upper(b, 3));
  std::vector<std::size_t> dims;
  for (int k = -3; k <= 3; ++k) dims.push_back(f3.level(k).dim());
  EXPECT_EQ(dims, (std::vector<std::size_t>{0, 1, 3, 6, 8, 9, 9}));
}

TEST(NilpotentCone, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  EXPECT_TRUE(a.in_nilpotent_cone(el(a, "E12")));
  EXPECT_FALSE(a.in_nilpotent_cone(combo(a, {{1, "E11"}, {1, "E22"}})));
  EXPECT_FALSE(a.in_nilpotent_cone(combo(a, {{1, "E11"}, {-1, "E22"}})));
}

TEST(Reductive, TraceFormCriterion) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(gl(n).algebra->is_reductive(), Reductivity::reductive);
  EXPECT_EQ(so(3, 2).algebra->is_reductive(), Reductivity::reductive);
  EXPECT_TRUE(sl(2).algebra->trace_form().is_nondegenerate());
  // [e1, e2] = e2 through its adjoint representation
  LieAlgebra b = LieAlgebra::from_matrices({Matrix{{0, 0}, {0, 1}}, Matrix{{0, 0}, {-1, 0}}});
  EXPECT_EQ(b.is_reductive(), Reductivity::inconclusive);
  EXPECT_EQ(rank(b.trace_form().gram()), 1u);
}

TEST(SemisimplePart, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  EXPECT_TRUE(a.ad_semisimple_part(el(a, "E12")).is_zero());
  Element d = combo(a, {{1, "E11"}, {2, "E22"}});
  EXPECT_EQ(a.ad_semisimple_part(d), a.ad(d));
  // E11 + E12 has distinct eigenvalues 1, 0, so it is already semisimple
  Element y = combo(a, {{1, "E11"}, {1, "E12"}});
  EXPECT_EQ(a.ad_semisimple_part(y), a.ad(y));
  // E11 + E12 + E22 = I + E12: semisimple part is ad(I) = 0
  EXPECT_TRUE(a.ad_semisimple_part(combo(a, {{1, "E11"}, {1, "E12"}, {1, "E22"}})).is_zero());
  EXPECT_TRUE(a.is_ad_split(d));
  EXPECT_FALSE(a.is_ad_semisimple(el(a, "E12")));
}

TEST(ExpAd, Examples) {
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  EXPECT_EQ(a.exp_ad(zero_vector(4)), Matrix::identity(4));
  Element x = el(a, "E12");
  Matrix e = a.exp_ad(x);
  Matrix u = Matrix::identity(2) + a.realize(x);
  Matrix uinv = Matrix::identity(2) - a.realize(x);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a.realize(e.col(j)), u * a.realization()[j] * uinv);
  EXPECT_EQ(e * a.exp_ad(-x), Matrix::identity(4));
  EXPECT_THROW(a.exp_ad(el(a, "E11")), DomainError);
}

TEST(Quotient, Examples) {
  for (int n = 2; n <= 3; ++n) {
    auto g = gl(n);
    auto q = quotient_algebra(*g.algebra, g.algebra->center());
    EXPECT_EQ(q.algebra.dim(), static_cast<std::size_t>(n * n - 1));
    EXPECT_TRUE(q.algebra.center().is_zero());
    EXPECT_EQ(q.algebra.derived_algebra(), q.algebra.whole());
  }
  auto g = gl(2);
  const LieAlgebra& a = *g.algebra;
  EXPECT_EQ(quotient_algebra(a, a.zero()).algebra.dim(), 4u);
  LieAlgebra b = a.restrict_to(gl_upper(a, 2));
  auto q = quotient_algebra(b, b.derived_algebra());
  EXPECT_EQ(q.algebra.dim(), 2u);
  EXPECT_TRUE(q.algebra.derived_algebra().is_zero());
  EXPECT_THROW(quotient_algebra(a, span_of(a, {"E12"})), DomainError);
}

TEST(Validation, ReportsFailingTriple) {
  auto c = gl(2).algebra->structure();
  c[1][2][1] += 1;
  c[2][1][1] -= 1;
  try {
    LieAlgebra bad(c);
    FAIL() << "accepted a Jacobi violation";
  } catch (const InvalidStructure& e) {
    EXPECT_EQ(e.kind(), "invalid_structure");
    EXPECT_LT(e.i(), 4u);
  }
  auto d = gl(2).algebra->structure();
  d[0][1][1] += 1;
  EXPECT_THROW(LieAlgebra{d}, InvalidStructure);
}

// Brackets agree with matrix commutators on random elements.
TEST(Properties, RealizationIsHomomorphism) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& cat : {gl(3), sl(3), so(3, 2), so(2, 2)}) {
    const LieAlgebra& a = *cat.algebra;
    for (int t = 0; t < 30; ++t) {
      Element x(a.dim()), y(a.dim()), z(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) {
        x[i] = d(rng);
        y[i] = d(rng);
        z[i] = d(rng);
      }
      EXPECT_EQ(a.realize(a.bracket(x, y)), commutator(a.realize(x), a.realize(y)));
      Element jac = a.bracket(x, a.bracket(y, z)) + a.bracket(y, a.bracket(z, x)) + a.bracket(z, a.bracket(x, y));
      EXPECT_TRUE(is_zero(jac));
      EXPECT_EQ(a.trace_form()(a.bracket(x, y), z), a.trace_form()(x, a.bracket(y, z)));
    }
  }
}
