#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace parabolica;
using namespace testing_support;

namespace {

std::shared_ptr<const RootDatum> gl_roots(const CatalogAlgebra& g, int n) {
  return std::make_shared<const RootDatum>(root_decomposition(g.algebra, gl_cartan(*g.algebra, n)));
}

std::set<Vector> simple_roots(const SimpleSystem& ss) {
  std::set<Vector> out;
  for (auto s : ss.simples) out.insert(ss.rd->roots[s]);
  return out;
}

}  // namespace

TEST(RootDecomposition, Gl3) {
  auto g = gl(3);
  auto rd = gl_roots(g, 3);
  EXPECT_EQ(rd->roots.size(), 6u);
  EXPECT_EQ(rd->levi, gl_cartan(*g.algebra, 3));
  std::set<Vector> expected;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        Vector v = zero_vector(3);
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = -1;
        expected.insert(v);
      }
  EXPECT_EQ(std::set<Vector>(rd->roots.begin(), rd->roots.end()), expected);
  for (std::size_t a = 0; a < 6; ++a) {
    EXPECT_EQ(rd->root_spaces[a].dim(), 1u);
    // E_ij spans the root space of e_i - e_j
    int i = -1, j = -1;
    for (std::size_t k = 0; k < 3; ++k) {
      if (rd->roots[a][k] == 1) i = static_cast<int>(k) + 1;
      if (rd->roots[a][k] == -1) j = static_cast<int>(k) + 1;
    }
    EXPECT_EQ(rd->root_spaces[a], span_of(*g.algebra, {"E" + std::to_string(i) + std::to_string(j)}));
  }
}

TEST(RootDecomposition, So32AndAbelian) {
  auto s = so(3, 2);
  auto rd = root_decomposition(s.algebra, standard_cartan(s));
  EXPECT_EQ(rd.roots.size(), 8u);
  std::size_t total = rd.levi.dim();
  for (const auto& r : rd.root_spaces) {
    EXPECT_EQ(r.dim(), 1u);
    total += r.dim();
  }
  EXPECT_EQ(total, 10u);

  auto a = share(LieAlgebra::from_matrices({Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}}));
  auto ra = root_decomposition(a, a->whole());
  EXPECT_TRUE(ra.roots.empty());
  EXPECT_EQ(ra.levi, a->whole());
}

TEST(SimpleSystem, Gl3LowerBorel) {
  auto g = gl(3);
  auto rd = gl_roots(g, 3);
  ParabolicData lower = opposite(make_parabolic(g.algebra, gl_upper(*g.algebra, 3)));
  SimpleSystem ss = simple_system(rd, lower);
  EXPECT_EQ(ss.rank(), 2u);
  EXPECT_EQ(simple_roots(ss), (std::set<Vector>{vec({1, -1, 0}), vec({0, 1, -1})}));
  auto c = ss.cartan_matrix();
  EXPECT_EQ(c, (std::vector<std::vector<Rational>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(ss.positive_count(), 3u);
  for (std::size_t i = 0; i < ss.rank(); ++i)
    for (std::size_t j = 0; j < ss.rank(); ++j)
      EXPECT_EQ(rd->eval(ss.simples[j], ss.coweights[i]), i == j ? 1 : 0);
}

TEST(SimpleSystem, So32IsB2) {
  auto s = so(3, 2);
  TypeSystem ts = catalog_type_system(s);
  const SimpleSystem& ss = ts.standard().ss;
  EXPECT_EQ(ss.rank(), 2u);
  auto c = ss.cartan_matrix();
  EXPECT_EQ(c[0][0], 2);
  EXPECT_EQ(c[1][1], 2);
  EXPECT_EQ(c[0][1] * c[1][0], 2);  // B2: one double bond
  EXPECT_EQ(ss.positive_count(), 4u);
}

TEST(StandardParabolics, SubsetsOfSimpleRoots) {
  auto g = gl(3);
  auto rd = gl_roots(g, 3);
  ParabolicData pb = make_parabolic(g.algebra, gl_upper(*g.algebra, 3));
  SimpleSystem ss = simple_system(rd, pb);
  EXPECT_EQ(parabolic_from_subset(ss, {}).space, g.algebra->whole());
  EXPECT_EQ(parabolic_from_subset(ss, {0, 1}).space, pb.space);
  EXPECT_EQ(parabolic_from_subset(ss, {0}).dim(), 7u);
  EXPECT_EQ(parabolic_from_subset(ss, {1}).dim(), 7u);
  std::set<std::vector<Rational>> distinct;
  for (std::set<std::size_t> J : {std::set<std::size_t>{}, {0}, {1}, {0, 1}}) {
    ParabolicData q = parabolic_from_subset(ss, J);
    EXPECT_TRUE(q.space.contains(pb.space));
    EXPECT_EQ(type_of(ss, q), J);
    distinct.insert(q.space.basis().data());
  }
  EXPECT_EQ(distinct.size(), 4u);
}

TEST(Reflections, Gl3) {
  auto g = gl(3);
  auto rd = gl_roots(g, 3);
  auto idx = [&](std::initializer_list<long> v) { return *rd->index_of(vec(v)); };
  const std::size_t a = idx({1, -1, 0});
  EXPECT_EQ(rd->reflect(a, a), rd->negative(a));
  EXPECT_EQ(rd->reflect(a, idx({1, 0, -1})), idx({0, 1, -1}));
  EXPECT_EQ(rd->reflect(a, idx({0, 1, -1})), idx({1, 0, -1}));
  for (std::size_t b = 0; b < rd->roots.size(); ++b) EXPECT_EQ(rd->reflect(a, rd->reflect(a, b)), b);
  Reflection r = root_reflection(*rd, a);
  EXPECT_TRUE(g.algebra->is_automorphism(r.automorphism));
  for (std::size_t b = 0; b < rd->roots.size(); ++b)
    EXPECT_EQ(image(r.automorphism, rd->root_spaces[b]), rd->root_spaces[r.permutation[b]]);
}

TEST(Coroots, PairingsAreIntegral) {
  for (const auto& cat : {gl(4), so(3, 2), so(4, 2), so(4, 3)}) {
    auto rd = root_decomposition(cat.algebra, standard_cartan(cat));
    for (std::size_t a = 0; a < rd.roots.size(); ++a) {
      EXPECT_EQ(rd.pairing(a, a), 2);
      for (std::size_t b = 0; b < rd.roots.size(); ++b) {
        EXPECT_EQ(rd.pairing(b, a).get_den(), 1);
        EXPECT_TRUE(rd.index_of(rd.roots[b] - rd.pairing(b, a) * rd.roots[a]).has_value());
      }
    }
  }
}

TEST(WeylWord, Examples) {
  auto g = gl(3);
  TypeSystem ts = catalog_type_system(g);
  const SimpleSystem& ss = ts.standard().ss;
  EXPECT_TRUE(weyl_word(ss, ss.chamber).empty());
  EXPECT_EQ(weyl_word(ss, opposite(ss.chamber)).size(), 3u);
  auto s = so(3, 2);
  TypeSystem tss = catalog_type_system(s);
  EXPECT_EQ(weyl_word(tss.standard().ss, opposite(tss.standard().ss.chamber)).size(), 4u);
}

// Every word's chamber maps back to the word in shortlex normal form.
TEST(Properties, WordsRoundTrip) {
  for (const auto& cat : {gl(3), so(3, 2)}) {
    TypeSystem ts = catalog_type_system(cat);
    const SimpleSystem& ss = ts.standard().ss;
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, ss.rank() - 1), len(0, 6);
    for (int t = 0; t < 30; ++t) {
      Word w(len(rng));
      for (auto& x : w) x = pick(rng);
      Subspace c = chamber_of_word(ss, w);
      ParabolicData pc = make_parabolic(cat.algebra, c);
      EXPECT_EQ(weyl_word(ss, pc), shortlex(ss, w));
    }
  }
}
