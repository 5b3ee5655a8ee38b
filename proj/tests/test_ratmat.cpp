#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace parabolica;
using testing_support::vec;

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(Matrix{{2, 4}, {1, 2}}), (Matrix{{1, 2}}));  // zero rows dropped
  EXPECT_EQ(Subspace::from_matrix(Matrix{{2, 4}, {1, 2}}).basis(), (Matrix{{1, 2}}));
  EXPECT_EQ(rref(Matrix::identity(3)), Matrix::identity(3));
  EXPECT_EQ(rref(Matrix{{0, 1}, {1, 0}}), Matrix::identity(2));
}

TEST(Subspace, SumIntersectContain) {
  auto e = [](std::size_t i) { return unit_vector(3, i); };
  EXPECT_EQ(sum(Subspace::span(3, {e(0)}), Subspace::span(3, {e(1)})), Subspace::span(3, {e(0), e(1)}));
  EXPECT_EQ(intersect(Subspace::span(3, {e(0), e(1)}), Subspace::span(3, {e(1), e(2)})), Subspace::span(3, {e(1)}));
  EXPECT_TRUE(Subspace::whole(3).contains(Subspace::span(3, {vec({1, 2, 3})})));
  EXPECT_FALSE(Subspace::span(3, {e(0)}).contains(e(1)));
}

TEST(Subspace, CoordinatesRoundTrip) {
  Subspace s = Subspace::span(4, {vec({1, 2, 0, 1}), vec({0, 1, 1, 1})});
  Vector v = vec({2, 7, 3, 5});
  ASSERT_TRUE(s.contains(v));
  EXPECT_EQ(s.combine(s.coordinates(v)), v);
}

TEST(Form, PerpExamples) {
  BilinearForm b(Matrix::identity(3));
  EXPECT_TRUE(perp(Subspace::whole(3), b).is_zero());
  EXPECT_EQ(perp(Subspace::zero(3), b), Subspace::whole(3));
  // gl(2) trace form: perp of the upper triangular matrices is span{E12}
  auto g = gl(2);
  Subspace upper = testing_support::gl_upper(*g.algebra, 2);
  EXPECT_EQ(g.algebra->perp(upper), testing_support::span_of(*g.algebra, {"E12"}));
}

TEST(Solve, Examples) {
  auto s = solve(Matrix::identity(2), vec({3, 4}));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, vec({3, 4}));
  EXPECT_TRUE(s->kernel.is_zero());
  auto z = solve(Matrix(2, 2), vec({0, 0}));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->kernel, Subspace::whole(2));
  auto one = solve(Matrix{{1, 1}}, vec({2}));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->particular, vec({2, 0}));
  EXPECT_EQ(one->kernel, Subspace::span(2, {vec({1, -1})}));
  EXPECT_FALSE(solve(Matrix{{1, 1}, {1, 1}}, vec({1, 2})));
}

// Random integer matrices: kernel vectors are annihilated, rank-nullity
// holds, and the inverse is a two-sided inverse.
TEST(Properties, KernelRankInverse) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3), sz(1, 5);
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(sz(rng)), c = static_cast<std::size_t>(sz(rng));
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    Subspace k = kernel(m);
    EXPECT_EQ(k.dim() + rank(m), c);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
    EXPECT_EQ(rank(m), rank(m.transpose()));
    if (r == c) {
      auto inv = inverse(m);
      EXPECT_EQ(inv.has_value(), rank(m) == r);
      if (inv) {
        EXPECT_EQ(m * *inv, Matrix::identity(r));
        EXPECT_EQ(*inv * m, Matrix::identity(r));
      }
    }
  }
}

TEST(Properties, ImagePreimageAndModularLaw) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  auto rand_vec = [&](std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = d(rng);
    return v;
  };
  for (int t = 0; t < 100; ++t) {
    Subspace a = Subspace::span(5, {rand_vec(5), rand_vec(5)});
    Subspace b = Subspace::span(5, {rand_vec(5), rand_vec(5), rand_vec(5)});
    EXPECT_EQ(sum(a, b).dim() + intersect(a, b).dim(), a.dim() + b.dim());
    Matrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) m.set_row(i, rand_vec(5));
    EXPECT_TRUE(preimage(m, image(m, a)).contains(a));
    EXPECT_TRUE(b.contains(image(m, preimage(m, b))));
  }
}

TEST(Polynomial, MinimalPolynomialAndRoots) {
  Matrix a{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  Polynomial m = minimal_polynomial(a);
  EXPECT_EQ(m.degree(), 2);
  EXPECT_TRUE(m(a).is_zero());
  auto roots = rational_roots(m);
  EXPECT_EQ(roots, (std::vector<Rational>{1, 2}));
  EXPECT_TRUE(is_squarefree(m));
  Matrix j{{1, 1}, {0, 1}};
  EXPECT_FALSE(is_squarefree(minimal_polynomial(j)));
  Matrix rot{{0, -1}, {1, 0}};
  EXPECT_FALSE(splits_over_q(minimal_polynomial(rot)));
}

TEST(Polynomial, SemisimplePartOfJordanBlock) {
  Matrix j{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  Matrix s = semisimple_part(j);
  EXPECT_EQ(s, (Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
  EXPECT_TRUE(is_nilpotent(j - s));
  EXPECT_EQ(commutator(s, j - s), Matrix(3, 3));
}
