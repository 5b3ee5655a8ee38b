#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/errors.hpp"
#include "parabolica/lie_algebra.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/ratmat.hpp"

namespace parabolica {

// Restricted root space decomposition with respect to a split abelian a.
// Roots are functionals given by their values on the RREF basis of a.
struct RootDatum {
  AlgebraPtr ambient;
  Subspace cartan;
  Subspace levi;
  std::vector<Vector> roots;
  std::vector<Subspace> root_spaces;
  std::vector<Element> coroots;
  std::size_t root_lattice_rank = 0;

  std::size_t rank() const { return cartan.dim(); }
  Vector cartan_coordinates(const Element& h) const { return cartan.coordinates(h); }
  Rational eval(const Vector& functional, const Element& h) const { return dot(functional, cartan.coordinates(h)); }
  Rational eval(std::size_t root, const Element& h) const { return eval(roots.at(root), h); }

  std::optional<std::size_t> index_of(const Vector& functional) const {
    auto it = std::find(roots.begin(), roots.end(), functional);
    if (it == roots.end()) return std::nullopt;
    return static_cast<std::size_t>(it - roots.begin());
  }
  std::size_t negative(std::size_t i) const {
    auto j = index_of(-roots.at(i));
    if (!j) throw TheoremContradiction("root system is not symmetric");
    return *j;
  }
  // β(h_α)
  Rational pairing(std::size_t beta, std::size_t alpha) const { return eval(beta, coroots.at(alpha)); }

  // σ_α(β) = β - β(h_α) α, as a root index.
  std::size_t reflect(std::size_t alpha, std::size_t beta) const {
    Vector image = roots[beta] - pairing(beta, alpha) * roots[alpha];
    auto j = index_of(image);
    if (!j) throw TheoremContradiction("root reflection leaves the root system");
    return *j;
  }

  // s_α(h) = h - α(h) h_α on the cartan.
  Element reflect_element(std::size_t alpha, const Element& h) const {
    return h - eval(alpha, h) * coroots.at(alpha);
  }
};

inline RootDatum root_decomposition(AlgebraPtr gp, const Subspace& a) {
  const LieAlgebra& g = *gp;
  g.check(a);
  if (!g.bracket_spaces(a, a).is_zero()) throw DomainError("not_abelian", "root_decomposition: a is not abelian");
  struct Block {
    Vector values;
    Subspace space;
  };
  std::vector<Block> blocks{{Vector{}, g.whole()}};
  for (const auto& h : a.basis_vectors()) {
    std::vector<std::pair<Rational, Subspace>> eig;
    // ad(h) eigenvalues are differences of eigenvalues on the defining space
    std::vector<Rational> candidates;
    if (g.has_realization()) {
      try {
        auto weights = split_eigenspaces(g.realize(h));
        for (const auto& [x, sx] : weights)
          for (const auto& [y, sy] : weights) candidates.push_back(x - y);
      } catch (const DomainError&) {
        candidates.clear();
      }
    }
    try {
      eig = split_eigenspaces(g.ad(h), candidates);
    } catch (const DomainError&) {
      throw DomainError("not_split", "root_decomposition: ad(h) is not split over Q for h = " + g.describe(h));
    }
    std::vector<Block> next;
    for (const auto& b : blocks)
      for (const auto& [lambda, space] : eig) {
        Subspace s = intersect(b.space, space);
        if (s.is_zero()) continue;
        Vector v = b.values;
        v.push_back(lambda);
        next.push_back({std::move(v), std::move(s)});
      }
    blocks = std::move(next);
  }
  RootDatum rd;
  rd.ambient = gp;
  rd.cartan = a;
  rd.levi = g.zero();
  std::vector<std::pair<Vector, Subspace>> roots;
  for (auto& b : blocks) {
    if (b.values.empty() || is_zero(b.values))
      rd.levi = b.space;
    else
      roots.emplace_back(std::move(b.values), std::move(b.space));
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  for (auto& [v, s] : roots) {
    rd.roots.push_back(std::move(v));
    rd.root_spaces.push_back(std::move(s));
  }
  if (!(rd.levi == g.centralizer(a))) throw TheoremContradiction("zero weight space differs from the centralizer of a");
  std::size_t total = rd.levi.dim();
  for (const auto& s : rd.root_spaces) total += s.dim();
  if (total != g.dim()) throw TheoremContradiction("root spaces do not decompose g");
  // Coroots: h in a ∩ [g_α, g_-α] with α(h) = 2.
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    std::size_t j = rd.negative(i);
    Subspace s = intersect(a, g.bracket_spaces(rd.root_spaces[i], rd.root_spaces[j]));
    if (s.dim() != 1) throw TheoremContradiction("a ∩ [g_α, g_-α] is not a line");
    Element h = s.basis_vector(0);
    Rational v = rd.eval(i, h);
    if (sgn(v) == 0) throw TheoremContradiction("root vanishes on its coroot line");
    rd.coroots.push_back(Rational(2) / v * h);
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i)
    for (std::size_t j = 0; j < rd.roots.size(); ++j)
      if (rd.pairing(j, i).get_den() != 1) throw TheoremContradiction("non-integral root pairing");
  rd.root_lattice_rank = intersect(a, g.derived_algebra()).dim();
  return rd;
}

// ---------------------------------------------------------------------------
// Simple systems

struct SimpleSystem {
  std::shared_ptr<const RootDatum> rd;
  ParabolicData chamber;
  Element xi;                          // grading lift of the chamber inside a ∩ [g,g]
  std::vector<Rational> level;         // α(ξ) per root
  std::vector<std::size_t> simples;    // Φ¹ as root indices, in generator order
  std::vector<Element> coweights;      // ξ^α, per simple
  std::vector<Vector> weights;         // λ^α on the cartan, per simple
  std::vector<std::vector<std::size_t>> generator_perms;  // s_i on root indices

  std::size_t rank() const { return simples.size(); }
  bool positive(std::size_t root) const { return sgn(level.at(root)) > 0; }
  std::size_t positive_count() const {
    return static_cast<std::size_t>(std::count_if(level.begin(), level.end(), [](const Rational& v) { return sgn(v) > 0; }));
  }
  // Integer coordinates of a root on Φ¹.
  std::vector<Rational> simple_coordinates(std::size_t root) const {
    Matrix m = Matrix::from_columns([&] {
      std::vector<Vector> cols;
      for (auto s : simples) cols.push_back(rd->roots[s]);
      return cols;
    }(), rd->rank());
    auto sol = solve(m, rd->roots.at(root));
    if (!sol) throw TheoremContradiction("root outside the span of the simple roots");
    return sol->particular;
  }
  std::vector<std::vector<Rational>> cartan_matrix() const {
    std::vector<std::vector<Rational>> c(rank(), std::vector<Rational>(rank()));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) c[i][j] = rd->pairing(simples[j], simples[i]);
    return c;
  }
};

namespace detail {

inline void finish_simple_system(SimpleSystem& ss) {
  const RootDatum& rd = *ss.rd;
  const LieAlgebra& g = *rd.ambient;
  Subspace ad = intersect(rd.cartan, g.derived_algebra());
  // ξ^α ∈ a ∩ [g,g] with β(ξ^α) = δ.
  ss.coweights.clear();
  ss.weights.clear();
  const std::size_t r = ss.simples.size();
  Matrix eq(r, ad.dim());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < ad.dim(); ++c) eq(i, c) = rd.eval(ss.simples[i], ad.basis_vector(c));
  for (std::size_t i = 0; i < r; ++i) {
    auto sol = solve(eq, unit_vector(r, i));
    if (!sol || !sol->kernel.is_zero()) throw TheoremContradiction("fundamental coweights are not determined");
    ss.coweights.push_back(ad.combine(sol->particular));
  }
  // λ^α on a: λ^α(h_β) = δ and λ^α = 0 on z(g) ∩ a.
  Subspace za = intersect(rd.cartan, g.center());
  std::vector<Vector> zb = za.basis_vectors();
  const std::size_t n = rd.rank();
  Matrix weq(r + zb.size(), n);
  for (std::size_t j = 0; j < r; ++j) weq.set_row(j, rd.cartan_coordinates(rd.coroots[ss.simples[j]]));
  for (std::size_t z = 0; z < zb.size(); ++z) weq.set_row(r + z, rd.cartan_coordinates(zb[z]));
  for (std::size_t i = 0; i < r; ++i) {
    Vector rhs = zero_vector(r + zb.size());
    rhs[i] = 1;
    auto sol = solve(weq, rhs);
    if (!sol || !sol->kernel.is_zero()) throw TheoremContradiction("fundamental weights are not determined");
    ss.weights.push_back(sol->particular);
  }
  ss.generator_perms.clear();
  for (auto s : ss.simples) {
    std::vector<std::size_t> perm(rd.roots.size());
    for (std::size_t b = 0; b < rd.roots.size(); ++b) perm[b] = rd.reflect(s, b);
    ss.generator_perms.push_back(std::move(perm));
  }
}

}  // namespace detail

inline SimpleSystem simple_system(std::shared_ptr<const RootDatum> rd, const ParabolicData& pb) {
  if (!pb.space.contains(rd->levi)) throw DomainError("precondition", "simple_system: chamber does not contain the Levi");
  SimpleSystem ss;
  ss.chamber = pb;
  ss.xi = grading_lift(pb, rd->cartan).xi;
  ss.chamber.grading_lift = ss.xi;
  for (std::size_t i = 0; i < rd->roots.size(); ++i) {
    Rational v = rd->eval(i, ss.xi);
    if (sgn(v) == 0) throw DomainError("not_minimal", "simple_system: chamber is not a minimal parabolic");
    if (v.get_den() != 1) throw TheoremContradiction("non-integral level of a root");
    ss.level.push_back(v);
  }
  for (std::size_t i = 0; i < rd->roots.size(); ++i)
    if (ss.level[i] == 1) ss.simples.push_back(i);
  ss.rd = std::move(rd);
  detail::finish_simple_system(ss);
  // Every root is an integral combination of Φ¹ with coefficients of one sign.
  for (std::size_t b = 0; b < ss.rd->roots.size(); ++b) {
    auto c = ss.simple_coordinates(b);
    bool nonneg = true, nonpos = true;
    for (const auto& x : c) {
      if (x.get_den() != 1) throw TheoremContradiction("non-integral simple coordinates");
      if (sgn(x) < 0) nonneg = false;
      if (sgn(x) > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) throw TheoremContradiction("root with mixed-sign simple coordinates");
  }
  return ss;
}

// Reorder Φ¹ (generator order) by a permutation: new position i takes old order[i].
inline SimpleSystem reorder(SimpleSystem ss, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> s;
  for (auto i : order) s.push_back(ss.simples.at(i));
  ss.simples = std::move(s);
  detail::finish_simple_system(ss);
  return ss;
}

// ml ⊕ the root spaces on which ξ is nonpositive.
inline Subspace nonpositive_part(const RootDatum& rd, const Element& xi) {
  std::vector<Vector> rows = rd.levi.basis_vectors();
  for (std::size_t i = 0; i < rd.roots.size(); ++i)
    if (sgn(rd.eval(i, xi)) <= 0)
      for (auto& v : rd.root_spaces[i].basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(rd.ambient->dim(), rows);
}

// J given as positions in the generator order.
inline ParabolicData parabolic_from_subset(const SimpleSystem& ss, const std::set<std::size_t>& J) {
  const RootDatum& rd = *ss.rd;
  Element xi = zero_vector(rd.ambient->dim());
  for (auto j : J) xi = xi + ss.coweights.at(j);
  ParabolicData q = make_parabolic(rd.ambient, nonpositive_part(rd, xi));
  q.grading_lift = xi;
  return q;
}

inline std::set<std::size_t> type_of(const SimpleSystem& ss, const ParabolicData& q) {
  if (!q.space.contains(ss.chamber.space)) throw DomainError("precondition", "type_of: q does not contain the chamber");
  Element xi = grading_lift(q, ss.rd->cartan).xi;
  std::set<std::size_t> J;
  for (std::size_t i = 0; i < ss.rank(); ++i) {
    Rational v = ss.rd->eval(ss.simples[i], xi);
    if (sgn(v) < 0) throw TheoremContradiction("lift of a standard parabolic is not dominant");
    if (sgn(v) > 0) J.insert(i);
  }
  return J;
}

// ---------------------------------------------------------------------------
// Reflections

struct Reflection {
  Matrix automorphism;
  std::vector<std::size_t> permutation;
};

inline Reflection root_reflection(const RootDatum& rd, std::size_t alpha) {
  const LieAlgebra& g = *rd.ambient;
  const std::size_t a_neg = rd.negative(alpha);
  Element x = rd.root_spaces.at(alpha).basis_vector(0);
  const Subspace& gm = rd.root_spaces[a_neg];
  // y ∈ g_-α with [x, y] = h_α
  Matrix m = Matrix::from_columns([&] {
    std::vector<Vector> cols;
    for (const auto& b : gm.basis_vectors()) cols.push_back(g.bracket(x, b));
    return cols;
  }(), g.dim());
  auto sol = solve(m, rd.coroots[alpha]);
  if (!sol) throw TheoremContradiction("no y in g_-α with [x_α, y] = h_α");
  Element y = gm.combine(sol->particular);
  Matrix ex = g.exp_ad(x);
  Reflection r;
  r.automorphism = ex * g.exp_ad(-y) * ex;
  r.permutation.resize(rd.roots.size());
  for (std::size_t b = 0; b < rd.roots.size(); ++b) r.permutation[b] = rd.reflect(alpha, b);
  for (const auto& h : rd.cartan.basis_vectors())
    if (!(r.automorphism * h == rd.reflect_element(alpha, h)))
      throw TheoremContradiction("reflection automorphism does not act as s_α on a");
  for (std::size_t b = 0; b < rd.roots.size(); ++b)
    if (!rd.root_spaces[r.permutation[b]].contains(image(r.automorphism, rd.root_spaces[b])))
      throw TheoremContradiction("reflection automorphism does not permute root spaces");
  return r;
}

// ---------------------------------------------------------------------------
// Weyl words

using Word = std::vector<std::size_t>;

namespace detail {

// Root permutation of s_{i1} s_{i2} ... s_{ik}.
inline std::vector<std::size_t> word_permutation(const SimpleSystem& ss, const Word& w) {
  std::vector<std::size_t> perm(ss.rd->roots.size());
  for (std::size_t b = 0; b < perm.size(); ++b) perm[b] = b;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    for (auto& x : perm) x = ss.generator_perms.at(*it)[x];
  return perm;
}

}  // namespace detail

// Shortlex normal form: repeatedly strip the smallest left descent.
inline Word shortlex(const SimpleSystem& ss, const Word& w) {
  auto perm = detail::word_permutation(ss, w);
  const std::size_t n = perm.size();
  Word out;
  for (;;) {
    std::vector<std::size_t> inv(n);
    for (std::size_t b = 0; b < n; ++b) inv[perm[b]] = b;
    std::optional<std::size_t> d;
    for (std::size_t i = 0; i < ss.rank(); ++i)
      if (!ss.positive(inv[ss.simples[i]])) {
        d = i;
        break;
      }
    if (!d) break;
    out.push_back(*d);
    for (auto& x : perm) x = ss.generator_perms[*d][x];
  }
  for (std::size_t b = 0; b < n; ++b)
    if (perm[b] != b) throw TheoremContradiction("Weyl element with no descent is not the identity");
  return out;
}

inline std::vector<Rational> chamber_levels(const RootDatum& rd, const ParabolicData& pc) {
  std::vector<Rational> lv;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    bool in = pc.space.contains(rd.root_spaces[i]);
    bool neg_in = pc.space.contains(rd.root_spaces[rd.negative(i)]);
    if (in == neg_in) throw DomainError("not_minimal", "chamber is not a minimal parabolic through this Levi");
    lv.push_back(in ? Rational(-1) : Rational(1));
  }
  return lv;
}

// Word w (generator positions) with w·chamber = pc, in shortlex form.
inline Word weyl_word(const SimpleSystem& ss, const ParabolicData& pc) {
  const RootDatum& rd = *ss.rd;
  if (!pc.space.contains(rd.levi)) throw DomainError("precondition", "weyl_word: pc does not contain the Levi");
  auto target = chamber_levels(rd, pc);
  auto target_positive = [&](std::size_t r) { return sgn(target[r]) > 0; };
  std::vector<std::size_t> perm(rd.roots.size());
  for (std::size_t b = 0; b < perm.size(); ++b) perm[b] = b;
  Word w;
  for (std::size_t guard = 0; guard <= rd.roots.size(); ++guard) {
    std::optional<std::size_t> step;
    for (std::size_t i = 0; i < ss.rank(); ++i)
      if (!target_positive(perm[ss.simples[i]])) {
        step = i;
        break;
      }
    if (!step) break;
    w.push_back(*step);
    // w -> w s_i
    std::vector<std::size_t> next(perm.size());
    for (std::size_t b = 0; b < perm.size(); ++b) next[b] = perm[ss.generator_perms[*step][b]];
    perm = std::move(next);
  }
  for (std::size_t b = 0; b < perm.size(); ++b)
    if (ss.positive(b) != target_positive(perm[b])) throw TheoremContradiction("greedy Weyl word did not reach pc");
  return shortlex(ss, w);
}

// Chamber w·pb as a subspace, from the permuted positive system.
inline Subspace chamber_of_word(const SimpleSystem& ss, const Word& w) {
  const RootDatum& rd = *ss.rd;
  auto perm = detail::word_permutation(ss, w);
  std::vector<Vector> rows = rd.levi.basis_vectors();
  for (std::size_t b = 0; b < perm.size(); ++b)
    if (!ss.positive(b))
      for (auto& v : rd.root_spaces[perm[b]].basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(rd.ambient->dim(), rows);
}

// w(ξ) for ξ in the cartan.
inline Element act_on_cartan(const SimpleSystem& ss, const Word& w, Element xi) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) xi = ss.rd->reflect_element(ss.simples[*it], xi);
  return xi;
}

}  // namespace parabolica
