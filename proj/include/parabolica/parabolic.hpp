#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/errors.hpp"
#include "parabolica/lie_algebra.hpp"
#include "parabolica/polynomial.hpp"
#include "parabolica/ratmat.hpp"

namespace parabolica {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

inline AlgebraPtr share(LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); }

// Eigenspaces of a matrix that is diagonalizable over Q; ascending eigenvalues.
// Candidate eigenvalues, when supplied and complete, avoid root isolation.
inline std::vector<std::pair<Rational, Subspace>> split_eigenspaces(const Matrix& a,
                                                                    std::vector<Rational> candidates = {}) {
  auto eigenspace = [&](const Rational& r) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= r;
    return kernel(shifted);
  };
  std::vector<std::pair<Rational, Subspace>> out;
  if (!candidates.empty()) {
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t total = 0;
    for (const auto& r : candidates) {
      Subspace s = eigenspace(r);
      if (s.is_zero()) continue;
      total += s.dim();
      out.emplace_back(r, std::move(s));
    }
    if (total == a.rows()) return out;
    out.clear();
  }
  Polynomial m = minimal_polynomial(a);
  if (!is_squarefree(m)) throw DomainError("not_split", "matrix is not semisimple");
  auto roots = rational_roots(m);
  if (static_cast<int>(roots.size()) != m.degree())
    throw DomainError("not_split", "eigenvalues are not all rational");
  for (const auto& r : roots) out.emplace_back(r, eigenspace(r));
  return out;
}

// ---------------------------------------------------------------------------
// Recognition

struct ParabolicCertificate {
  bool parabolic = false;
  Subspace perp;
  Subspace normalizer;
};

// perp(p) ⊆ p and n_g(p) = p. On success the remaining equivalent
// characterizations are cross-checked; disagreement is a theorem failure.
inline ParabolicCertificate is_parabolic(const LieAlgebra& g, const Subspace& p) {
  g.require_subalgebra(p);
  if (!g.has_form() || !g.form().is_nondegenerate())
    throw DomainError("no_admissible_form", "is_parabolic needs a nondegenerate invariant form");
  ParabolicCertificate c;
  c.perp = g.perp(p);
  c.normalizer = g.normalizer(p);
  c.parabolic = p.contains(c.perp) && c.normalizer == p;
  if (!c.parabolic) return c;
  const Subspace& n = c.perp;
  if (!(g.normalizer(n) == p)) throw TheoremContradiction("parabolic p differs from the normalizer of its perp");
  if (!g.is_ideal_of(n, p)) throw TheoremContradiction("perp of a parabolic is not an ideal");
  if (!g.is_nilpotent_subalgebra(n)) throw TheoremContradiction("perp of a parabolic is not nilpotent");
  Subspace derived = g.derived_algebra();
  for (const auto& x : n.basis_vectors())
    if (!derived.contains(x) || !g.is_ad_nilpotent(x))
      throw TheoremContradiction("perp of a parabolic leaves the nilpotent cone");
  if (g.dim() - p.dim() != n.dim()) throw TheoremContradiction("parabolic dimension identity fails");
  return c;
}

namespace detail {

// Unital associative algebra generated by a set of square matrices, as a
// subspace of flattened matrices.
inline Subspace associative_envelope(const std::vector<Matrix>& gens, std::size_t m) {
  std::vector<Vector> rows{Matrix::identity(m).data()};
  for (const auto& a : gens) rows.push_back(a.data());
  Subspace span = Subspace::span(m * m, rows);
  for (;;) {
    std::vector<Vector> more = span.basis_vectors();
    for (const auto& v : span.basis_vectors()) {
      Matrix xm(m, m);
      for (std::size_t i = 0; i < m * m; ++i) xm(i / m, i % m) = v[i];
      for (const auto& a : gens) more.push_back((xm * a).data());
    }
    Subspace next = Subspace::span(m * m, more);
    if (next == span) return span;
    span = std::move(next);
  }
}

}  // namespace detail

// Largest ideal of the subalgebra s acting nilpotently in the representation
// `rho` (matrices indexed by the basis of g). By Dickson's criterion this is
// the preimage of the trace-radical of the associative envelope of rho(s).
inline Subspace nilpotency_radical(const LieAlgebra& g, const std::vector<Matrix>& rho, const Subspace& s) {
  g.require_subalgebra(s);
  if (s.is_zero()) return s;
  const std::size_t m = rho.at(0).rows();
  auto realize = [&](const Vector& x) {
    Matrix r(m, m);
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (sgn(x[i]) != 0) r += x[i] * rho[i];
    return r;
  };
  std::vector<Matrix> gens;
  std::vector<Vector> basis = s.basis_vectors();
  for (const auto& b : basis) gens.push_back(realize(b));
  Subspace env = detail::associative_envelope(gens, m);
  // Unknowns: coordinates c on the basis of s. Equations tr(rho(x) a) = 0.
  Matrix eq(env.dim(), basis.size());
  for (std::size_t r = 0; r < env.dim(); ++r) {
    Vector av = env.basis_vector(r);
    Matrix a(m, m);
    for (std::size_t i = 0; i < m * m; ++i) a(i / m, i % m) = av[i];
    for (std::size_t c = 0; c < basis.size(); ++c) eq(r, c) = (gens[c] * a).trace();
  }
  Subspace coords = kernel(eq);
  std::vector<Vector> out;
  for (const auto& c : coords.basis_vectors()) {
    Vector v = zero_vector(g.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(v, c[k], basis[k]);
    out.push_back(std::move(v));
  }
  return Subspace::span(g.dim(), out);
}

inline std::vector<Matrix> adjoint_representation(const LieAlgebra& g) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(g.ad_basis(i));
  return out;
}

// nil_g(s): largest ideal of s inside the nilpotent cone of g. Computed through
// the faithful realization when present (same answer on [g,g] for reductive
// g), otherwise through ad.
inline Subspace relative_nilradical(const LieAlgebra& g, const Subspace& s) {
  const auto rho = g.has_realization() ? g.realization() : adjoint_representation(g);
  return intersect(nilpotency_radical(g, rho, s), g.derived_algebra());
}

// nil(s): the nilpotent radical of s as an abstract algebra. Exact when the
// representation used is faithful on s.
inline Subspace intrinsic_nilradical(const LieAlgebra& g, const Subspace& s) {
  const auto rho = g.has_realization() ? g.realization() : adjoint_representation(g);
  return intersect(nilpotency_radical(g, rho, s), g.bracket_spaces(s, s));
}

// The characterizations (4)-(7) of parabolicity, each evaluated on its own.
struct ParabolicConditions {
  bool perp_and_self_normalizing = false;  // perp(p) ⊆ p and n(p) = p
  bool normalizes_nilradical = false;      // p = n(nil_g(p))
  bool perp_is_nilradical = false;         // perp(p) = nil_g(p) = nil(p)
  bool dimension_identity = false;         // dim g - dim p = dim nil(p) - dim nil(g)
  bool all() const {
    return perp_and_self_normalizing && normalizes_nilradical && perp_is_nilradical && dimension_identity;
  }
  bool none() const {
    return !perp_and_self_normalizing && !normalizes_nilradical && !perp_is_nilradical && !dimension_identity;
  }
};

inline ParabolicConditions parabolic_conditions(const LieAlgebra& g, const Subspace& p) {
  g.require_subalgebra(p);
  ParabolicConditions c;
  Subspace perp = g.perp(p);
  c.perp_and_self_normalizing = p.contains(perp) && g.normalizer(p) == p;
  Subspace nil_rel = relative_nilradical(g, p);
  c.normalizes_nilradical = g.normalizer(nil_rel) == p;
  Subspace nil_p = intrinsic_nilradical(g, p);
  c.perp_is_nilradical = perp == nil_rel && nil_rel == nil_p;
  Subspace nil_g = intrinsic_nilradical(g, g.whole());
  c.dimension_identity = g.dim() + nil_g.dim() == p.dim() + nil_p.dim();
  return c;
}

// ---------------------------------------------------------------------------
// ParabolicData

struct ParabolicData {
  AlgebraPtr ambient;
  Subspace space;
  Subspace nilradical;
  Filtration filtration;
  std::optional<Element> grading_lift;

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const ParabolicData& a, const ParabolicData& b) { return a.space == b.space; }
};

inline ParabolicData make_parabolic(AlgebraPtr g, const Subspace& p) {
  auto cert = is_parabolic(*g, p);
  if (!cert.parabolic) throw DomainError("not_parabolic", "subalgebra is not parabolic");
  ParabolicData d;
  d.nilradical = cert.perp;
  d.filtration = g->induced_filtration(cert.perp, p);
  d.space = p;
  d.ambient = std::move(g);
  return d;
}

inline Subspace nilradical(const ParabolicData& p) { return p.nilradical; }

// ---------------------------------------------------------------------------
// Levi quotient

struct LeviQuotient {
  AlgebraPtr algebra;
  Matrix projection;  // dim q0 x dim g, meaningful on q
  Matrix section;     // dim g x dim q0
  Subspace image(const Subspace& r) const { return parabolica::image(projection, r); }
  // Full preimage in q of a subspace of q0.
  Subspace preimage(const Subspace& nil, const Subspace& s) const {
    std::vector<Vector> rows = nil.basis_vectors();
    for (const auto& v : s.basis_vectors()) rows.push_back(section * v);
    return Subspace::span(nil.ambient_dim(), rows);
  }
};

// q/nil(q) with structure constants on the pivot complement and the form
// descended from g (nil(q) is the radical of the form restricted to q).
inline LeviQuotient levi_quotient(const ParabolicData& q) {
  const LieAlgebra& g = *q.ambient;
  const Subspace& s = q.space;
  LieAlgebra qa = g.restrict_to(s);
  std::vector<Vector> nil_coords;
  for (const auto& v : q.nilradical.basis_vectors()) nil_coords.push_back(s.coordinates(v));
  Subspace nil_q = Subspace::span(s.dim(), nil_coords);
  const auto free = nil_q.free_columns();
  Matrix gram(free.size(), free.size());
  for (std::size_t a = 0; a < free.size(); ++a)
    for (std::size_t b = 0; b < free.size(); ++b)
      gram(a, b) = g.form()(s.basis_vector(free[a]), s.basis_vector(free[b]));
  QuotientMap qm = quotient_algebra(qa, nil_q, BilinearForm(gram));
  // Compose with g -> q coordinates (v -> v[pivots]) and back.
  Matrix pick(s.dim(), g.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) pick(r, s.pivots()[r]) = 1;
  Matrix embed = s.basis().transpose();
  LeviQuotient lq;
  lq.projection = qm.projection * pick;
  lq.section = embed * qm.section;
  lq.algebra = share(std::move(qm.algebra));
  return lq;
}

// ---------------------------------------------------------------------------
// Grading lifts

struct GradingLift {
  Element xi;
  Subspace torsor;  // directions of the affine solution space, inside g
};

// Solutions ξ ∈ constraint ∩ [g,g] of [ξ,x] - j x ∈ f^{(j-1)} for every basis
// x of f^{(j)}. The derived-algebra constraint removes the central freedom, so
// the solution set is a torsor under nil(p) ∩ constraint.
inline std::optional<GradingLift> solve_grading_lift(const ParabolicData& p, const Subspace& constraint) {
  const LieAlgebra& g = *p.ambient;
  g.check(constraint);
  Subspace dom = intersect(constraint, g.derived_algebra());
  std::vector<Vector> kb = dom.basis_vectors();
  std::vector<Vector> rows;
  Vector rhs;
  const Filtration& f = p.filtration;
  for (int j = f.lo(); j <= f.hi(); ++j) {
    Subspace level = f.level(j);
    Matrix cons = f.level(j - 1).constraints();
    if (cons.rows() == 0) continue;
    for (const auto& x : level.basis_vectors()) {
      // cons * sum_t c_t [k_t, x] = cons * (j x)
      Matrix coeff(cons.rows(), kb.size());
      for (std::size_t t = 0; t < kb.size(); ++t) {
        Vector col = cons * g.bracket(kb[t], x);
        for (std::size_t r = 0; r < cons.rows(); ++r) coeff(r, t) = col[r];
      }
      Vector target = cons * (Rational(j) * x);
      for (std::size_t r = 0; r < cons.rows(); ++r) {
        rows.push_back(coeff.row(r));
        rhs.push_back(target[r]);
      }
    }
  }
  Element xi = zero_vector(g.dim());
  if (kb.empty()) {
    for (const auto& v : rhs)
      if (sgn(v) != 0) return std::nullopt;
    return GradingLift{xi, Subspace::zero(g.dim())};
  }
  auto sol = solve(Matrix::from_rows(rows, kb.size()), rhs);
  if (!sol) return std::nullopt;
  for (std::size_t t = 0; t < kb.size(); ++t) axpy(xi, sol->particular[t], kb[t]);
  std::vector<Vector> dirs;
  for (const auto& c : sol->kernel.basis_vectors()) {
    Vector v = zero_vector(g.dim());
    for (std::size_t t = 0; t < kb.size(); ++t) axpy(v, c[t], kb[t]);
    dirs.push_back(std::move(v));
  }
  return GradingLift{std::move(xi), Subspace::span(g.dim(), dirs)};
}

inline GradingLift grading_lift(const ParabolicData& p, const Subspace& constraint) {
  if (!p.space.contains(constraint)) throw DomainError("precondition", "grading_lift: constraint is not inside p");
  auto r = solve_grading_lift(p, constraint);
  if (!r) throw DomainError("no_lift", "grading_lift: no lift inside the constraint");
  return *r;
}

inline GradingLift grading_lift(const ParabolicData& p) { return grading_lift(p, p.space); }

inline bool is_grading_lift(const ParabolicData& p, const Element& xi) {
  const LieAlgebra& g = *p.ambient;
  if (!p.space.contains(xi)) return false;
  const Filtration& f = p.filtration;
  for (int j = f.lo(); j <= f.hi(); ++j) {
    Subspace lower = f.level(j - 1);
    for (const auto& x : f.level(j).basis_vectors())
      if (!lower.contains(g.bracket(xi, x) - Rational(j) * x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Pairs

inline void same_ambient(const ParabolicData& p, const ParabolicData& q) {
  if (p.ambient != q.ambient && !(p.ambient->dim() == q.ambient->dim() &&
                                  p.ambient->structure() == q.ambient->structure()))
    throw DomainError("ambient_mismatch", "parabolics live in different algebras");
}

inline bool is_costandard(const ParabolicData& p, const ParabolicData& q) {
  same_ambient(p, q);
  bool c = q.space.contains(p.nilradical);
  if (c && !is_parabolic(*p.ambient, intersect(p.space, q.space)).parabolic)
    throw TheoremContradiction("costandard pair with non-parabolic intersection");
  return c;
}

inline bool is_weakly_opposite(const ParabolicData& p, const ParabolicData& q) {
  same_ambient(p, q);
  return sum(p.space, q.space).is_whole();
}

inline bool is_opposite(const ParabolicData& p, const ParabolicData& q) {
  same_ambient(p, q);
  return intersect(p.space, q.nilradical).is_zero() && intersect(p.nilradical, q.space).is_zero();
}

// Sum of the nonnegative ad(ξ)-eigenspaces.
inline ParabolicData opposite(const ParabolicData& p, const Element& xi) {
  const LieAlgebra& g = *p.ambient;
  if (!is_grading_lift(p, xi)) throw DomainError("not_a_lift", "opposite: element is not a grading lift");
  std::vector<Rational> range;
  for (int j = p.filtration.lo() - 1; j <= p.filtration.hi() + 1; ++j) range.emplace_back(j);
  auto eig = split_eigenspaces(g.ad(xi), range);
  Subspace opp = g.zero();
  for (const auto& [lambda, space] : eig) {
    if (lambda.get_den() != 1) throw DomainError("non_integral", "opposite: non-integral eigenvalue");
    if (sgn(lambda) >= 0) opp = sum(opp, space);
  }
  ParabolicData r = make_parabolic(p.ambient, opp);
  if (!is_opposite(p, r)) throw TheoremContradiction("constructed opposite is not opposite");
  if (!sum(p.space, r.nilradical).is_whole()) throw TheoremContradiction("p + nil(opposite) != g");
  Subspace levi = intersect(p.space, r.space);
  if (levi.dim() + p.nilradical.dim() != p.dim()) throw TheoremContradiction("p ∩ opposite is not a Levi complement");
  r.grading_lift = -xi;
  return r;
}

inline ParabolicData opposite(const ParabolicData& p) {
  Element xi = p.grading_lift ? *p.grading_lift : grading_lift(p).xi;
  return opposite(p, xi);
}

struct CompatibleLifts {
  Element xi_p;
  Element xi_q;
};

inline CompatibleLifts compatible_lifts(const ParabolicData& p, const ParabolicData& q) {
  same_ambient(p, q);
  const LieAlgebra& g = *p.ambient;
  Subspace pq = intersect(p.space, q.space);
  auto lq = solve_grading_lift(q, pq);
  if (!lq) throw TheoremContradiction("no grading lift of q inside p ∩ q");
  Subspace cons = intersect(pq, g.centralizer(Subspace::span(g.dim(), {lq->xi})));
  auto lp = solve_grading_lift(p, cons);
  if (!lp) throw TheoremContradiction("no grading lift of p commuting with the lift of q");
  if (!is_zero(g.bracket(lp->xi, lq->xi))) throw TheoremContradiction("compatible lifts do not commute");
  return {lp->xi, lq->xi};
}

// c(ξ_p) ∩ c(ξ_q) for compatible lifts. With `minimal` set, both p and q must
// be minimal parabolics and the result is checked to be a Levi of each.
inline Subspace common_levi(const ParabolicData& p, const ParabolicData& q, bool minimal = false) {
  const LieAlgebra& g = *p.ambient;
  auto lifts = compatible_lifts(p, q);
  Subspace l = intersect(g.centralizer(Subspace::span(g.dim(), {lifts.xi_p})),
                         g.centralizer(Subspace::span(g.dim(), {lifts.xi_q})));
  if (!intersect(p.space, q.space).contains(l)) throw TheoremContradiction("common Levi not inside p ∩ q");
  if (!g.is_subalgebra(l)) throw TheoremContradiction("common Levi is not a subalgebra");
  if (!intersect(l, p.nilradical).is_zero() || !intersect(l, q.nilradical).is_zero())
    throw TheoremContradiction("common Levi meets a nilradical");
  if (minimal) {
    if (l.dim() + p.nilradical.dim() != p.dim() || l.dim() + q.nilradical.dim() != q.dim())
      throw TheoremContradiction("common Levi is not complementary to the nilradicals");
  }
  return l;
}

// ---------------------------------------------------------------------------
// Projection

struct Projection {
  ParabolicData in_g;
  ParabolicData in_q0;
  LeviQuotient levi;
};

inline Projection project(const ParabolicData& q, const ParabolicData& p, const LeviQuotient& lq) {
  same_ambient(p, q);
  Subspace r = sum(intersect(p.space, q.space), q.nilradical);
  Projection out;
  out.in_g = make_parabolic(q.ambient, r);
  Subspace expected = sum(intersect(p.nilradical, q.space), q.nilradical);
  if (!(out.in_g.nilradical == expected)) throw TheoremContradiction("nil(p∩q+nil(q)) != nil(p)∩q+nil(q)");
  out.in_q0 = make_parabolic(lq.algebra, lq.image(r));
  out.levi = lq;
  return out;
}

inline Projection project(const ParabolicData& q, const ParabolicData& p) { return project(q, p, levi_quotient(q)); }

// ---------------------------------------------------------------------------
// Lowest weight line

inline std::size_t wedge_budget() {
  if (const char* env = std::getenv("PARABOLICA_WEDGE_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 512;
}

inline mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

struct LowestWeightLine {
  std::size_t module_dim = 0;
  Vector line;  // coordinates on d-subsets in lexicographic order
  Subspace stabilizer;
  bool stabilizer_matches = false;
};

namespace detail {

inline Rational determinant(Matrix m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == d) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (d - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Plücker coordinates of the wedge of the given vectors.
inline Vector wedge(const std::vector<Vector>& vs, const std::vector<std::vector<std::size_t>>& idx) {
  const std::size_t d = vs.size();
  Vector out(idx.size());
  for (std::size_t s = 0; s < idx.size(); ++s) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = vs[r][idx[s][c]];
    out[s] = determinant(std::move(m));
  }
  return out;
}

}  // namespace detail

// Stabilizer of the line Λ^d nil(q) in the d-th exterior power of ad.
inline LowestWeightLine lowest_weight_line(const ParabolicData& q) {
  const LieAlgebra& g = *q.ambient;
  const std::size_t n = g.dim(), d = q.nilradical.dim();
  mpz_class size = binomial(n, d);
  if (size > mpz_class(static_cast<unsigned long>(wedge_budget())))
    throw DomainError("budget_exceeded", "exterior power of dimension " + size.get_str() + " exceeds the budget");
  LowestWeightLine out;
  out.module_dim = size.get_ui();
  auto idx = detail::subsets(n, d);
  std::vector<Vector> nb = q.nilradical.basis_vectors();
  out.line = detail::wedge(nb, idx);
  // b_i · (n_1 ∧ ... ∧ n_d) = sum_k n_1 ∧ ... ∧ [b_i, n_k] ∧ ... ∧ n_d
  std::vector<Vector> action;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = zero_vector(idx.size());
    const Matrix& adb = g.ad_basis(i);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Vector> vs = nb;
      vs[k] = adb * nb[k];
      if (is_zero(vs[k])) continue;
      v = v + detail::wedge(vs, idx);
    }
    action.push_back(std::move(v));
  }
  // Σ c_i action_i - t line = 0
  std::vector<Vector> cols = action;
  cols.push_back(-out.line);
  Subspace ker = kernel(Matrix::from_columns(cols, idx.size()));
  std::vector<Vector> stab;
  for (const auto& k : ker.basis_vectors()) stab.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
  out.stabilizer = Subspace::span(n, stab);
  out.stabilizer_matches = out.stabilizer == q.space;
  return out;
}

}  // namespace parabolica
