#pragma once

// Standard configurations from labelled apartments (simplices in P(V),
// cross-polytopes in quadrics) and their projection to a Levi quotient.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/building.hpp"
#include "parabolica/catalog.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/types.hpp"

namespace parabolica {

struct StandardConfiguration {
  std::string kind;  // "simplex" or "cross"
  IncidenceSystem model;
  std::vector<std::vector<int>> elements;  // model element -> subset of the vertex labels
  std::vector<ParabolicData> assignment;   // model element -> maximal parabolic
  std::vector<Subspace> spans;             // model element -> subspace it stabilizes
  Subspace levi;                           // common minimal Levi of the apartment
};

namespace detail {

inline StandardConfiguration assemble(const CatalogAlgebra& cat, std::string kind, int n,
                                      std::vector<std::vector<int>> elements,
                                      const std::vector<Vector>& vertices,
                                      const std::function<std::size_t(int)>& vertex_index) {
  StandardConfiguration c;
  c.kind = std::move(kind);
  c.model = containment_incidence(n, elements);
  c.elements = std::move(elements);
  const std::size_t m = cat.vector_dim();
  for (const auto& e : c.elements) {
    std::vector<Vector> span;
    for (auto v : e) span.push_back(vertices.at(vertex_index(v)));
    Subspace s = Subspace::span(m, span);
    if (s.dim() != e.size()) throw DomainError("degenerate", "vertices of a face are dependent");
    FlagSpec f;
    f.dim = m;
    f.gram = cat.gram;
    f.chain = {s};
    if (!f.is_isotropic(s)) throw DomainError("inadmissible", "face span is not isotropic");
    c.assignment.push_back(flag_stabilizer(cat, f));
    c.spans.push_back(std::move(s));
  }
  std::vector<Subspace> lines;
  for (const auto& v : vertices) lines.push_back(Subspace::span(m, {v}));
  c.levi = cat.algebra->whole();
  for (const auto& l : lines) c.levi = intersect(c.levi, stabilizer_in_realization(*cat.algebra, {l}));
  for (std::size_t a = 0; a < c.assignment.size(); ++a) {
    if (!c.assignment[a].space.contains(c.levi)) throw TheoremContradiction("configuration leaves its apartment");
    for (std::size_t b = a + 1; b < c.assignment.size(); ++b) {
      if (c.assignment[a] == c.assignment[b]) throw TheoremContradiction("configuration is not injective");
      if (c.model.incident(a, b) && !is_costandard(c.assignment[a], c.assignment[b]))
        throw TheoremContradiction("incident faces have non-costandard stabilizers");
    }
  }
  return c;
}

}  // namespace detail

// n+1 spanning points of an (n+1)-dimensional space; faces map to the
// stabilizers of their spans.
inline StandardConfiguration simplex_configuration(const CatalogAlgebra& cat, const std::vector<Vector>& points) {
  if (cat.family == "so") throw DomainError("precondition", "simplex configurations live in gl or sl");
  const std::size_t m = cat.vector_dim();
  if (points.size() != m || Subspace::span(m, points).dim() != m)
    throw DomainError("degenerate", "simplex needs dim V spanning points");
  const int n = static_cast<int>(m) - 1;
  return detail::assemble(cat, "simplex", n, subset_model_elements(n), points,
                          [](int v) { return static_cast<std::size_t>(v - 1); });
}

// Isotropic vectors x_1..x_n, y_1..y_n with B(x_i, y_j) = 0 for i != j and
// B(x_i, y_i) != 0; signed admissible subsets map to stabilizers of spans.
inline StandardConfiguration cross_configuration(const CatalogAlgebra& cat, const std::vector<Vector>& positive,
                                                 const std::vector<Vector>& negative) {
  if (!cat.gram) throw DomainError("precondition", "cross configurations live in an orthogonal algebra");
  const int n = static_cast<int>(positive.size());
  if (n < 1 || positive.size() != negative.size() || n > cat.planes())
    throw DomainError("precondition", "cross configuration needs 1..n pairs of vectors");
  BilinearForm b(*cat.gram);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& x = positive[static_cast<std::size_t>(i)];
      const auto& y = negative[static_cast<std::size_t>(j)];
      if (sgn(b(x, positive[static_cast<std::size_t>(j)])) != 0 || sgn(b(y, negative[static_cast<std::size_t>(i)])) != 0)
        throw DomainError("inadmissible", "cross vertices of one sign must be mutually orthogonal and isotropic");
      if ((i == j) == (sgn(b(x, y)) == 0)) throw DomainError("inadmissible", "cross vertices are not paired into hyperbolic planes");
    }
  std::vector<Vector> vertices = positive;
  vertices.insert(vertices.end(), negative.begin(), negative.end());
  return detail::assemble(cat, "cross", n, admissible_model_elements(n), vertices, [n](int v) {
    return v > 0 ? static_cast<std::size_t>(v - 1) : static_cast<std::size_t>(n - v - 1);
  });
}

// ---------------------------------------------------------------------------
// Projection

struct ProjectedConfiguration {
  IncidenceSystem incidence;          // elements typed by their q0-type
  std::vector<std::size_t> source;    // element -> index in the standard configuration
  std::vector<ParabolicData> images;  // element -> maximal parabolic of q0
  std::vector<int> g_type;
  std::vector<int> q0_type;
  QuotientTypes types;
};

// Restrict along ν_q, check weak opposition, and project elementwise. The
// incidence of the result is costandardness in q0.
inline ProjectedConfiguration project_configuration(const TypeSystem& ts, const ParabolicData& q,
                                                    const StandardConfiguration& c) {
  ProjectedConfiguration out;
  out.types = quotient_types(ts, q);
  const QuotientTypes& qt = out.types;
  std::set<int> reachable;
  for (auto [k, v] : qt.nu) reachable.insert(v);
  std::vector<std::string> violators;
  std::vector<std::size_t> kept;
  std::vector<int> g_types;
  for (std::size_t e = 0; e < c.assignment.size(); ++e) {
    TypeSet t = ts.type_of(c.assignment[e]);
    if (t.size() != 1) throw TheoremContradiction("configuration element is not a maximal parabolic");
    g_types.push_back(*t.begin());
    if (!reachable.count(*t.begin())) continue;
    if (!is_weakly_opposite(c.assignment[e], q)) violators.push_back(c.model.name(e));
    kept.push_back(e);
  }
  if (!violators.empty()) {
    std::string msg = "not weakly opposite to the centre:";
    for (const auto& v : violators) msg += " " + v;
    throw DomainError("not_weakly_opposite", msg);
  }
  for (auto e : kept) {
    Projection pr = project(q, c.assignment[e], qt.levi);
    int gt = g_types[e];
    TypeSet t0 = qt.q0->type_of(pr.in_q0);
    if (t0 != qt.nu_inverse({gt}))
      throw TheoremContradiction("projected type " + to_string(t0) + " differs from the transformed type " +
                                 to_string(qt.nu_inverse({gt})));
    out.source.push_back(e);
    out.images.push_back(pr.in_q0);
    out.g_type.push_back(gt);
    out.q0_type.push_back(*t0.begin());
  }
  out.incidence = IncidenceSystem(qt.q0->labels());
  for (std::size_t k = 0; k < out.source.size(); ++k)
    out.incidence.add(c.model.name(out.source[k]), out.q0_type[k]);
  for (std::size_t a = 0; a < out.source.size(); ++a)
    for (std::size_t b = a + 1; b < out.source.size(); ++b) {
      if (out.q0_type[a] == out.q0_type[b]) {
        if (out.images[a] == out.images[b]) throw TheoremContradiction("projection identifies two elements");
        continue;
      }
      bool inc = is_costandard(out.images[a], out.images[b]);
      if (c.model.incident(out.source[a], out.source[b]) && !inc)
        throw TheoremContradiction("projection does not preserve incidence");
      if (inc) out.incidence.connect(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct IncidenceReport {
  std::vector<int> types;
  std::vector<std::vector<std::string>> elements;  // per type
  // matrices[t][i][j]: element i of types[t] incident with element j of types[t+1]
  std::vector<std::vector<std::vector<int>>> matrices;
  std::string dot;

  std::vector<int> row_sums(std::size_t t) const {
    std::vector<int> out;
    for (const auto& r : matrices.at(t)) out.push_back(std::accumulate(r.begin(), r.end(), 0));
    return out;
  }
  std::vector<int> column_sums(std::size_t t) const {
    const auto& m = matrices.at(t);
    std::vector<int> out(m.empty() ? 0 : m[0].size(), 0);
    for (const auto& r : m)
      for (std::size_t j = 0; j < r.size(); ++j) out[j] += r[j];
    return out;
  }
};

inline IncidenceReport incidence_report(const IncidenceSystem& g, const std::string& name = "configuration") {
  IncidenceReport rep;
  std::vector<std::vector<std::size_t>> members;
  for (auto t : g.type_set()) {
    auto els = g.elements_of_type(t);
    if (els.empty()) continue;
    rep.types.push_back(t);
    members.push_back(els);
    std::vector<std::string> names;
    for (auto e : els) names.push_back(g.name(e));
    rep.elements.push_back(std::move(names));
  }
  for (std::size_t t = 0; t + 1 < members.size(); ++t) {
    std::vector<std::vector<int>> m;
    for (auto a : members[t]) {
      std::vector<int> row;
      for (auto b : members[t + 1]) row.push_back(g.incident(a, b) ? 1 : 0);
      m.push_back(std::move(row));
    }
    rep.matrices.push_back(std::move(m));
  }
  rep.dot = to_dot(g, name);
  return rep;
}

}  // namespace parabolica
