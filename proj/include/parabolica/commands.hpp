#pragma once

// JSON-in, JSON-out operations behind the command-line verbs. Each takes a
// parsed document and returns the document to print.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parabolica/building.hpp"
#include "parabolica/catalog.hpp"
#include "parabolica/config.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/json_io.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/root_data.hpp"
#include "parabolica/types.hpp"

namespace parabolica::commands {

using json_io::json;

namespace detail {

inline const CatalogAlgebra& require_catalog(const json_io::LoadedAlgebra& a, const std::string& verb) {
  if (!a.catalog) throw DomainError("needs_catalog", verb + " needs a catalog algebra (gl, sl or so)");
  return *a.catalog;
}

inline ParabolicData parabolic_field(const json_io::LoadedAlgebra& a, const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw DomainError("bad_json", "missing field '" + key + "'");
  return make_parabolic(a.algebra, json_io::subspace_from_json(doc.at(key), a.algebra->dim()));
}

inline json algebra_json(const json_io::LoadedAlgebra& a) {
  return a.catalog ? json_io::to_json(*a.catalog) : json_io::to_json(*a.algebra);
}

// Cartan and chamber of a document, defaulting to the standard ones of a
// catalog algebra.
struct Frame {
  std::shared_ptr<const RootDatum> rd;
  SimpleSystem ss;
  std::vector<int> labels;
};

inline Frame frame(const json_io::LoadedAlgebra& a, const json& doc) {
  Frame f;
  const bool custom = doc.contains("cartan") || doc.contains("chamber");
  if (a.catalog && !custom) {
    TypeSystem ts = catalog_type_system(*a.catalog);
    f.ss = ts.standard().ss;
    f.rd = f.ss.rd;
    f.labels = ts.labels();
    return f;
  }
  if (!doc.contains("cartan") || !doc.contains("chamber"))
    throw DomainError("bad_json", "non-catalog algebras need both 'cartan' and 'chamber'");
  Subspace cartan = json_io::subspace_from_json(doc.at("cartan"), a.algebra->dim());
  f.rd = std::make_shared<const RootDatum>(root_decomposition(a.algebra, cartan));
  f.ss = simple_system(f.rd, parabolic_field(a, doc, "chamber"));
  for (std::size_t i = 0; i < f.ss.rank(); ++i) f.labels.push_back(static_cast<int>(i + 1));
  return f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// make, flag-stab, flag-of

inline json make(const std::string& family, const std::vector<int>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k) throw DomainError("bad_arguments", "make " + family + " takes " + std::to_string(k) + " integer(s)");
  };
  if (family == "gl") {
    need(1);
    return json_io::to_json(gl(args[0]));
  }
  if (family == "sl") {
    need(1);
    return json_io::to_json(sl(args[0]));
  }
  if (family == "so") {
    need(2);
    return json_io::to_json(so(args[0], args[1]));
  }
  throw DomainError("bad_arguments", "unknown family '" + family + "' (expected gl, sl or so)");
}

// {"algebra", "flag": [[spanning vectors of member 1], ...]}
inline json flag_stab(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const CatalogAlgebra& cat = detail::require_catalog(a, "flag-stab");
  FlagSpec f;
  f.dim = cat.vector_dim();
  f.gram = cat.gram;
  for (const auto& member : doc.at("flag")) f.chain.push_back(json_io::subspace_from_json(member, f.dim));
  ParabolicData p = flag_stabilizer(cat, f);
  json out;
  out["algebra"] = json_io::to_json(cat);
  json pj = json_io::to_json(p);
  for (auto it = pj.begin(); it != pj.end(); ++it) out[it.key()] = it.value();
  out["type"] = json_io::to_json(catalog_type_system(cat).type_of(p));
  return out;
}

inline json flag_of(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const CatalogAlgebra& cat = detail::require_catalog(a, "flag-of");
  ParabolicData p = detail::parabolic_field(a, doc, "subspace");
  FlagSpec f = flag_from_parabolic(cat, p);
  json chain = json::array(), dims = json::array();
  for (const auto& w : f.chain) {
    chain.push_back(json_io::to_json(w));
    dims.push_back(w.dim());
  }
  return json{{"flag", chain}, {"dims", dims}};
}

// ---------------------------------------------------------------------------
// parabolic check / project / opposite / levi

inline json check(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const LieAlgebra& g = *a.algebra;
  Subspace s = json_io::subspace_from_json(doc.at("subspace"), g.dim());
  json out;
  auto c = parabolic_conditions(g, s);
  out["parabolic"] = c.perp_and_self_normalizing;
  out["conditions"] = {{"perp_inside_and_self_normalizing", c.perp_and_self_normalizing},
                       {"normalizer_of_nilradical", c.normalizes_nilradical},
                       {"perp_is_nilradical", c.perp_is_nilradical},
                       {"dimension_identity", c.dimension_identity}};
  if (c.all() != c.perp_and_self_normalizing)
    throw TheoremContradiction("characterizations of parabolicity disagree");
  if (c.perp_and_self_normalizing) {
    ParabolicData p = make_parabolic(a.algebra, s);
    json pj = json_io::to_json(p);
    for (auto it = pj.begin(); it != pj.end(); ++it) out[it.key()] = it.value();
    out["grading_lift"] = json_io::to_json(grading_lift(p).xi);
    if (a.catalog) out["type"] = json_io::to_json(catalog_type_system(*a.catalog).type_of(p));
  }
  return out;
}

inline json project(const json& doc) {
  auto a = json_io::load_algebra(doc);
  ParabolicData p = detail::parabolic_field(a, doc, "p");
  ParabolicData q = detail::parabolic_field(a, doc, "q");
  json out;
  out["weakly_opposite"] = is_weakly_opposite(p, q);
  out["costandard"] = is_costandard(p, q);
  std::optional<QuotientTypes> qt;
  std::optional<TypeSystem> ts;
  if (a.catalog) {
    ts = catalog_type_system(*a.catalog);
    qt = quotient_types(*ts, q);
  }
  Projection pr = qt ? parabolica::project(q, p, qt->levi) : parabolica::project(q, p);
  json rg = json_io::to_json(pr.in_g);
  json r0 = json_io::to_json(pr.in_q0);
  r0["algebra"] = json_io::to_json(*pr.levi.algebra);
  if (qt) {
    out["type_p"] = json_io::to_json(ts->type_of(p));
    out["type_q"] = json_io::to_json(qt->type_q);
    rg["type"] = json_io::to_json(ts->type_of(pr.in_g));
    r0["type"] = json_io::to_json(qt->q0->type_of(pr.in_q0));
    out["iota"] = json_io::to_json(qt->iota);
    out["nu"] = json_io::to_json(qt->nu);
  }
  out["r_in_g"] = std::move(rg);
  out["r_in_q0"] = std::move(r0);
  return out;
}

inline json opposite(const json& doc) {
  auto a = json_io::load_algebra(doc);
  ParabolicData p = detail::parabolic_field(a, doc, "subspace");
  Element xi = doc.contains("lift") ? json_io::vector_from_json(doc.at("lift"), a.algebra->dim()) : grading_lift(p).xi;
  ParabolicData o = parabolica::opposite(p, xi);
  json out;
  out["algebra"] = detail::algebra_json(a);
  json oj = json_io::to_json(o);
  for (auto it = oj.begin(); it != oj.end(); ++it) out[it.key()] = it.value();
  if (a.catalog) out["type"] = json_io::to_json(catalog_type_system(*a.catalog).type_of(o));
  return out;
}

inline json levi(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const LieAlgebra& g = *a.algebra;
  ParabolicData p = detail::parabolic_field(a, doc, "subspace");
  GradingLift lift = grading_lift(p);
  LeviQuotient lq = levi_quotient(p);
  Subspace levi_sub = intersect(p.space, g.centralizer(Subspace::span(g.dim(), {lift.xi})));
  if (levi_sub.dim() + p.nilradical.dim() != p.dim()) throw TheoremContradiction("centralizer of a grading lift is not a Levi");
  json out;
  out["grading_lift"] = json_io::to_json(lift.xi);
  out["lift_torsor"] = json_io::to_json(lift.torsor);
  out["levi_subalgebra"] = json_io::to_json(levi_sub);
  out["levi_quotient"] = json_io::to_json(*lq.algebra);
  out["projection"] = json_io::to_json(lq.projection);
  return out;
}

// ---------------------------------------------------------------------------
// rootdata, weyl, delta

inline json rootdata(const json& doc) {
  auto a = json_io::load_algebra(doc);
  detail::Frame f = detail::frame(a, doc);
  const RootDatum& rd = *f.rd;
  json roots = json::array();
  for (std::size_t i = 0; i < rd.roots.size(); ++i)
    roots.push_back(json{{"functional", json_io::to_json(rd.roots[i])},
                         {"dim", rd.root_spaces[i].dim()},
                         {"level", json_io::to_json(f.ss.level[i])},
                         {"coroot", json_io::to_json(rd.coroots[i])}});
  json simple = json::array(), cm = json::array(), cw = json::array(), wt = json::array();
  for (std::size_t i = 0; i < f.ss.rank(); ++i) {
    simple.push_back(json{{"label", f.labels[i]}, {"root", f.ss.simples[i]}});
    cw.push_back(json_io::to_json(f.ss.coweights[i]));
    wt.push_back(json_io::to_json(f.ss.weights[i]));
  }
  for (const auto& row : f.ss.cartan_matrix()) cm.push_back(json_io::to_json(row));
  json out;
  out["cartan"] = json_io::to_json(rd.cartan);
  out["levi"] = json_io::to_json(rd.levi);
  out["root_count"] = rd.roots.size();
  out["roots"] = std::move(roots);
  out["simple"] = std::move(simple);
  out["cartan_matrix"] = std::move(cm);
  out["fundamental_coweights"] = std::move(cw);
  out["fundamental_weights"] = std::move(wt);
  return out;
}

// Word taking the chamber to "target", as simple-root labels.
inline json weyl(const json& doc) {
  auto a = json_io::load_algebra(doc);
  detail::Frame f = detail::frame(a, doc);
  ParabolicData target = detail::parabolic_field(a, doc, "target");
  Word w = weyl_word(f.ss, target);
  json word = json::array();
  for (auto i : w) word.push_back(f.labels[i]);
  return json{{"word", word}, {"length", w.size()}};
}

inline json delta(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const CatalogAlgebra& cat = detail::require_catalog(a, "delta");
  TypeSystem ts = catalog_type_system(cat);
  GroupWord w = delta_parabolic(ts, detail::parabolic_field(a, doc, "b"), detail::parabolic_field(a, doc, "c"));
  return json{{"delta", w}, {"length", w.size()}};
}

// ---------------------------------------------------------------------------
// building

inline json thin_json(const ThinChamberSystem& thin) {
  WDistance wd(thin);
  json names = json::array(), table = json::array();
  for (std::size_t c = 0; c < thin.size(); ++c) names.push_back(thin.system().name(c));
  for (std::size_t b = 0; b < thin.size(); ++b) {
    json row = json::array();
    for (std::size_t c = 0; c < thin.size(); ++c) row.push_back(wd(b, c));
    table.push_back(std::move(row));
  }
  return json{{"labels", thin.labels()}, {"chambers", thin.size()}, {"names", names}, {"delta", table}};
}

inline ThinChamberSystem model(const std::string& kind, int n) {
  if (kind == "A") return apartment_model_A(n);
  if (kind == "B") return apartment_model_B(n);
  throw DomainError("bad_arguments", "model must be A or B");
}

// The apartment of the standard Cartan, with its label isomorphism to the
// thin model of the same type.
struct BuildingView {
  LieApartment apartment;
  std::optional<ThinChamberSystem> model;
  bool isomorphic = false;
};

inline BuildingView building_view(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const CatalogAlgebra& cat = detail::require_catalog(a, "building");
  TypeSystem ts = catalog_type_system(cat);
  BuildingView v;
  v.apartment = lie_apartment(ts, standard_cartan(cat));
  if (!(cat.family == "so" && cat.definite() == 0)) {
    v.model = matching_model(cat);
    v.isomorphic = label_isomorphism(v.apartment.thin, 0, *v.model, 0).has_value();
  }
  return v;
}

inline json building(const json& doc) {
  BuildingView v = building_view(doc);
  json out = thin_json(v.apartment.thin);
  out["matches_model"] = v.isomorphic;
  return out;
}

// ---------------------------------------------------------------------------
// config project

struct ConfigResult {
  json report;
  std::string dot;
};

// {"algebra", "kind": "simplex", "points": [...], "center": [...]} or
// {"algebra", "kind": "cross", "positive": [...], "negative": [...], "center": [...]}.
// "center" spans the subspace whose stabilizer is the projection centre.
inline ConfigResult config_project(const json& doc) {
  auto a = json_io::load_algebra(doc);
  const CatalogAlgebra& cat = detail::require_catalog(a, "config project");
  const std::size_t m = cat.vector_dim();
  auto vectors = [&](const char* key) {
    std::vector<Vector> out;
    for (const auto& v : doc.at(key)) out.push_back(json_io::vector_from_json(v, m));
    return out;
  };
  const auto kind = doc.at("kind").get<std::string>();
  StandardConfiguration c;
  if (kind == "simplex")
    c = simplex_configuration(cat, vectors("points"));
  else if (kind == "cross")
    c = cross_configuration(cat, vectors("positive"), vectors("negative"));
  else
    throw DomainError("bad_json", "kind must be simplex or cross");
  FlagSpec f;
  f.dim = m;
  f.gram = cat.gram;
  f.chain = {Subspace::span(m, vectors("center"))};
  ParabolicData q = flag_stabilizer(cat, f);
  TypeSystem ts = catalog_type_system(cat);
  ProjectedConfiguration pc = project_configuration(ts, q, c);
  IncidenceReport rep = incidence_report(pc.incidence, kind == "simplex" ? "quadrilateral" : "projection");
  json r;
  r["kind"] = kind;
  r["algebra"] = cat.name();
  r["type_q"] = json_io::to_json(pc.types.type_q);
  r["op_g"] = json_io::to_json(pc.types.op_g);
  r["op_q0"] = json_io::to_json(pc.types.op_q0);
  r["iota"] = json_io::to_json(pc.types.iota);
  r["nu"] = json_io::to_json(pc.types.nu);
  r["source_elements"] = c.assignment.size();
  r["projected_elements"] = pc.source.size();
  json types = json::array();
  for (std::size_t t = 0; t < rep.types.size(); ++t)
    types.push_back(json{{"type", rep.types[t]}, {"elements", rep.elements[t]}});
  r["types"] = std::move(types);
  json mats = json::array();
  for (std::size_t t = 0; t < rep.matrices.size(); ++t)
    mats.push_back(json{{"rows", rep.types[t]},
                        {"columns", rep.types[t + 1]},
                        {"matrix", rep.matrices[t]},
                        {"row_sums", rep.row_sums(t)},
                        {"column_sums", rep.column_sums(t)}});
  r["incidence"] = std::move(mats);
  return {std::move(r), rep.dot};
}

// Fixed rational witnesses for the two worked configurations.
inline json tetrahedron_witness() {
  json w;
  w["algebra"] = json_io::to_json(gl(4));
  w["kind"] = "simplex";
  json pts = json::array();
  for (std::size_t i = 0; i < 4; ++i) pts.push_back(json_io::to_json(unit_vector(4, i)));
  w["points"] = pts;
  w["center"] = json::array({json::array({"1", "1", "1", "1"})});
  return w;
}

// Isotropic frame e_i, f_i of so(4,3) and the isotropic line through
// e1+e2+e3+2w1+f1+f2-4f3.
inline json octahedron_witness() {
  json w;
  w["algebra"] = json_io::to_json(so(4, 3));
  w["kind"] = "cross";
  json pos = json::array(), neg = json::array();
  for (int i = 1; i <= 3; ++i) {
    pos.push_back(json_io::to_json(unit_vector(7, so_index_e(i))));
    neg.push_back(json_io::to_json(unit_vector(7, so_index_f(3, 1, i))));
  }
  w["positive"] = pos;
  w["negative"] = neg;
  Vector v = zero_vector(7);
  v[so_index_e(1)] = v[so_index_e(2)] = v[so_index_e(3)] = 1;
  v[so_index_w(3, 1)] = 2;
  v[so_index_f(3, 1, 1)] = v[so_index_f(3, 1, 2)] = 1;
  v[so_index_f(3, 1, 3)] = -4;
  w["center"] = json::array({json_io::to_json(v)});
  return w;
}

}  // namespace parabolica::commands
