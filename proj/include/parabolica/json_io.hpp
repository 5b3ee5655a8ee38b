#pragma once

// JSON documents: rationals are "p/q" strings, matrices row-major arrays of
// them, subspaces their RREF bases.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "parabolica/catalog.hpp"
#include "parabolica/errors.hpp"
#include "parabolica/lie_algebra.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/ratmat.hpp"
#include "parabolica/types.hpp"

namespace parabolica::json_io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("bad_json", "rational must be a \"p/q\" string or an integer");
}

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vector vector_from_json(const json& j, std::optional<std::size_t> n = std::nullopt) {
  if (!j.is_array()) throw DomainError("bad_json", "vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  if (n && v.size() != *n)
    throw DomainError("dimension_mismatch", "vector of length " + std::to_string(v.size()) + ", expected " +
                                                std::to_string(*n));
  return v;
}

inline json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("bad_json", "matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw DomainError("bad_json", "ragged matrix");
  return Matrix::from_rows(rows, cols);
}

inline json to_json(const Subspace& s) {
  return json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", to_json(s.basis())}};
}

// {"basis": [[...],...]} with optional "ambient"; a bare array is a basis.
inline Subspace subspace_from_json(const json& j, std::size_t ambient) {
  const json& b = j.is_object() ? j.at("basis") : j;
  if (j.is_object() && j.contains("ambient") && j.at("ambient").get<std::size_t>() != ambient)
    throw DomainError("dimension_mismatch", "subspace ambient dimension differs from the algebra");
  std::vector<Vector> rows;
  for (const auto& r : b) rows.push_back(vector_from_json(r, ambient));
  return Subspace::span(ambient, rows);
}

// ---------------------------------------------------------------------------
// Algebras

inline json to_json(const LieAlgebra& g) {
  json j;
  j["dim"] = g.dim();
  j["basis"] = g.labels();
  json st = json::array();
  for (const auto& row : g.structure()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    st.push_back(std::move(r));
  }
  j["structure"] = std::move(st);
  if (g.has_realization()) {
    json rz = json::array();
    for (const auto& m : g.realization()) rz.push_back(to_json(m));
    j["realization"] = std::move(rz);
  } else if (g.has_form()) {
    j["form"] = to_json(g.form().gram());
  }
  return j;
}

inline json to_json(const CatalogAlgebra& cat) {
  json j = to_json(*cat.algebra);
  j["family"] = cat.family;
  if (cat.family == "so") {
    j["p"] = cat.p;
    j["q"] = cat.q;
  } else {
    j["n"] = cat.p;
  }
  return j;
}

inline LieAlgebra algebra_from_json(const json& j) {
  const auto n = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) labels = j.at("basis").get<std::vector<std::string>>();
  const json& st = j.at("structure");
  if (!st.is_array() || st.size() != n) throw DomainError("bad_json", "structure must be dim x dim x dim");
  std::vector<std::vector<Vector>> c;
  for (const auto& row : st) {
    if (!row.is_array() || row.size() != n) throw DomainError("bad_json", "structure must be dim x dim x dim");
    std::vector<Vector> r;
    for (const auto& v : row) r.push_back(vector_from_json(v, n));
    c.push_back(std::move(r));
  }
  std::optional<std::vector<Matrix>> rho;
  if (j.contains("realization")) {
    rho.emplace();
    for (const auto& m : j.at("realization")) rho->push_back(matrix_from_json(m));
  }
  std::optional<BilinearForm> form;
  if (!rho && j.contains("form")) form = BilinearForm(matrix_from_json(j.at("form")));
  return LieAlgebra(std::move(c), std::move(labels), std::move(rho), std::move(form));
}

// A catalog algebra is rebuilt from its metadata and must agree with the
// transmitted structure constants.
inline std::optional<CatalogAlgebra> catalog_from_json(const json& j) {
  if (!j.contains("family")) return std::nullopt;
  const auto family = j.at("family").get<std::string>();
  CatalogAlgebra cat;
  if (family == "gl")
    cat = gl(j.at("n").get<int>());
  else if (family == "sl")
    cat = sl(j.at("n").get<int>());
  else if (family == "so")
    cat = so(j.at("p").get<int>(), j.at("q").get<int>());
  else
    throw DomainError("bad_json", "unknown family '" + family + "'");
  LieAlgebra loaded = algebra_from_json(j);
  if (loaded.structure() != cat.algebra->structure())
    throw DomainError("bad_json", "structure constants do not match the " + cat.name() + " catalog entry");
  return cat;
}

// A document carries its algebra either at the top level or under "algebra".
inline const json& algebra_part(const json& doc) { return doc.contains("algebra") ? doc.at("algebra") : doc; }

struct LoadedAlgebra {
  AlgebraPtr algebra;
  std::optional<CatalogAlgebra> catalog;
};

inline LoadedAlgebra load_algebra(const json& doc) {
  const json& a = algebra_part(doc);
  LoadedAlgebra out;
  out.catalog = catalog_from_json(a);
  out.algebra = out.catalog ? out.catalog->algebra : share(algebra_from_json(a));
  return out;
}

// ---------------------------------------------------------------------------
// Parabolics, types, errors

inline json to_json(const Filtration& f) {
  json levels = json::array();
  for (int k = f.lo(); k <= f.hi(); ++k) levels.push_back(json{{"index", k}, {"dim", f.level(k).dim()}});
  return levels;
}

inline json to_json(const TypeSet& t) {
  json a = json::array();
  for (auto x : t) a.push_back(x);
  return a;
}

inline json to_json(const TypeMap& m) {
  json o = json::object();
  for (auto [k, v] : m) o[std::to_string(k)] = v;
  return o;
}

inline json to_json(const ParabolicData& p) {
  json j;
  j["subspace"] = to_json(p.space);
  j["nilradical"] = to_json(p.nilradical);
  j["filtration"] = to_json(p.filtration);
  if (p.grading_lift) j["grading_lift"] = to_json(*p.grading_lift);
  return j;
}

inline json error_json(const Error& e) {
  json j{{"error", e.kind()}, {"message", e.what()}};
  if (auto* s = dynamic_cast<const InvalidStructure*>(&e)) j["triple"] = {s->i(), s->j(), s->k()};
  return j;
}

}  // namespace parabolica::json_io
