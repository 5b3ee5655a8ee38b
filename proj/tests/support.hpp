#pragma once

#include <string>
#include <vector>

#include "parabolica/parabolica.hpp"

namespace testing_support {

using namespace parabolica;

inline std::size_t index_of_label(const LieAlgebra& g, const std::string& label) {
  const auto& ls = g.labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  throw std::out_of_range("no basis element " + label);
}

inline Element el(const LieAlgebra& g, const std::string& label) {
  return g.basis_element(index_of_label(g, label));
}

// Linear combination of labelled basis elements.
inline Element combo(const LieAlgebra& g, const std::vector<std::pair<Rational, std::string>>& terms) {
  Element x = zero_vector(g.dim());
  for (const auto& [c, l] : terms) x = x + c * el(g, l);
  return x;
}

inline Subspace span_of(const LieAlgebra& g, const std::vector<std::string>& labels) {
  std::vector<Vector> rows;
  for (const auto& l : labels) rows.push_back(el(g, l));
  return Subspace::span(g.dim(), rows);
}

inline Subspace span_vecs(std::size_t n, const std::vector<Vector>& rows) { return Subspace::span(n, rows); }

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Rational(x));
  return v;
}

// Diagonal matrices of gl(n).
inline Subspace gl_cartan(const LieAlgebra& g, int n) {
  std::vector<std::string> ls;
  for (int i = 1; i <= n; ++i) ls.push_back("E" + std::to_string(i) + std::to_string(i));
  return span_of(g, ls);
}

// Upper triangular matrices of gl(n), optionally strictly.
inline Subspace gl_upper(const LieAlgebra& g, int n, bool strict = false) {
  std::vector<std::string> ls;
  for (int i = 1; i <= n; ++i)
    for (int j = strict ? i + 1 : i; j <= n; ++j) ls.push_back("E" + std::to_string(i) + std::to_string(j));
  return span_of(g, ls);
}

// Dimensions of the ad(ξ)-eigenspaces for the given eigenvalues.
inline std::vector<std::size_t> eigen_dims(const LieAlgebra& g, const Element& xi, const std::vector<long>& values) {
  std::vector<std::size_t> out;
  Matrix a = g.ad(xi);
  for (auto v : values) {
    Matrix m = a - Rational(v) * Matrix::identity(g.dim());
    out.push_back(kernel(m).dim());
  }
  return out;
}

}  // namespace testing_support
