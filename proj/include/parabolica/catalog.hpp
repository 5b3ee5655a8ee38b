#pragma once

// gl_n, sl_n and so(p,q) with their defining realizations, standard split
// Cartans, flag stabilizers, and sampling of inner automorphisms.

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/errors.hpp"
#include "parabolica/lie_algebra.hpp"
#include "parabolica/parabolic.hpp"
#include "parabolica/ratmat.hpp"
#include "parabolica/root_data.hpp"

namespace parabolica {

struct CatalogAlgebra {
  std::string family;  // "gl", "sl", "so"
  int p = 0;           // gl/sl: matrix size; so: signature (p, q)
  int q = 0;
  AlgebraPtr algebra;
  std::optional<Matrix> gram;  // invariant form on the defining space (so only)

  std::size_t vector_dim() const { return algebra->realization_dim(); }
  // Number of hyperbolic planes and dimension of the definite part (so only).
  int planes() const { return q; }
  int definite() const { return p - q; }
  std::string name() const {
    if (family == "so") return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return family + "(" + std::to_string(p) + ")";
  }
};

namespace detail {

inline Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

inline std::string index_label(std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return std::to_string(i + 1) + std::to_string(j + 1);
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace detail

inline CatalogAlgebra gl(int n) {
  if (n < 1) throw DomainError("precondition", "gl(n) needs n >= 1");
  const auto m = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      basis.push_back(detail::elementary(m, i, j));
      labels.push_back("E" + detail::index_label(i, j, m));
    }
  return {"gl", n, 0, share(LieAlgebra::from_matrices(std::move(basis), std::move(labels))), std::nullopt};
}

// Off-diagonal E_ij in row-major order, then H_i = E_ii - E_{i+1,i+1}.
inline CatalogAlgebra sl(int n) {
  if (n < 2) throw DomainError("precondition", "sl(n) needs n >= 2");
  const auto m = static_cast<std::size_t>(n);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) {
        basis.push_back(detail::elementary(m, i, j));
        labels.push_back("E" + detail::index_label(i, j, m));
      }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    basis.push_back(detail::elementary(m, i, i) - detail::elementary(m, i + 1, i + 1));
    labels.push_back("H" + std::to_string(i + 1));
  }
  return {"sl", n, 0, share(LieAlgebra::from_matrices(std::move(basis), std::move(labels))), std::nullopt};
}

// Defining space ordered e_1..e_n, w_1..w_k, f_n..f_1 with B(e_i, f_i) = 1
// and B(w_j, w_j) = 1, where n = q and k = p - q.
inline std::size_t so_index_e(int i) { return static_cast<std::size_t>(i - 1); }
inline std::size_t so_index_w(int n, int j) { return static_cast<std::size_t>(n + j - 1); }
inline std::size_t so_index_f(int n, int k, int i) { return static_cast<std::size_t>(2 * n + k - i); }

inline Matrix so_gram(int p, int q) {
  const int n = q, k = p - q;
  const auto N = static_cast<std::size_t>(2 * n + k);
  Matrix b(N, N);
  for (int i = 1; i <= n; ++i) {
    b(so_index_e(i), so_index_f(n, k, i)) = 1;
    b(so_index_f(n, k, i), so_index_e(i)) = 1;
  }
  for (int j = 1; j <= k; ++j) b(so_index_w(n, j), so_index_w(n, j)) = 1;
  return b;
}

inline std::string so_vector_label(int n, int k, std::size_t idx) {
  const auto ii = static_cast<int>(idx);
  if (ii < n) return "e" + std::to_string(ii + 1);
  if (ii < n + k) return "w" + std::to_string(ii - n + 1);
  return "f" + std::to_string(2 * n + k - ii);
}

// Basis X_{u,v} = u (Bv)^T - v (Bu)^T for basis vectors u < v.
inline CatalogAlgebra so(int p, int q) {
  if (q < 1 || p < q) throw DomainError("precondition", "so(p, q) needs p >= q >= 1");
  const int n = q, k = p - q;
  const auto N = static_cast<std::size_t>(2 * n + k);
  Matrix b = so_gram(p, q);
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = u + 1; v < N; ++v) {
      Matrix x(N, N);
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) x(r, c) = (r == u ? b(v, c) : Rational(0)) - (r == v ? b(u, c) : Rational(0));
      basis.push_back(std::move(x));
      labels.push_back("X(" + so_vector_label(n, k, u) + "," + so_vector_label(n, k, v) + ")");
    }
  return {"so", p, q, share(LieAlgebra::from_matrices(std::move(basis), std::move(labels))), b};
}

// ---------------------------------------------------------------------------
// Standard Cartan and minimal Levi

inline Subspace standard_cartan(const CatalogAlgebra& cat) {
  const LieAlgebra& g = *cat.algebra;
  std::vector<Vector> hs;
  const std::size_t m = cat.vector_dim();
  if (cat.family == "gl" || cat.family == "sl") {
    for (std::size_t i = 0; i < m; ++i) {
      if (cat.family == "sl" && i + 1 == m) break;
      Matrix h = cat.family == "gl" ? detail::elementary(m, i, i)
                                    : detail::elementary(m, i, i) - detail::elementary(m, i + 1, i + 1);
      hs.push_back(*g.from_matrix(h));
    }
  } else {
    const int n = cat.planes(), k = cat.definite();
    for (int i = 1; i <= n; ++i) {
      Matrix h(m, m);
      h(so_index_e(i), so_index_e(i)) = 1;
      h(so_index_f(n, k, i), so_index_f(n, k, i)) = -1;
      hs.push_back(*g.from_matrix(h));
    }
  }
  return Subspace::span(g.dim(), hs);
}

struct MinimalLevi {
  Subspace levi;
  Subspace cartan;
  std::shared_ptr<const RootDatum> root_datum;
};

inline MinimalLevi standard_minimal_levi(const CatalogAlgebra& cat) {
  MinimalLevi out;
  out.cartan = standard_cartan(cat);
  out.root_datum = std::make_shared<const RootDatum>(root_decomposition(cat.algebra, out.cartan));
  out.levi = out.root_datum->levi;
  return out;
}

// ---------------------------------------------------------------------------
// Flags

struct FlagSpec {
  std::size_t dim = 0;
  std::vector<Subspace> chain;
  std::optional<Matrix> gram;

  void validate() const {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (chain[i].ambient_dim() != dim) throw DomainError("invalid_flag", "flag member in the wrong space");
      if (chain[i].is_zero() || chain[i].is_whole()) throw DomainError("invalid_flag", "flag members must be proper and nonzero");
      if (i > 0 && (chain[i].dim() <= chain[i - 1].dim() || !chain[i].contains(chain[i - 1])))
        throw DomainError("invalid_flag", "flag is not strictly increasing");
    }
    if (gram)
      for (const auto& w : chain)
        if (!is_isotropic(w)) throw DomainError("invalid_flag", "flag member is not isotropic");
  }

  bool is_isotropic(const Subspace& w) const {
    if (!gram) return true;
    BilinearForm f(*gram);
    for (const auto& a : w.basis_vectors())
      for (const auto& b : w.basis_vectors())
        if (sgn(f(a, b)) != 0) return false;
    return true;
  }
};

// {x : x W ⊆ W} computed through the realization.
inline Subspace stabilizer_in_realization(const LieAlgebra& g, const std::vector<Subspace>& chain) {
  const auto& rho = g.realization();
  std::vector<Vector> rows;
  for (const auto& w : chain) {
    Matrix c = w.constraints();
    for (const auto& v : w.basis_vectors()) {
      std::vector<Vector> images;
      for (const auto& r : rho) images.push_back(c * (r * v));
      for (std::size_t k = 0; k < c.rows(); ++k) {
        Vector row(g.dim());
        for (std::size_t b = 0; b < g.dim(); ++b) row[b] = images[b][k];
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return g.whole();
  return kernel(Matrix::from_rows(rows, g.dim()));
}

inline ParabolicData flag_stabilizer(const CatalogAlgebra& cat, const FlagSpec& f) {
  if (f.dim != cat.vector_dim()) throw DomainError("invalid_flag", "flag lives in the wrong space");
  f.validate();
  return make_parabolic(cat.algebra, stabilizer_in_realization(*cat.algebra, f.chain));
}

inline ParabolicData isotropic_flag_stabilizer(const CatalogAlgebra& cat, FlagSpec f) {
  if (!cat.gram) throw DomainError("precondition", "isotropic flags need an orthogonal algebra");
  f.gram = cat.gram;
  return flag_stabilizer(cat, f);
}

inline FlagSpec make_flag(const CatalogAlgebra& cat, const std::vector<std::vector<Vector>>& members) {
  FlagSpec f;
  f.dim = cat.vector_dim();
  f.gram = cat.gram;
  std::vector<Vector> acc;
  for (const auto& m : members) {
    for (const auto& v : m) acc.push_back(v);
    f.chain.push_back(Subspace::span(f.dim, acc));
  }
  f.validate();
  return f;
}

// e_1 ⊂ <e_1,e_2> ⊂ ... (gl/sl: dims 1..m-1; so: isotropic dims 1..n).
inline FlagSpec standard_full_flag(const CatalogAlgebra& cat) {
  const std::size_t m = cat.vector_dim();
  std::size_t top = cat.family == "so" ? static_cast<std::size_t>(cat.planes()) : m - 1;
  std::vector<std::vector<Vector>> members;
  for (std::size_t i = 0; i < top; ++i) members.push_back({unit_vector(m, i)});
  return make_flag(cat, members);
}

inline ParabolicData standard_borel(const CatalogAlgebra& cat) { return flag_stabilizer(cat, standard_full_flag(cat)); }

// Nilradical image chain V ⊃ nV ⊃ n^2V ⊃ ... reversed; orthogonal algebras
// keep only the isotropic members. The stabilizer must reproduce p.
inline FlagSpec flag_from_parabolic(const CatalogAlgebra& cat, const ParabolicData& p) {
  const LieAlgebra& g = *cat.algebra;
  const std::size_t m = cat.vector_dim();
  std::vector<Matrix> nil;
  for (const auto& x : p.nilradical.basis_vectors()) nil.push_back(g.realize(x));
  std::vector<Subspace> chain;
  Subspace cur = Subspace::whole(m);
  for (;;) {
    std::vector<Vector> imgs;
    for (const auto& n : nil)
      for (const auto& v : cur.basis_vectors()) imgs.push_back(n * v);
    Subspace next = Subspace::span(m, imgs);
    if (next == cur) break;
    cur = std::move(next);
    if (cur.is_zero()) break;
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  FlagSpec f;
  f.dim = m;
  f.gram = cat.gram;
  for (auto& w : chain)
    if (f.is_isotropic(w)) f.chain.push_back(std::move(w));
  f.validate();
  if (!(stabilizer_in_realization(g, f.chain) == p.space))
    throw TheoremContradiction("flag_from_parabolic: stabilizer of the recovered flag differs from p");
  return f;
}

// ---------------------------------------------------------------------------
// Curated non-parabolic subalgebras

struct NamedSubspace {
  std::string name;
  Subspace space;
};

// Standard Cartan, nilradical of the standard Borel, and the compact
// analogue of a torus (antisymmetric matrices for gl, so(B) ∩ so(J) for so).
inline std::vector<NamedSubspace> curated_negatives(const CatalogAlgebra& cat) {
  const LieAlgebra& g = *cat.algebra;
  std::vector<NamedSubspace> out;
  out.push_back({"standard Cartan", standard_cartan(cat)});
  out.push_back({"Borel nilradical", standard_borel(cat).nilradical});
  const std::size_t m = cat.vector_dim();
  std::vector<Vector> compact;
  if (cat.family == "gl" || cat.family == "sl") {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        compact.push_back(*g.from_matrix(detail::elementary(m, i, j) - detail::elementary(m, j, i)));
    if (!compact.empty()) out.push_back({"antisymmetric matrices", Subspace::span(g.dim(), compact)});
  } else {
    // x^T = -x inside so(B): a maximal compact subalgebra
    std::vector<Vector> rows;
    const auto& rho = g.realization();
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = r; c < m; ++c) {
        Vector row(g.dim());
        for (std::size_t b = 0; b < g.dim(); ++b) row[b] = rho[b](r, c) + rho[b](c, r);
        rows.push_back(std::move(row));
      }
    out.push_back({"maximal compact", kernel(Matrix::from_rows(rows, g.dim()))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sampling inner automorphisms

// Product of exp_ad(c x) over a few random root vectors x, c a small integer.
inline Matrix random_inner_automorphism(const RootDatum& rd, std::mt19937_64& rng, int factors = 3) {
  const LieAlgebra& g = *rd.ambient;
  std::uniform_int_distribution<std::size_t> pick(0, rd.roots.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  Matrix a = Matrix::identity(g.dim());
  if (rd.roots.empty()) return a;
  for (int t = 0; t < factors; ++t) {
    const Subspace& s = rd.root_spaces[pick(rng)];
    Element x = zero_vector(g.dim());
    for (const auto& v : s.basis_vectors()) x = x + Rational(coeff(rng)) * v;
    if (is_zero(x)) x = s.basis_vector(0);
    a = g.exp_ad(x) * a;
  }
  return a;
}

inline ParabolicData transform(const ParabolicData& p, const Matrix& automorphism) {
  ParabolicData q = make_parabolic(p.ambient, image(automorphism, p.space));
  if (p.grading_lift) q.grading_lift = automorphism * *p.grading_lift;
  return q;
}

}  // namespace parabolica
