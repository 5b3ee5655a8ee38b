#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parabolica/errors.hpp"
#include "parabolica/polynomial.hpp"
#include "parabolica/ratmat.hpp"

namespace parabolica {

using Element = Vector;

// Decreasing-index view of a filtration: level(k) grows with k. Levels are
// stored for indices lo..hi; below lo everything is 0, above hi everything is
// the whole algebra.
class Filtration {
 public:
  Filtration() = default;
  Filtration(int lo, std::vector<Subspace> levels) : lo_(lo), levels_(std::move(levels)) {
    if (levels_.empty()) throw DomainError("empty_filtration", "filtration has no levels");
  }

  int lo() const noexcept { return lo_; }
  int hi() const noexcept { return lo_ + static_cast<int>(levels_.size()) - 1; }
  std::size_t ambient_dim() const { return levels_.front().ambient_dim(); }

  Subspace level(int k) const {
    if (k < lo_) return Subspace::zero(ambient_dim());
    if (k > hi()) return Subspace::whole(ambient_dim());
    return levels_[static_cast<std::size_t>(k - lo_)];
  }
  const std::vector<Subspace>& levels() const noexcept { return levels_; }

 private:
  int lo_ = 0;
  std::vector<Subspace> levels_;
};

enum class Reductivity { reductive, inconclusive };

class LieAlgebra {
 public:
  LieAlgebra() = default;

  // structure[i][j] = coordinates of [b_i, b_j]. Throws InvalidStructure on
  // the first antisymmetry or Jacobi failure.
  LieAlgebra(std::vector<std::vector<Vector>> structure, std::vector<std::string> labels = {},
             std::optional<std::vector<Matrix>> realization = std::nullopt,
             std::optional<BilinearForm> form = std::nullopt)
      : dim_(structure.size()),
        structure_(std::move(structure)),
        labels_(std::move(labels)),
        realization_(std::move(realization)) {
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i + 1));
    if (labels_.size() != dim_) throw DomainError("dimension_mismatch", "label count != dim");
    for (const auto& row : structure_) {
      if (row.size() != dim_) throw DomainError("dimension_mismatch", "structure tensor is not square");
      for (const auto& v : row)
        if (v.size() != dim_) throw DomainError("dimension_mismatch", "structure vector length != dim");
    }
    build_ad();
    validate();
    if (realization_) {
      validate_realization();
      form_ = compute_trace_form();
    } else if (form) {
      if (form->ambient_dim() != dim_) throw DomainError("dimension_mismatch", "form size != dim");
      form_ = std::move(form);
    }
  }

  // Structure constants of the span of matrices closed under commutator.
  static LieAlgebra from_matrices(std::vector<Matrix> basis, std::vector<std::string> labels = {}) {
    const std::size_t n = basis.size();
    if (n == 0) return LieAlgebra(std::vector<std::vector<Vector>>{}, {}, std::vector<Matrix>{});
    const std::size_t m = basis[0].rows();
    std::vector<Vector> flat;
    for (const auto& b : basis) {
      if (b.rows() != m || b.cols() != m) throw DomainError("dimension_mismatch", "matrix basis shape");
      flat.push_back(b.data());
    }
    Matrix cols = Matrix::from_columns(flat, m * m);
    if (rank(cols) != n) throw DomainError("linearly_dependent", "matrix basis is linearly dependent");
    std::vector<std::vector<Vector>> c(n, std::vector<Vector>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (j < i) {
          c[i][j] = -c[j][i];
          continue;
        }
        auto sol = solve(cols, commutator(basis[i], basis[j]).data());
        if (!sol) throw DomainError("not_closed", "matrix span is not closed under commutator");
        c[i][j] = std::move(sol->particular);
      }
    return LieAlgebra(std::move(c), std::move(labels), std::move(basis));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<Vector>>& structure() const noexcept { return structure_; }
  bool has_realization() const noexcept { return realization_.has_value(); }
  const std::vector<Matrix>& realization() const {
    if (!realization_) throw DomainError("no_realization", "algebra has no realization");
    return *realization_;
  }
  std::size_t realization_dim() const { return realization().empty() ? 0 : realization()[0].rows(); }

  Element basis_element(std::size_t i) const { return unit_vector(dim_, i); }
  Subspace whole() const { return Subspace::whole(dim_); }
  Subspace zero() const { return Subspace::zero(dim_); }

  // --- brackets ---------------------------------------------------------

  Element bracket(const Element& x, const Element& y) const {
    check(x);
    check(y);
    Element r = zero_vector(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(y[j]) == 0) continue;
        axpy(r, x[i] * y[j], structure_[i][j]);
      }
    }
    return r;
  }

  // Matrix of ad(x); column j is [x, b_j].
  Matrix ad(const Element& x) const {
    check(x);
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (sgn(x[i]) != 0) m += x[i] * ad_[i];
    return m;
  }
  const Matrix& ad_basis(std::size_t i) const { return ad_.at(i); }

  Subspace bracket_spaces(const Subspace& s, const Subspace& t) const {
    check(s);
    check(t);
    std::vector<Vector> rows;
    for (std::size_t a = 0; a < s.dim(); ++a) {
      Matrix m = ad(s.basis_vector(a));
      for (std::size_t b = 0; b < t.dim(); ++b) rows.push_back(m * t.basis_vector(b));
    }
    return Subspace::span(dim_, rows);
  }

  // {x : [x, a] ⊆ b}
  Subspace transporter(const Subspace& a, const Subspace& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_whole()) return whole();
    Matrix cons = b.constraints();
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      // [x, a_k] = -ad(a_k) x
      Matrix m = cons * ad(a.basis_vector(k));
      for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    }
    return kernel(Matrix::from_rows(rows, dim_));
  }
  Subspace normalizer(const Subspace& s) const { return transporter(s, s); }
  Subspace centralizer(const Subspace& s) const { return transporter(s, zero()); }
  Subspace center() const {
    if (!center_) center_ = std::make_shared<const Subspace>(centralizer(whole()));
    return *center_;
  }

  bool is_subalgebra(const Subspace& s) const { return s.contains(bracket_spaces(s, s)); }
  bool is_ideal_of(const Subspace& i, const Subspace& s) const { return i.contains(bracket_spaces(s, i)); }

  Subspace derived_algebra() const {
    if (!derived_) derived_ = std::make_shared<const Subspace>(bracket_spaces(whole(), whole()));
    return *derived_;
  }

  // s, [s,s], [s,[s,s]], ... up to the first repeated term.
  std::vector<Subspace> lower_central_series(const Subspace& s) const {
    require_subalgebra(s);
    std::vector<Subspace> series{s};
    for (;;) {
      Subspace next = bracket_spaces(s, series.back());
      if (next == series.back()) break;
      series.push_back(std::move(next));
    }
    return series;
  }

  bool is_nilpotent_subalgebra(const Subspace& s) const {
    auto series = lower_central_series(s);
    return series.back().is_zero();
  }

  // f^{-1} = n, f^0 = p, f^{-j-1} = [n, f^{-j}], f^j = c(n, f^{j-1}).
  Filtration induced_filtration(const Subspace& n, const Subspace& p) const {
    check(n);
    check(p);
    if (!p.contains(n)) throw DomainError("precondition", "induced_filtration: n is not contained in p");
    require_subalgebra(n);
    require_subalgebra(p);
    if (!normalizer(n).contains(p))
      throw DomainError("precondition", "induced_filtration: p does not normalize n");
    const std::size_t cap = 2 * dim_ + 1;
    std::vector<Subspace> neg{n};  // f^{-1}, f^{-2}, ...
    while (!neg.back().is_zero()) {
      if (neg.size() > cap) throw DomainError("unstable_filtration", "lower filtration did not reach 0");
      Subspace next = bracket_spaces(n, neg.back());
      if (next == neg.back()) throw DomainError("unstable_filtration", "n is not nilpotent");
      neg.push_back(std::move(next));
    }
    std::vector<Subspace> pos{p};  // f^0, f^1, ...
    while (!pos.back().is_whole()) {
      if (pos.size() > cap) throw DomainError("unstable_filtration", "upper filtration did not reach g");
      Subspace next = transporter(n, pos.back());
      if (next == pos.back()) throw DomainError("unstable_filtration", "upper filtration stalled below g");
      pos.push_back(std::move(next));
    }
    // Drop redundant zero levels below the first zero, keep one.
    std::vector<Subspace> levels(neg.rbegin(), neg.rend());
    int lo = -static_cast<int>(neg.size());
    for (auto& s : pos) levels.push_back(std::move(s));
    // Trim duplicated bottom zeros (e.g. n = 0 gives f^{-1} = 0).
    while (levels.size() > 1 && levels[0].is_zero() && levels[1].is_zero()) {
      levels.erase(levels.begin());
      ++lo;
    }
    return Filtration(lo, std::move(levels));
  }

  // --- nilpotency and forms ---------------------------------------------

  bool is_ad_nilpotent(const Element& x) const { return is_nilpotent(ad(x)); }

  bool in_nilpotent_cone(const Element& x) const {
    return derived_algebra().contains(x) && is_ad_nilpotent(x);
  }

  // Gram of (x,y) -> tr(rho(x) rho(y)).
  BilinearForm trace_form() const {
    if (!realization_) throw DomainError("no_realization", "trace_form needs a realization");
    return *form_;
  }

  // The form used for perps: the trace form of the realization, or a form
  // supplied at construction (quotients inherit the descended form).
  bool has_form() const noexcept { return form_.has_value(); }
  const BilinearForm& form() const {
    if (!form_) throw DomainError("no_form", "algebra has no admissible form attached");
    return *form_;
  }

  Reductivity is_reductive() const {
    return trace_form().is_nondegenerate() ? Reductivity::reductive : Reductivity::inconclusive;
  }

  Subspace perp(const Subspace& s) const { return parabolica::perp(s, form()); }

  Matrix ad_semisimple_part(const Element& x) const { return semisimple_part(ad(x)); }

  bool is_ad_semisimple(const Element& x) const { return is_squarefree(minimal_polynomial(ad(x))); }

  // ad(x) semisimple with all eigenvalues rational.
  bool is_ad_split(const Element& x) const {
    Polynomial m = minimal_polynomial(ad(x));
    return is_squarefree(m) && splits_over_q(m);
  }

  // sum ad(x)^k / k!
  Matrix exp_ad(const Element& x) const {
    Matrix a = ad(x);
    if (!is_nilpotent(a)) throw DomainError("not_nilpotent", "exp_ad: x is not ad-nilpotent");
    Matrix result = Matrix::identity(dim_);
    Matrix term = Matrix::identity(dim_);
    for (std::size_t k = 1; k <= dim_; ++k) {
      term = term * a;
      if (term.is_zero()) break;
      term *= Rational(1, static_cast<unsigned long>(k));
      result += term;
    }
    return result;
  }

  bool is_automorphism(const Matrix& a) const {
    if (a.rows() != dim_ || a.cols() != dim_) return false;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!(a * structure_[i][j] == bracket(a.col(i), a.col(j)))) return false;
    return rank(a) == dim_;
  }

  // Realization matrix of x.
  Matrix realize(const Element& x) const {
    check(x);
    const auto& r = realization();
    Matrix m(realization_dim(), realization_dim());
    for (std::size_t i = 0; i < dim_; ++i)
      if (sgn(x[i]) != 0) m += x[i] * r[i];
    return m;
  }

  // Coordinates of a matrix in the realized basis, if it lies in the span.
  std::optional<Element> from_matrix(const Matrix& m) const {
    std::vector<Vector> flat;
    for (const auto& b : realization()) flat.push_back(b.data());
    auto sol = solve(Matrix::from_columns(flat, m.rows() * m.cols()), m.data());
    if (!sol) return std::nullopt;
    return sol->particular;
  }

  // The subalgebra s as an algebra in its own RREF coordinates. Realization
  // and form are restricted.
  LieAlgebra restrict_to(const Subspace& s) const {
    require_subalgebra(s);
    const std::size_t d = s.dim();
    std::vector<Vector> basis = s.basis_vectors();
    std::vector<std::vector<Vector>> c(d, std::vector<Vector>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) c[i][j] = s.coordinates(bracket(basis[i], basis[j]));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(describe(basis[i]));
    if (realization_) {
      std::vector<Matrix> rho;
      for (const auto& b : basis) rho.push_back(realize(b));
      return LieAlgebra(std::move(c), std::move(labels), std::move(rho));
    }
    std::optional<BilinearForm> f;
    if (form_) f = BilinearForm(restrict_gram(basis));
    return LieAlgebra(std::move(c), std::move(labels), std::nullopt, std::move(f));
  }

  // Human-readable combination of basis labels.
  std::string describe(const Element& x) const {
    std::string out;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(x[i]) == 0) continue;
      std::string coef = to_string(x[i]);
      if (!out.empty()) out += sgn(x[i]) > 0 ? "+" : "";
      if (x[i] == 1)
        coef = "";
      else if (x[i] == -1)
        coef = "-";
      else
        coef += "*";
      out += coef + labels_[i];
    }
    return out.empty() ? "0" : out;
  }

  Matrix restrict_gram(const std::vector<Vector>& basis) const {
    Matrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = form()(basis[i], basis[j]);
    return g;
  }

  void check(const Element& x) const {
    if (x.size() != dim_)
      throw DomainError("dimension_mismatch",
                        "element of length " + std::to_string(x.size()) + " in algebra of dim " + std::to_string(dim_));
  }
  void check(const Subspace& s) const {
    if (s.ambient_dim() != dim_)
      throw DomainError("dimension_mismatch", "subspace of ambient " + std::to_string(s.ambient_dim()) +
                                                  " in algebra of dim " + std::to_string(dim_));
  }
  void require_subalgebra(const Subspace& s) const {
    check(s);
    if (!is_subalgebra(s)) throw DomainError("not_subalgebra", "subspace is not closed under the bracket");
  }

 private:
  void build_ad() {
    ad_.assign(dim_, Matrix(dim_, dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) ad_[i](k, j) = structure_[i][j][k];
  }

  void validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if (!(structure_[i][j] == -structure_[j][i]))
          throw InvalidStructure("antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")", i, j,
                                 j);
    // Jacobi in the form ad([b_i,b_j]) = [ad b_i, ad b_j]; column k of the
    // difference is the Jacobiator of (b_i, b_j, b_k).
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        Matrix lhs = ad(structure_[i][j]);
        Matrix rhs = commutator(ad_[i], ad_[j]);
        if (lhs == rhs) continue;
        for (std::size_t k = 0; k < dim_; ++k)
          if (!(lhs.col(k) == rhs.col(k)))
            throw InvalidStructure("Jacobi identity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                       std::to_string(k) + ")",
                                   i, j, k);
      }
  }

  void validate_realization() const {
    const auto& r = *realization_;
    if (r.size() != dim_) throw DomainError("dimension_mismatch", "realization size != dim");
    const std::size_t m = dim_ == 0 ? 0 : r[0].rows();
    for (const auto& a : r)
      if (a.rows() != m || a.cols() != m) throw DomainError("dimension_mismatch", "realization matrices differ in shape");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!(commutator(r[i], r[j]) == realize(structure_[i][j])))
          throw DomainError("bad_realization", "realization does not respect the bracket at (" + std::to_string(i) +
                                                   "," + std::to_string(j) + ")");
    std::vector<Vector> flat;
    for (const auto& a : r) flat.push_back(a.data());
    if (dim_ > 0 && rank(Matrix::from_rows(flat, m * m)) != dim_)
      throw DomainError("bad_realization", "realization is not faithful");
  }

  BilinearForm compute_trace_form() const {
    const auto& r = *realization_;
    Matrix g(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) g(i, j) = g(j, i) = (r[i] * r[j]).trace();
    return BilinearForm(std::move(g));
  }

  std::size_t dim_ = 0;
  std::vector<std::vector<Vector>> structure_;
  std::vector<std::string> labels_;
  std::optional<std::vector<Matrix>> realization_;
  std::optional<BilinearForm> form_;
  // cached on first use; shared by copies
  mutable std::shared_ptr<const Subspace> derived_;
  mutable std::shared_ptr<const Subspace> center_;
  std::vector<Matrix> ad_;
};

// g/I with structure constants on the complement spanned by the non-pivot
// coordinates of I.
struct QuotientMap {
  LieAlgebra algebra;
  Matrix projection;  // dim(g/I) x dim(g)
  Matrix section;     // dim(g) x dim(g/I)
};

// The quotient carries no realization; pass `form` to attach a descended one.
inline QuotientMap quotient_algebra(const LieAlgebra& g, const Subspace& ideal,
                                    std::optional<BilinearForm> form = std::nullopt) {
  g.check(ideal);
  if (!ideal.contains(g.bracket_spaces(g.whole(), ideal)))
    throw DomainError("not_ideal", "quotient_algebra: subspace is not an ideal");
  const auto free = ideal.free_columns();
  const std::size_t d = free.size(), n = g.dim();
  Matrix proj(d, n), sec(n, d);
  for (std::size_t a = 0; a < d; ++a) sec(free[a], a) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    Vector r = ideal.reduce(unit_vector(n, c));
    for (std::size_t a = 0; a < d; ++a) proj(a, c) = r[free[a]];
  }
  std::vector<std::vector<Vector>> st(d, std::vector<Vector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) st[a][b] = proj * g.bracket(sec.col(a), sec.col(b));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < d; ++a) labels.push_back(g.labels()[free[a]]);
  LieAlgebra q(std::move(st), std::move(labels), std::nullopt, std::move(form));
  return {std::move(q), std::move(proj), std::move(sec)};
}

}  // namespace parabolica
