#pragma once

// Exact rational linear algebra: dense matrices, canonical (RREF) subspaces,
// sums, intersections, orthogonal complements and affine solvers.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parabolica/errors.hpp"

namespace parabolica {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }),
          s.end());
  if (s.empty()) throw DomainError("parse_error", "empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw DomainError("parse_error", "malformed rational literal '" + s + "'");
  if (r.get_den() == 0)
    throw DomainError("parse_error", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Vectors

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

inline void check_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DomainError("dimension_mismatch", "vector length mismatch");
}

inline Vector operator+(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vector operator*(const Rational& s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

// a += s * b
inline void axpy(Vector& a, const Rational& s, const Vector& b) {
  check_same_length(a, b);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

inline Rational dot(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
  return r;
}

// ---------------------------------------------------------------------------
// Matrix

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw DomainError("dimension_mismatch", "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& cols,
                             std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows)
        throw DomainError("dimension_mismatch", "column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_)
      throw DomainError("dimension_mismatch", "row length mismatch");
    std::copy(v.begin(), v.end(),
              data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& x) { return sgn(x) == 0; });
  }

  Rational trace() const {
    if (!square()) throw DomainError("dimension_mismatch", "trace of non-square");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Row-major flattening.
  const std::vector<Rational>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DomainError("dimension_mismatch", "matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size())
      throw DomainError("dimension_mismatch", "matrix-vector shape mismatch");
    Vector r = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) r[i] += a(i, k) * v[k];
    return r;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainError("dimension_mismatch", "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  return a * b - b * a;
}

inline Matrix power(const Matrix& m, std::size_t k) {
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * m;
  return r;
}

inline bool is_nilpotent(const Matrix& m) {
  if (!m.square()) throw DomainError("dimension_mismatch", "non-square");
  // Repeated squaring: m^(2^k) with 2^k >= n.
  Matrix p = m;
  for (std::size_t e = 1; e < m.rows(); e *= 2) {
    if (p.is_zero()) return true;
    p = p * p;
  }
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// Row reduction

struct Echelon {
  Matrix reduced;                  // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline Echelon echelon(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
    const Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < cols; ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = m(i, k);
  return {std::move(out), std::move(pivots)};
}

// Reduced row-echelon form with zero rows dropped.
inline Matrix rref(const Matrix& m) { return echelon(m).reduced; }

inline std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DomainError("dimension_mismatch", "inverse of non-square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = echelon(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

// A linear subspace of Q^n, stored as the RREF of a spanning set. Equality
// of subspaces is equality of these bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t n) {
    Subspace s;
    s.n_ = n;
    s.basis_ = Matrix(0, n);
    return s;
  }
  static Subspace whole(std::size_t n) { return from_matrix(Matrix::identity(n)); }

  // Span of the rows of `m`.
  static Subspace from_matrix(const Matrix& m) {
    Echelon e = echelon(m);
    Subspace s;
    s.n_ = m.cols();
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors) {
    return from_matrix(Matrix::from_rows(vectors, n));
  }

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == n_; }
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // v minus its projection along the pivot coordinates; zero iff v lies in
  // the subspace.
  Vector reduce(Vector v) const {
    check_vector(v);
    for (std::size_t r = 0; r < dim(); ++r) {
      const Rational f = v[pivots_[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t k = 0; k < n_; ++k)
        if (sgn(basis_(r, k)) != 0) v[k] -= f * basis_(r, k);
    }
    return v;
  }

  bool contains(const Vector& v) const { return parabolica::is_zero(reduce(v)); }

  bool contains(const Subspace& t) const {
    check_ambient(t);
    for (std::size_t r = 0; r < t.dim(); ++r)
      if (!contains(t.basis_vector(r))) return false;
    return true;
  }

  // Coordinates of v (assumed inside) with respect to the RREF basis.
  Vector coordinates(const Vector& v) const {
    check_vector(v);
    Vector c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  Vector combine(const Vector& coords) const {
    if (coords.size() != dim())
      throw DomainError("dimension_mismatch", "coordinate length mismatch");
    Vector v = zero_vector(n_);
    for (std::size_t r = 0; r < dim(); ++r) axpy(v, coords[r], basis_.row(r));
    return v;
  }

  // Rows c with c.v = 0 for every v in the subspace; the subspace is exactly
  // their common kernel.
  Matrix constraints() const {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    Matrix c(n_ - dim(), n_);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n_; ++f) {
      if (is_pivot[f]) continue;
      c(row, f) = 1;
      for (std::size_t r = 0; r < dim(); ++r) c(row, pivots_[r]) = -basis_(r, f);
      ++row;
    }
    return c;
  }

  // Non-pivot coordinates; the unit vectors on them span a complement.
  std::vector<std::size_t> free_columns() const {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c)
      if (!is_pivot[c]) out.push_back(c);
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

  void check_ambient(const Subspace& t) const {
    if (t.n_ != n_)
      throw DomainError("dimension_mismatch", "ambient dimension mismatch: " +
                                                  std::to_string(n_) + " vs " +
                                                  std::to_string(t.n_));
  }

 private:
  void check_vector(const Vector& v) const {
    if (v.size() != n_)
      throw DomainError("dimension_mismatch", "vector length " +
                                                  std::to_string(v.size()) +
                                                  " in ambient " + std::to_string(n_));
  }

  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : m x = 0}
inline Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

inline Subspace sum(const Subspace& s, const Subspace& t) {
  s.check_ambient(t);
  std::vector<Vector> rows = s.basis_vectors();
  for (auto& v : t.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(s.ambient_dim(), rows);
}

// Zassenhaus: reduce [[s | s], [t | 0]]; rows with vanishing left half span
// the intersection.
inline Subspace intersect(const Subspace& s, const Subspace& t) {
  s.check_ambient(t);
  const std::size_t n = s.ambient_dim();
  if (s.is_zero() || t.is_zero()) return Subspace::zero(n);
  if (s.contains(t)) return t;
  if (t.contains(s)) return s;
  Matrix z(s.dim() + t.dim(), 2 * n);
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t k = 0; k < n; ++k) z(r, k) = z(r, n + k) = s.basis()(r, k);
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t k = 0; k < n; ++k) z(s.dim() + r, k) = t.basis()(r, k);
  Echelon e = echelon(z);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] < n) continue;
    Vector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = e.reduced(r, n + k);
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

inline bool contains(const Subspace& s, const Subspace& t) { return s.contains(t); }

// Image of a subspace under a linear map given as a matrix acting on columns.
inline Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim())
    throw DomainError("dimension_mismatch", "image: shape mismatch");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(m * s.basis_vector(r));
  return Subspace::span(m.rows(), rows);
}

// {x : m x in t}
inline Subspace preimage(const Matrix& m, const Subspace& t) {
  if (m.rows() != t.ambient_dim())
    throw DomainError("dimension_mismatch", "preimage: shape mismatch");
  return kernel(t.constraints() * m);
}

// ---------------------------------------------------------------------------
// Bilinear forms

class BilinearForm {
 public:
  BilinearForm() = default;
  explicit BilinearForm(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.square())
      throw DomainError("dimension_mismatch", "Gram matrix must be square");
    if (!(gram_ == gram_.transpose()))
      throw DomainError("not_symmetric", "Gram matrix must be symmetric");
  }

  std::size_t ambient_dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }

  Rational operator()(const Vector& x, const Vector& y) const {
    return dot(x, gram_ * y);
  }

  Subspace radical() const { return kernel(gram_); }
  bool is_nondegenerate() const { return radical().is_zero(); }

 private:
  Matrix gram_;
};

inline Subspace perp(const Subspace& s, const BilinearForm& form) {
  if (s.ambient_dim() != form.ambient_dim())
    throw DomainError("dimension_mismatch", "perp: form/subspace mismatch");
  if (s.is_zero()) return Subspace::whole(s.ambient_dim());
  return kernel(s.basis() * form.gram());
}

// ---------------------------------------------------------------------------
// Affine solve

struct AffineSolution {
  Vector particular;
  Subspace kernel;
};

// Solution set of a x = b, or nullopt when inconsistent.
inline std::optional<AffineSolution> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size())
    throw DomainError("dimension_mismatch", "solve: rhs length mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(n);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, n);
  return AffineSolution{std::move(x), kernel(a)};
}

}  // namespace parabolica
