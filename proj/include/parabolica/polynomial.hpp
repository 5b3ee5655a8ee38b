#pragma once

// Univariate polynomials over Q, minimal polynomials of matrices, rational
// roots and the Jordan-Chevalley semisimple part.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "parabolica/errors.hpp"
#include "parabolica/ratmat.hpp"

namespace parabolica {

// Coefficients in increasing degree, no trailing zeros. The zero polynomial
// has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  // x - a
  static Polynomial linear(const Rational& a) { return Polynomial({-a, Rational(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Rational l = leading();
    for (auto& a : p.c_) a /= l;
    return p;
  }

  Rational operator()(const Rational& t) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
  }

  Matrix operator()(const Matrix& a) const {
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
      r = r * a;
      for (std::size_t k = 0; k < a.rows(); ++k) r(k, k) += c_[i];
    }
    return r;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c_[i]);
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("division_by_zero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational lb = b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational f = rem[k + b.c_.size() - 1] / lb;
      quo[k] = f;
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return Polynomial::divmod(a, b).second;
}
inline Polynomial operator/(const Polynomial& a, const Polynomial& b) {
  return Polynomial::divmod(a, b).first;
}

// Monic gcd.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ((a * b) / gcd(a, b)).monic();
}

inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

inline bool is_squarefree(const Polynomial& p) { return gcd(p, p.derivative()).degree() == 0; }

// Monic minimal polynomial. Krylov sequence per standard basis vector gives
// the local minimal polynomial; their lcm annihilates the matrix.
inline Polynomial minimal_polynomial(const Matrix& a) {
  if (!a.square()) throw DomainError("dimension_mismatch", "minimal polynomial of non-square");
  const std::size_t n = a.rows();
  Polynomial m = Polynomial::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(n, i);
    if (n > 0 && m.degree() > 0 && is_zero(m(a) * e)) continue;
    // Columns v, Av, A^2v, ... until dependent.
    std::vector<Vector> krylov{e};
    for (;;) {
      Vector next = a * krylov.back();
      Matrix k = Matrix::from_columns(krylov, n);
      auto sol = solve(k, next);
      if (sol) {
        // A^d v = sum c_i A^i v  =>  x^d - sum c_i x^i
        std::vector<Rational> c(krylov.size() + 1, Rational(0));
        for (std::size_t t = 0; t < krylov.size(); ++t) c[t] = -sol->particular[t];
        c.back() = 1;
        m = lcm(m, Polynomial(std::move(c)));
        break;
      }
      krylov.push_back(std::move(next));
    }
  }
  return m;
}

namespace detail {

// Number of sign changes of a Sturm chain at t.
inline int sign_changes(const std::vector<Polynomial>& chain, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(Polynomial() - r);
  }
  return chain;
}

// Integer roots of a squarefree polynomial with integer values at integers,
// found by bisection on Sturm counts over (lo, hi].
inline void integer_roots(const Polynomial& p, const std::vector<Polynomial>& chain,
                          const mpz_class& lo, const mpz_class& hi, int count,
                          std::vector<mpz_class>& out) {
  if (count == 0) return;
  if (hi - lo == 1) {
    if (sgn(p(Rational(hi))) == 0) out.push_back(hi);
    return;
  }
  mpz_class mid = lo + (hi - lo) / 2;
  int left = sign_changes(chain, Rational(lo)) - sign_changes(chain, Rational(mid));
  integer_roots(p, chain, lo, mid, left, out);
  integer_roots(p, chain, mid, hi, count - left, out);
}

}  // namespace detail

// Distinct rational roots, ascending.
inline std::vector<Rational> rational_roots(const Polynomial& p_in) {
  if (p_in.is_zero()) throw DomainError("zero_polynomial", "roots of the zero polynomial");
  Polynomial p = squarefree_part(p_in);
  if (p.degree() <= 0) return {};
  // Clear denominators to an integer polynomial with leading coefficient L.
  mpz_class den = 1;
  for (const auto& a : p.coefficients()) den = lcm(den, mpz_class(a.get_den()));
  std::vector<mpz_class> ic;
  for (const auto& a : p.coefficients()) ic.push_back(mpz_class(a * den));
  const std::size_t d = ic.size() - 1;
  const mpz_class lead = ic[d];
  // Substitute x = y / L: L^{d-1} P(y/L) is monic with integer coefficients.
  std::vector<Rational> qc(d + 1);
  mpz_class lpow = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    // coefficient of y^i is ic[i] * L^{d-1-i} for i < d, and 1 for i = d
    if (i == d) {
      qc[i] = 1;
    } else {
      qc[i] = Rational(ic[i] * lpow);
      lpow *= lead;
    }
  }
  Polynomial q(qc);
  mpz_class bound = 1;
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class a = abs(mpz_class(qc[i]));
    if (a + 1 > bound) bound = a + 1;
  }
  auto chain = detail::sturm_chain(q);
  const mpz_class lo = -bound - 1, hi = bound;
  int count = detail::sign_changes(chain, Rational(lo)) - detail::sign_changes(chain, Rational(hi));
  std::vector<mpz_class> roots;
  detail::integer_roots(q, chain, lo, hi, count, roots);
  std::vector<Rational> out;
  for (const auto& y : roots) {
    Rational r(y, lead);
    r.canonicalize();
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// True when p is a product of linear factors over Q.
inline bool splits_over_q(const Polynomial& p) {
  Polynomial s = squarefree_part(p);
  return static_cast<int>(rational_roots(s).size()) == s.degree();
}

// Semisimple part of the Jordan-Chevalley decomposition, by Newton iteration
// on the squarefree part of the minimal polynomial.
inline Matrix semisimple_part(const Matrix& a) {
  Polynomial s = squarefree_part(minimal_polynomial(a));
  Polynomial ds = s.derivative();
  Matrix x = a;
  for (std::size_t iter = 0; iter < 64; ++iter) {
    Matrix sx = s(x);
    if (sx.is_zero()) return x;
    auto inv = inverse(ds(x));
    if (!inv) throw TheoremContradiction("Newton step for semisimple part is singular");
    x = x - sx * *inv;
  }
  throw TheoremContradiction("semisimple part iteration did not converge");
}

}  // namespace parabolica
