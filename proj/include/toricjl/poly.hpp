// Dense univariate polynomials over a field, k[t].
#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toricjl/field.hpp"

namespace toricjl {

template <FieldScalar T>
class Poly {
 public:
  explicit Poly(FieldSpec k = {}) : field_(k) {}
  Poly(std::vector<T> coeffs, FieldSpec k) : coeffs_(std::move(coeffs)), field_(k) { trim(); }

  static Poly constant(std::int64_t c, FieldSpec k) { return Poly({scalar<T>(c, k)}, k); }
  static Poly monomial(std::int64_t c, std::size_t degree, FieldSpec k) {
    std::vector<T> v(degree + 1, scalar<T>(0, k));
    v[degree] = scalar<T>(c, k);
    return Poly(std::move(v), k);
  }
  /// t^n - 1.
  static Poly power_minus_one(std::size_t n, FieldSpec k) {
    Poly p = monomial(1, n, k);
    p -= constant(1, k);
    return p;
  }

  const FieldSpec& field() const { return field_; }
  const std::vector<T>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const T& leading() const { return coeffs_.back(); }
  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : scalar<T>(0, field_); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Largest k with t^k dividing this nonzero polynomial.
  std::size_t t_valuation() const {
    if (is_zero()) throw std::domain_error("t-adic valuation of the zero polynomial");
    std::size_t k = 0;
    while (toricjl::is_zero(coeffs_[k])) ++k;
    return k;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    T inv = inverse(leading());
    Poly r = *this;
    for (auto& c : r.coeffs_) c *= inv;
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), scalar<T>(0, field_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), scalar<T>(0, field_));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, scalar<T>(0, a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (toricjl::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(r), a.field_);
  }
  Poly scaled(const T& c) const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < d.degree()) return {Poly(field_), rem};
    std::vector<T> q(rem.coeffs_.size() - d.coeffs_.size() + 1, scalar<T>(0, field_));
    const T inv = inverse(d.leading());
    const std::size_t dd = d.coeffs_.size() - 1;
    for (long i = rem.degree(); i >= d.degree(); --i) {
      const T c = rem.coeffs_[i] * inv;
      const std::size_t shift = static_cast<std::size_t>(i) - dd;
      q[shift] = c;
      if (toricjl::is_zero(c)) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem.coeffs_[shift + j] -= c * d.coeffs_[j];
    }
    rem.trim();
    return {Poly(std::move(q), field_), std::move(rem)};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& g) const { return (g % *this).is_zero(); }
  /// Exact quotient; throws when the division leaves a remainder.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const T& c = coeffs_[i];
      if (toricjl::is_zero(c)) continue;
      std::ostringstream cs;
      cs << c;
      std::string s = cs.str();
      bool negative = !s.empty() && s[0] == '-';
      if (negative) s.erase(0, 1);
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      if (i == 0 || s != "1") os << s;
      if (i > 0) os << var;
      if (i > 1) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && toricjl::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
  FieldSpec field_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <FieldScalar T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// ord_f(g) = max{k : f^k | g}, by repeated exact division.
template <FieldScalar T>
std::size_t poly_ord(const Poly<T>& g, const Poly<T>& f) {
  if (g.is_zero()) throw std::domain_error("poly_ord: g must be nonzero");
  if (f.is_constant()) throw std::invalid_argument("poly_ord: f must be non-constant");
  std::size_t k = 0;
  Poly<T> cur = g;
  for (;;) {
    auto [q, r] = cur.divmod(f);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

template <FieldScalar T>
Poly<T> pow(const Poly<T>& f, std::size_t e) {
  Poly<T> r = Poly<T>::constant(1, f.field());
  for (std::size_t i = 0; i < e; ++i) r = r * f;
  return r;
}

/// The d-th cyclotomic polynomial, reduced into the field.
template <FieldScalar T>
Poly<T> cyclotomic(std::size_t d, FieldSpec k) {
  if (d == 0) throw std::invalid_argument("cyclotomic: order must be positive");
  Poly<T> phi = Poly<T>::power_minus_one(d, k);
  for (std::size_t e = 1; e < d; ++e)
    if (d % e == 0) phi = phi.exact_div(cyclotomic<T>(e, k));
  return phi;
}

}  // namespace toricjl
