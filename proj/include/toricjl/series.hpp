// Truncated formal power series with rational coefficients.
#pragma once

#include <cstddef>
#include <vector>

#include "toricjl/field.hpp"

namespace toricjl {

/// Power series known through degree `order()`; coefficients above the
/// truncation are discarded by every operation.
class Series {
 public:
  explicit Series(std::size_t order) : coeffs_(order + 1, Rational(0)) {}
  Series(std::vector<Rational> coeffs, std::size_t order);

  static Series one(std::size_t order);
  /// The polynomial with the given integer coefficients, truncated.
  static Series polynomial(const std::vector<Integer>& coeffs, std::size_t order);
  /// t / (1 - t).
  static Series geometric_shift(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const Rational& c) const;

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  /// (1 - t^k)^e for a non-negative integer exponent, truncated.
  static Series one_minus_power(std::size_t k, const Integer& e, std::size_t order);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// q(inner(t)) through degree `order`; inner must have zero constant term.
Series series_compose(const Series& q, const Series& inner, std::size_t order);

}  // namespace toricjl
