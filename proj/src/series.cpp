#include "toricjl/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricjl {

Series::Series(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1, Rational(0));
}

Series Series::one(std::size_t order) {
  Series s(order);
  s[0] = 1;
  return s;
}

Series Series::polynomial(const std::vector<Integer>& coeffs, std::size_t order) {
  Series s(order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) s[k] = Rational(coeffs[k]);
  return s;
}

Series Series::geometric_shift(std::size_t order) {
  Series s(order);
  for (std::size_t k = 1; k <= order; ++k) s[k] = 1;
  return s;
}

Series& Series::operator+=(const Series& o) {
  const std::size_t n = std::min(order(), o.order());
  coeffs_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  const std::size_t n = std::min(order(), o.order());
  coeffs_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series Series::scaled(const Rational& c) const {
  Series r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Series Series::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw std::domain_error("series inverse: constant term is zero");
  const std::size_t n = order();
  Series r(n);
  const Rational inv0 = Rational(1) / coeffs_[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

Series Series::one_minus_power(std::size_t k, const Integer& e, std::size_t order) {
  if (k == 0) throw std::invalid_argument("one_minus_power: k must be positive");
  if (e < 0) throw std::invalid_argument("one_minus_power: exponent must be non-negative");
  Series s(order);
  // Binomial expansion sum_j C(e, j) (-1)^j t^{kj}.
  Integer binom = 1;
  for (std::size_t j = 0; j * k <= order; ++j) {
    if (j > 0) {
      if (Integer(j) > e) break;
      binom = binom * (e - Integer(j - 1)) / Integer(j);
    }
    s[j * k] = (j % 2 == 0) ? Rational(binom) : Rational(-binom);
  }
  return s;
}

Series series_compose(const Series& q, const Series& inner, std::size_t order) {
  if (sgn(inner[0]) != 0) throw std::invalid_argument("series_compose: inner series must have zero constant term");
  if (q.order() < order || inner.order() < order)
    throw std::invalid_argument("series_compose: operands are truncated below the requested order");
  Series result(order);
  Series power = Series::one(order);
  Series in(inner.coefficients(), order);
  for (std::size_t k = 0; k <= order; ++k) {
    if (sgn(q[k]) != 0) result += power.scaled(q[k]);
    power = power * in;
  }
  return result;
}

}  // namespace toricjl
