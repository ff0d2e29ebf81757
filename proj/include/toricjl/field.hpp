// Coefficient fields: the rationals (arbitrary precision) and prime fields GF(p).
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace toricjl {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Characteristic of the coefficient field: 0 for Q, otherwise a prime p.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p);
  /// Parses the command-line selector `q0` or `p<prime>`.
  static FieldSpec parse(const std::string& selector);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Residue modulo a prime. The modulus travels with the value so that the
/// usual arithmetic operators work in generic code.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  static Fp from_raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

template <class T>
concept FieldScalar = std::is_same_v<T, Rational> || std::is_same_v<T, Fp>;

template <FieldScalar T>
T scalar(std::int64_t v, const FieldSpec& k) {
  if constexpr (std::is_same_v<T, Fp>) {
    return Fp(v, k.characteristic());
  } else {
    return Rational(static_cast<long>(v));
  }
}

/// Image of a rational number in the field; throws when the denominator is
/// not invertible.
template <FieldScalar T>
T scalar(const Rational& q, const FieldSpec& k) {
  if constexpr (std::is_same_v<T, Fp>) {
    const std::uint32_t p = k.characteristic();
    Integer num = q.get_num() % p;
    Integer den = q.get_den() % p;
    if (den == 0) throw std::invalid_argument("rational value has a denominator divisible by " + std::to_string(p));
    return Fp(num.get_si(), p) / Fp(den.get_si(), p);
  } else {
    return q;
  }
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Rational inverse(const Rational& q) { return Rational(1) / q; }
inline Fp inverse(const Fp& a) { return a.inverse(); }

/// Calls `fn` with a `std::type_identity<T>` tag for the scalar type of `k`.
template <class Fn>
decltype(auto) with_scalar(const FieldSpec& k, Fn&& fn) {
  if (k.is_rational()) return fn(std::type_identity<Rational>{});
  return fn(std::type_identity<Fp>{});
}

}  // namespace toricjl
