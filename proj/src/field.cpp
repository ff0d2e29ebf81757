#include "toricjl/field.hpp"

#include <charconv>

namespace toricjl {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& selector) {
  if (selector == "q0" || selector == "Q" || selector == "0") return rationals();
  if (selector.size() >= 2 && selector[0] == 'p') {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(selector.data() + 1, selector.data() + selector.size(), p);
    if (ec == std::errc() && ptr == selector.data() + selector.size()) return prime(p);
  }
  throw std::invalid_argument("invalid field selector '" + selector + "' (expected q0 or p<prime>)");
}

std::string FieldSpec::name() const { return p_ == 0 ? "q0" : "p" + std::to_string(p_); }

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (v, p).
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

}  // namespace toricjl
