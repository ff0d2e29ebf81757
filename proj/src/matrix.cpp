#include "toricjl/matrix.hpp"

#include <cstdint>
#include <optional>

namespace toricjl {

namespace {

// Bareiss elimination on 64-bit integers. Intermediate entries are minors of
// the input, so the divisions are exact; returns nullopt if an entry leaves
// the safe range and the caller must redo the work with GMP integers.
std::optional<std::size_t> bareiss_rank_small(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  constexpr std::int64_t kLimit = std::int64_t(1) << 61;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const std::int64_t p = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 v = static_cast<__int128>(p) * at(i, j) - static_cast<__int128>(f) * at(r, j);
        v /= prev;
        if (v >= kLimit || v <= -kLimit) return std::nullopt;
        at(i, j) = static_cast<std::int64_t>(v);
      }
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t bareiss_rank_big(Matrix<Integer> a) {
  Integer prev = 1;
  std::size_t r = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

// Euclidean-domain adaptors for the shared Smith normal form routine.
struct IntegerOps {
  bool is_zero(const Integer& x) const { return x == 0; }
  bool smaller(const Integer& a, const Integer& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  bool is_unit(const Integer& x) const { return x == 1 || x == -1; }
  std::pair<Integer, Integer> divmod(const Integer& a, const Integer& b) const {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
  }
  Integer normalize(const Integer& x) const { return abs(x); }
};

template <FieldScalar T>
struct PolyOps {
  bool is_zero(const Poly<T>& x) const { return x.is_zero(); }
  bool smaller(const Poly<T>& a, const Poly<T>& b) const { return a.degree() < b.degree(); }
  bool is_unit(const Poly<T>& x) const { return x.degree() == 0; }
  std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) const { return a.divmod(b); }
  Poly<T> normalize(const Poly<T>& x) const { return x.monic(); }
};

// Diagonalizes by elementary row and column operations, pivoting on an entry
// of minimal norm. Each pivot divides every entry left in the trailing block,
// so the diagonal is already in divisibility order.
template <class E, class Ops>
std::vector<E> smith_diagonal(Matrix<E> a, const Ops& ops) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<E> diag;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (ops.is_zero(a(i, j))) continue;
        if (!best || ops.smaller(a(i, j), a(best->first, best->second))) best = {i, j};
        if (ops.is_unit(a(i, j))) goto found;
      }
  found:
    if (!best) break;
    a.swap_rows(t, best->first);
    a.swap_cols(t, best->second);

    for (;;) {
      // Bring the smallest entry of row t / column t to the pivot.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (!ops.is_zero(a(i, t)) && ops.smaller(a(i, t), a(bi, bj))) bi = i, bj = t;
      for (std::size_t j = t + 1; j < n; ++j)
        if (!ops.is_zero(a(t, j)) && ops.smaller(a(t, j), a(bi, bj))) bi = t, bj = j;
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (ops.is_zero(a(i, t))) continue;
        auto q = ops.divmod(a(i, t), a(t, t)).first;
        for (std::size_t j = t; j < n; ++j)
          if (!ops.is_zero(a(t, j))) a(i, j) -= q * a(t, j);
        if (!ops.is_zero(a(i, t))) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (ops.is_zero(a(t, j))) continue;
        auto q = ops.divmod(a(t, j), a(t, t)).first;
        for (std::size_t i = t; i < m; ++i)
          if (!ops.is_zero(a(i, t))) a(i, j) -= q * a(i, t);
        if (!ops.is_zero(a(t, j))) dirty = true;
      }
      if (dirty) continue;

      bool fixed = true;
      if (!ops.is_unit(a(t, t))) {
        for (std::size_t i = t + 1; i < m && fixed; ++i)
          for (std::size_t j = t + 1; j < n; ++j) {
            if (ops.is_zero(a(i, j))) continue;
            if (!ops.is_zero(ops.divmod(a(i, j), a(t, t)).second)) {
              for (std::size_t c = t; c < n; ++c) a(t, c) += a(i, c);
              fixed = false;
              break;
            }
          }
      }
      if (fixed) break;
    }
    diag.push_back(ops.normalize(a(t, t)));
  }
  return diag;
}

}  // namespace

std::size_t rank(const Matrix<Fp>& m) {
  Matrix<Fp> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, r);
    const Fp inv = a(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      const Fp f = a(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix<Integer>& m) {
  if (m.empty()) return 0;
  std::vector<std::int64_t> small(m.rows() * m.cols());
  bool fits = true;
  for (std::size_t r = 0; r < m.rows() && fits; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).fits_slong_p() || mpz_cmpabs_ui(m(r, c).get_mpz_t(), 1UL << 40) > 0) {
        fits = false;
        break;
      }
      small[r * m.cols() + c] = m(r, c).get_si();
    }
  if (fits)
    if (auto r = bareiss_rank_small(std::move(small), m.rows(), m.cols())) return *r;
  return bareiss_rank_big(m);
}

std::size_t rank(const Matrix<Rational>& m) {
  if (m.empty()) return 0;
  Matrix<Integer> z(m.rows(), m.cols(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) z(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return rank(z);
}

IntSmithForm snf_int(const Matrix<Integer>& m) {
  IntSmithForm out;
  out.invariant_factors = smith_diagonal(m, IntegerOps{});
  out.rank = out.invariant_factors.size();
  return out;
}

template <FieldScalar T>
PolySmithForm<T> snf_poly(const PolyMatrix<T>& m) {
  PolySmithForm<T> out;
  out.invariant_factors = smith_diagonal(m, PolyOps<T>{});
  out.rank = out.invariant_factors.size();
  return out;
}

template <FieldScalar T>
std::size_t rank_fraction_field(const PolyMatrix<T>& m) {
  PolyMatrix<T> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  if (a.empty()) return 0;
  Poly<T> prev = Poly<T>::constant(1, a(0, 0).field());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)).exact_div(prev);
      a(i, c) = Poly<T>(prev.field());
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

template PolySmithForm<Rational> snf_poly(const PolyMatrix<Rational>&);
template PolySmithForm<Fp> snf_poly(const PolyMatrix<Fp>&);
template std::size_t rank_fraction_field(const PolyMatrix<Rational>&);
template std::size_t rank_fraction_field(const PolyMatrix<Fp>&);

}  // namespace toricjl
