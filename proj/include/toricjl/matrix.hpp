// Dense exact matrices: ranks over fields, Smith normal forms over Z and k[t].
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toricjl/field.hpp"
#include "toricjl/poly.hpp"

namespace toricjl {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    if (rows_ == 0 || cols_ == 0) {
      Matrix t;
      t.rows_ = cols_;
      t.cols_ = rows_;
      return t;
    }
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <FieldScalar T>
using PolyMatrix = Matrix<Poly<T>>;

struct IntSmithForm {
  std::vector<Integer> invariant_factors;  // positive, d1 | d2 | ...
  std::size_t rank = 0;
};

template <FieldScalar T>
struct PolySmithForm {
  std::vector<Poly<T>> invariant_factors;  // monic, f1 | f2 | ...
  std::size_t rank = 0;
};

std::size_t rank(const Matrix<Fp>& m);
std::size_t rank(const Matrix<Rational>& m);
/// Rank over Q of an integer matrix (fraction-free elimination).
std::size_t rank(const Matrix<Integer>& m);

IntSmithForm snf_int(const Matrix<Integer>& m);

template <FieldScalar T>
PolySmithForm<T> snf_poly(const PolyMatrix<T>& m);

/// Rank over the fraction field k(t), by fraction-free elimination in k[t].
template <FieldScalar T>
std::size_t rank_fraction_field(const PolyMatrix<T>& m);

extern template PolySmithForm<Rational> snf_poly(const PolyMatrix<Rational>&);
extern template PolySmithForm<Fp> snf_poly(const PolyMatrix<Fp>&);
extern template std::size_t rank_fraction_field(const PolyMatrix<Rational>&);
extern template std::size_t rank_fraction_field(const PolyMatrix<Fp>&);

}  // namespace toricjl
