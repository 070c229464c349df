#pragma once

#include <cstddef>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

/// Dense square-or-rectangular matrix over a value type that has no
/// default-constructible zero (Scalar and FqElement carry their ring).
/// Columns are images of basis vectors: M(row, col) is the coefficient of
/// basis vector `row` in the image of basis vector `col`.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw SizeMismatchError("matrix product: inner dimensions differ");
    Matrix out(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == zero_) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& b = o(k, j);
          if (b == zero_) continue;
          out(i, j) += a * b;
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Number of nonzero entries in column c.
  std::size_t column_support(std::size_t c) const {
    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      if (!((*this)(r, c) == zero_)) ++n;
    return n;
  }

 private:
  std::size_t rows_, cols_;
  T zero_;
  std::vector<T> data_;
};

}  // namespace hecke
