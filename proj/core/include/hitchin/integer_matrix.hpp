#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hitchin/integer.hpp"

namespace hitchin {

using IntegerVector = std::vector<Integer>;

/// Dense row-major matrix over the integers.
///
/// Values are self-contained: copies never alias, and the arithmetic
/// operators return fresh matrices. Element access through operator() is
/// mutable only on an owned value, which is how the algorithms build results.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntegerVector>& rows, std::size_t cols);
  static IntegerMatrix from_columns(const std::vector<IntegerVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntegerVector row(std::size_t r) const;
  IntegerVector column(std::size_t c) const;

  IntegerMatrix transpose() const;
  IntegerMatrix submatrix(std::size_t row0, std::size_t rows, std::size_t col0, std::size_t cols) const;
  IntegerMatrix negated() const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool is_skew_symmetric() const;

  /// Number of nonzero entries.
  std::size_t nonzeros() const;

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v);
  friend IntegerMatrix operator*(const Integer& s, const IntegerMatrix& a);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& a);

/// Rank over the rationals, by fraction-free elimination.
std::size_t rank(const IntegerMatrix& a);

/// u^T A v
Integer bilinear(const IntegerVector& u, const IntegerMatrix& a, const IntegerVector& v);

bool is_zero(const IntegerVector& v);

}  // namespace hitchin
