#include "hitchin/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "hitchin/error.hpp"

namespace hitchin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedGluing: return "MalformedGluing";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::OddChi: return "OddChi";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::LoopContraction: return "LoopContraction";
    case ErrorCode::EmptyFace: return "EmptyFace";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Integer parse_integer(const std::string& text) {
  Integer value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "not a decimal integer: '" + text + "'");
  }
  return value;
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged initializer list");
    }
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntegerVector>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntegerVector>& columns, std::size_t rows) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t r) const {
  return IntegerVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
  IntegerVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::submatrix(std::size_t row0, std::size_t rows, std::size_t col0,
                                       std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "submatrix out of bounds");
  }
  IntegerMatrix s(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) s(r, c) = (*this)(row0 + r, col0 + c);
  return s;
}

IntegerMatrix IntegerMatrix::negated() const {
  IntegerMatrix n = *this;
  for (auto& x : n.data_) x = -x;
  return n;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool IntegerMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool IntegerMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool IntegerMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (sgn(x) != 0) ++n;
  return n;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum");
  IntegerMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  IntegerMatrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

// Skips zero entries of both factors; the matrices in this project are
// mostly sparse (boundary maps, transvections).
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  std::vector<std::vector<std::size_t>> b_support(b.rows_);
  for (std::size_t k = 0; k < b.rows_; ++k)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (sgn(b(k, j)) != 0) b_support[k].push_back(j);

  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j : b_support[k]) {
        mpz_addmul(p(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return p;
}

IntegerVector operator*(const IntegerMatrix& a, const IntegerVector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntegerVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

IntegerMatrix operator*(const Integer& s, const IntegerMatrix& a) {
  IntegerMatrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).get_str();
  }
  out << ']';
  return out.str();
}

namespace {

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation applied. After the call the last nonzero pivot equals the
// determinant (up to that sign) when the matrix is square and nonsingular.
std::size_t bareiss(IntegerMatrix& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = m(i, j) * m(r, c) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), previous.get_mpz_t());
      }
      m(i, c) = 0;
    }
    previous = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  IntegerMatrix m = a;
  int sign = 1;
  if (bareiss(m, sign) < a.rows()) return 0;
  return sign * m(a.rows() - 1, a.cols() - 1);
}

std::size_t rank(const IntegerMatrix& a) {
  IntegerMatrix m = a;
  int sign = 1;
  return bareiss(m, sign);
}

Integer bilinear(const IntegerVector& u, const IntegerMatrix& a, const IntegerVector& v) {
  if (u.size() != a.rows() || v.size() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "bilinear form");
  Integer total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (sgn(u[i]) == 0) continue;
    Integer row_sum = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0) row_sum += a(i, j) * v[j];
    total += u[i] * row_sum;
  }
  return total;
}

bool is_zero(const IntegerVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace hitchin
