#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hitchin/integer.hpp"
#include "hitchin/integer_matrix.hpp"

namespace hitchin {

/// Element of Z[t, t^-1]. Zero coefficients are never stored, so structural
/// equality is ring equality.
class LaurentPoly {
 public:
  using Terms = std::map<long, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Terms& terms);

  static LaurentPoly monomial(const Integer& coefficient, long exponent);
  static LaurentPoly t() { return monomial(1, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of t^exponent (zero when absent).
  Integer coefficient(long exponent) const;
  long min_exponent() const;
  long max_exponent() const;

  /// Value at t = +1 or t = -1.
  Integer evaluate_at_sign(int sign) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// e.g. "1 - t", "-t^-1 + 3t^2".
  std::string to_string() const;

 private:
  void add_term(long exponent, const Integer& coefficient);

  Terms terms_;
};

/// Coefficient ring for the Burau module: Z[t,t^-1] itself, or one of its
/// quotients t^k = 1, 1 + t + ... + t^(k-1) = 0, t = -1.
class QuotientSpec {
 public:
  enum class Kind { generic, unit_root, compact, minus_one };

  static QuotientSpec generic() { return QuotientSpec(Kind::generic, 0); }
  /// t^k = 1; requires k >= 2.
  static QuotientSpec unit_root(int k);
  /// t^k = 1 and 1 + t + ... + t^(k-1) = 0; requires k >= 2.
  static QuotientSpec compact(int k);
  static QuotientSpec minus_one() { return QuotientSpec(Kind::minus_one, 0); }

  /// Accepts "generic", "t=-1" / "minus_one", "unit_root:K" / "t^K=1",
  /// "compact:K". Throws InvalidArgument otherwise.
  static QuotientSpec parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  int order() const noexcept { return k_; }
  std::string to_string() const;

  friend bool operator==(const QuotientSpec&, const QuotientSpec&) = default;

 private:
  QuotientSpec(Kind kind, int k) : kind_(kind), k_(k) {}

  Kind kind_;
  int k_;
};

/// Canonical residue of p in the ring named by spec:
///   generic     p unchanged
///   unit_root   exponents reduced into 0..k-1
///   compact     additionally t^(k-1) eliminated, exponents in 0..k-2
///   minus_one   the integer p(-1), as a constant polynomial
LaurentPoly laurent_specialize(const LaurentPoly& p, const QuotientSpec& spec);

class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols);

  static LaurentMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);

  LaurentMatrix specialize(const QuotientSpec& spec) const;
  /// Entrywise value at t = +1 or t = -1.
  IntegerMatrix evaluate_at_sign(int sign) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<LaurentPoly> data_;
};

/// Product in the quotient ring: both factors and the result are reduced.
LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b, const QuotientSpec& spec);

/// Determinant by expansion over column subsets; intended for n <= 16.
LaurentPoly determinant(const LaurentMatrix& a);

}  // namespace hitchin
