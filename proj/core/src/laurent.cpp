#include "hitchin/laurent.hpp"

#include <sstream>

#include "hitchin/error.hpp"

namespace hitchin {

LaurentPoly::LaurentPoly(long constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(long exponent, const Integer& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

long LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
long LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Integer LaurentPoly::evaluate_at_sign(int sign) const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) total += (sign < 0 && (e % 2 != 0)) ? Integer(-c) : c;
  return total;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly s = a;
  for (const auto& [e, c] : b.terms_) s.add_term(e, c);
  return s;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly n;
  for (const auto& [e, c] : a.terms_) n.terms_.emplace(e, -c);
  return n;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str();
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

QuotientSpec QuotientSpec::unit_root(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "unit_root requires k >= 2");
  return QuotientSpec(Kind::unit_root, k);
}

QuotientSpec QuotientSpec::compact(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "compact requires k >= 2");
  return QuotientSpec(Kind::compact, k);
}

namespace {

int parse_order(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorCode::InvalidArgument, "bad quotient spec '" + whole + "'");
  return k;
}

}  // namespace

QuotientSpec QuotientSpec::parse(const std::string& text) {
  if (text == "generic") return generic();
  if (text == "t=-1" || text == "minus_one") return minus_one();
  if (text.rfind("unit_root:", 0) == 0) return unit_root(parse_order(text.substr(10), text));
  if (text.rfind("compact:", 0) == 0) return compact(parse_order(text.substr(8), text));
  if (text.rfind("t^", 0) == 0 && text.size() > 4 && text.substr(text.size() - 2) == "=1") {
    return unit_root(parse_order(text.substr(2, text.size() - 4), text));
  }
  throw Error(ErrorCode::InvalidArgument, "bad quotient spec '" + text + "'");
}

std::string QuotientSpec::to_string() const {
  switch (kind_) {
    case Kind::generic: return "generic";
    case Kind::unit_root: return "unit_root:" + std::to_string(k_);
    case Kind::compact: return "compact:" + std::to_string(k_);
    case Kind::minus_one: return "t=-1";
  }
  return "generic";
}

LaurentPoly laurent_specialize(const LaurentPoly& p, const QuotientSpec& spec) {
  switch (spec.kind()) {
    case QuotientSpec::Kind::generic:
      return p;
    case QuotientSpec::Kind::minus_one:
      return LaurentPoly::monomial(p.evaluate_at_sign(-1), 0);
    case QuotientSpec::Kind::unit_root:
    case QuotientSpec::Kind::compact: {
      const long k = spec.order();
      LaurentPoly reduced;
      for (const auto& [e, c] : p.terms()) reduced = reduced + LaurentPoly::monomial(c, ((e % k) + k) % k);
      if (spec.kind() == QuotientSpec::Kind::unit_root) return reduced;
      // t^(k-1) = -(1 + t + ... + t^(k-2))
      const Integer top = reduced.coefficient(k - 1);
      if (sgn(top) == 0) return reduced;
      reduced = reduced - LaurentPoly::monomial(top, k - 1);
      for (long e = 0; e < k - 1; ++e) reduced = reduced - LaurentPoly::monomial(top, e);
      return reduced;
    }
  }
  return p;
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "Laurent matrix product");
  LaurentMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) p(i, j) = p(i, j) + a(i, k) * b(k, j);
    }
  return p;
}

LaurentMatrix LaurentMatrix::specialize(const QuotientSpec& spec) const {
  LaurentMatrix s = *this;
  for (auto& entry : s.data_) entry = laurent_specialize(entry, spec);
  return s;
}

IntegerMatrix LaurentMatrix::evaluate_at_sign(int sign) const {
  IntegerMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate_at_sign(sign);
  return m;
}

LaurentMatrix multiply(const LaurentMatrix& a, const LaurentMatrix& b, const QuotientSpec& spec) {
  return (a.specialize(spec) * b.specialize(spec)).specialize(spec);
}

LaurentPoly determinant(const LaurentMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n > 16) throw Error(ErrorCode::InvalidArgument, "Laurent determinant limited to n <= 16");
  // minors[mask] = determinant of rows 0..popcount(mask)-1 restricted to the
  // columns in mask (Laplace expansion along the last row).
  std::vector<LaurentPoly> minors(std::size_t{1} << n);
  minors[0] = 1;
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const int row = __builtin_popcountll(mask) - 1;
    LaurentPoly total;
    int position = 0;  // index of column c among the columns of mask
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const LaurentPoly& entry = a(static_cast<std::size_t>(row), c);
      if (!entry.is_zero()) {
        const LaurentPoly term = entry * minors[mask & ~(std::size_t{1} << c)];
        // sign of the cofactor at (row, position) in a (row+1)x(row+1) minor
        total = ((row + position) % 2 == 0) ? total + term : total - term;
      }
      ++position;
    }
    minors[mask] = total;
  }
  return minors.back();
}

}  // namespace hitchin
