#include "hitchin/smith.hpp"

#include <utility>

#include "hitchin/error.hpp"

namespace hitchin {

namespace {

// Row/column operations applied simultaneously to the working matrix and
// to the accumulated transform.

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// [row_a; row_b] <- [[s, u], [v, w]] * [row_a; row_b]
void mix_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& u,
              const Integer& v, const Integer& w) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(a, j);
    Integer y = m(b, j);
    if (sgn(x) == 0 && sgn(y) == 0) continue;
    m(a, j) = s * x + u * y;
    m(b, j) = v * x + w * y;
  }
}

// [col_a, col_b] <- [col_a, col_b] * [[s, v], [u, w]]
void mix_cols(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& u,
              const Integer& v, const Integer& w) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer x = m(i, a);
    Integer y = m(i, b);
    if (sgn(x) == 0 && sgn(y) == 0) continue;
    m(i, a) = s * x + u * y;
    m(i, b) = v * x + w * y;
  }
}

// g = s*a + u*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& u) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Clears column `t` below row `t` with unimodular row operations, mirrored
// onto `left`. Returns true if anything changed.
bool clear_column(IntegerMatrix& d, IntegerMatrix& left, std::size_t t) {
  bool changed = false;
  for (std::size_t i = t + 1; i < d.rows(); ++i) {
    if (sgn(d(i, t)) == 0) continue;
    changed = true;
    const Integer a = d(t, t);
    const Integer b = d(i, t);
    if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      const Integer q = b / a;
      mix_rows(d, t, i, 1, 0, -q, 1);
      mix_rows(left, t, i, 1, 0, -q, 1);
      continue;
    }
    Integer g, s, u;
    extended_gcd(a, b, g, s, u);
    const Integer v = -b / g;
    const Integer w = a / g;
    mix_rows(d, t, i, s, u, v, w);
    mix_rows(left, t, i, s, u, v, w);
  }
  return changed;
}

bool clear_row(IntegerMatrix& d, IntegerMatrix& right, std::size_t t) {
  bool changed = false;
  for (std::size_t j = t + 1; j < d.cols(); ++j) {
    if (sgn(d(t, j)) == 0) continue;
    changed = true;
    const Integer a = d(t, t);
    const Integer b = d(t, j);
    if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      const Integer q = b / a;
      mix_cols(d, t, j, 1, 0, -q, 1);
      mix_cols(right, t, j, 1, 0, -q, 1);
      continue;
    }
    Integer g, s, u;
    extended_gcd(a, b, g, s, u);
    const Integer v = -b / g;
    const Integer w = a / g;
    mix_cols(d, t, j, s, u, v, w);
    mix_cols(right, t, j, s, u, v, w);
  }
  return changed;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < diagonal.rows() && i < diagonal.cols(); ++i)
    if (sgn(diagonal(i, i)) != 0) out.push_back(diagonal(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const { return invariant_factors().size(); }

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  IntegerMatrix d = a;
  IntegerMatrix left = IntegerMatrix::identity(a.rows());
  IntegerMatrix right = IntegerMatrix::identity(a.cols());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  for (std::size_t t = 0; t < m && t < n; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (pr == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    swap_rows(d, t, pr);
    swap_rows(left, t, pr);
    swap_cols(d, t, pc);
    swap_cols(right, t, pc);

    for (;;) {
      while (clear_column(d, left, t) | clear_row(d, right, t)) {
      }
      // Enforce d_t | every trailing entry; otherwise fold the offending
      // row into row t and clear again.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      mix_rows(d, t, bad_row, 1, 1, 0, 1);
      mix_rows(left, t, bad_row, 1, 1, 0, 1);
    }
    if (sgn(d(t, t)) < 0) {
      negate_row(d, t);
      negate_row(left, t);
    }
  }
  return SmithDecomposition{std::move(left), std::move(d), std::move(right)};
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t pivot = m;
    for (std::size_t i = r; i < m; ++i)
      if (sgn(h(i, c)) != 0) {
        pivot = i;
        break;
      }
    if (pivot == m) continue;
    swap_rows(h, r, pivot);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      Integer g, s, u;
      extended_gcd(h(r, c), h(i, c), g, s, u);
      const Integer v = -h(i, c) / g;
      const Integer w = h(r, c) / g;
      mix_rows(h, r, i, s, u, v, w);
    }
    if (sgn(h(r, c)) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (sgn(q) != 0) mix_rows(h, i, r, 1, -q, 0, 1);
    }
    ++r;
  }
  return h.submatrix(0, r, 0, n);
}

IntegerMatrix inverse_unimodular(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const SmithDecomposition snf = smith_normal_form(a);
  if (!snf.diagonal.is_identity()) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
  // U A V = I  =>  A^-1 = V U
  return snf.right * snf.left;
}

}  // namespace hitchin
