#include "hitchin/lattice.hpp"

#include <utility>

#include "hitchin/error.hpp"
#include "hitchin/smith.hpp"

namespace hitchin {

namespace {

std::vector<IntegerVector> rows_of(const IntegerMatrix& m) {
  std::vector<IntegerVector> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace

Lattice::Lattice(std::size_t ambient_rank, std::vector<IntegerVector> basis)
    : ambient_rank_(ambient_rank), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_rank_) throw Error(ErrorCode::DimensionMismatch, "lattice vector has wrong length");
  if (!basis_.empty() && hitchin::rank(IntegerMatrix::from_rows(basis_, ambient_rank_)) != basis_.size()) {
    throw Error(ErrorCode::InvalidArgument, "lattice basis is linearly dependent");
  }
}

Lattice Lattice::spanned_by(std::size_t ambient_rank, const std::vector<IntegerVector>& generators) {
  Lattice l;
  l.ambient_rank_ = ambient_rank;
  if (generators.empty()) return l;
  l.basis_ = rows_of(hermite_normal_form(IntegerMatrix::from_rows(generators, ambient_rank)));
  return l;
}

Lattice Lattice::full(std::size_t ambient_rank) {
  return Lattice(ambient_rank, rows_of(IntegerMatrix::identity(ambient_rank)));
}

IntegerMatrix Lattice::basis_matrix() const { return IntegerMatrix::from_columns(basis_, ambient_rank_); }

std::vector<IntegerVector> Lattice::canonical_basis() const {
  if (basis_.empty()) return {};
  return rows_of(hermite_normal_form(IntegerMatrix::from_rows(basis_, ambient_rank_)));
}

bool Lattice::contains(const IntegerVector& v) const {
  if (v.size() != ambient_rank_) throw Error(ErrorCode::DimensionMismatch, "vector length");
  if (is_zero(v)) return true;
  auto extended = basis_;
  extended.push_back(v);
  return rows_of(hermite_normal_form(IntegerMatrix::from_rows(extended, ambient_rank_))) == canonical_basis();
}

bool Lattice::contains(const Lattice& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

bool operator==(const Lattice& a, const Lattice& b) {
  return a.ambient_rank_ == b.ambient_rank_ && a.canonical_basis() == b.canonical_basis();
}

Lattice saturation(const Lattice& lattice) {
  const std::size_t n = lattice.ambient_rank();
  if (lattice.rank() == 0) return Lattice::spanned_by(n, {});
  const SmithDecomposition snf = smith_normal_form(lattice.basis_matrix());
  // U B V = D: in U-coordinates the span of B is spanned by d_i e_i, so its
  // saturation is spanned by the first rank columns of U^-1.
  const IntegerMatrix u_inverse = inverse_unimodular(snf.left);
  std::vector<IntegerVector> generators;
  for (std::size_t c = 0; c < snf.rank(); ++c) generators.push_back(u_inverse.column(c));
  return Lattice::spanned_by(n, generators);
}

IntegerMatrix QuotientProjection::reduce(const IntegerMatrix& endomorphism) const {
  return projection * endomorphism * section;
}

QuotientProjection quotient_projection(const Lattice& lattice) {
  const std::size_t n = lattice.ambient_rank();
  if (lattice.rank() == 0) {
    return QuotientProjection{IntegerMatrix::identity(n), IntegerMatrix::identity(n), n};
  }
  const SmithDecomposition snf = smith_normal_form(lattice.basis_matrix());
  const std::size_t r = snf.rank();
  const std::size_t q = n - r;
  if (q == 0) return QuotientProjection{IntegerMatrix(0, n), IntegerMatrix(n, 0), 0};

  const IntegerMatrix raw_projection = snf.left.submatrix(r, q, 0, n);
  const IntegerMatrix raw_section = inverse_unimodular(snf.left).submatrix(0, n, r, q);

  // Canonicalize: H = G * raw_projection in Hermite form, read G off the
  // augmented block [raw_projection | I], and compensate the section.
  IntegerMatrix augmented(q, n + q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = raw_projection(i, j);
    augmented(i, n + i) = 1;
  }
  const IntegerMatrix reduced = hermite_normal_form(augmented);
  if (reduced.rows() != q) throw Error(ErrorCode::InvariantViolation, "projection lost rank");
  const IntegerMatrix projection = reduced.submatrix(0, q, 0, n);
  const IntegerMatrix change = reduced.submatrix(0, q, n, q);
  const IntegerMatrix section = raw_section * inverse_unimodular(change);
  return QuotientProjection{projection, section, q};
}

}  // namespace hitchin
