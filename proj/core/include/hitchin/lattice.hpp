#pragma once

#include <cstddef>
#include <vector>

#include "hitchin/integer_matrix.hpp"

namespace hitchin {

/// A sublattice of Z^ambient_rank given by a rationally independent basis.
class Lattice {
 public:
  /// Validates independence; throws InvalidArgument on dependent or
  /// wrongly sized vectors.
  Lattice(std::size_t ambient_rank, std::vector<IntegerVector> basis);

  /// Lattice generated by an arbitrary (possibly dependent) family.
  static Lattice spanned_by(std::size_t ambient_rank, const std::vector<IntegerVector>& generators);
  static Lattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntegerVector>& basis() const noexcept { return basis_; }

  /// Basis vectors as the columns of an ambient_rank x rank matrix.
  IntegerMatrix basis_matrix() const;

  /// Hermite-normal-form basis; equal lattices give equal canonical bases.
  std::vector<IntegerVector> canonical_basis() const;

  bool contains(const IntegerVector& v) const;
  bool contains(const Lattice& other) const;

  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  Lattice() = default;

  std::size_t ambient_rank_ = 0;
  std::vector<IntegerVector> basis_;
};

/// { v : q v in L for some nonzero integer q }, in canonical form.
Lattice saturation(const Lattice& lattice);

/// Surjection Z^n -> Z^(n - rank(sat L)) whose kernel is exactly sat(L),
/// together with a section (a right inverse) used to transport
/// endomorphisms that preserve sat(L) down to the quotient.
struct QuotientProjection {
  IntegerMatrix projection;  // quotient_rank x n, rows in Hermite normal form
  IntegerMatrix section;     // n x quotient_rank, projection * section == I
  std::size_t rank = 0;      // quotient rank

  /// projection * endomorphism * section. Meaningful when the endomorphism
  /// maps sat(L) into itself.
  IntegerMatrix reduce(const IntegerMatrix& endomorphism) const;
};

QuotientProjection quotient_projection(const Lattice& lattice);

}  // namespace hitchin
