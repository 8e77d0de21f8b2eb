#pragma once

#include <cstddef>
#include <vector>

#include "hitchin/integer_matrix.hpp"

namespace hitchin {

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithDecomposition {
  IntegerMatrix left;      // U, rows x rows
  IntegerMatrix diagonal;  // D, rows x cols
  IntegerMatrix right;     // V, cols x cols

  /// Nonzero diagonal entries, in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Row-style Hermite normal form: echelon rows, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& a);

/// Inverse of a matrix with determinant +-1. Throws InvalidArgument otherwise.
IntegerMatrix inverse_unimodular(const IntegerMatrix& a);

}  // namespace hitchin
