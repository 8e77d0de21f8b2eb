#pragma once

#include "hitchin/integer.hpp"
#include "hitchin/integer_matrix.hpp"
#include "hitchin/laurent.hpp"
#include "hitchin/report.hpp"

namespace hitchin {

/// Classical Burau matrix of sigma_j on the basis x_1..x_n (columns are
/// images): sigma_j x_j = (1-t) x_j + t x_{j+1}, sigma_j x_{j+1} = x_j, and
/// sigma_j fixes the other x_k. Throws IndexOutOfRange unless 1 <= j < n.
LaurentMatrix burau_generator(int n, int j);

/// Braid relations s_j s_{j+1} s_j = s_{j+1} s_j s_{j+1} and far
/// commutation s_j s_k = s_k s_j, computed in the ring named by spec.
CheckReport check_braid_relations(int n, const QuotientSpec& spec);

/// The t = 1 image of each generator is the transposition (j j+1).
CheckReport check_permutation_specialization(int n);

/// zeta_j = x_j - x_{j+1} at t = -1, with <zeta_j, zeta_{j+1}> = +1 and
/// <zeta_j, zeta_k> = 0 for |j - k| >= 2. Checks
/// sigma_j zeta_k = zeta_k - <zeta_k, zeta_j> zeta_j for all j, k.
CheckReport zeta_basis_action(int n);

/// n x (n-1) matrix whose columns are zeta_1..zeta_{n-1}.
IntegerMatrix zeta_basis(int n);
/// (n-1) x (n-1) skew form with <zeta_j, zeta_{j+1}> = +1.
IntegerMatrix zeta_pairing(int n);

/// Genus k(g-1) + 1 + (k-1)n/2 of the k-fold cover of a genus-g surface
/// branched at n points. Throws DivisibilityViolation unless k | n and
/// (k-1)n is even; InvalidArgument unless k >= 1.
Integer covering_genus(long genus, long n, long k);

}  // namespace hitchin
