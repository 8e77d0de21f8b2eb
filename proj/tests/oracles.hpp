#pragma once

// Test-side reference implementations. These deliberately share no code
// with the library algorithms they check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hitchin/hitchin_graph.hpp"
#include "hitchin/integer_matrix.hpp"
#include "hitchin/laurent.hpp"
#include "hitchin/surface_complex.hpp"

namespace oracle {

using hitchin::Integer;
using hitchin::IntegerMatrix;
using hitchin::IntegerVector;

/// Gaussian elimination over Q.
std::size_t rational_rank(const IntegerMatrix& a);
mpq_class rational_determinant(const IntegerMatrix& a);

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound);

/// Random connected closed orientable gluing: every symbol occurs once with
/// each exponent, shuffled and cut into `faces` nonempty words.
std::vector<hitchin::FaceWord> random_gluing(std::mt19937& rng, int edges, int faces);

/// Psi(f) read straight off the lifted word: exponent times +1 on sheet 1,
/// -1 on sheet 2, summed over occurrences. Indexed like edge_labels(g).
std::vector<IntegerVector> letter_formula_face_vectors(int genus);

/// Backtracking search for a vertex bijection preserving edge multiplicities
/// of the underlying undirected multigraphs.
bool plain_graphs_isomorphic(const hitchin::GluedSurface& a, const hitchin::GluedSurface& b);

/// Value of p at t = omega in Z/pZ.
std::uint64_t evaluate_mod(const hitchin::LaurentPoly& p, std::uint64_t omega, std::uint64_t prime);
/// Smallest prime p = 1 mod k with p > 1000, and an element of exact order k.
std::pair<std::uint64_t, std::uint64_t> prime_with_root_of_unity(int k);

hitchin::LaurentPoly random_laurent(std::mt19937& rng, int min_exp, int max_exp, int bound);

/// Torus from a single square a b a^-1 b^-1.
hitchin::GluedSurface torus();

}  // namespace oracle
