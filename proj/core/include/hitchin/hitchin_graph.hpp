#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hitchin/integer_matrix.hpp"
#include "hitchin/surface_complex.hpp"

namespace hitchin {

enum class EdgeFamily { U, L, B };

/// Edge of the dual graph on the base curve: u_j / l_j (1 <= j <= 2g-2) on
/// the upper / lower branch, b_j (1 <= j <= 2g+2) crossing the branch locus.
struct EdgeLabel {
  EdgeFamily family = EdgeFamily::U;
  int index = 1;

  /// "u3", "l1", "b10".
  std::string symbol() const;
  /// Inverse of symbol(); throws InvalidArgument.
  static EdgeLabel parse(const std::string& symbol);
  friend auto operator<=>(const EdgeLabel&, const EdgeLabel&) = default;
};

/// One of the two lifts of an edge to the spectral double cover.
struct LiftedEdge {
  EdgeLabel label;
  int sheet = 1;  // 1 or 2

  /// "u3.1"
  std::string symbol() const;
  LiftedEdge swapped() const { return {label, 3 - sheet}; }
  friend auto operator<=>(const LiftedEdge&, const LiftedEdge&) = default;
};

/// Face names of the base complex, in the order used throughout.
inline const std::vector<std::string>& base_face_names() {
  static const std::vector<std::string> names{"inf-", "inf+", "0-", "0+"};
  return names;
}

/// Z E basis order: u_1..u_{2g-2}, l_1..l_{2g-2}, b_1..b_{2g+2}.
std::vector<EdgeLabel> edge_labels(int genus);

/// The four cyclic boundary words of the dual graph for faces
/// inf-, inf+, 0-, 0+. Throws GenusTooSmall for g < 3.
std::vector<FaceWord> base_words(int genus);

/// Boundary words on the double cover: the sheet-1 face words
/// ("inf-.1", "inf+.1", "0-.1", "0+.1", carrying sheet 2 on the letters that
/// cross a branch cut) followed by their sheet-swapped conjugates (".2").
std::vector<FaceWord> lifted_words(int genus);

struct HitchinModel {
  int genus = 0;
  std::vector<EdgeLabel> edges;  // Z E basis
  std::vector<FaceWord> base_words;
  std::vector<FaceWord> lifted_words;
  GluedSurface base_surface;
  GluedSurface lifted_surface;
  /// Sheet swap as permutations of lifted cells (indices of lifted_surface).
  std::vector<std::size_t> tau_vertices;
  std::vector<std::size_t> tau_edges;
  std::vector<std::size_t> tau_faces;

  /// Position of a label in `edges`.
  std::size_t edge_position(const EdgeLabel& label) const;
  /// Index of a lifted edge in lifted_surface.
  std::size_t lifted_index(const LiftedEdge& edge) const;

  IntegerMatrix tau_vertex_matrix() const;
  IntegerMatrix tau_edge_matrix() const;
  IntegerMatrix tau_face_matrix() const;
};

/// Glues both complexes and checks the cell counts, Euler characteristics,
/// genera, d^2 = 0 and d tau = tau d. Throws GenusTooSmall, or
/// InvariantViolation naming the first failed check.
HitchinModel build_model(int genus);

struct PsiData {
  /// psi(e) = e.1 - e.2 as a chain on lifted_surface, indexed like model.edges.
  std::vector<IntegerVector> psi;
  /// Psi(f) = psi^-1(d(f.1 - f.2)) in Z E, indexed like base_face_names().
  std::vector<IntegerVector> face_vectors;
};

/// Throws InvariantViolation if some d(f.1 - f.2) is not in the image of psi.
PsiData psi_map(const HitchinModel& model);

/// Closed-form face vectors in Z E, indexed like base_face_names():
///   -Psi(inf-) = sum l_j,  -Psi(inf+) = sum u_j,
///   -Psi(0+) = l_1 + l_3 - u_2 - u_4 + sum_{j=1}^{g-1} (u_{2j-1} - l_{2j}) + sum b_k,
///    Psi(0-) = sum_{j=3}^{g-1} (u_{2j} - l_{2j-1}) + sum b_k.
std::vector<IntegerVector> closed_form_face_vectors(int genus);

}  // namespace hitchin
