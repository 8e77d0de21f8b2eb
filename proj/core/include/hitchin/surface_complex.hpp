#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hitchin/integer_matrix.hpp"

namespace hitchin {

/// One letter of a face boundary word: an edge symbol traversed forwards
/// (+1) or backwards (-1).
struct SymbolOccurrence {
  std::string symbol;
  int exponent = 1;

  /// "a" or "a^-1".
  std::string to_string() const;
  friend bool operator==(const SymbolOccurrence&, const SymbolOccurrence&) = default;
};

/// Cyclic boundary word of a 2-cell, read with the face on the left.
struct FaceWord {
  std::string face;
  std::vector<SymbolOccurrence> letters;

  /// Whitespace separated letters, each "x" or "x^-1".
  static FaceWord parse(std::string face, const std::string& text);
  std::string to_string() const;
  friend bool operator==(const FaceWord&, const FaceWord&) = default;
};

enum class EdgeEnd : std::uint8_t { tail = 0, head = 1 };

/// The end of an edge at one of its endpoints.
struct HalfEdge {
  std::size_t edge = 0;
  EdgeEnd end = EdgeEnd::tail;

  std::size_t id() const noexcept { return 2 * edge + static_cast<std::size_t>(end); }
  static HalfEdge from_id(std::size_t id) noexcept { return {id / 2, static_cast<EdgeEnd>(id % 2)}; }
  HalfEdge opposite() const noexcept { return {edge, end == EdgeEnd::tail ? EdgeEnd::head : EdgeEnd::tail}; }
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

/// Integer 1-chain, keyed by edge symbol. Zero coefficients may be omitted.
struct OneCycle {
  std::map<std::string, Integer> coefficients;
};

/// Closed oriented surface obtained by gluing polygons along their boundary
/// words. Vertices are orbits of polygon corners; the cyclic order of
/// half-edges around each vertex (counter-clockwise with respect to the
/// orientation in which every face word runs positively) is derived from
/// how the corners match up.
///
/// Vertices are numbered in order of their lexicographically least corner
/// (face index, position) and named "<face>:<position>" after it, so the
/// same words always produce the same complex.
class GluedSurface {
 public:
  const std::vector<FaceWord>& faces() const noexcept { return faces_; }
  /// Edge symbols in order of first appearance in the words.
  const std::vector<std::string>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& vertices() const noexcept { return vertex_names_; }

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }

  std::optional<std::size_t> find_edge(const std::string& symbol) const;
  /// Throws InvalidArgument for unknown symbols.
  std::size_t edge_index(const std::string& symbol) const;
  std::optional<std::size_t> find_face(const std::string& name) const;

  /// Half-edges around vertex v in counter-clockwise order, starting at the
  /// half-edge that leaves the vertex's canonical corner.
  const std::vector<HalfEdge>& rotation(std::size_t v) const { return rotation_.at(v); }
  HalfEdge next_ccw(HalfEdge h) const { return HalfEdge::from_id(next_ccw_.at(h.id())); }
  std::size_t vertex_of(HalfEdge h) const { return vertex_of_.at(h.id()); }
  /// (tail vertex, head vertex)
  std::pair<std::size_t, std::size_t> endpoints(std::size_t edge) const;
  bool is_loop(std::size_t edge) const;
  std::size_t degree(std::size_t v) const { return rotation_.at(v).size(); }

  /// Vertex at which letter `position` of face `face` starts.
  std::size_t corner_vertex(std::size_t face, std::size_t position) const;

  long euler_characteristic() const noexcept;

  /// d1: Z^edges -> Z^vertices, d(e) = head - tail.
  IntegerMatrix boundary_1() const;
  /// d2: Z^faces -> Z^edges, summing letter exponents.
  IntegerMatrix boundary_2() const;

  /// Edge-indexed coefficient vector of a chain. Throws InvalidArgument on
  /// unknown symbols.
  IntegerVector chain_vector(const OneCycle& c) const;
  OneCycle chain_from_vector(const IntegerVector& v) const;
  bool is_cycle(const IntegerVector& chain) const;
  OneCycle face_boundary(std::size_t face) const;

  /// {faces, edges, vertices, rotation, endpoints}
  nlohmann::json to_json() const;
  /// 1-skeleton as a DOT digraph (edges point tail -> head).
  std::string to_dot(const std::string& graph_name) const;

 private:
  friend GluedSurface glue(std::vector<FaceWord> words);

  std::vector<FaceWord> faces_;
  std::vector<std::string> edges_;
  std::map<std::string, std::size_t> edge_lookup_;
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<HalfEdge>> rotation_;
  std::vector<std::size_t> next_ccw_;   // by half-edge id
  std::vector<std::size_t> vertex_of_;  // by half-edge id
  std::vector<std::vector<std::size_t>> corner_vertex_;
};

/// Glues the polygons. Throws MalformedGluing unless every symbol occurs
/// exactly twice with opposite exponents (and every word is nonempty), and
/// Disconnected if the result has more than one component.
GluedSurface glue(std::vector<FaceWord> words);

long euler_characteristic(const GluedSurface& s);
/// (2 - chi) / 2; throws OddChi when chi is odd.
long genus(const GluedSurface& s);

struct Homology {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1
};

/// H_1 = ker d1 / im d2 via Smith normal form.
Homology homology(const GluedSurface& s);

/// Algebraic intersection number of two 1-cycles on the 1-skeleton.
///
/// The first cycle is pushed off to its left into the adjacent faces. Near a
/// vertex the pushed strand that arrives along half-edge `in` and leaves
/// along `out` sweeps clockwise from `in` to `out`, crossing the half-edges
/// strictly between them; each crossing of a half-edge carried outward by
/// the second cycle counts +1. Throws NotACycle if either chain has nonzero
/// boundary.
Integer intersection_number(const IntegerVector& first, const IntegerVector& second, const GluedSurface& s);
Integer intersection_number(const OneCycle& first, const OneCycle& second, const GluedSurface& s);

/// Collapses a non-loop edge, merging its endpoints. Throws LoopContraction
/// for loops and EmptyFace if some face would lose its last letter.
GluedSurface contract_edge(const GluedSurface& s, const std::string& edge);

}  // namespace hitchin
