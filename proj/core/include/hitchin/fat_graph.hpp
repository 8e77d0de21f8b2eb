#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/surface_complex.hpp"

namespace hitchin {

/// Isomorphism of fat graphs: a bijection of half-edges commuting with the
/// edge involution and carrying the rotation at each vertex to the rotation
/// (or, when `reflected`, the reversed rotation) at the image vertex.
struct FatGraphIsomorphism {
  bool reflected = false;
  /// Indexed by half-edge id of the source.
  std::vector<HalfEdge> half_edges;
  /// source edge -> (target edge, orientation reversed)
  std::map<std::string, std::pair<std::string, bool>> edges;
  /// source vertex -> target vertex
  std::map<std::string, std::string> vertices;
};

/// Returns the first isomorphism found (orientation-preserving candidates
/// are tried before reflections), or nullopt. A connected map is rigid once
/// one half-edge is placed, so this tries every image of a fixed root.
std::optional<FatGraphIsomorphism> check_isomorphic(const GluedSurface& a, const GluedSurface& b);

}  // namespace hitchin
