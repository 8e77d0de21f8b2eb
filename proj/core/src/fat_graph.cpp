#include "hitchin/fat_graph.hpp"

#include <deque>

namespace hitchin {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::optional<std::vector<std::size_t>> extend_from_root(const GluedSurface& a, const GluedSurface& b,
                                                         const std::vector<std::size_t>& b_prev, std::size_t target,
                                                         bool reflected) {
  const std::size_t n = 2 * a.edge_count();
  std::vector<std::size_t> forward(n, kUnset);
  std::vector<std::size_t> backward(n, kUnset);
  std::deque<std::size_t> queue;

  auto assign = [&](std::size_t from, std::size_t to) {
    if (forward[from] != kUnset) return forward[from] == to;
    if (backward[to] != kUnset) return false;
    forward[from] = to;
    backward[to] = from;
    queue.push_back(from);
    return true;
  };

  if (!assign(0, target)) return std::nullopt;
  while (!queue.empty()) {
    const std::size_t d = queue.front();
    queue.pop_front();
    const std::size_t image = forward[d];
    if (!assign(d ^ 1, image ^ 1)) return std::nullopt;
    const std::size_t rotated = a.next_ccw(HalfEdge::from_id(d)).id();
    const std::size_t rotated_image = reflected ? b_prev[image] : b.next_ccw(HalfEdge::from_id(image)).id();
    if (!assign(rotated, rotated_image)) return std::nullopt;
  }
  for (std::size_t d = 0; d < n; ++d)
    if (forward[d] == kUnset) return std::nullopt;
  return forward;
}

}  // namespace

std::optional<FatGraphIsomorphism> check_isomorphic(const GluedSurface& a, const GluedSurface& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.face_count() != b.face_count()) {
    return std::nullopt;
  }
  const std::size_t n = 2 * b.edge_count();
  if (n == 0) return std::nullopt;
  std::vector<std::size_t> b_prev(n);
  for (std::size_t d = 0; d < n; ++d) b_prev[b.next_ccw(HalfEdge::from_id(d)).id()] = d;

  for (bool reflected : {false, true}) {
    for (std::size_t target = 0; target < n; ++target) {
      auto forward = extend_from_root(a, b, b_prev, target, reflected);
      if (!forward) continue;
      FatGraphIsomorphism iso;
      iso.reflected = reflected;
      for (std::size_t d = 0; d < n; ++d) iso.half_edges.push_back(HalfEdge::from_id((*forward)[d]));
      for (std::size_t e = 0; e < a.edge_count(); ++e) {
        const HalfEdge image = iso.half_edges[2 * e];
        iso.edges[a.edges()[e]] = {b.edges()[image.edge], image.end == EdgeEnd::head};
      }
      for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        const HalfEdge h = a.rotation(v).front();
        iso.vertices[a.vertices()[v]] = b.vertices()[b.vertex_of(iso.half_edges[h.id()])];
      }
      return iso;
    }
  }
  return std::nullopt;
}

}  // namespace hitchin
