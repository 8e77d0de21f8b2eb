#include "hitchin/triangulation.hpp"

#include <set>
#include <string>
#include <utility>

#include "hitchin/error.hpp"

namespace hitchin {

namespace {

std::string upper(int k) { return "au" + std::to_string(k); }
std::string lower(int k) { return "al" + std::to_string(k); }
std::string rung(int k) { return "d" + std::to_string(k); }

// One face alternating rungs and ring edges, visiting ring positions of one
// parity: au_k^-1 d_k al_{k-1}^-1 d_{k-1}^-1 for k = k0, k0-2, ... (mod n).
FaceWord zigzag(const std::string& name, int k0, int n) {
  FaceWord w{name, {}};
  for (int step = 0; step < n / 2; ++step) {
    const int k = ((k0 - 2 * step) % n + n) % n;
    const int previous = (k + n - 1) % n;
    w.letters.push_back({upper(k), -1});
    w.letters.push_back({rung(k), 1});
    w.letters.push_back({lower(previous), -1});
    w.letters.push_back({rung(previous), -1});
  }
  return w;
}

}  // namespace

GluedSurface build_triangulation(int genus) {
  if (genus < 3) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 3, got " + std::to_string(genus));
  const int n = 2 * genus + 2;
  FaceWord upper_ring{"inf+", {}};
  FaceWord lower_ring{"inf-", {}};
  for (int k = 0; k < n; ++k) {
    upper_ring.letters.push_back({upper(k), 1});
    lower_ring.letters.push_back({lower(k), 1});
  }
  return glue({upper_ring, lower_ring, zigzag("0+", 0, n), zigzag("0-", 1, n)});
}

GluedSurface contract_scheme(const GluedSurface& triangulation) {
  const long genus_value = genus(triangulation);
  GluedSurface s = triangulation;
  for (int k : {1, 3, 5, 7}) s = contract_edge(s, upper(k));
  for (int k : {0, 2, 4, 6}) s = contract_edge(s, lower(k));

  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InvariantViolation, what);
  };
  require(static_cast<long>(s.vertex_count()) == 4 * genus_value - 4, "contracted graph must have 4g-4 vertices");
  require(static_cast<long>(s.edge_count()) == 6 * genus_value - 2, "contracted graph must have 6g-2 edges");
  require(s.face_count() == 4, "contracted graph must have 4 faces");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < s.edge_count(); ++e) {
    auto [a, b] = s.endpoints(e);
    require(a != b, "contraction produced loop " + s.edges()[e]);
    if (a > b) std::swap(a, b);
    require(seen.emplace(a, b).second, "contraction produced a double edge at " + s.edges()[e]);
  }
  return s;
}

}  // namespace hitchin
