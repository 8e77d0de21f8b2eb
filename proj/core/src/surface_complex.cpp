#include "hitchin/surface_complex.hpp"

#include <numeric>
#include <sstream>

#include "hitchin/error.hpp"
#include "hitchin/smith.hpp"

namespace hitchin {

std::string SymbolOccurrence::to_string() const { return exponent > 0 ? symbol : symbol + "^-1"; }

FaceWord FaceWord::parse(std::string face, const std::string& text) {
  FaceWord w{std::move(face), {}};
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int exponent = 1;
    if (token.size() > 3 && token.compare(token.size() - 3, 3, "^-1") == 0) {
      token.resize(token.size() - 3);
      exponent = -1;
    }
    if (token.find('^') != std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "bad letter '" + token + "' in face " + w.face);
    }
    w.letters.push_back({token, exponent});
  }
  return w;
}

std::string FaceWord::to_string() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += l.to_string();
  }
  return out;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

HalfEdge start_of(std::size_t edge, int exponent) { return {edge, exponent > 0 ? EdgeEnd::tail : EdgeEnd::head}; }
HalfEdge end_of(std::size_t edge, int exponent) { return {edge, exponent > 0 ? EdgeEnd::head : EdgeEnd::tail}; }

// Net flow of a chain out of the vertex through half-edge h.
Integer outflow(const IntegerVector& chain, HalfEdge h) {
  const Integer& c = chain[h.edge];
  return h.end == EdgeEnd::tail ? c : Integer(-c);
}

}  // namespace

GluedSurface glue(std::vector<FaceWord> words) {
  GluedSurface s;
  s.faces_ = std::move(words);

  // Edge table and occurrence check.
  std::vector<int> plus, minus;
  for (const auto& face : s.faces_) {
    if (face.letters.empty()) throw Error(ErrorCode::MalformedGluing, "face '" + face.face + "' has an empty word");
    for (const auto& letter : face.letters) {
      if (letter.exponent != 1 && letter.exponent != -1) {
        throw Error(ErrorCode::MalformedGluing, "exponent of '" + letter.symbol + "' must be +1 or -1");
      }
      auto [it, inserted] = s.edge_lookup_.try_emplace(letter.symbol, s.edges_.size());
      if (inserted) {
        s.edges_.push_back(letter.symbol);
        plus.push_back(0);
        minus.push_back(0);
      }
      (letter.exponent > 0 ? plus : minus)[it->second]++;
    }
  }
  for (std::size_t e = 0; e < s.edges_.size(); ++e) {
    if (plus[e] != 1 || minus[e] != 1) {
      throw Error(ErrorCode::MalformedGluing, "edge '" + s.edges_[e] + "' must occur once with each exponent (found +" +
                                                  std::to_string(plus[e]) + "/-" + std::to_string(minus[e]) + ")");
    }
  }

  // Each corner (f, p) sits between the end of letter p-1 and the start of
  // letter p; counter-clockwise around the vertex the start of letter p is
  // followed by the end of letter p-1.
  const std::size_t half_edges = 2 * s.edges_.size();
  s.next_ccw_.assign(half_edges, 0);
  std::vector<std::pair<std::size_t, std::size_t>> corner_of(half_edges);
  for (std::size_t f = 0; f < s.faces_.size(); ++f) {
    const auto& letters = s.faces_[f].letters;
    const std::size_t len = letters.size();
    for (std::size_t p = 0; p < len; ++p) {
      const auto& cur = letters[p];
      const auto& prev = letters[(p + len - 1) % len];
      const HalfEdge out = start_of(s.edge_lookup_.at(cur.symbol), cur.exponent);
      const HalfEdge in = end_of(s.edge_lookup_.at(prev.symbol), prev.exponent);
      s.next_ccw_[out.id()] = in.id();
      corner_of[out.id()] = {f, p};
    }
  }

  // Vertices: cycles of next_ccw, discovered in corner order.
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  s.vertex_of_.assign(half_edges, unassigned);
  s.corner_vertex_.resize(s.faces_.size());
  for (std::size_t f = 0; f < s.faces_.size(); ++f) {
    const auto& letters = s.faces_[f].letters;
    s.corner_vertex_[f].resize(letters.size());
    for (std::size_t p = 0; p < letters.size(); ++p) {
      const HalfEdge first = start_of(s.edge_lookup_.at(letters[p].symbol), letters[p].exponent);
      if (s.vertex_of_[first.id()] == unassigned) {
        const std::size_t v = s.vertex_names_.size();
        s.vertex_names_.push_back(s.faces_[f].face + ":" + std::to_string(p));
        std::vector<HalfEdge> ring;
        std::size_t h = first.id();
        do {
          s.vertex_of_[h] = v;
          ring.push_back(HalfEdge::from_id(h));
          h = s.next_ccw_[h];
        } while (h != first.id());
        s.rotation_.push_back(std::move(ring));
      }
      s.corner_vertex_[f][p] = s.vertex_of_[first.id()];
    }
  }

  // Connectivity through shared edges.
  DisjointSets components(s.faces_.size());
  std::vector<std::size_t> seen_in(s.edges_.size(), unassigned);
  for (std::size_t f = 0; f < s.faces_.size(); ++f)
    for (const auto& letter : s.faces_[f].letters) {
      const std::size_t e = s.edge_lookup_.at(letter.symbol);
      if (seen_in[e] == unassigned) {
        seen_in[e] = f;
      } else {
        components.unite(seen_in[e], f);
      }
    }
  for (std::size_t f = 1; f < s.faces_.size(); ++f)
    if (components.find(f) != components.find(0)) {
      throw Error(ErrorCode::Disconnected, "face '" + s.faces_[f].face + "' is not connected to '" + s.faces_[0].face + "'");
    }
  return s;
}

std::optional<std::size_t> GluedSurface::find_edge(const std::string& symbol) const {
  auto it = edge_lookup_.find(symbol);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t GluedSurface::edge_index(const std::string& symbol) const {
  if (auto e = find_edge(symbol)) return *e;
  throw Error(ErrorCode::InvalidArgument, "unknown edge '" + symbol + "'");
}

std::optional<std::size_t> GluedSurface::find_face(const std::string& name) const {
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (faces_[f].face == name) return f;
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> GluedSurface::endpoints(std::size_t edge) const {
  return {vertex_of_.at(2 * edge), vertex_of_.at(2 * edge + 1)};
}

bool GluedSurface::is_loop(std::size_t edge) const {
  const auto [t, h] = endpoints(edge);
  return t == h;
}

std::size_t GluedSurface::corner_vertex(std::size_t face, std::size_t position) const {
  return corner_vertex_.at(face).at(position);
}

long GluedSurface::euler_characteristic() const noexcept {
  return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) + static_cast<long>(face_count());
}

IntegerMatrix GluedSurface::boundary_1() const {
  IntegerMatrix d(vertex_count(), edge_count());
  for (std::size_t e = 0; e < edge_count(); ++e) {
    const auto [t, h] = endpoints(e);
    d(h, e) += 1;
    d(t, e) -= 1;
  }
  return d;
}

IntegerMatrix GluedSurface::boundary_2() const {
  IntegerMatrix d(edge_count(), face_count());
  for (std::size_t f = 0; f < face_count(); ++f)
    for (const auto& letter : faces_[f].letters) d(edge_lookup_.at(letter.symbol), f) += letter.exponent;
  return d;
}

IntegerVector GluedSurface::chain_vector(const OneCycle& c) const {
  IntegerVector v(edge_count());
  for (const auto& [symbol, coefficient] : c.coefficients) v[edge_index(symbol)] += coefficient;
  return v;
}

OneCycle GluedSurface::chain_from_vector(const IntegerVector& v) const {
  if (v.size() != edge_count()) throw Error(ErrorCode::DimensionMismatch, "chain length");
  OneCycle c;
  for (std::size_t e = 0; e < v.size(); ++e)
    if (sgn(v[e]) != 0) c.coefficients[edges_[e]] = v[e];
  return c;
}

bool GluedSurface::is_cycle(const IntegerVector& chain) const {
  if (chain.size() != edge_count()) throw Error(ErrorCode::DimensionMismatch, "chain length");
  return hitchin::is_zero(boundary_1() * chain);
}

OneCycle GluedSurface::face_boundary(std::size_t face) const {
  return chain_from_vector(boundary_2().column(face));
}

nlohmann::json GluedSurface::to_json() const {
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : faces_) {
    nlohmann::json letters = nlohmann::json::array();
    for (const auto& l : f.letters) letters.push_back(l.to_string());
    faces.push_back({{"face", f.face}, {"letters", letters}});
  }
  nlohmann::json rotation = nlohmann::json::object();
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    nlohmann::json ring = nlohmann::json::array();
    for (const auto& h : rotation_[v]) ring.push_back(edges_[h.edge] + (h.end == EdgeEnd::tail ? ":tail" : ":head"));
    rotation[vertex_names_[v]] = ring;
  }
  nlohmann::json endpoints_json = nlohmann::json::object();
  for (std::size_t e = 0; e < edge_count(); ++e) {
    const auto [t, h] = endpoints(e);
    endpoints_json[edges_[e]] = {vertex_names_[t], vertex_names_[h]};
  }
  return {{"faces", faces},
          {"edges", edges_},
          {"vertices", vertex_names_},
          {"rotation", rotation},
          {"endpoints", endpoints_json}};
}

std::string GluedSurface::to_dot(const std::string& graph_name) const {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  for (const auto& name : vertex_names_) out << "  \"" << name << "\";\n";
  for (std::size_t e = 0; e < edge_count(); ++e) {
    const auto [t, h] = endpoints(e);
    out << "  \"" << vertex_names_[t] << "\" -> \"" << vertex_names_[h] << "\" [label=\"" << edges_[e] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

long euler_characteristic(const GluedSurface& s) { return s.euler_characteristic(); }

long genus(const GluedSurface& s) {
  const long chi = s.euler_characteristic();
  if (chi % 2 != 0) throw Error(ErrorCode::OddChi, "Euler characteristic " + std::to_string(chi) + " is odd");
  return (2 - chi) / 2;
}

Homology homology(const GluedSurface& s) {
  const std::size_t rank1 = smith_normal_form(s.boundary_1()).rank();
  const auto factors = smith_normal_form(s.boundary_2()).invariant_factors();
  Homology h;
  h.rank = s.edge_count() - rank1 - factors.size();
  for (const auto& d : factors)
    if (d != 1) h.torsion.push_back(d);
  return h;
}

Integer intersection_number(const IntegerVector& first, const IntegerVector& second, const GluedSurface& s) {
  if (!s.is_cycle(first)) throw Error(ErrorCode::NotACycle, "first chain has nonzero boundary");
  if (!s.is_cycle(second)) throw Error(ErrorCode::NotACycle, "second chain has nonzero boundary");
  Integer total = 0;
  for (std::size_t v = 0; v < s.vertex_count(); ++v) {
    const auto& ring = s.rotation(v);
    // Crossings of half-edge i by the pushed-off first cycle:
    //   -(sum of outflow over half-edges after i) - max(outflow at i, 0)
    Integer after = 0;
    for (std::size_t i = ring.size(); i-- > 0;) {
      const Integer out1 = outflow(first, ring[i]);
      const Integer out2 = outflow(second, ring[i]);
      if (sgn(out2) != 0) {
        Integer crossings = -after;
        if (sgn(out1) > 0) crossings -= out1;
        total += crossings * out2;
      }
      after += out1;
    }
  }
  return total;
}

Integer intersection_number(const OneCycle& first, const OneCycle& second, const GluedSurface& s) {
  return intersection_number(s.chain_vector(first), s.chain_vector(second), s);
}

GluedSurface contract_edge(const GluedSurface& s, const std::string& edge) {
  const std::size_t e = s.edge_index(edge);
  if (s.is_loop(e)) throw Error(ErrorCode::LoopContraction, "edge '" + edge + "' is a loop");
  std::vector<FaceWord> words;
  words.reserve(s.face_count());
  for (const auto& f : s.faces()) {
    FaceWord w{f.face, {}};
    for (const auto& l : f.letters)
      if (l.symbol != edge) w.letters.push_back(l);
    if (w.letters.empty()) {
      throw Error(ErrorCode::EmptyFace, "contracting '" + edge + "' empties face '" + f.face + "'");
    }
    words.push_back(std::move(w));
  }
  return glue(std::move(words));
}

}  // namespace hitchin
