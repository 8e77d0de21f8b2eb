#include "hitchin/hitchin_graph.hpp"

#include <algorithm>
#include <map>

#include "hitchin/error.hpp"

namespace hitchin {

std::string EdgeLabel::symbol() const {
  const char prefix = family == EdgeFamily::U ? 'u' : family == EdgeFamily::L ? 'l' : 'b';
  return prefix + std::to_string(index);
}

EdgeLabel EdgeLabel::parse(const std::string& symbol) {
  if (symbol.size() < 2) throw Error(ErrorCode::InvalidArgument, "bad edge label '" + symbol + "'");
  EdgeLabel label;
  switch (symbol[0]) {
    case 'u': label.family = EdgeFamily::U; break;
    case 'l': label.family = EdgeFamily::L; break;
    case 'b': label.family = EdgeFamily::B; break;
    default: throw Error(ErrorCode::InvalidArgument, "bad edge label '" + symbol + "'");
  }
  std::size_t used = 0;
  try {
    label.index = std::stoi(symbol.substr(1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != symbol.size() - 1 || label.index < 1) throw Error(ErrorCode::InvalidArgument, "bad edge label '" + symbol + "'");
  return label;
}

std::string LiftedEdge::symbol() const { return label.symbol() + "." + std::to_string(sheet); }

namespace {

void require_genus(int genus) {
  if (genus < 3) throw Error(ErrorCode::GenusTooSmall, "genus must be at least 3, got " + std::to_string(genus));
}

EdgeLabel u(int j) { return {EdgeFamily::U, j}; }
EdgeLabel l(int j) { return {EdgeFamily::L, j}; }
EdgeLabel b(int j) { return {EdgeFamily::B, j}; }

struct MarkedLetter {
  EdgeLabel label;
  int exponent;
  int sheet;  // sheet of the lift used in the sheet-1 face word
};

using MarkedWord = std::vector<MarkedLetter>;

// Boundary words with branch-cut markers. Sheet 2 marks letters whose lift
// in the sheet-1 face lies on the other sheet.
std::vector<MarkedWord> marked_words(int g) {
  require_genus(g);
  const int top = 2 * g - 2;

  MarkedWord infinity_minus, infinity_plus;
  for (int j = top; j >= 1; --j) {
    infinity_minus.push_back({l(j), -1, 1});
    infinity_plus.push_back({u(j), -1, 1});
  }

  MarkedWord zero_minus;
  for (int j = 1; j <= 8; ++j) zero_minus.push_back({b(j), 1, 1});
  for (int m = 1; m <= g - 3; ++m) {
    zero_minus.push_back({b(2 * m + 7), 1, 1});
    zero_minus.push_back({l(2 * m + 3), 1, 2});
    zero_minus.push_back({b(2 * m + 8), 1, 1});
    zero_minus.push_back({u(2 * m + 4), 1, 1});
  }

  MarkedWord zero_plus;
  for (int block = 1; block <= 4; ++block) {
    const int sheet = (block % 2 == 1) ? 2 : 1;  // u_1, l_1, u_3, l_3 cross the cut
    zero_plus.push_back({b(2 * block - 1), -1, 1});
    zero_plus.push_back({u(block), 1, sheet});
    zero_plus.push_back({b(2 * block), -1, 1});
    zero_plus.push_back({l(block), 1, sheet});
  }
  for (int m = 1; m <= g - 3; ++m) {
    zero_plus.push_back({b(2 * m + 7), -1, 1});
    zero_plus.push_back({u(2 * m + 3), 1, 2});
    zero_plus.push_back({b(2 * m + 8), -1, 1});
    zero_plus.push_back({l(2 * m + 4), 1, 1});
  }
  return {infinity_minus, infinity_plus, zero_minus, zero_plus};
}

IntegerMatrix permutation_matrix(const std::vector<std::size_t>& image) {
  IntegerMatrix m(image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m(image[i], i) = 1;
  return m;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvariantViolation, what);
}

void check_count(const std::string& name, long actual, long expected) {
  check(actual == expected,
        name + ": expected " + std::to_string(expected) + ", got " + std::to_string(actual));
}

}  // namespace

std::vector<EdgeLabel> edge_labels(int genus) {
  require_genus(genus);
  std::vector<EdgeLabel> out;
  for (int j = 1; j <= 2 * genus - 2; ++j) out.push_back(u(j));
  for (int j = 1; j <= 2 * genus - 2; ++j) out.push_back(l(j));
  for (int j = 1; j <= 2 * genus + 2; ++j) out.push_back(b(j));
  return out;
}

std::vector<FaceWord> base_words(int genus) {
  const auto marked = marked_words(genus);
  std::vector<FaceWord> out;
  for (std::size_t f = 0; f < marked.size(); ++f) {
    FaceWord w{base_face_names()[f], {}};
    for (const auto& letter : marked[f]) w.letters.push_back({letter.label.symbol(), letter.exponent});
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<FaceWord> lifted_words(int genus) {
  const auto marked = marked_words(genus);
  std::vector<FaceWord> out;
  for (int face_sheet : {1, 2}) {
    for (std::size_t f = 0; f < marked.size(); ++f) {
      FaceWord w{base_face_names()[f] + "." + std::to_string(face_sheet), {}};
      for (const auto& letter : marked[f]) {
        LiftedEdge lift{letter.label, letter.sheet};
        if (face_sheet == 2) lift = lift.swapped();
        w.letters.push_back({lift.symbol(), letter.exponent});
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::size_t HitchinModel::edge_position(const EdgeLabel& label) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i] == label) return i;
  throw Error(ErrorCode::InvalidArgument, "edge " + label.symbol() + " is not in the genus " + std::to_string(genus) + " model");
}

std::size_t HitchinModel::lifted_index(const LiftedEdge& edge) const {
  return lifted_surface.edge_index(edge.symbol());
}

IntegerMatrix HitchinModel::tau_vertex_matrix() const { return permutation_matrix(tau_vertices); }
IntegerMatrix HitchinModel::tau_edge_matrix() const { return permutation_matrix(tau_edges); }
IntegerMatrix HitchinModel::tau_face_matrix() const { return permutation_matrix(tau_faces); }

HitchinModel build_model(int genus) {
  require_genus(genus);
  HitchinModel m;
  m.genus = genus;
  m.edges = edge_labels(genus);
  m.base_words = base_words(genus);
  m.lifted_words = lifted_words(genus);
  m.base_surface = glue(m.base_words);
  m.lifted_surface = glue(m.lifted_words);

  const long g = genus;
  const auto& base = m.base_surface;
  check_count("base vertices", static_cast<long>(base.vertex_count()), 4 * g - 4);
  check_count("base edges", static_cast<long>(base.edge_count()), 6 * g - 2);
  check_count("base faces", static_cast<long>(base.face_count()), 4);
  check_count("base genus", hitchin::genus(base), g);

  const auto& lifted = m.lifted_surface;
  check_count("lifted vertices", static_cast<long>(lifted.vertex_count()), 4 * g - 4);
  check_count("lifted edges", static_cast<long>(lifted.edge_count()), 12 * g - 4);
  check_count("lifted faces", static_cast<long>(lifted.face_count()), 8);
  check_count("lifted euler characteristic", lifted.euler_characteristic(), 8 - 8 * g);
  check_count("lifted genus", hitchin::genus(lifted), 4 * g - 3);

  check((base.boundary_1() * base.boundary_2()).is_zero(), "base boundary squared is nonzero");
  check((lifted.boundary_1() * lifted.boundary_2()).is_zero(), "lifted boundary squared is nonzero");

  // Sheet swap on cells. Faces: f.1 <-> f.2 (first half <-> second half).
  const std::size_t half = lifted.face_count() / 2;
  m.tau_faces.resize(lifted.face_count());
  for (std::size_t f = 0; f < lifted.face_count(); ++f) m.tau_faces[f] = f < half ? f + half : f - half;

  m.tau_edges.resize(lifted.edge_count());
  for (std::size_t e = 0; e < lifted.edge_count(); ++e) {
    const std::string& symbol = lifted.edges()[e];
    const auto dot = symbol.rfind('.');
    const LiftedEdge edge{EdgeLabel::parse(symbol.substr(0, dot)), std::stoi(symbol.substr(dot + 1))};
    m.tau_edges[e] = lifted.edge_index(edge.swapped().symbol());
  }

  // Vertices: corner (f, p) maps to corner (tau f, p); must be well defined.
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  m.tau_vertices.assign(lifted.vertex_count(), unset);
  for (std::size_t f = 0; f < lifted.face_count(); ++f)
    for (std::size_t p = 0; p < lifted.faces()[f].letters.size(); ++p) {
      const std::size_t v = lifted.corner_vertex(f, p);
      const std::size_t image = lifted.corner_vertex(m.tau_faces[f], p);
      check(m.tau_vertices[v] == unset || m.tau_vertices[v] == image, "tau is not well defined on vertices");
      m.tau_vertices[v] = image;
    }

  const IntegerMatrix tx = m.tau_vertex_matrix();
  const IntegerMatrix te = m.tau_edge_matrix();
  const IntegerMatrix tf = m.tau_face_matrix();
  check(lifted.boundary_1() * te == tx * lifted.boundary_1(), "d1 tau != tau d1");
  check(lifted.boundary_2() * tf == te * lifted.boundary_2(), "d2 tau != tau d2");
  return m;
}

PsiData psi_map(const HitchinModel& model) {
  const auto& lifted = model.lifted_surface;
  PsiData data;
  for (const auto& label : model.edges) {
    IntegerVector chain(lifted.edge_count());
    chain[model.lifted_index({label, 1})] = 1;
    chain[model.lifted_index({label, 2})] = -1;
    data.psi.push_back(std::move(chain));
  }

  const IntegerMatrix d2 = lifted.boundary_2();
  const std::size_t half = lifted.face_count() / 2;
  for (std::size_t f = 0; f < half; ++f) {
    IntegerVector difference(lifted.edge_count());
    for (std::size_t e = 0; e < lifted.edge_count(); ++e) difference[e] = d2(e, f) - d2(e, model.tau_faces[f]);

    IntegerVector coefficients(model.edges.size());
    for (std::size_t i = 0; i < model.edges.size(); ++i) {
      const Integer& first = difference[model.lifted_index({model.edges[i], 1})];
      const Integer& second = difference[model.lifted_index({model.edges[i], 2})];
      check(first == -second, "d(" + lifted.faces()[f].face + " - tau) is not in the image of psi at " +
                                  model.edges[i].symbol());
      coefficients[i] = first;
    }
    data.face_vectors.push_back(std::move(coefficients));
  }
  return data;
}

std::vector<IntegerVector> closed_form_face_vectors(int genus) {
  require_genus(genus);
  const std::vector<EdgeLabel> edges = edge_labels(genus);
  const auto pos = [&](const EdgeLabel& e) {
    return static_cast<std::size_t>(std::find(edges.begin(), edges.end(), e) - edges.begin());
  };
  std::vector<IntegerVector> out(4, IntegerVector(edges.size()));
  auto& inf_minus = out[0];
  auto& inf_plus = out[1];
  auto& zero_minus = out[2];
  auto& zero_plus = out[3];
  for (int j = 1; j <= 2 * genus - 2; ++j) {
    inf_minus[pos(l(j))] -= 1;
    inf_plus[pos(u(j))] -= 1;
  }
  for (int k = 1; k <= 2 * genus + 2; ++k) {
    zero_minus[pos(b(k))] += 1;
    zero_plus[pos(b(k))] -= 1;
  }
  for (int j = 3; j <= genus - 1; ++j) {
    zero_minus[pos(u(2 * j))] += 1;
    zero_minus[pos(l(2 * j - 1))] -= 1;
  }
  zero_plus[pos(l(1))] -= 1;
  zero_plus[pos(l(3))] -= 1;
  zero_plus[pos(u(2))] += 1;
  zero_plus[pos(u(4))] += 1;
  for (int j = 1; j <= genus - 1; ++j) {
    zero_plus[pos(u(2 * j - 1))] -= 1;
    zero_plus[pos(l(2 * j))] += 1;
  }
  return out;
}

}  // namespace hitchin
