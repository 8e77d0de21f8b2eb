#include <map>
#include <string>

#include <gtest/gtest.h>

#include "hitchin/error.hpp"
#include "hitchin/hitchin_graph.hpp"
#include "hitchin/lattice.hpp"
#include "oracles.hpp"

using namespace hitchin;

namespace {

std::string s(const char* family, int j) { return family + std::to_string(j); }

/// The four boundary words written out term by term.
std::vector<std::string> expected_base_words(int g) {
  std::string inf_minus, inf_plus, zero_minus, zero_plus;
  for (int j = 2 * g - 2; j >= 1; --j) {
    inf_minus += (inf_minus.empty() ? "" : " ") + s("l", j) + "^-1";
    inf_plus += (inf_plus.empty() ? "" : " ") + s("u", j) + "^-1";
  }
  for (int k = 1; k <= 8; ++k) zero_minus += (k > 1 ? " " : "") + s("b", k);
  for (int m = 1; m <= g - 3; ++m) {
    zero_minus += " " + s("b", 2 * m + 7) + " " + s("l", 2 * m + 3) + " " + s("b", 2 * m + 8) + " " + s("u", 2 * m + 4);
  }
  for (int k = 1; k <= 4; ++k) {
    zero_plus += (k > 1 ? " " : "") + s("b", 2 * k - 1) + "^-1 " + s("u", k) + " " + s("b", 2 * k) + "^-1 " + s("l", k);
  }
  for (int m = 1; m <= g - 3; ++m) {
    zero_plus += " " + s("b", 2 * m + 7) + "^-1 " + s("u", 2 * m + 3) + " " + s("b", 2 * m + 8) + "^-1 " + s("l", 2 * m + 4);
  }
  return {inf_minus, inf_plus, zero_minus, zero_plus};
}

bool sheet_two_letter(std::size_t face, const std::string& symbol, int g) {
  const EdgeLabel e = EdgeLabel::parse(symbol);
  if (face == 2) {
    for (int m = 1; m <= g - 3; ++m)
      if (e == EdgeLabel{EdgeFamily::L, 2 * m + 3}) return true;
  }
  if (face == 3) {
    for (int j : {1, 3})
      if (e == EdgeLabel{EdgeFamily::U, j} || e == EdgeLabel{EdgeFamily::L, j}) return true;
    for (int m = 1; m <= g - 3; ++m)
      if (e == EdgeLabel{EdgeFamily::U, 2 * m + 3}) return true;
  }
  return false;
}

}  // namespace

TEST(EdgeLabel, SymbolRoundTrip) {
  for (const auto& e : edge_labels(5)) EXPECT_EQ(EdgeLabel::parse(e.symbol()), e);
  EXPECT_EQ(EdgeLabel::parse("b10"), (EdgeLabel{EdgeFamily::B, 10}));
  for (const char* bad : {"x1", "u", "u0", "u-1", "b1a"}) EXPECT_THROW(EdgeLabel::parse(bad), Error) << bad;
  const LiftedEdge l{{EdgeFamily::U, 3}, 1};
  EXPECT_EQ(l.symbol(), "u3.1");
  EXPECT_EQ(l.swapped().swapped(), l);
  EXPECT_EQ(l.swapped().sheet, 2);
}

TEST(EdgeLabels, OrderAndSize) {
  const auto e = edge_labels(3);
  ASSERT_EQ(e.size(), 16u);
  EXPECT_EQ(e.front().symbol(), "u1");
  EXPECT_EQ(e[4].symbol(), "l1");
  EXPECT_EQ(e[8].symbol(), "b1");
  EXPECT_EQ(e.back().symbol(), "b8");
}

TEST(BaseWords, MatchTermByTermExpansion) {
  for (int g = 3; g <= 9; ++g) {
    const auto words = base_words(g);
    const auto expected = expected_base_words(g);
    ASSERT_EQ(words.size(), 4u);
    for (std::size_t f = 0; f < 4; ++f) {
      EXPECT_EQ(words[f].face, base_face_names()[f]);
      EXPECT_EQ(words[f].to_string(), expected[f]) << "g=" << g << " face " << words[f].face;
    }
  }
}

TEST(BaseWords, GenusThreeZeroMinusIsTheEightCrossingEdges) {
  const auto w = base_words(3);
  EXPECT_EQ(w[2].to_string(), "b1 b2 b3 b4 b5 b6 b7 b8");
}

TEST(BaseWords, GenusFourTailBlock) {
  const auto w = base_words(4);
  ASSERT_EQ(w[2].letters.size(), 12u);
  EXPECT_EQ((FaceWord{"x", {w[2].letters.begin() + 8, w[2].letters.end()}}.to_string()), "b9 l5 b10 u6");
}

TEST(BaseWords, EveryEdgeTwiceWithOppositeExponents) {
  for (int g = 3; g <= 12; ++g) {
    std::map<std::string, std::pair<int, int>> seen;
    std::size_t total = 0;
    for (const auto& w : base_words(g)) {
      total += w.letters.size();
      for (const auto& l : w.letters) (l.exponent == 1 ? seen[l.symbol].first : seen[l.symbol].second)++;
    }
    EXPECT_EQ(total, static_cast<std::size_t>(12 * g - 4));
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(6 * g - 2));
    for (const auto& [sym, c] : seen) EXPECT_EQ(c, std::make_pair(1, 1)) << sym;
  }
}

TEST(BaseWords, GenusTooSmall) {
  for (int g : {-1, 0, 1, 2}) {
    try {
      base_words(g);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::GenusTooSmall);
    }
    EXPECT_THROW(lifted_words(g), Error);
    EXPECT_THROW(build_model(g), Error);
  }
}

TEST(LiftedWords, SheetMarkersAndConjugates) {
  for (int g = 3; g <= 7; ++g) {
    const auto base = base_words(g);
    const auto lifted = lifted_words(g);
    ASSERT_EQ(lifted.size(), 8u);
    std::size_t total = 0;
    for (std::size_t f = 0; f < 4; ++f) {
      EXPECT_EQ(lifted[f].face, base_face_names()[f] + ".1");
      EXPECT_EQ(lifted[f + 4].face, base_face_names()[f] + ".2");
      ASSERT_EQ(lifted[f].letters.size(), base[f].letters.size());
      for (std::size_t p = 0; p < base[f].letters.size(); ++p) {
        const auto& b = base[f].letters[p];
        const int sheet = sheet_two_letter(f, b.symbol, g) ? 2 : 1;
        EXPECT_EQ(lifted[f].letters[p].symbol, b.symbol + "." + std::to_string(sheet));
        EXPECT_EQ(lifted[f + 4].letters[p].symbol, b.symbol + "." + std::to_string(3 - sheet));
        EXPECT_EQ(lifted[f].letters[p].exponent, b.exponent);
        EXPECT_EQ(lifted[f + 4].letters[p].exponent, b.exponent);
      }
      total += lifted[f].letters.size() + lifted[f + 4].letters.size();
    }
    EXPECT_EQ(total, static_cast<std::size_t>(2 * (12 * g - 4)));
  }
}

TEST(LiftedWords, GenusFourZeroPlusTail) {
  const auto w = lifted_words(4);
  const auto& letters = w[3].letters;
  EXPECT_EQ((FaceWord{"x", {letters.end() - 4, letters.end()}}.to_string()), "b9.1^-1 u5.2 b10.1^-1 l6.1");
}

TEST(Model, CountsAcrossGenera) {
  for (int g = 3; g <= 12; ++g) {
    const HitchinModel m = build_model(g);
    EXPECT_EQ(m.base_surface.vertex_count(), static_cast<std::size_t>(4 * g - 4));
    EXPECT_EQ(m.base_surface.edge_count(), static_cast<std::size_t>(6 * g - 2));
    EXPECT_EQ(m.base_surface.face_count(), 4u);
    EXPECT_EQ(genus(m.base_surface), g);
    EXPECT_EQ(m.lifted_surface.vertex_count(), static_cast<std::size_t>(4 * g - 4));
    EXPECT_EQ(m.lifted_surface.edge_count(), static_cast<std::size_t>(12 * g - 4));
    EXPECT_EQ(m.lifted_surface.face_count(), 8u);
    EXPECT_EQ(euler_characteristic(m.lifted_surface), 8 - 8 * g);
    EXPECT_EQ(genus(m.lifted_surface), 4 * g - 3);
  }
}

TEST(Model, SpecificGenera) {
  const HitchinModel m5 = build_model(5);
  EXPECT_EQ(genus(m5.lifted_surface), 17);
  const HitchinModel m10 = build_model(10);
  EXPECT_EQ(m10.base_surface.vertex_count(), 36u);
  EXPECT_EQ(m10.base_surface.edge_count(), 58u);
}

TEST(Model, ChainComplexAndInvolution) {
  for (int g = 3; g <= 8; ++g) {
    const HitchinModel m = build_model(g);
    const auto d1 = m.lifted_surface.boundary_1(), d2 = m.lifted_surface.boundary_2();
    EXPECT_TRUE((d1 * d2).is_zero());
    EXPECT_TRUE((m.base_surface.boundary_1() * m.base_surface.boundary_2()).is_zero());
    const auto tv = m.tau_vertex_matrix(), te = m.tau_edge_matrix(), tf = m.tau_face_matrix();
    EXPECT_EQ(tv * d1, d1 * te);
    EXPECT_EQ(te * d2, d2 * tf);
    EXPECT_TRUE((te * te).is_identity());
    EXPECT_TRUE((tf * tf).is_identity());
    for (std::size_t f = 0; f < 8; ++f) EXPECT_NE(m.tau_faces[f], f);
    for (std::size_t e = 0; e < m.lifted_surface.edge_count(); ++e) EXPECT_NE(m.tau_edges[e], e);
    for (const auto& label : m.edges) {
      EXPECT_EQ(m.tau_edges[m.lifted_index({label, 1})], m.lifted_index({label, 2}));
    }
  }
}

TEST(Model, LiftedHomology) {
  for (int g = 3; g <= 6; ++g) {
    const Homology h = homology(build_model(g).lifted_surface);
    EXPECT_EQ(h.rank, static_cast<std::size_t>(8 * g - 6));
    EXPECT_TRUE(h.torsion.empty());
  }
}

TEST(Psi, CyclesAntiInvariantUnderTau) {
  for (int g = 3; g <= 6; ++g) {
    const HitchinModel m = build_model(g);
    const PsiData p = psi_map(m);
    ASSERT_EQ(p.psi.size(), m.edges.size());
    const auto te = m.tau_edge_matrix();
    for (std::size_t i = 0; i < p.psi.size(); ++i) {
      EXPECT_TRUE(m.lifted_surface.is_cycle(p.psi[i]));
      IntegerVector neg = p.psi[i];
      for (auto& x : neg) x = -x;
      EXPECT_EQ(te * p.psi[i], neg);
      const auto chain = m.lifted_surface.chain_from_vector(p.psi[i]).coefficients;
      EXPECT_EQ(chain.at(LiftedEdge{m.edges[i], 1}.symbol()), 1);
      EXPECT_EQ(chain.at(LiftedEdge{m.edges[i], 2}.symbol()), -1);
    }
  }
}

TEST(Psi, FaceVectorsMatchLetterFormula) {
  for (int g = 3; g <= 10; ++g) {
    const PsiData p = psi_map(build_model(g));
    EXPECT_EQ(p.face_vectors, oracle::letter_formula_face_vectors(g)) << "g=" << g;
  }
}

TEST(Psi, FaceVectorsMatchClosedForm) {
  for (int g = 3; g <= 10; ++g) {
    EXPECT_EQ(psi_map(build_model(g)).face_vectors, closed_form_face_vectors(g)) << "g=" << g;
  }
}

TEST(Psi, PrintedCoefficients) {
  const HitchinModel m = build_model(4);
  const PsiData p = psi_map(m);
  const auto coef = [&](std::size_t face, EdgeLabel e) { return p.face_vectors[face][m.edge_position(e)]; };
  EXPECT_EQ(coef(2, {EdgeFamily::U, 6}), 1);
  EXPECT_EQ(coef(2, {EdgeFamily::L, 5}), -1);
  for (int k = 1; k <= 10; ++k) {
    EXPECT_EQ(coef(2, {EdgeFamily::B, k}), 1);
    EXPECT_EQ(coef(3, {EdgeFamily::B, k}), -1);
  }
  for (int j = 1; j <= 6; ++j) {
    EXPECT_EQ(coef(0, {EdgeFamily::L, j}), -1);
    EXPECT_EQ(coef(1, {EdgeFamily::U, j}), -1);
  }
}

TEST(Psi, DiffersFromPsiOfBoundaryExactlyOnSheetTwoLetters) {
  const int g = 5;
  const HitchinModel m = build_model(g);
  const PsiData p = psi_map(m);
  const auto d2 = m.base_surface.boundary_2();
  for (std::size_t f = 0; f < 4; ++f) {
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      const Integer naive = d2(m.base_surface.edge_index(m.edges[i].symbol()), f);
      const bool flipped = sheet_two_letter(f, m.edges[i].symbol(), g);
      EXPECT_EQ(p.face_vectors[f][i], flipped ? -naive : naive) << m.edges[i].symbol();
    }
  }
}

TEST(Psi, FaceLatticeHasRankFour) {
  for (int g = 3; g <= 12; ++g) {
    const PsiData p = psi_map(build_model(g));
    EXPECT_EQ(oracle::rational_rank(IntegerMatrix::from_columns(p.face_vectors, 6 * g - 2)), 4u);
  }
}
