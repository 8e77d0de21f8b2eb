// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hitchin/burau.hpp"
#include "hitchin/error.hpp"
#include "hitchin/fat_graph.hpp"
#include "hitchin/hitchin_graph.hpp"
#include "hitchin/monodromy.hpp"
#include "hitchin/triangulation.hpp"
#include "hitchin_cli/cli.hpp"
#include "oracles.hpp"

using namespace hitchin;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

using Criterion = std::function<Outcome()>;

long sz(std::size_t n) { return static_cast<long>(n); }

Outcome counts() {
  Outcome o;
  for (int g = 3; g <= 12 && o.passed; ++g) {
    const HitchinModel m = build_model(g);
    const auto& b = m.base_surface;
    const auto& l = m.lifted_surface;
    const std::string at = " at g=" + std::to_string(g);
    o.require(sz(b.vertex_count()) == 4 * g - 4 && sz(b.edge_count()) == 6 * g - 2 && b.face_count() == 4,
              "base (V,E,F)" + at);
    o.require(genus(b) == g, "base genus" + at);
    o.require(sz(l.vertex_count()) == 4 * g - 4 && sz(l.edge_count()) == 12 * g - 4 && l.face_count() == 8,
              "lifted (V,E,F)" + at);
    o.require(euler_characteristic(l) == 8 - 8 * g, "lifted chi" + at);
    o.require(genus(l) == 4 * g - 3, "lifted genus" + at);
  }
  if (o.passed) o.detail = "g=3..12";
  return o;
}

Outcome chain_complex() {
  Outcome o;
  for (int g = 3; g <= 12 && o.passed; ++g) {
    const HitchinModel m = build_model(g);
    const std::string at = " at g=" + std::to_string(g);
    const auto d1 = m.lifted_surface.boundary_1(), d2 = m.lifted_surface.boundary_2();
    o.require((d1 * d2).is_zero(), "lifted d1 d2 != 0" + at);
    o.require((m.base_surface.boundary_1() * m.base_surface.boundary_2()).is_zero(), "base d1 d2 != 0" + at);
    o.require(m.tau_vertex_matrix() * d1 == d1 * m.tau_edge_matrix(), "d1 tau != tau d1" + at);
    o.require(m.tau_edge_matrix() * d2 == d2 * m.tau_face_matrix(), "d2 tau != tau d2" + at);
  }
  if (o.passed) o.detail = "g=3..12";
  return o;
}

Outcome homology_rank() {
  Outcome o;
  for (int g = 3; g <= 12 && o.passed; ++g) {
    const Homology h = homology(build_model(g).lifted_surface);
    const std::string at = " at g=" + std::to_string(g);
    o.require(sz(h.rank) == 8 * g - 6, "rank " + std::to_string(h.rank) + at);
    o.require(h.torsion.empty(), "torsion" + at);
  }
  if (o.passed) o.detail = "rank 8g-6, torsion-free, g=3..12";
  return o;
}

Outcome psi_data() {
  Outcome o;
  for (int g = 3; g <= 12 && o.passed; ++g) {
    const HitchinModel m = build_model(g);
    const PsiData p = psi_map(m);
    const std::string at = " at g=" + std::to_string(g);
    const auto coef = [&](std::size_t f, const EdgeLabel& e) { return p.face_vectors[f][m.edge_position(e)]; };
    for (int j = 1; j <= 2 * g - 2; ++j) {
      o.require(coef(0, {EdgeFamily::L, j}) == -1, "Psi(inf-) l" + std::to_string(j) + at);
      o.require(coef(1, {EdgeFamily::U, j}) == -1, "Psi(inf+) u" + std::to_string(j) + at);
    }
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      if (m.edges[i].family == EdgeFamily::B) {
        o.require(p.face_vectors[2][i] == 1, "Psi(0-) " + m.edges[i].symbol() + at);
        o.require(p.face_vectors[3][i] == -1, "Psi(0+) " + m.edges[i].symbol() + at);
      } else {
        o.require(p.face_vectors[0][i] == (m.edges[i].family == EdgeFamily::L ? -1 : 0), "Psi(inf-) support" + at);
        o.require(p.face_vectors[1][i] == (m.edges[i].family == EdgeFamily::U ? -1 : 0), "Psi(inf+) support" + at);
      }
    }
    o.require(p.face_vectors == oracle::letter_formula_face_vectors(g), "letter formula" + at);
    o.require(p.face_vectors == closed_form_face_vectors(g), "closed form" + at);
    const IntegerMatrix f = IntegerMatrix::from_columns(p.face_vectors, m.edges.size());
    o.require(oracle::rational_rank(f) == 4, "rank Psi(F)" + at);
    const PrymLattice prym = prym_quotient(build_rep(m));
    o.require(sz(prym.quotient_rank) == 6 * g - 6, "Prym rank" + at);
  }
  if (o.passed) o.detail = "g=3..12";
  return o;
}

Outcome intersection_table() {
  Outcome o;
  std::size_t reference_entries = 0;
  for (int g = 3; g <= 12 && o.passed; ++g) {
    const HitchinModel m = build_model(g);
    const MonodromyRep rep = build_rep(m);
    const auto& P = rep.pairing.matrix;
    const std::string at = " at g=" + std::to_string(g);
    o.require(P.is_skew_symmetric(), "skew" + at);
    for (std::size_t i = 0; i < P.rows(); ++i) {
      o.require(P(i, i) == 0, "diagonal" + at);
      const auto [ti, hi] = m.base_surface.endpoints(m.base_surface.edge_index(m.edges[i].symbol()));
      for (std::size_t j = 0; j < P.cols(); ++j) {
        const auto [tj, hj] = m.base_surface.endpoints(m.base_surface.edge_index(m.edges[j].symbol()));
        const bool adjacent = ti == tj || ti == hj || hi == tj || hi == hj;
        o.require(adjacent || P(i, j) == 0, "non-adjacent " + m.edges[i].symbol() + "." + m.edges[j].symbol() + at);
      }
    }
    for (const auto& r : reference_pairings(g)) {
      ++reference_entries;
      o.require(rep.pairing.at(r.first, r.second) == r.value,
                r.item + " " + r.first.symbol() + "." + r.second.symbol() + at);
    }
    o.require(rep.pairing.at({EdgeFamily::U, 1}, {EdgeFamily::U, 2}) == -1, "u1.u2" + at);
    o.require(rep.pairing.at({EdgeFamily::B, 3}, {EdgeFamily::B, 4}) == 1, "b3.b4" + at);
    o.require(rep.pairing.at({EdgeFamily::U, 1}, {EdgeFamily::B, 2}) == 1, "u1.b2" + at);
    for (const auto& f : rep.face_vectors) o.require(is_zero(P * f), "radical" + at);
    o.require(sz(oracle::rational_rank(P)) == 6 * g - 6, "rank" + at);
  }
  if (o.passed) o.detail = std::to_string(reference_entries) + " reference entries, g=3..12";
  return o;
}

Outcome monodromy() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (int g = 3; g <= 8 && o.passed; ++g) {
    const MonodromyRep rep = build_rep(build_model(g));
    const std::string at = " at g=" + std::to_string(g);
    const CheckReport r = verify_relations(rep);
    for (const auto& c : r.failures()) o.require(false, c.name + at);
    for (const char* name : {"preserves_pairing", "determinant_unit", "fixes_face_lattice", "tau_central",
                             "tau_order_two", "pairwise_relations"}) {
      const Check* c = r.find(name);
      o.require(c != nullptr && c->passed, std::string(name) + at);
    }
    // Every pair is either commuting or braided.
    const std::size_t n = rep.generators.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Integer& p = rep.pairing.matrix(i, j);
        o.require(p == 0 || p == 1 || p == -1, "pairing outside {-1,0,1}" + at);
        ++pairs;
      }
    o.require(rep.tau == IntegerMatrix::identity(n).negated(), "tau = -Id" + at);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 60.0, "took " + std::to_string(seconds) + " s");
  if (o.passed) {
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << pairs << " pairs, g=3..8, " << seconds << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome cross_construction() {
  Outcome o;
  for (int g = 3; g <= 8 && o.passed; ++g) {
    const GluedSurface c = contract_scheme(build_triangulation(g));
    const GluedSurface b = build_model(g).base_surface;
    const std::string at = " at g=" + std::to_string(g);
    o.require(check_isomorphic(c, b).has_value(), "fat graphs differ" + at);
    if (g <= 5) o.require(oracle::plain_graphs_isomorphic(c, b), "plain graphs differ" + at);
  }
  if (o.passed) o.detail = "g=3..8";
  return o;
}

Outcome burau() {
  Outcome o;
  std::vector<QuotientSpec> specs{QuotientSpec::generic(), QuotientSpec::minus_one()};
  for (int k = 2; k <= 4; ++k) {
    specs.push_back(QuotientSpec::unit_root(k));
    specs.push_back(QuotientSpec::compact(k));
  }
  for (int n = 2; n <= 8; ++n) {
    const std::string at = " n=" + std::to_string(n);
    for (const auto& s : specs) o.require(check_braid_relations(n, s).passed(), "braid " + s.to_string() + at);
    o.require(check_permutation_specialization(n).passed(), "t=1" + at);
    if (n >= 3) o.require(zeta_basis_action(n).passed(), "zeta" + at);
  }
  for (int g = 3; g <= 12; ++g) {
    o.require(covering_genus(g, 4 * g - 4, 2) == genus(build_model(g).lifted_surface),
              "covering genus g=" + std::to_string(g));
  }
  if (o.passed) o.detail = "n=2..8 over " + std::to_string(specs.size()) + " rings; covering genus g=3..12";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"graph", "--genus", "5", "--format", "json"},
      {"graph", "--genus", "5", "--format", "dot"},
      {"graph", "--genus", "5", "--format", "csv"},
      {"words", "--genus", "6"},
      {"words", "--genus", "6", "--format", "csv"},
      {"intersections", "--genus", "5"},
      {"intersections", "--genus", "5", "--format", "csv"},
      {"monodromy", "--genus", "4"},
      {"monodromy", "--genus", "4", "--quotient"},
      {"monodromy", "--genus", "4", "--format", "csv"},
      {"burau", "--n", "6", "--spec", "compact:3", "--check"},
      {"burau", "--n", "6", "--spec", "generic", "--format", "csv"},
      {"verify", "--genus", "3..6", "--n", "6"},
  };
  for (const auto& c : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int a = cli::run(c, out1, err1);
    const int b = cli::run(c, out2, err2);
    o.require(a == 0 && b == 0, c[0] + " exit code");
    o.require(out1.str() == out2.str() && !out1.str().empty(), c[0] + " output differs");
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands run twice";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"counts", counts},
      {"chain_complex", chain_complex},
      {"homology", homology_rank},
      {"psi_data", psi_data},
      {"intersection_table", intersection_table},
      {"monodromy", monodromy},
      {"cross_construction", cross_construction},
      {"burau", burau},
      {"determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " (" << o.detail << ")\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
