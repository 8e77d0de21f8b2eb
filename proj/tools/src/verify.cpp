#include <future>
#include <set>
#include <string>
#include <vector>

#include "hitchin/burau.hpp"
#include "hitchin/error.hpp"
#include "hitchin/fat_graph.hpp"
#include "hitchin/hitchin_graph.hpp"
#include "hitchin/monodromy.hpp"
#include "hitchin/triangulation.hpp"
#include "hitchin_cli/cli.hpp"

namespace hitchin::cli {

namespace {

std::string str(long v) { return std::to_string(v); }

void expect(CheckReport& r, const std::string& name, long expected, long actual) {
  r.expect_equal(name, str(expected), str(actual));
}

void check_complex(CheckReport& r, const std::string& prefix, const GluedSurface& s, long v, long e, long f) {
  expect(r, prefix + "_vertices", v, static_cast<long>(s.vertex_count()));
  expect(r, prefix + "_edges", e, static_cast<long>(s.edge_count()));
  expect(r, prefix + "_faces", f, static_cast<long>(s.face_count()));
  r.add(prefix + "_boundary_squared", (s.boundary_1() * s.boundary_2()).is_zero());
}

void check_surfaces(CheckReport& r, const HitchinModel& m) {
  const long g = m.genus;
  check_complex(r, "base", m.base_surface, 4 * g - 4, 6 * g - 2, 4);
  check_complex(r, "lifted", m.lifted_surface, 4 * g - 4, 12 * g - 4, 8);
  expect(r, "euler_base", 2 - 2 * g, euler_characteristic(m.base_surface));
  expect(r, "euler_lifted", 8 - 8 * g, euler_characteristic(m.lifted_surface));
  expect(r, "genus_base", g, genus(m.base_surface));
  expect(r, "genus_lifted", 4 * g - 3, genus(m.lifted_surface));
  r.expect_equal("genus_lifted_covering_formula", to_decimal(covering_genus(g, 4 * g - 4, 2)),
                 str(genus(m.lifted_surface)));

  const IntegerMatrix tv = m.tau_vertex_matrix(), te = m.tau_edge_matrix(), tf = m.tau_face_matrix();
  const IntegerMatrix d1 = m.lifted_surface.boundary_1(), d2 = m.lifted_surface.boundary_2();
  r.add("tau_commutes_boundary_1", tv * d1 == d1 * te);
  r.add("tau_commutes_boundary_2", te * d2 == d2 * tf);
  r.add("tau_involution", (te * te).is_identity() && (tv * tv).is_identity() && (tf * tf).is_identity());

  const Homology hb = homology(m.base_surface);
  expect(r, "homology_base_rank", 2 * g, static_cast<long>(hb.rank));
  const Homology hl = homology(m.lifted_surface);
  expect(r, "homology_lifted_rank", 8 * g - 6, static_cast<long>(hl.rank));
  r.add("homology_lifted_torsion_free", hl.torsion.empty());
}

void check_pairing(CheckReport& r, const HitchinModel& m, const MonodromyRep& rep) {
  const long g = m.genus;
  const auto& P = rep.pairing.matrix;
  r.add("pairing_skew", P.is_skew_symmetric());
  expect(r, "pairing_rank", 6 * g - 6, static_cast<long>(rank(P)));

  std::size_t bad = 0;
  const auto& labels = rep.pairing.labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto [ti, hi] = m.base_surface.endpoints(m.base_surface.edge_index(labels[i].symbol()));
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto [tj, hj] = m.base_surface.endpoints(m.base_surface.edge_index(labels[j].symbol()));
      const bool adjacent = ti == tj || ti == hj || hi == tj || hi == hj;
      if (!adjacent && P(i, j) != 0) ++bad;
    }
  }
  r.add("pairing_vanishes_off_adjacent", bad == 0, str(static_cast<long>(bad)) + " nonzero non-adjacent entries");

  std::size_t mismatched = 0, total = 0;
  std::string first_mismatch;
  for (const auto& ref : reference_pairings(m.genus)) {
    ++total;
    if (rep.pairing.at(ref.first, ref.second) != ref.value) {
      if (mismatched++ == 0) first_mismatch = ref.first.symbol() + "." + ref.second.symbol();
    }
  }
  r.add("pairing_reference_table", mismatched == 0,
        str(static_cast<long>(total - mismatched)) + "/" + str(static_cast<long>(total)) + " entries" +
            (first_mismatch.empty() ? "" : ", first mismatch " + first_mismatch));

  bool radical = true;
  for (const auto& f : rep.face_vectors) radical = radical && is_zero(P * f);
  r.add("face_vectors_in_radical", radical);
}

void check_psi(CheckReport& r, const HitchinModel& m, const MonodromyRep& rep) {
  const auto closed = closed_form_face_vectors(m.genus);
  for (std::size_t f = 0; f < closed.size(); ++f) {
    r.add("psi_" + base_face_names()[f], closed[f] == rep.face_vectors[f]);
  }
}

void check_prym(CheckReport& r, const MonodromyRep& rep) {
  const long g = rep.genus;
  const PrymLattice prym = prym_quotient(rep);
  expect(r, "face_lattice_rank", 4, static_cast<long>(prym.face_sublattice.rank()));
  expect(r, "prym_rank", 6 * g - 6, static_cast<long>(prym.quotient_rank));
  r.add("prym_reduced_tau", prym.reduced_tau == IntegerMatrix::identity(prym.quotient_rank).negated());
  const auto& Q = prym.reduced_pairing;
  r.add("prym_pairing_nondegenerate", Q.is_skew_symmetric() && determinant(Q) != 0);
  bool preserved = true, unimodular = true;
  for (const auto& s : prym.reduced_generators) {
    preserved = preserved && s.transpose() * Q * s == Q;
    const Integer d = determinant(s);
    unimodular = unimodular && (d == 1 || d == -1);
  }
  r.add("prym_generators_preserve_pairing", preserved);
  r.add("prym_generators_unimodular", unimodular);
}

}  // namespace

CheckReport verify_genus(int genus) {
  CheckReport r;
  try {
    const HitchinModel m = build_model(genus);
    check_surfaces(r, m);
    const MonodromyRep rep = build_rep(m);
    check_psi(r, m, rep);
    check_pairing(r, m, rep);
    check_prym(r, rep);
    r.append(verify_relations(rep));
    r.add("triangulation_isomorphic", check_isomorphic(contract_scheme(build_triangulation(genus)), m.base_surface)
                                          .has_value());
  } catch (const Error& e) {
    r.add("construction", false, e.what());
  }
  return r;
}

CheckReport verify_burau(int max_strands) {
  CheckReport r;
  std::vector<QuotientSpec> specs{QuotientSpec::generic(), QuotientSpec::minus_one()};
  for (int k : {2, 3}) {
    specs.push_back(QuotientSpec::unit_root(k));
    specs.push_back(QuotientSpec::compact(k));
  }
  for (int n = 2; n <= max_strands; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    for (const auto& spec : specs) {
      const CheckReport braid = check_braid_relations(n, spec);
      r.add("braid_relations " + tag + " " + spec.to_string(), braid.passed(),
            std::to_string(braid.checks().size()) + " relations");
    }
    r.add("permutation_at_one " + tag, check_permutation_specialization(n).passed());
    if (n >= 3) r.add("zeta_transvection " + tag, zeta_basis_action(n).passed());
    r.add("unit_determinant " + tag, [&] {
      for (int j = 1; j < n; ++j) {
        if (determinant(burau_generator(n, j)) != -LaurentPoly::t()) return false;
      }
      return true;
    }());
  }
  return r;
}

nlohmann::json verify_report(const GenusRange& range, int max_strands) {
  std::vector<std::future<CheckReport>> jobs;
  for (int g = range.first; g <= range.last; ++g) jobs.push_back(std::async(std::launch::async, verify_genus, g));
  const CheckReport burau = verify_burau(max_strands);

  bool passed = burau.passed();
  nlohmann::json genera = nlohmann::json::array();
  for (int g = range.first; g <= range.last; ++g) {
    const CheckReport report = jobs[static_cast<std::size_t>(g - range.first)].get();
    passed = passed && report.passed();
    nlohmann::json entry = report.to_json();
    entry["genus"] = g;
    genera.push_back(std::move(entry));
  }
  nlohmann::json b = burau.to_json();
  b["max_strands"] = max_strands;
  return {{"genera", std::move(genera)}, {"burau", std::move(b)}, {"passed", passed}};
}

}  // namespace hitchin::cli
