#include "hitchin/monodromy.hpp"

#include <algorithm>
#include <string>

#include "hitchin/error.hpp"

namespace hitchin {

std::size_t PairingMatrix::position(const EdgeLabel& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::IndexOutOfRange, "no edge " + label.symbol() + " in pairing");
  return static_cast<std::size_t>(it - labels.begin());
}

PairingMatrix pairing_matrix(const HitchinModel& model, const PsiData& psi) {
  const std::size_t n = model.edges.size();
  PairingMatrix result{model.edges, IntegerMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer x = intersection_number(psi.psi[i], psi.psi[j], model.lifted_surface);
      result.matrix(i, j) = x;
      result.matrix(j, i) = -x;
    }
  }
  const Integer& anchor = result.at({EdgeFamily::U, 1}, {EdgeFamily::U, 2});
  if (anchor == 1) {
    result.matrix = result.matrix.negated();
  } else if (anchor != -1) {
    throw Error(ErrorCode::InvariantViolation, "u1.u2 = " + to_decimal(anchor) + ", expected +-1");
  }
  return result;
}

IntegerMatrix transvection(std::size_t alpha, const IntegerMatrix& pairing) {
  const std::size_t n = pairing.rows();
  if (alpha >= n) throw Error(ErrorCode::IndexOutOfRange, "transvection index out of range");
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(alpha, j) -= pairing(j, alpha);
  return m;
}

IntegerMatrix transvection(const EdgeLabel& alpha, const PairingMatrix& pairing) {
  return transvection(pairing.position(alpha), pairing.matrix);
}

MonodromyRep build_rep(const HitchinModel& model) {
  const PsiData psi = psi_map(model);
  MonodromyRep rep;
  rep.genus = model.genus;
  rep.pairing = pairing_matrix(model, psi);
  rep.face_vectors = psi.face_vectors;
  const std::size_t n = model.edges.size();
  rep.tau = IntegerMatrix::identity(n).negated();
  if (!(rep.tau * rep.tau).is_identity()) throw Error(ErrorCode::InvariantViolation, "tau^2 != Id");
  rep.generators.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntegerMatrix s = transvection(i, rep.pairing.matrix);
    const Integer det = determinant(s);
    const std::string name = "sigma_" + model.edges[i].symbol();
    if (det != 1 && det != -1) throw Error(ErrorCode::InvariantViolation, name + " has determinant " + to_decimal(det));
    if (rep.tau * s != s * rep.tau) throw Error(ErrorCode::InvariantViolation, name + " does not commute with tau");
    rep.generators.push_back(std::move(s));
  }
  return rep;
}

PrymLattice prym_quotient(const MonodromyRep& rep) {
  const std::size_t n = rep.pairing.labels.size();
  const Lattice span = Lattice::spanned_by(n, rep.face_vectors);
  if (span.rank() != 4) {
    throw Error(ErrorCode::InvariantViolation, "rank Psi(F) = " + std::to_string(span.rank()) + ", expected 4");
  }
  PrymLattice prym{saturation(span), {}, 0, {}, {}, {}};
  prym.projection = quotient_projection(prym.face_sublattice);
  prym.quotient_rank = prym.projection.rank;
  prym.reduced_generators.reserve(n);
  for (const auto& s : rep.generators) prym.reduced_generators.push_back(prym.projection.reduce(s));
  prym.reduced_tau = prym.projection.reduce(rep.tau);
  const IntegerMatrix& sec = prym.projection.section;
  prym.reduced_pairing = sec.transpose() * rep.pairing.matrix * sec;
  if (determinant(prym.reduced_pairing) == 0) {
    throw Error(ErrorCode::InvariantViolation, "reduced pairing is degenerate");
  }
  return prym;
}

CheckReport verify_relations(const MonodromyRep& rep) {
  CheckReport report;
  const auto& P = rep.pairing.matrix;
  const auto& labels = rep.pairing.labels;
  const std::size_t n = labels.size();

  std::size_t symplectic = 0, unimodular = 0, fixes_faces = 0, central_tau = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = rep.generators[i];
    const std::string name = "sigma_" + labels[i].symbol();
    if (s.transpose() * P * s == P) {
      ++symplectic;
    } else {
      report.add("preserves_pairing " + name, false);
    }
    const Integer det = determinant(s);
    if (det == 1 || det == -1) {
      ++unimodular;
    } else {
      report.add("determinant " + name, false, to_decimal(det));
    }
    bool fixed = true;
    for (std::size_t f = 0; f < rep.face_vectors.size(); ++f) {
      if (s * rep.face_vectors[f] != rep.face_vectors[f]) {
        fixed = false;
        report.add("fixes_face " + name + " " + base_face_names()[f], false);
      }
    }
    if (fixed) ++fixes_faces;
    if (rep.tau * s == s * rep.tau) {
      ++central_tau;
    } else {
      report.add("tau_central " + name, false);
    }
  }
  const auto count = [](std::size_t k) { return std::to_string(k) + " generators"; };
  report.add("preserves_pairing", symplectic == n, count(symplectic));
  report.add("determinant_unit", unimodular == n, count(unimodular));
  report.add("fixes_face_lattice", fixes_faces == n, count(fixes_faces));
  report.add("tau_central", central_tau == n, count(central_tau));
  report.add("tau_order_two", (rep.tau * rep.tau).is_identity() && !rep.tau.is_identity());

  std::size_t commuting = 0, braided = 0, other = 0, failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = rep.generators[i];
      const auto& b = rep.generators[j];
      const std::string pair = labels[i].symbol() + "," + labels[j].symbol();
      if (P(i, j) == 0) {
        if (a * b == b * a) {
          ++commuting;
        } else {
          ++failed;
          report.add("commutation " + pair, false);
        }
      } else if (P(i, j) == 1 || P(i, j) == -1) {
        if (a * b * a == b * a * b) {
          ++braided;
        } else {
          ++failed;
          report.add("braid " + pair, false);
        }
      } else {
        ++other;
      }
    }
  }
  report.add("pairwise_relations", failed == 0,
             std::to_string(commuting) + " commuting, " + std::to_string(braided) + " braided, " +
                 std::to_string(other) + " unconstrained, " + std::to_string(failed) + " failed");
  return report;
}

std::vector<ReferencePairing> reference_pairings(int genus) {
  const int top = 2 * genus - 2;
  const int bottom = 2 * genus + 2;
  std::vector<ReferencePairing> out;
  const auto u = [](int j) { return EdgeLabel{EdgeFamily::U, j}; };
  const auto l = [](int j) { return EdgeLabel{EdgeFamily::L, j}; };
  const auto b = [](int j) { return EdgeLabel{EdgeFamily::B, j}; };
  const auto in_range = [&](const EdgeLabel& e) {
    return e.index >= 1 && e.index <= (e.family == EdgeFamily::B ? bottom : top);
  };
  const auto push = [&](const char* item, EdgeLabel x, EdgeLabel y, int value) {
    if (in_range(x) && in_range(y)) out.push_back({item, x, y, value});
  };

  for (int j = 1; j < top; ++j) push("u_j.u_j+1", u(j), u(j + 1), -1);
  for (int j = 1; j < top; ++j) push("l_j.l_j+1", l(j), l(j + 1), -1);
  for (int j = 1; j <= 7 && j < bottom; ++j) push("b_j.b_j+1", b(j), b(j + 1), 1);
  for (int j : {1, 2, 3, 4}) {
    const int s = (j % 2 == 1) ? 1 : -1;
    push("u_j.b_2j", u(j), b(2 * j), s);
    push("u_j.b_2j", u(j), b(2 * j + 1), -s);
    push("u_j.b_2j", u(j + 1), b(2 * j), -s);
    push("u_j.b_2j", u(j + 1), b(2 * j + 1), s);
    push("l_j.b_2j-1", l(j - 1), b(2 * j - 1), -s);
    push("l_j.b_2j-1", l(j - 1), b(2 * j), s);
    push("l_j.b_2j-1", l(j), b(2 * j - 1), s);
    push("l_j.b_2j-1", l(j), b(2 * j), -s);
  }
  return out;
}

}  // namespace hitchin
