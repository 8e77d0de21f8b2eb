#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hitchin/hitchin_graph.hpp"
#include "hitchin/integer_matrix.hpp"
#include "hitchin/lattice.hpp"
#include "hitchin/report.hpp"

namespace hitchin {

/// Intersection numbers psi(e) . psi(e') on the spectral cover, indexed by
/// the Z E basis of the model, normalized so that u_1 . u_2 = -1.
struct PairingMatrix {
  std::vector<EdgeLabel> labels;
  IntegerMatrix matrix;

  std::size_t position(const EdgeLabel& label) const;
  const Integer& at(const EdgeLabel& a, const EdgeLabel& b) const { return matrix(position(a), position(b)); }
};

PairingMatrix pairing_matrix(const HitchinModel& model, const PsiData& psi);

/// e -> e - (e . alpha) alpha, as a matrix acting on column vectors.
IntegerMatrix transvection(std::size_t alpha, const IntegerMatrix& pairing);
IntegerMatrix transvection(const EdgeLabel& alpha, const PairingMatrix& pairing);

/// Transvection generators sigma_e for every edge plus the sheet swap
/// tau = -Id on Z E. Composition is right to left: (A B) v = A (B v).
struct MonodromyRep {
  int genus = 0;
  PairingMatrix pairing;
  std::vector<IntegerMatrix> generators;  // indexed like pairing.labels
  IntegerMatrix tau;
  std::vector<IntegerVector> face_vectors;  // Psi(f), f in base_face_names()

  const IntegerMatrix& generator(const EdgeLabel& label) const { return generators.at(pairing.position(label)); }
};

/// Throws InvariantViolation naming the failing generator or relation.
MonodromyRep build_rep(const HitchinModel& model);

struct PrymLattice {
  Lattice face_sublattice;  // saturation of span{Psi(f)}
  QuotientProjection projection;
  std::size_t quotient_rank = 0;
  std::vector<IntegerMatrix> reduced_generators;
  IntegerMatrix reduced_pairing;
  IntegerMatrix reduced_tau;
};

/// Throws InvariantViolation unless rank span{Psi(f)} == 4 and the reduced
/// pairing is nondegenerate.
PrymLattice prym_quotient(const MonodromyRep& rep);

/// For every pair: commutation when the pairing is 0 and the braid relation
/// when it is +-1. For every generator: sigma^T P sigma == P, det == +-1,
/// sigma fixes each Psi(f), and tau commutes with sigma.
CheckReport verify_relations(const MonodromyRep& rep);

/// Intersection numbers stated in closed form for the dual graph's cycles,
/// restricted to entries whose indices exist in genus g. `item` names the
/// family (e.g. "u_j.u_j+1").
struct ReferencePairing {
  std::string item;
  EdgeLabel first;
  EdgeLabel second;
  int value;
};
std::vector<ReferencePairing> reference_pairings(int genus);

}  // namespace hitchin
