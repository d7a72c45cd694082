#pragma once

#include <utility>
#include <vector>

#include "fqg/coidalgebra.hpp"

namespace fqg {

/// Partial order on a set of certified idempotent states, with the Hasse
/// diagram, the associated coidalgebras and (when the set is closed)
/// poset-theoretic meet/join tables.
struct IdempotentLattice {
  QGPtr owner;
  std::vector<IdempotentState> elements;
  std::vector<std::vector<bool>> leq;          // leq[i][j]: phi_i < phi_j
  std::vector<std::pair<int, int>> hasse_edges;  // (lower, upper) covering pairs
  std::vector<Coidalgebra> coidalgebras;
  std::vector<std::vector<int>> meet_table;  // -1 where no meet exists in the set
  std::vector<std::vector<int>> join_table;
  int bottom = -1;  // always eps
  int top = -1;     // always h
};

/// Builds the order matrix, verifies the poset axioms, and runs the
/// transitive reduction. bottom must be eps and top must be h.
IdempotentLattice build_lattice(const QGPtr& qg, std::vector<IdempotentState> states);

/// Meet and join computed on the coidalgebra side (join of states =
/// intersection of coidalgebras, meet = generated *-algebra), certified
/// and cross-checked against the poset tables where those are defined.
IdempotentState meet(const IdempotentLattice& lat, int i, int j);
IdempotentState join(const IdempotentLattice& lat, int i, int j);

/// DOT digraph (Hasse edges bottom-to-top) or JSON. haar_flags, when
/// provided, annotate each element. Throws on unknown format.
std::string export_lattice(const IdempotentLattice& lat, const std::string& format,
                           bool exhaustive, const std::vector<bool>& haar_flags = {});

}  // namespace fqg
