#pragma once

#include <vector>

#include "fqg/functional.hpp"

namespace fqg {

struct PreSubgroup {
  Element f;
};

struct GroupLikeProjection {
  Element p;
};

/// Quantum subgroup (B, Delta_B) of the source with surjection pi. When
/// built from a central pre-subgroup f, B = A f~ with f~ = f/eps(f).
struct QuantumSubgroup {
  QGPtr target;               // B, fully validated
  Mat pi;                     // dim(B) x n matrix of the surjection A -> B
  Element source_f;           // the central pre-subgroup
  Functional haar_idempotent; // h_B o pi, as a functional on A
};

/// Unit vector with eps(f) > 0 and V(f (x) f) = f (x) f.
bool is_presubgroup(const Element& f);

/// Nonzero projection p with Delta(p)(1 (x) p) = p (x) p.
bool is_grouplike_projection(const Element& p);

/// f -> f/eps(f), the rescaling bijection.
GroupLikeProjection to_grouplike(const PreSubgroup& f);
/// p -> p/sqrt(h(p)), its inverse.
PreSubgroup to_presubgroup(const GroupLikeProjection& p);

/// g < f iff V(f (x) g) = f (x) g.
bool bbs_order(const PreSubgroup& g, const PreSubgroup& f);

/// omega_{f,f}; certified idempotent with the bijection roundtrip checked.
Functional state_of_presubgroup(const PreSubgroup& f);

/// A pre-subgroup is a subgroup when it is central.
bool is_subgroup(const PreSubgroup& f);

/// Quantum subgroup generated by a central pre-subgroup: B = A f~, with
/// Delta_B(a) = Delta(a)(f~ (x) f~) and pi(a) = a f~. B is validated as a
/// finite quantum group and pi as a morphism.
QuantumSubgroup quantum_subgroup_from_central(const PreSubgroup& f);

struct SearchResult {
  std::vector<IdempotentState> states;
  bool exhaustive = false;  // heuristic search; never claimed exhaustive
};

/// Heuristic search for all idempotent states: always includes eps and h,
/// adds Cesaro limits of basis-point and random vector states, Gauss-Newton
/// solutions of the group-like system from random starts, and a pairwise
/// mixture closure pass. Results are certified, deduplicated on the
/// group-like projection at 1e-6 and sorted by the state order.
SearchResult search_idempotents(const QGPtr& qg, int seeds = 40,
                                unsigned long long rng_seed = 1);

}  // namespace fqg
