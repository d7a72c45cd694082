#pragma once

#include <optional>
#include <vector>

#include "fqg/presubgroup.hpp"

namespace fqg {

/// Right coidalgebra: unital *-subalgebra C with Delta(C) in A (x) C,
/// carried as an h-orthonormal basis together with the h-preserving
/// conditional expectation onto it.
struct Coidalgebra {
  QGPtr owner;
  Mat basis;        // n x d, orthonormal w.r.t. the Gram inner product
  Mat expectation;  // E_C, n x n

  int dim() const { return (int)basis.cols(); }
};

struct HaarEquivalenceReport {
  bool is_haar = false;
  bool f_central = false;
  bool quotient_type = false;
  std::optional<QuantumSubgroup> witness_subgroup;

  bool consistent() const { return is_haar == f_central && f_central == quotient_type; }
};

/// T_phi = (id (x) phi) o Delta as a matrix, with its conditional
/// expectation properties asserted (idempotent, unital, h-preserving,
/// positivity on sampled positives, right-invariant).
Mat expectation_of_state(const IdempotentState& phi);

/// h-orthonormal basis of the column space of T, certified as a right
/// coidalgebra.
Coidalgebra image_coidalgebra(const QGPtr& qg, const Mat& t);

/// The unique h-preserving conditional expectation onto a given unital
/// *-subalgebra with Delta(C) in A (x) C (orthogonal projection in the
/// Gram inner product; h is a trace here, so this is legitimate).
Coidalgebra expected_projection(const QGPtr& qg, const Mat& subalgebra_columns);

/// phi = eps o E_C; certified idempotent, with the roundtrip back to C
/// checked.
Functional state_of_coidalgebra(const Coidalgebra& c);

enum class QuotientSide {
  mirrored,  // (id (x) pi) Delta(a) = a (x) 1_B  -- right coidalgebras
  literal,   // (pi (x) id) Delta(a) = 1_B (x) a  -- the other-sided variant
};

/// Fixed subspace of the quotient condition, before any certification.
Mat quotient_fixed_subspace(const QuantumSubgroup& b, QuotientSide side);

/// A//B as a certified right coidalgebra (mirrored side), asserted equal
/// to the image coidalgebra of the Haar idempotent h_B o pi.
Coidalgebra quotient_coidalgebra(const QuantumSubgroup& b);

/// Evaluates the three equivalent characterisations of Haar idempotents
/// and asserts they agree. known_subgroups should hold the quantum
/// subgroups of all discovered central pre-subgroups.
HaarEquivalenceReport haar_equivalence_report(
    const IdempotentState& phi, const std::vector<QuantumSubgroup>& known_subgroups);

/// Max residual of E(E(a)E(b)) = E(a)E(b) over sampled pairs.
double multiplicativity_on_image_residual(const IdempotentState& phi, int samples = 100,
                                          unsigned long long rng_seed = 12345);

}  // namespace fqg
