#pragma once

#include <optional>

#include "fqg/quantum_group.hpp"

namespace fqg {

/// Stacked residual of the group-like projection system
/// [ p^2 - p ; p - p^* ; Delta(p)(1 (x) p) - p (x) p ].
Vec grouplike_residual(const QuantumGroup& qg, const Vec& p);

/// Gauss-Newton refinement of the (overdetermined, quadratic) group-like
/// system from a starting point, on the real-ified coordinates with the
/// analytic Jacobian. Damps the step by 0.5 while the residual increases.
/// Returns nullopt if the residual does not drop below `target`.
std::optional<Vec> refine_grouplike(const QuantumGroup& qg, Vec p0, int max_iter = 200,
                                    double target = 1e-11);

}  // namespace fqg
