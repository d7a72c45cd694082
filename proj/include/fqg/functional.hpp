#pragma once

#include <optional>

#include "fqg/quantum_group.hpp"

namespace fqg {

/// Linear functional on the algebra, stored by its values on the basis.
class Functional {
 public:
  Functional() = default;
  Functional(QGPtr owner, Vec values);

  const Vec& values() const { return values_; }
  const QGPtr& owner() const { return owner_; }

  Cplx operator()(const Element& a) const { return values_.transpose() * a.coords(); }
  Cplx operator()(const Vec& coords) const { return values_.transpose() * coords; }

  Functional operator+(const Functional& rhs) const;
  Functional operator-(const Functional& rhs) const;
  Functional operator*(Cplx scalar) const;
  double norm_diff(const Functional& rhs) const { return (values_ - rhs.values_).norm(); }

 private:
  QGPtr owner_;
  Vec values_;
};

Functional haar_state(const QGPtr& qg);
Functional counit_functional(const QGPtr& qg);

/// Convolution (psi1 (x) psi2) o Delta.
Functional convolve(const Functional& psi1, const Functional& psi2);

/// psi(1) = 1 and [psi(e_i^* e_j)] positive semidefinite.
bool is_state(const Functional& psi);

/// State with psi * psi = psi.
bool is_idempotent_state(const Functional& psi);

/// The unique element rho with psi(a) = h(rho a) for all a.
Element density_element(const Functional& psi);

/// Functional represented by an element: a -> h(x a).
Functional functional_of_element(const Element& x);

/// omega_{u,v}(a) = <u, a v> = h(u^* a v).
Functional vector_state(const Element& u, const Element& v);

/// g_b(a) = g(ab).
Functional shifted(const Functional& g, const Element& b);

/// Residual of f * g_b = g(b) f; requires g * f = f * g = f.
double lemma_gb_check(const Functional& f, const Functional& g, const Element& b);

/// phi1 < phi2 iff phi1 * phi2 = phi2. Both product orders must agree;
/// a mismatch (which would contradict antipode invariance) throws.
bool order_le(const Functional& phi1, const Functional& phi2);

/// || phi o S - phi ||.
double antipode_invariance_residual(const Functional& phi);

/// Certified idempotent state with its density element rho, pre-subgroup
/// vector f = rho / sqrt(eps(rho)) and group-like projection p = f / eps(f).
struct IdempotentState {
  Functional phi;
  Element rho;
  Element f;
  Element p;
};

/// Full record for an idempotent state; both routes to f (spectral square
/// root of rho and the rescaling rho / sqrt(eps(rho))) must agree.
IdempotentState presubgroup_of(const Functional& phi);

/// Cesaro averages of convolution powers, with a final refinement pass.
/// Returns nullopt if no idempotent is reached within max_iter.
std::optional<Functional> cesaro_idempotent(const Functional& psi, int max_iter = 10000,
                                            double tol = 1e-6);

}  // namespace fqg
