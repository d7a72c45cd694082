#include "fqg/functional.hpp"

#include <limits>

#include <Eigen/Eigenvalues>

#include "fqg/grouplike_solver.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

Functional::Functional(QGPtr owner, Vec values)
    : owner_(std::move(owner)), values_(std::move(values)) {
  if (!owner_) throw Error("Functional: null owner");
  if (values_.size() != owner_->n()) throw Error("Functional: value vector length mismatch");
}

Functional Functional::operator+(const Functional& rhs) const {
  if (owner_.get() != rhs.owner_.get()) throw Error("Functional: owner mismatch");
  return Functional(owner_, values_ + rhs.values_);
}

Functional Functional::operator-(const Functional& rhs) const {
  if (owner_.get() != rhs.owner_.get()) throw Error("Functional: owner mismatch");
  return Functional(owner_, values_ - rhs.values_);
}

Functional Functional::operator*(Cplx scalar) const {
  return Functional(owner_, scalar * values_);
}

Functional haar_state(const QGPtr& qg) { return Functional(qg, qg->haar_values()); }

Functional counit_functional(const QGPtr& qg) { return Functional(qg, qg->counit_values()); }

Functional convolve(const Functional& psi1, const Functional& psi2) {
  if (psi1.owner().get() != psi2.owner().get()) throw Error("convolve: owner mismatch");
  const auto& qg = psi1.owner();
  const int n = qg->n();
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    Eigen::Map<const Mat> di(qg->delta().col(i).data(), n, n);  // di(k, j) = coeff of e_j (x) e_k
    out(i) = (psi1.values().transpose() * di.transpose() * psi2.values())(0);
  }
  return Functional(qg, out);
}

bool is_state(const Functional& psi) {
  const auto& qg = psi.owner();
  const int n = qg->n();
  const double tol = 100 * qg->tol();
  if (std::abs(psi(qg->one()) - 1.0) > tol) return false;
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec ei_star = qg->algebra().adjoint(Vec::Unit(n, i));
    for (int j = 0; j < n; ++j)
      m(i, j) = psi(qg->algebra().multiply(ei_star, Vec::Unit(n, j)));
  }
  if ((m - m.adjoint()).norm() > tol * std::max(1.0, m.norm())) return false;
  Eigen::SelfAdjointEigenSolver<Mat> es(((m + m.adjoint()) / 2.0).eval());
  return es.eigenvalues().minCoeff() >= -tol * std::max(1.0, m.norm());
}

bool is_idempotent_state(const Functional& psi) {
  if (!is_state(psi)) return false;
  return convolve(psi, psi).norm_diff(psi) <= 10 * psi.owner()->tol();
}

Functional functional_of_element(const Element& x) {
  const auto& qg = x.owner();
  const int n = qg->n();
  Vec vals(n);
  for (int i = 0; i < n; ++i)
    vals(i) = qg->haar(qg->algebra().multiply(x.coords(), Vec::Unit(n, i)));
  return Functional(qg, vals);
}

Element density_element(const Functional& psi) {
  const auto& qg = psi.owner();
  const int n = qg->n();
  // h(rho e_i) = sum_j rho_j h(e_j e_i); invertible since h is faithful.
  Mat hm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hm(i, j) = qg->haar(qg->algebra().lmult[j].col(i));
  const Vec rho = hm.colPivHouseholderQr().solve(psi.values());
  Element out = qg->element(rho);
  if (!qg->is_positive(out))
    throw Error("density_element: density is not positive (functional is not a state)");
  return out;
}

Functional vector_state(const Element& u, const Element& v) {
  const auto& qg = u.owner();
  const int n = qg->n();
  const Vec u_star = qg->algebra().adjoint(u.coords());
  Vec vals(n);
  for (int i = 0; i < n; ++i)
    vals(i) = qg->haar(qg->algebra().multiply(
        u_star, qg->algebra().multiply(Vec::Unit(n, i), v.coords())));
  return Functional(qg, vals);
}

Functional shifted(const Functional& g, const Element& b) {
  const auto& qg = g.owner();
  const int n = qg->n();
  Vec vals(n);
  for (int i = 0; i < n; ++i) vals(i) = g(qg->algebra().multiply(Vec::Unit(n, i), b.coords()));
  return Functional(qg, vals);
}

double lemma_gb_check(const Functional& f, const Functional& g, const Element& b) {
  const double pre_tol = 100 * f.owner()->tol();
  if (convolve(g, f).norm_diff(f) > pre_tol || convolve(f, g).norm_diff(f) > pre_tol)
    throw Error("lemma_gb_check: precondition g*f = f*g = f fails");
  const Functional lhs = convolve(f, shifted(g, b));
  return lhs.norm_diff(f * g(b));
}

bool order_le(const Functional& phi1, const Functional& phi2) {
  if (!is_idempotent_state(phi1) || !is_idempotent_state(phi2))
    throw Error("order_le: inputs must be idempotent states");
  const double tol = 100 * phi1.owner()->tol();
  const bool forward = convolve(phi1, phi2).norm_diff(phi2) <= tol;
  const bool swapped = convolve(phi2, phi1).norm_diff(phi2) <= tol;
  if (forward != swapped)
    throw Error("order_le: the two product orders disagree (antipode invariance broken)");
  return forward;
}

double antipode_invariance_residual(const Functional& phi) {
  const auto& qg = phi.owner();
  return (qg->antipode().transpose() * phi.values() - phi.values()).norm();
}

IdempotentState presubgroup_of(const Functional& phi) {
  const auto& qg = phi.owner();
  if (!is_idempotent_state(phi)) throw Error("presubgroup_of: not an idempotent state");
  const Element rho = density_element(phi);
  const Cplx eps_rho = qg->counit(rho);
  if (std::abs(eps_rho.imag()) > 100 * qg->tol() || eps_rho.real() <= 100 * qg->tol())
    throw Error("presubgroup_of: eps(rho) is not strictly positive");
  const Element f_scaled = rho / std::sqrt(eps_rho.real());
  const Element f_sqrt = qg->sqrt_positive(rho);
  if (f_scaled.norm_diff(f_sqrt) > 1e4 * qg->tol())
    throw Error("presubgroup_of: sqrt route and rescaling route disagree");
  const Cplx eps_f = qg->counit(f_scaled);
  return IdempotentState{phi, rho, f_scaled, f_scaled / eps_f};
}

std::optional<Functional> cesaro_idempotent(const Functional& psi, int max_iter, double tol) {
  const auto& qg = psi.owner();
  if (!is_state(psi)) throw Error("cesaro_idempotent: input is not a state");

  // The Cesaro averages always converge to an idempotent state, but only at
  // O(1/N) when the powers oscillate; the raw powers converge geometrically
  // when they converge at all. Track both, early-exit on either, and hand a
  // loosely converged candidate to the polish step otherwise.
  Functional power = psi;
  Vec sum = psi.values();
  Functional candidate = psi;
  double best = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= max_iter; ++iter) {
    const Functional avg(qg, Vec(sum / double(iter)));
    const double avg_res = convolve(avg, avg).norm_diff(avg);
    if (avg_res < best) {
      best = avg_res;
      candidate = avg;
    }
    const double pow_res = convolve(power, power).norm_diff(power);
    if (pow_res < best) {
      best = pow_res;
      candidate = power;
    }
    if (best <= tol) break;
    power = convolve(power, psi);
    sum += power.values();
  }
  if (best > 1e-2) return std::nullopt;  // nowhere near an idempotent

  // Polish through the group-like projection system, then certify.
  try {
    const Element rho = density_element(candidate);
    const Cplx eps_rho = qg->counit(rho);
    if (eps_rho.real() <= tol) return std::nullopt;
    auto p = refine_grouplike(*qg, rho.coords() / eps_rho);
    if (!p) return std::nullopt;
    const Cplx hp = qg->haar(*p);
    if (hp.real() <= qg->tol()) return std::nullopt;
    const Element f = qg->element(*p / std::sqrt(hp.real()));
    const Functional phi = vector_state(f, f);
    if (!is_idempotent_state(phi)) return std::nullopt;
    return phi;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace fqg
