#include "fqg/coidalgebra.hpp"

#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "fqg/linalg.hpp"

namespace fqg {

namespace {

Vec random_positive(const QGPtr& qg, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec b(qg->n());
  for (int i = 0; i < qg->n(); ++i) b(i) = Cplx(gauss(rng), gauss(rng));
  return qg->algebra().multiply(qg->algebra().adjoint(b), b);
}

Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = Cplx(gauss(rng), gauss(rng));
  return v;
}

/// Full certification of a candidate coidalgebra basis; returns the record.
Coidalgebra certify(const QGPtr& qg, Mat basis, const char* who) {
  const Algebra& alg = qg->algebra();
  const int n = alg.n;
  const int d = (int)basis.cols();
  const double tol = 100 * qg->tol();
  const Mat proj = lin::span_projector(basis, qg->gram());

  if ((proj * alg.unit - alg.unit).norm() > tol)
    throw Error(std::string(who) + ": unit not in C");
  for (int i = 0; i < d; ++i) {
    const Vec st = alg.adjoint(basis.col(i));
    if ((proj * st - st).norm() > tol)
      throw Error(std::string(who) + ": C not closed under *");
    for (int j = 0; j < d; ++j) {
      const Vec pr = alg.multiply(basis.col(i), basis.col(j));
      if ((proj * pr - pr).norm() > tol)
        throw Error(std::string(who) + ": C not closed under multiplication");
    }
  }
  // Delta(C) subset A (x) C: (id (x) (1 - E)) kills Delta(c).
  const Mat kill = Eigen::kroneckerProduct(Mat(Mat::Identity(n, n)),
                                           Mat(Mat::Identity(n, n) - proj));
  for (int i = 0; i < d; ++i) {
    const Vec t = qg->delta() * basis.col(i);
    if ((kill * t).norm() > tol)
      throw Error(std::string(who) + ": Delta(C) not contained in A (x) C");
  }

  // Conditional-expectation properties of the orthogonal projection.
  if ((proj * proj - proj).norm() > tol) throw Error(std::string(who) + ": E not idempotent");
  if ((qg->haar_values().transpose() * proj - qg->haar_values().transpose()).norm() > tol)
    throw Error(std::string(who) + ": E not h-preserving");
  std::mt19937_64 rng(99);
  for (int s = 0; s < 10; ++s) {
    const Vec a = random_vec(n, rng);
    const int ci = (int)(rng() % d), cj = (int)(rng() % d);
    const Vec lhs = proj * alg.multiply(basis.col(ci), alg.multiply(a, basis.col(cj)));
    const Vec rhs = alg.multiply(basis.col(ci), alg.multiply(Vec(proj * a), basis.col(cj)));
    if ((lhs - rhs).norm() > tol * std::max(1.0, a.norm()))
      throw Error(std::string(who) + ": E is not a C-bimodule map");
  }
  return Coidalgebra{qg, std::move(basis), proj};
}

}  // namespace

Mat expectation_of_state(const IdempotentState& phi) {
  const auto& qg = phi.phi.owner();
  const int n = qg->n();
  const double tol = 100 * qg->tol();
  Mat t(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::Map<const Mat> di(qg->delta().col(i).data(), n, n);
    t.col(i) = di.transpose() * phi.phi.values();
  }
  if ((t * t - t).norm() > tol) throw Error("expectation_of_state: T not idempotent");
  if ((t * qg->algebra().unit - qg->algebra().unit).norm() > tol)
    throw Error("expectation_of_state: T(1) != 1");
  if ((qg->haar_values().transpose() * t - qg->haar_values().transpose()).norm() > tol)
    throw Error("expectation_of_state: h o T != h");
  // Right invariance: Delta o T = (id (x) T) o Delta.
  const Mat lhs = qg->delta() * t;
  const Mat rhs = Eigen::kroneckerProduct(Mat(Mat::Identity(n, n)), t) * qg->delta();
  if ((lhs - rhs).norm() > tol) throw Error("expectation_of_state: T not right-invariant");
  std::mt19937_64 rng(7);
  for (int s = 0; s < 20; ++s) {
    const Vec a = random_positive(qg, rng);
    if (!qg->is_positive(qg->element(t * a)))
      throw Error("expectation_of_state: T does not preserve positivity");
  }
  return t;
}

Coidalgebra image_coidalgebra(const QGPtr& qg, const Mat& t) {
  const Mat basis = lin::gram_orthonormalize(t, qg->gram());
  return certify(qg, basis, "image_coidalgebra");
}

Coidalgebra expected_projection(const QGPtr& qg, const Mat& subalgebra_columns) {
  const Mat basis = lin::gram_orthonormalize(subalgebra_columns, qg->gram());
  return certify(qg, basis, "expected_projection");
}

Functional state_of_coidalgebra(const Coidalgebra& c) {
  const auto& qg = c.owner;
  const Functional phi(qg, Vec(c.expectation.transpose() * qg->counit_values()));
  if (!is_idempotent_state(phi))
    throw Error("state_of_coidalgebra: eps o E_C is not an idempotent state");
  const Coidalgebra back = image_coidalgebra(qg, expectation_of_state(presubgroup_of(phi)));
  if (lin::span_distance(back.basis, c.basis, qg->gram()) > 1e-6)
    throw Error("state_of_coidalgebra: roundtrip to the coidalgebra failed");
  return phi;
}

Mat quotient_fixed_subspace(const QuantumSubgroup& b, QuotientSide side) {
  const auto& qg = b.haar_idempotent.owner();
  const int n = qg->n();
  const int d = b.target->n();
  const Mat id_n = Mat::Identity(n, n);
  Mat cond(n * d, n);
  if (side == QuotientSide::mirrored) {
    // (id (x) pi) Delta(a) = a (x) 1_B
    cond = Eigen::kroneckerProduct(id_n, b.pi) * qg->delta();
    for (int i = 0; i < n; ++i)
      cond.col(i) -= Eigen::kroneckerProduct(Vec(Vec::Unit(n, i)), b.target->algebra().unit);
  } else {
    // (pi (x) id) Delta(a) = 1_B (x) a
    cond = Eigen::kroneckerProduct(b.pi, id_n) * qg->delta();
    for (int i = 0; i < n; ++i)
      cond.col(i) -= Eigen::kroneckerProduct(b.target->algebra().unit, Vec(Vec::Unit(n, i)));
  }
  return lin::gram_orthonormalize(lin::nullspace(cond, 1e-9), qg->gram());
}

Coidalgebra quotient_coidalgebra(const QuantumSubgroup& b) {
  const auto& qg = b.haar_idempotent.owner();
  Coidalgebra c = certify(qg, quotient_fixed_subspace(b, QuotientSide::mirrored),
                          "quotient_coidalgebra");
  // A//B must be the image coidalgebra of the Haar idempotent h_B o pi.
  const Coidalgebra via_state =
      image_coidalgebra(qg, expectation_of_state(presubgroup_of(b.haar_idempotent)));
  if (lin::span_distance(c.basis, via_state.basis, qg->gram()) > 1e-6)
    throw Error("quotient_coidalgebra: A//B disagrees with the image of T_{h_B o pi}");
  return c;
}

HaarEquivalenceReport haar_equivalence_report(
    const IdempotentState& phi, const std::vector<QuantumSubgroup>& known_subgroups) {
  const auto& qg = phi.phi.owner();
  HaarEquivalenceReport rep;
  rep.f_central = qg->is_central(phi.f);

  for (const auto& sub : known_subgroups)
    if (phi.phi.norm_diff(sub.haar_idempotent) <= 1e-8) {
      rep.is_haar = true;
      rep.witness_subgroup = sub;
      break;
    }

  const Coidalgebra c_phi = image_coidalgebra(qg, expectation_of_state(phi));
  for (const auto& sub : known_subgroups) {
    const Mat q = quotient_fixed_subspace(sub, QuotientSide::mirrored);
    if (lin::span_distance(c_phi.basis, q, qg->gram()) <= 1e-6) {
      rep.quotient_type = true;
      break;
    }
  }

  if (!rep.consistent())
    throw Error("haar_equivalence_report: the three verdicts disagree");
  return rep;
}

double multiplicativity_on_image_residual(const IdempotentState& phi, int samples,
                                          unsigned long long rng_seed) {
  const auto& qg = phi.phi.owner();
  const Mat t = expectation_of_state(phi);
  std::mt19937_64 rng(rng_seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vec a = t * random_vec(qg->n(), rng);
    const Vec b = t * random_vec(qg->n(), rng);
    const Vec prod = qg->algebra().multiply(a, b);
    worst = std::max(worst, (t * prod - prod).norm() /
                                std::max(1.0, a.norm() * b.norm()));
  }
  return worst;
}

}  // namespace fqg
