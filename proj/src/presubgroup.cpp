#include "fqg/presubgroup.hpp"

#include <algorithm>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "fqg/grouplike_solver.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

bool is_presubgroup(const Element& f) {
  const auto& qg = f.owner();
  const double tol = 100 * qg->tol();
  if (std::abs(qg->haar_inner(f, f) - 1.0) > tol) return false;
  const Cplx eps_f = qg->counit(f);
  if (std::abs(eps_f.imag()) > tol || eps_f.real() <= tol) return false;
  const Vec ff = Eigen::kroneckerProduct(f.coords(), f.coords());
  return (qg->mult_unitary() * ff - ff).norm() <= tol;
}

bool is_grouplike_projection(const Element& p) {
  const auto& qg = p.owner();
  if (p.coords().norm() <= 1e-6) return false;
  return grouplike_residual(*qg, p.coords()).norm() <= 100 * qg->tol();
}

GroupLikeProjection to_grouplike(const PreSubgroup& f) {
  const auto& qg = f.f.owner();
  if (!is_presubgroup(f.f)) throw Error("to_grouplike: not a pre-subgroup");
  const Element p = f.f / qg->counit(f.f);
  if (!is_grouplike_projection(p))
    throw Error("to_grouplike: certification of f/eps(f) failed");
  return GroupLikeProjection{p};
}

PreSubgroup to_presubgroup(const GroupLikeProjection& p) {
  const auto& qg = p.p.owner();
  if (!is_grouplike_projection(p.p)) throw Error("to_presubgroup: not group-like");
  const Cplx hp = qg->haar(p.p);
  if (hp.real() <= 100 * qg->tol())
    throw Error("to_presubgroup: h(p) = 0 contradicts faithfulness");
  const Element f = p.p / std::sqrt(hp.real());
  if (!is_presubgroup(f)) throw Error("to_presubgroup: certification failed");
  return PreSubgroup{f};
}

bool bbs_order(const PreSubgroup& g, const PreSubgroup& f) {
  const auto& qg = f.f.owner();
  const Vec fg = Eigen::kroneckerProduct(f.f.coords(), g.f.coords());
  return (qg->mult_unitary() * fg - fg).norm() <= 100 * qg->tol();
}

Functional state_of_presubgroup(const PreSubgroup& f) {
  const auto& qg = f.f.owner();
  const Functional phi = vector_state(f.f, f.f);
  if (!is_idempotent_state(phi))
    throw Error("state_of_presubgroup: omega_{f,f} is not an idempotent state");
  const IdempotentState round = presubgroup_of(phi);
  if (round.f.norm_diff(f.f) > 1e-8)
    throw Error("state_of_presubgroup: bijection roundtrip failed");
  return phi;
}

bool is_subgroup(const PreSubgroup& f) { return f.f.owner()->is_central(f.f); }

QuantumSubgroup quantum_subgroup_from_central(const PreSubgroup& f) {
  const auto& qg = f.f.owner();
  const Algebra& alg = qg->algebra();
  const int n = alg.n;
  if (!is_presubgroup(f.f)) throw Error("quantum_subgroup_from_central: not a pre-subgroup");
  if (!qg->is_central(f.f)) throw Error("quantum_subgroup_from_central: f is not central");
  const Vec ft = (f.f / qg->counit(f.f)).coords();  // the group-like projection

  // h-orthonormal basis of B = A f~ from the column space of right
  // multiplication by f~.
  const Mat basis = lin::gram_orthonormalize(alg.right_matrix(ft), qg->gram());
  const int d = (int)basis.cols();

  Algebra sub;
  sub.n = d;
  for (int i = 0; i < d; ++i) sub.labels.push_back("b" + std::to_string(i));
  sub.lmult.assign(d, Mat::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec prod = alg.multiply(basis.col(i), basis.col(j));
      for (int k = 0; k < d; ++k)
        sub.lmult[i](k, j) = (basis.col(k).adjoint() * qg->gram() * prod)(0);
    }
  sub.star = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const Vec st = alg.adjoint(basis.col(i));
    for (int k = 0; k < d; ++k) sub.star(k, i) = (basis.col(k).adjoint() * qg->gram() * st)(0);
  }
  sub.unit.resize(d);
  for (int k = 0; k < d; ++k) sub.unit(k) = (basis.col(k).adjoint() * qg->gram() * ft)(0);

  // Delta_B(b) = Delta(b)(f~ (x) f~), expanded in the b_j (x) b_k basis.
  const Vec ftft = Eigen::kroneckerProduct(ft, ft);
  Mat delta_b = Mat::Zero(d * d, d);
  Vec counit_b(d);
  for (int i = 0; i < d; ++i) {
    const Vec t = alg.tensor_multiply(qg->delta() * basis.col(i), ftft);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Vec bjk = Eigen::kroneckerProduct(Vec(basis.col(j)), Vec(basis.col(k)));
        delta_b(j * d + k, i) = (bjk.adjoint() * qg->gram2() * t)(0);
      }
    counit_b(i) = qg->counit(basis.col(i));
  }
  QGPtr target = QuantumGroup::build(std::move(sub), std::move(delta_b), counit_b, qg->tol(),
                                     qg->name() + "/subgroup");

  // pi(a) = a f~ in the b basis.
  Mat pi(d, n);
  const Mat rft = alg.right_matrix(ft);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k)
      pi(k, i) = (basis.col(k).adjoint() * qg->gram() * rft.col(i))(0);

  // Morphism checks: surjective *-homomorphism intertwining the coproducts.
  if (lin::rank(pi) != d) throw Error("quantum_subgroup_from_central: pi not surjective");
  double hom = 0.0;
  const Algebra& balg = target->algebra();
  for (int i = 0; i < n; ++i) {
    hom = std::max(hom, (pi * alg.adjoint(Vec::Unit(n, i)) -
                         balg.adjoint(pi.col(i))).norm());
    for (int j = 0; j < n; ++j)
      hom = std::max(hom, (pi * alg.lmult[i].col(j) -
                           balg.multiply(pi.col(i), pi.col(j))).norm());
  }
  if (hom > 100 * qg->tol())
    throw Error("quantum_subgroup_from_central: pi is not a *-homomorphism");
  const Mat pipi = Eigen::kroneckerProduct(pi, pi);
  if ((target->delta() * pi - pipi * qg->delta()).norm() > 100 * qg->tol())
    throw Error("quantum_subgroup_from_central: Delta_B o pi != (pi (x) pi) o Delta");

  const Vec haar_on_a = pi.transpose() * target->haar_values();
  return QuantumSubgroup{target, pi, f.f, Functional(qg, haar_on_a)};
}

namespace {

// Lexicographic comparison of coordinate vectors with rounding, used only
// for canonical ordering of search output.
bool lex_less(const Vec& a, const Vec& b) {
  auto r = [](double x) { return std::round(x * 1e6) / 1e6; };
  for (int i = 0; i < a.size(); ++i) {
    const double ar = r(a(i).real()), br = r(b(i).real());
    if (ar != br) return ar < br;
    const double ai = r(a(i).imag()), bi = r(b(i).imag());
    if (ai != bi) return ai < bi;
  }
  return false;
}

}  // namespace

SearchResult search_idempotents(const QGPtr& qg, int seeds, unsigned long long rng_seed) {
  const int n = qg->n();
  std::mt19937_64 rng(rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_vec = [&] {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = Cplx(gauss(rng), gauss(rng));
    return v;
  };

  std::vector<IdempotentState> found;
  auto try_add = [&](const Functional& phi) {
    if (!is_idempotent_state(phi)) return false;
    IdempotentState st = presubgroup_of(phi);
    for (const auto& other : found)
      if (st.p.norm_diff(other.p) <= 1e-6) return false;
    found.push_back(std::move(st));
    return true;
  };

  try_add(counit_functional(qg));
  try_add(haar_state(qg));

  auto cesaro_from_vector = [&](const Vec& u) {
    const Element ue = qg->element(u);
    const Cplx nrm = qg->haar_inner(ue, ue);
    if (nrm.real() <= 1e-9) return;
    const Functional psi = vector_state(ue, ue) * (1.0 / nrm.real());
    if (!is_state(psi)) return;
    if (auto phi = cesaro_idempotent(psi)) try_add(*phi);
  };

  for (int i = 0; i < n; ++i) cesaro_from_vector(Vec::Unit(n, i));

  for (int s = 0; s < seeds; ++s) {
    cesaro_from_vector(random_vec());
    // Gauss-Newton on the group-like system from a self-adjoint random start.
    Vec v = random_vec();
    Vec p0 = 0.5 * (v + qg->algebra().adjoint(v));
    if (auto p = refine_grouplike(*qg, p0)) {
      const Element pe = qg->element(*p);
      if (is_grouplike_projection(pe)) {
        const Cplx hp = qg->haar(pe);
        if (hp.real() > 1e-9) {
          const Element f = pe / std::sqrt(hp.real());
          try_add(vector_state(f, f));
        }
      }
    }
  }

  // Mixture closure: Cesaro limits of pairwise averages pick up joins the
  // pointwise seeds can miss.
  for (int round = 0; round < 3; ++round) {
    bool grew = false;
    const size_t count = found.size();
    for (size_t i = 0; i < count; ++i)
      for (size_t j = i + 1; j < count; ++j) {
        const Functional mix = (found[i].phi + found[j].phi) * 0.5;
        if (auto phi = cesaro_idempotent(mix))
          if (try_add(*phi)) grew = true;
      }
    if (!grew) break;
  }

  // Canonical order: by the state order (rank = number of states below),
  // ties broken lexicographically on the group-like projection.
  std::vector<int> rank(found.size(), 0);
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < found.size(); ++j)
      if (order_le(found[j].phi, found[i].phi)) ++rank[i];
  std::vector<size_t> idx(found.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    return lex_less(found[a].p.coords(), found[b].p.coords());
  });
  SearchResult out;
  for (size_t i : idx) out.states.push_back(found[i]);
  return out;
}

}  // namespace fqg
