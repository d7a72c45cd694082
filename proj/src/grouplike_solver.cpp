#include "fqg/grouplike_solver.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace fqg {

Vec grouplike_residual(const QuantumGroup& qg, const Vec& p) {
  const Algebra& alg = qg.algebra();
  const int n = alg.n;
  Vec r(2 * n + n * n);
  r.head(n) = alg.multiply(p, p) - p;
  r.segment(n, n) = p - alg.adjoint(p);
  const Vec dp = qg.delta() * p;
  const Vec one_p = Eigen::kroneckerProduct(alg.unit, p);
  r.tail(n * n) = alg.tensor_multiply(dp, one_p) - Eigen::kroneckerProduct(p, p);
  return r;
}

std::optional<Vec> refine_grouplike(const QuantumGroup& qg, Vec p, int max_iter,
                                    double target) {
  const Algebra& alg = qg.algebra();
  const int n = alg.n;
  const int m = 2 * n + n * n;

  Vec r = grouplike_residual(qg, p);
  for (int iter = 0; iter < max_iter; ++iter) {
    if (r.norm() <= target) return p;

    // Complex-linear (a) and antilinear (b) parts of the derivative.
    Mat a = Mat::Zero(m, n), b = Mat::Zero(m, n);
    a.topRows(n) = alg.left_matrix(p) + alg.right_matrix(p) - Mat::Identity(n, n);
    a.middleRows(n, n) = Mat::Identity(n, n);
    b.middleRows(n, n) = -alg.star;
    const Vec dp = qg.delta() * p;
    const Vec one_p = Eigen::kroneckerProduct(alg.unit, p);
    for (int i = 0; i < n; ++i) {
      const Vec ei = Vec::Unit(n, i);
      Vec col = alg.tensor_multiply(qg.delta().col(i), one_p);
      col += alg.tensor_multiply(dp, Eigen::kroneckerProduct(alg.unit, ei));
      col -= Eigen::kroneckerProduct(ei, p) + Eigen::kroneckerProduct(p, ei);
      a.block(2 * n, i, n * n, 1) = col;
    }

    // Real-ified Jacobian: d r = (a+b) dx + i (a-b) dy.
    Eigen::MatrixXd jac(2 * m, 2 * n);
    jac.topLeftCorner(m, n) = (a + b).real();
    jac.topRightCorner(m, n) = -(a - b).imag();
    jac.bottomLeftCorner(m, n) = (a + b).imag();
    jac.bottomRightCorner(m, n) = (a - b).real();

    Eigen::VectorXd rhs(2 * m);
    rhs.head(m) = -r.real();
    rhs.tail(m) = -r.imag();
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(rhs);
    Vec delta_p = step.head(n).cast<Cplx>() + Cplx(0, 1) * step.tail(n).cast<Cplx>();
    if (!delta_p.allFinite()) return std::nullopt;

    double alpha = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 30; ++halvings) {
      const Vec cand = p + alpha * delta_p;
      const Vec r_cand = grouplike_residual(qg, cand);
      if (r_cand.norm() < r.norm()) {
        p = cand;
        r = r_cand;
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!improved) break;
  }
  return r.norm() <= target ? std::optional<Vec>(p) : std::nullopt;
}

}  // namespace fqg
