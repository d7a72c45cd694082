#include "fqg/linalg.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fqg::lin {

int rank(const Mat& m, double rel_cutoff) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_cutoff * sv(0)) ++r;
  return r;
}

Mat nullspace(const Mat& m, double rel_cutoff) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // The scale is floored at 1 so that a numerically-zero matrix (entries at
  // rounding level) is treated as rank 0; all callers work with O(1) data.
  const double top = std::max(sv.size() ? sv(0) : 0.0, 1.0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_cutoff * top) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

Vec lstsq(const Mat& m, const Vec& b, double* residual) {
  Vec x = m.completeOrthogonalDecomposition().solve(b);
  if (residual) *residual = (m * x - b).norm();
  return x;
}

Mat gram_orthonormalize(const Mat& cols, const Mat& g, double rel_cutoff) {
  // Modified Gram-Schmidt in the g-inner product, two passes per vector.
  const double scale = cols.size() ? cols.cwiseAbs().maxCoeff() : 0.0;
  Mat basis(cols.rows(), cols.cols());
  int d = 0;
  for (int c = 0; c < cols.cols(); ++c) {
    Vec v = cols.col(c);
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < d; ++k) v -= (basis.col(k).adjoint() * g * v)(0) * basis.col(k);
    const double nrm = std::sqrt(std::abs((v.adjoint() * g * v)(0).real()));
    if (nrm > rel_cutoff * std::max(scale, 1.0)) basis.col(d++) = v / nrm;
  }
  return basis.leftCols(d);
}

Mat span_projector(const Mat& basis, const Mat& g) {
  return basis * basis.adjoint() * g;
}

double span_distance(const Mat& basis_a, const Mat& basis_b, const Mat& g) {
  return (span_projector(basis_a, g) - span_projector(basis_b, g)).norm();
}

bool span_contained(const Mat& inner, const Mat& outer, const Mat& g, double tol) {
  const Mat p = span_projector(outer, g);
  return (p * inner - inner).norm() <= tol;
}

Mat sqrt_psd(const Mat& m, double tol) {
  if ((m - m.adjoint()).norm() > tol * std::max(1.0, m.norm()))
    throw Error("sqrt_psd: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(((m + m.adjoint()) / 2.0).eval());
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.size() && ev.minCoeff() < -tol * std::max(1.0, ev.cwiseAbs().maxCoeff()))
    throw Error("sqrt_psd: matrix is not positive semidefinite");
  Eigen::VectorXd root = ev.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal().toDenseMatrix().cast<Cplx>() *
         es.eigenvectors().adjoint();
}

}  // namespace fqg::lin
