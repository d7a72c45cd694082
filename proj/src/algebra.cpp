#include "fqg/algebra.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "fqg/quantum_group.hpp"

namespace fqg {

double& global_tol() {
  static double tol = 1e-9;
  return tol;
}

std::string ValidationReport::summary() const {
  std::string out;
  char line[256];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof(line), "%-38s %-4s residual=%.3e (tol %.1e)\n",
                  c.name.c_str(), c.pass ? "ok" : "FAIL", c.residual, c.threshold);
    out += line;
  }
  return out;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i)
    if (a(i) != Cplx(0)) out += a(i) * (lmult[i] * b);
  return out;
}

Vec Algebra::adjoint(const Vec& a) const { return star * a.conjugate(); }

Mat Algebra::left_matrix(const Vec& a) const {
  Mat out = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (a(i) != Cplx(0)) out += a(i) * lmult[i];
  return out;
}

Mat Algebra::right_matrix(const Vec& b) const {
  Mat out(n, n);
  for (int i = 0; i < n; ++i) out.col(i) = lmult[i] * b;
  return out;
}

Vec Algebra::tensor_multiply(const Vec& s, const Vec& t) const {
  // (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly. With S, T, Z the
  // n x n reshapes of the coordinate vectors, Z = sum_{ij} S(i,j) M_i T M_j^T.
  Eigen::Map<const Mat> sm(s.data(), n, n);  // column-major: sm(j, i) = s(i*n+j)
  Eigen::Map<const Mat> tm(t.data(), n, n);
  Mat z = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cplx c = sm(j, i);  // coefficient of e_i (x) e_j
      if (c != Cplx(0)) z += c * (lmult[i] * tm.transpose() * lmult[j].transpose());
    }
  }
  // z(k, l) holds the coefficient of e_k (x) e_l; flatten to index k*n+l.
  Vec out(n * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out(k * n + l) = z(k, l);
  return out;
}

Vec Algebra::tensor_adjoint(const Vec& t) const {
  // (a (x) b)^* = a^* (x) b^*
  Mat star2 = Eigen::kroneckerProduct(star, star);
  return star2 * t.conjugate();
}

ValidationReport Algebra::validate(double tol) const {
  ValidationReport rep;
  double assoc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec ij = lmult[i].col(j);
      for (int k = 0; k < n; ++k) {
        const Vec lhs = multiply(ij, Vec::Unit(n, k));
        const Vec rhs = lmult[i] * lmult[j].col(k);
        assoc = std::max(assoc, (lhs - rhs).norm());
      }
    }
  rep.add("associativity", assoc, tol);

  double unit_res = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec ei = Vec::Unit(n, i);
    unit_res = std::max(unit_res, (multiply(unit, ei) - ei).norm());
    unit_res = std::max(unit_res, (multiply(ei, unit) - ei).norm());
  }
  rep.add("unit is two-sided identity", unit_res, tol);

  double invol = 0.0, antimult = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vec ei = Vec::Unit(n, i);
    invol = std::max(invol, (adjoint(adjoint(ei)) - ei).norm());
    for (int j = 0; j < n; ++j) {
      const Vec ej = Vec::Unit(n, j);
      antimult = std::max(
          antimult, (adjoint(multiply(ei, ej)) - multiply(adjoint(ej), adjoint(ei))).norm());
    }
  }
  rep.add("star involutive", invol, tol);
  rep.add("star anti-multiplicative", antimult, tol);
  rep.add("unit self-adjoint", (adjoint(unit) - unit).norm(), tol);
  return rep;
}

Element::Element(std::shared_ptr<const QuantumGroup> owner, Vec coords)
    : owner_(std::move(owner)), coords_(std::move(coords)) {
  if (!owner_) throw Error("Element: null owner");
  if (coords_.size() != owner_->n()) throw Error("Element: coordinate length mismatch");
}

void Element::require_same_owner(const Element& rhs) const {
  if (owner_.get() != rhs.owner_.get()) throw Error("Element: owner mismatch");
}

Element Element::operator*(const Element& rhs) const {
  require_same_owner(rhs);
  return Element(owner_, owner_->algebra().multiply(coords_, rhs.coords_));
}

Element Element::operator+(const Element& rhs) const {
  require_same_owner(rhs);
  return Element(owner_, coords_ + rhs.coords_);
}

Element Element::operator-(const Element& rhs) const {
  require_same_owner(rhs);
  return Element(owner_, coords_ - rhs.coords_);
}

Element Element::operator*(Cplx scalar) const { return Element(owner_, scalar * coords_); }

Element Element::adjoint() const { return Element(owner_, owner_->algebra().adjoint(coords_)); }

}  // namespace fqg
