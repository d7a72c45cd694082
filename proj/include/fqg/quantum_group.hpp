#pragma once

#include <memory>
#include <optional>
#include <string>

#include "fqg/algebra.hpp"
#include "fqg/report.hpp"

namespace fqg {

/// A validated finite quantum group: *-algebra plus coproduct, with the
/// counit, Haar state, Haar element, antipode, Gram matrix of <a,b> =
/// h(a^* b) and the multiplicative unitary cached at construction.
/// Immutable after build(); instances are shared via shared_ptr.
class QuantumGroup : public std::enable_shared_from_this<QuantumGroup> {
 public:
  /// delta is n^2 x n; column i holds the coordinates of Delta(e_i) in the
  /// basis e_j (x) e_k, index j*n+k. The counit may be supplied, derived,
  /// or both (they must then agree). Throws ValidationError if any axiom
  /// fails at tolerance tol.
  static std::shared_ptr<const QuantumGroup> build(Algebra algebra, Mat delta,
                                                   std::optional<Vec> counit = std::nullopt,
                                                   double tol = global_tol(),
                                                   std::string name = {});

  int n() const { return algebra_.n; }
  const Algebra& algebra() const { return algebra_; }
  const Mat& delta() const { return delta_; }
  const Vec& counit_values() const { return counit_; }
  const Vec& haar_values() const { return haar_; }
  const Mat& antipode() const { return antipode_; }
  const Mat& gram() const { return gram_; }
  const Mat& gram2() const { return gram2_; }
  const Mat& mult_unitary() const { return mult_unitary_; }
  const ValidationReport& report() const { return report_; }
  double tol() const { return tol_; }
  const std::string& name() const { return name_; }

  Element element(Vec coords) const;
  Element basis_element(int i) const;
  Element one() const;
  Element haar_element() const { return element(eta_); }

  Cplx haar(const Vec& coords) const { return haar_.transpose() * coords; }
  Cplx counit(const Vec& coords) const { return counit_.transpose() * coords; }
  Cplx haar(const Element& a) const { return haar(a.coords()); }
  Cplx counit(const Element& a) const { return counit(a.coords()); }

  /// <a,b> = h(a^* b), conjugate-linear in the first argument.
  Cplx haar_inner(const Element& a, const Element& b) const;

  Vec coproduct_apply(const Vec& coords) const { return delta_ * coords; }

  Mat regular_representation(const Element& a) const {
    return algebra_.left_matrix(a.coords());
  }

  /// Square root of a positive element via spectral calculus in the
  /// regular representation; the root is pulled back along L.
  Element sqrt_positive(const Element& a) const;

  bool is_positive(const Element& a) const;
  bool is_projection(const Element& a) const;
  bool is_central(const Element& a) const;

  bool is_commutative() const;
  bool is_cocommutative() const;

  /// Adjoint of an operator on A with respect to the Gram inner product.
  Mat gram_adjoint(const Mat& op) const;
  /// Same on A (x) A with Gram (x) Gram.
  Mat gram2_adjoint(const Mat& op) const;

 private:
  QuantumGroup() = default;
  void validate_and_cache(std::optional<Vec> counit_in);

  Algebra algebra_;
  Mat delta_;
  Vec counit_;
  Vec haar_;
  Vec eta_;
  Mat antipode_;
  Mat gram_, gram_sqrt_, gram_isqrt_;
  Mat gram2_, gram2_inv_;
  Mat mult_unitary_;
  ValidationReport report_;
  double tol_ = 1e-9;
  std::string name_;
};

using QGPtr = std::shared_ptr<const QuantumGroup>;

}  // namespace fqg
