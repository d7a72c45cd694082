#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fqg/report.hpp"
#include "fqg/types.hpp"

namespace fqg {

/// Finite-dimensional complex *-algebra given by structure constants.
/// lmult[i](k,j) is the coefficient of e_k in e_i e_j, so the matrix of
/// left multiplication by a is sum_i a_i lmult[i]. star maps coordinates
/// of a to coordinates of a^*: coords(a^*) = star * conj(coords(a)).
struct Algebra {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Mat> lmult;
  Mat star;
  Vec unit;

  Cplx mult_const(int i, int j, int k) const { return lmult[i](k, j); }

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec adjoint(const Vec& a) const;
  Mat left_matrix(const Vec& a) const;   // L_a
  Mat right_matrix(const Vec& b) const;  // R_b, column i = e_i b

  /// Product on A (x) A: coordinates indexed (i,j) -> i*n+j.
  Vec tensor_multiply(const Vec& s, const Vec& t) const;
  Vec tensor_adjoint(const Vec& t) const;

  ValidationReport validate(double tol) const;
};

class QuantumGroup;

/// Coordinate vector tied to its quantum group; also serves as a GNS
/// vector through a -> a 1_h.
class Element {
 public:
  Element() = default;
  Element(std::shared_ptr<const QuantumGroup> owner, Vec coords);

  const Vec& coords() const { return coords_; }
  const std::shared_ptr<const QuantumGroup>& owner() const { return owner_; }

  Element operator*(const Element& rhs) const;
  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator*(Cplx scalar) const;
  Element operator/(Cplx scalar) const { return *this * (1.0 / scalar); }
  Element adjoint() const;
  double norm_diff(const Element& rhs) const { return (coords_ - rhs.coords_).norm(); }

 private:
  void require_same_owner(const Element& rhs) const;
  std::shared_ptr<const QuantumGroup> owner_;
  Vec coords_;
};

inline Element operator*(Cplx scalar, const Element& e) { return e * scalar; }

}  // namespace fqg
