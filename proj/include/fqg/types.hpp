#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fqg {

using Cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Library-wide error type; validation failures carry a report, see report.hpp.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Global numerical tolerance. All residual checks compare against this
/// unless a caller passes an explicit override. Mutable only through the
/// CLI flag --tol, before any quantum group is constructed.
double& global_tol();

inline int tensor_index(int i, int j, int n) { return i * n + j; }

}  // namespace fqg
