#pragma once

#include <string>
#include <vector>

#include "fqg/quantum_group.hpp"

namespace fqg {

/// Finite group given by its multiplication table.
struct CayleyTable {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i g_j
  std::vector<int> inverse;
  int identity = 0;
  std::vector<std::string> names;

  void validate() const;  // Latin square, associativity, identity, inverses

  static CayleyTable cyclic(int n);
  static CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
  static CayleyTable dihedral(int n);   // order 2n
  static CayleyTable symmetric(int n);  // order n!
  static CayleyTable quaternion();      // Q8
};

/// C(G): functions on G with pointwise product and convolution coproduct.
QGPtr function_algebra(const CayleyTable& g, const std::string& name = {});

/// C[G]: the group algebra with group-like coproduct.
QGPtr group_algebra(const CayleyTable& g, const std::string& name = {});

/// The 8-dimensional Kac-Paljutkin quantum group, loaded from embedded
/// structure data and re-validated against the full axiom suite.
QGPtr kac_paljutkin();

/// Named builtins: fun:Z2, fun:Z3, fun:Z4, fun:Z2xZ2, fun:S3, fun:D4,
/// grp:S3, grp:D4, grp:Q8, kp8. Instances are cached.
QGPtr builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Brute-force enumeration of all subgroups (element index sets, sorted).
std::vector<std::vector<int>> subgroup_oracle(const CayleyTable& g);

}  // namespace fqg
