#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "fqg/models.hpp"

using namespace fqg;

// C(Z2): delta_0, delta_1 with pointwise product.
TEST_CASE("function algebra structure constants") {
  auto qg = builtin("fun:Z2");
  const Algebra& alg = qg->algebra();
  REQUIRE(alg.n == 2);

  Vec d0 = Vec::Unit(2, 0), d1 = Vec::Unit(2, 1);
  CHECK((alg.multiply(d0, d0) - d0).norm() == doctest::Approx(0.0));
  CHECK(alg.multiply(d0, d1).norm() == doctest::Approx(0.0));
  CHECK((alg.adjoint(d1) - d1).norm() == doctest::Approx(0.0));
  CHECK((alg.unit - Vec(d0 + d1)).norm() == doctest::Approx(0.0));
  CHECK(alg.validate(1e-9).all_passed());
}

TEST_CASE("group algebra is noncommutative for S3") {
  auto qg = builtin("grp:S3");
  const Algebra& alg = qg->algebra();
  bool commutes = true;
  for (int i = 0; i < alg.n && commutes; ++i)
    for (int j = 0; j < alg.n && commutes; ++j)
      if ((alg.multiply(Vec::Unit(6, i), Vec::Unit(6, j)) -
           alg.multiply(Vec::Unit(6, j), Vec::Unit(6, i)))
              .norm() > 1e-12)
        commutes = false;
  CHECK_FALSE(commutes);
  // lambda_g^* = lambda_{g^-1}: star is a permutation matrix.
  for (int i = 0; i < alg.n; ++i) CHECK(alg.adjoint(Vec::Unit(6, i)).norm() == doctest::Approx(1.0));
}

TEST_CASE("element arithmetic") {
  auto qg = builtin("fun:Z2");
  Element a = qg->basis_element(0) * Cplx(2.0, 0.0) + qg->basis_element(1);
  Element b = a * a;
  CHECK(b.coords()(0).real() == doctest::Approx(4.0));
  CHECK(b.coords()(1).real() == doctest::Approx(1.0));
  CHECK(a.adjoint().norm_diff(a) == doctest::Approx(0.0));
}

TEST_CASE("tensor multiply matches kron of products") {
  auto qg = builtin("fun:Z3");
  const Algebra& alg = qg->algebra();
  const Vec s = Eigen::kroneckerProduct(Vec(Vec::Unit(3, 1)), Vec(Vec::Unit(3, 2)));
  const Vec t = Eigen::kroneckerProduct(Vec(Vec::Unit(3, 1)), Vec(Vec::Unit(3, 2)));
  const Vec expect =
      Eigen::kroneckerProduct(Vec(alg.multiply(Vec::Unit(3, 1), Vec::Unit(3, 1))),
                              Vec(alg.multiply(Vec::Unit(3, 2), Vec::Unit(3, 2))));
  CHECK((alg.tensor_multiply(s, t) - expect).norm() == doctest::Approx(0.0));
}

TEST_CASE("corrupted product fails algebra validation") {
  auto qg = builtin("fun:Z2");
  Algebra alg = qg->algebra();
  alg.lmult[0](1, 1) += 0.5;  // breaks associativity/unit laws
  CHECK_FALSE(alg.validate(1e-9).all_passed());
}
