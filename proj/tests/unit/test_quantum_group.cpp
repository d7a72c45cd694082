#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "fqg/models.hpp"

using namespace fqg;

TEST_CASE("haar state of fun:Z2 is uniform") {
  auto qg = builtin("fun:Z2");
  CHECK(qg->haar_values()(0).real() == doctest::Approx(0.5));
  CHECK(qg->haar_values()(1).real() == doctest::Approx(0.5));
  // <d0, d0> = h(d0 d0) = 1/2
  CHECK(qg->haar_inner(qg->basis_element(0), qg->basis_element(0)).real() ==
        doctest::Approx(0.5));
}

TEST_CASE("haar state of a group algebra is evaluation at e") {
  auto qg = builtin("grp:D4");
  CHECK(qg->haar_values()(0).real() == doctest::Approx(1.0));
  for (int i = 1; i < 8; ++i) CHECK(std::abs(qg->haar_values()(i)) == doctest::Approx(0.0));
}

TEST_CASE("haar element of fun:G is the point mass at e") {
  auto qg = builtin("fun:S3");
  const Vec eta = qg->haar_element().coords();
  CHECK(eta(0).real() == doctest::Approx(1.0));
  for (int i = 1; i < 6; ++i) CHECK(std::abs(eta(i)) == doctest::Approx(0.0));
  CHECK(qg->is_projection(qg->haar_element()));
}

TEST_CASE("haar element of grp:G is the uniform average") {
  auto qg = builtin("grp:S3");
  const Vec eta = qg->haar_element().coords();
  for (int i = 0; i < 6; ++i) CHECK(eta(i).real() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("antipode of fun:G is pullback along inversion") {
  // S(delta_g) = delta_{g^-1}: the antipode is a permutation matrix.
  auto qg = builtin("fun:S3");
  const Mat& s = qg->antipode();
  for (int i = 0; i < 6; ++i) {
    CHECK(s.col(i).norm() == doctest::Approx(1.0));
    CHECK((s * s.col(i) - Vec::Unit(6, i)).norm() == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("square root of a positive element") {
  auto qg = builtin("fun:Z2");
  const Element a = qg->basis_element(0) * Cplx(2.0, 0.0);
  const Element s = qg->sqrt_positive(a);
  CHECK(s.coords()(0).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(std::abs(s.coords()(1)) == doctest::Approx(0.0));
  CHECK((s * s).norm_diff(a) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("multiplicative unitary acts as V(d_g x d_h) = d_{gh^-1} x d_h") {
  auto qg = builtin("fun:Z4");
  const int n = 4;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const Vec in = Eigen::kroneckerProduct(Vec(Vec::Unit(n, g)), Vec(Vec::Unit(n, h)));
      const Vec out = qg->mult_unitary() * in;
      const int target = ((g - h) % n + n) % n;  // g h^{-1} in Z4
      const Vec expect = Eigen::kroneckerProduct(Vec(Vec::Unit(n, target)), Vec(Vec::Unit(n, h)));
      CHECK((out - expect).norm() == doctest::Approx(0.0));
    }
}

TEST_CASE("positivity and centrality predicates") {
  auto qg = builtin("grp:S3");
  CHECK(qg->is_positive(qg->one()));
  CHECK(qg->is_central(qg->one()));
  CHECK_FALSE(qg->is_central(qg->basis_element(1)));  // a transposition
  CHECK_FALSE(qg->is_positive(qg->basis_element(1) * Cplx(-1.0, 0.0) + qg->one() * Cplx(0.5, 0.0)));
}

TEST_CASE("corrupted coproduct fails validation with a coassociativity diagnostic") {
  auto good = builtin("fun:Z2");
  Mat delta = good->delta();
  delta(0, 0) += 0.1;
  bool threw = false;
  try {
    QuantumGroup::build(good->algebra(), delta);
  } catch (const ValidationError& e) {
    threw = true;
    bool found = false;
    for (const auto& c : e.report.checks)
      if (!c.pass) found = true;
    CHECK(found);
  }
  CHECK(threw);
}
