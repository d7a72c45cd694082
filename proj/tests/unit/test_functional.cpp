#include <doctest.h>

#include "fqg/models.hpp"

#include "fqg/presubgroup.hpp"

using namespace fqg;

TEST_CASE("convolution on fun:G is group multiplication of point masses") {
  auto qg = builtin("fun:Z4");
  // Point evaluation at g: phi_g(f) = f(g), values = indicator row of g.
  auto point = [&](int g) {
    Vec v = Vec::Zero(4);
    v(g) = 1.0;
    return Functional(qg, v);
  };
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      const Functional c = convolve(point(g), point(h));
      CHECK(c.norm_diff(point((g + h) % 4)) == doctest::Approx(0.0));
    }
}

TEST_CASE("counit is the convolution unit") {
  auto qg = builtin("grp:S3");
  const Functional eps = counit_functional(qg);
  const Functional h = haar_state(qg);
  CHECK(convolve(eps, h).norm_diff(h) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(convolve(h, eps).norm_diff(h) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(is_idempotent_state(eps));
  CHECK(is_idempotent_state(h));
}

TEST_CASE("haar state absorbs everything") {
  auto qg = builtin("fun:S3");
  const Functional h = haar_state(qg);
  const Functional omega = vector_state(qg->basis_element(2), qg->basis_element(2)) *
                           (1.0 / qg->haar_inner(qg->basis_element(2), qg->basis_element(2)));
  REQUIRE(is_state(omega));
  CHECK(convolve(omega, h).norm_diff(h) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(convolve(h, omega).norm_diff(h) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("density element represents the functional") {
  auto qg = builtin("grp:S3");
  const Functional h = haar_state(qg);
  const Element rho = density_element(h);
  for (int i = 0; i < 6; ++i) {
    const Cplx expect = h(qg->basis_element(i));
    const Cplx got = qg->haar(rho * qg->basis_element(i));
    CHECK(std::abs(expect - got) == doctest::Approx(0.0).epsilon(1e-9));
  }
}

TEST_CASE("convolution order on idempotents") {
  auto qg = builtin("fun:Z4");
  const Functional eps = counit_functional(qg);
  const Functional h = haar_state(qg);
  // phi for the subgroup {0, 2}: uniform on it.
  Vec v = Vec::Zero(4);
  v(0) = v(2) = 0.5;
  const Functional mid(qg, v);
  REQUIRE(is_idempotent_state(mid));
  CHECK(order_le(eps, mid));
  CHECK(order_le(mid, h));
  CHECK_FALSE(order_le(mid, eps));
  CHECK_FALSE(order_le(h, mid));
  CHECK(antipode_invariance_residual(mid) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("cesaro average reaches the generated subgroup") {
  auto qg = builtin("fun:Z2xZ2");
  // Mixture of the uniform states on two order-2 subgroups; its Cesaro
  // limit is the Haar state of the join, the whole Klein group.
  Vec v1 = Vec::Zero(4), v2 = Vec::Zero(4);
  v1(0) = v1(1) = 0.5;
  v2(0) = v2(2) = 0.5;
  const Functional mix = (Functional(qg, v1) + Functional(qg, v2)) * 0.5;
  auto phi = cesaro_idempotent(mix);
  REQUIRE(phi.has_value());
  CHECK(phi->norm_diff(haar_state(qg)) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("presubgroup record is internally consistent") {
  auto qg = builtin("fun:S3");
  Vec v = Vec::Zero(6);
  // Uniform on the alternating subgroup {e, c, c^2} (indices of the two
  // 3-cycles in lexicographic S3 order are 3 and 4).
  v(0) = v(3) = v(4) = 1.0 / 3.0;
  const Functional phi(qg, v);
  REQUIRE(is_idempotent_state(phi));
  const IdempotentState st = presubgroup_of(phi);
  CHECK(is_presubgroup(st.f));
  CHECK(is_grouplike_projection(st.p));
  CHECK(st.p.norm_diff(st.f / qg->counit(st.f)) == doctest::Approx(0.0).epsilon(1e-8));
  // rho is idempotent up to the counit scale: rho^2 = eps(rho) rho.
  const Cplx e = qg->counit(st.rho);
  CHECK((st.rho * st.rho).norm_diff(st.rho * e) == doctest::Approx(0.0).epsilon(1e-8));
}
