#include <doctest.h>

#include "fqg/models.hpp"
#include "fqg/presubgroup.hpp"

using namespace fqg;

TEST_CASE("search on fun:S3 recovers the subgroup lattice") {
  auto qg = builtin("fun:S3");
  const SearchResult res = search_idempotents(qg);
  CHECK(res.states.size() == 6);
  // Every discovered state is uniform on a subgroup found by the oracle.
  const auto subgroups = subgroup_oracle(CayleyTable::symmetric(3));
  CHECK(subgroups.size() == 6);
  for (const auto& st : res.states) {
    bool matched = false;
    for (const auto& sub : subgroups) {
      Vec v = Vec::Zero(6);
      for (int g : sub) v(g) = 1.0 / (double)sub.size();
      if (st.phi.norm_diff(Functional(qg, v)) <= 1e-7) matched = true;
    }
    CHECK(matched);
  }
}

TEST_CASE("search counts match oracles on small models") {
  CHECK(search_idempotents(builtin("fun:Z4")).states.size() == 3);
  CHECK(search_idempotents(builtin("fun:Z2xZ2")).states.size() == 5);
  CHECK(search_idempotents(builtin("grp:Q8")).states.size() == 6);
}

TEST_CASE("bijection roundtrips on discovered states") {
  auto qg = builtin("grp:S3");
  for (const auto& st : search_idempotents(qg).states) {
    const Functional back = state_of_presubgroup(PreSubgroup{st.f});
    CHECK(back.norm_diff(st.phi) == doctest::Approx(0.0).epsilon(1e-8));
    const GroupLikeProjection p = to_grouplike(PreSubgroup{st.f});
    CHECK(p.p.norm_diff(st.p) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(to_presubgroup(p).f.norm_diff(st.f) == doctest::Approx(0.0).epsilon(1e-8));
  }
}

TEST_CASE("bbs order agrees with the convolution order") {
  auto qg = builtin("fun:D4");
  const auto states = search_idempotents(qg).states;
  REQUIRE(states.size() == 10);
  for (const auto& a : states)
    for (const auto& b : states)
      CHECK(bbs_order(PreSubgroup{a.f}, PreSubgroup{b.f}) == order_le(a.phi, b.phi));
}

TEST_CASE("central pre-subgroups generate quantum subgroups") {
  auto qg = builtin("grp:S3");
  const auto states = search_idempotents(qg).states;
  int central = 0;
  for (const auto& st : states)
    if (qg->is_central(st.f)) {
      ++central;
      const QuantumSubgroup sub = quantum_subgroup_from_central(PreSubgroup{st.f});
      CHECK(sub.haar_idempotent.norm_diff(st.phi) == doctest::Approx(0.0).epsilon(1e-8));
    }
  // Normal subgroups of S3: trivial, A3, S3.
  CHECK(central == 3);
}

TEST_CASE("non-central pre-subgroups are not subgroups") {
  auto qg = builtin("grp:S3");
  int non_central = 0;
  for (const auto& st : search_idempotents(qg).states)
    if (!is_subgroup(PreSubgroup{st.f})) ++non_central;
  CHECK(non_central == 3);
}
