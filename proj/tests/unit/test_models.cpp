#include <doctest.h>

#include "fqg/models.hpp"

using namespace fqg;

TEST_CASE("cayley table constructors validate") {
  CHECK_NOTHROW(CayleyTable::cyclic(5).validate());
  CHECK_NOTHROW(CayleyTable::dihedral(4).validate());
  CHECK_NOTHROW(CayleyTable::symmetric(3).validate());
  CHECK_NOTHROW(CayleyTable::quaternion().validate());
  CHECK_NOTHROW(
      CayleyTable::direct_product(CayleyTable::cyclic(2), CayleyTable::cyclic(2)).validate());
  CHECK(CayleyTable::symmetric(4).order == 24);
}

TEST_CASE("broken table fails validation") {
  CayleyTable t = CayleyTable::cyclic(3);
  t.table[1][1] = 1;  // not a Latin square anymore
  CHECK_THROWS_AS(t.validate(), Error);
}

TEST_CASE("subgroup oracle counts") {
  CHECK(subgroup_oracle(CayleyTable::cyclic(4)).size() == 3);
  CHECK(subgroup_oracle(CayleyTable::direct_product(CayleyTable::cyclic(2),
                                                    CayleyTable::cyclic(2)))
            .size() == 5);
  CHECK(subgroup_oracle(CayleyTable::symmetric(3)).size() == 6);
  CHECK(subgroup_oracle(CayleyTable::dihedral(4)).size() == 10);
  CHECK(subgroup_oracle(CayleyTable::quaternion()).size() == 6);
}

TEST_CASE("builtin cache returns the same instance") {
  CHECK(builtin("fun:Z3").get() == builtin("fun:Z3").get());
  CHECK_THROWS_AS((void)builtin("fun:nope"), Error);
  CHECK(builtin_names().size() == 10);
}

TEST_CASE("function and group algebra of the same group are dual in dimension") {
  auto f = builtin("fun:S3");
  auto g = builtin("grp:S3");
  CHECK(f->n() == g->n());
  CHECK(f->is_commutative());
  CHECK_FALSE(f->is_cocommutative());
  CHECK_FALSE(g->is_commutative());
  CHECK(g->is_cocommutative());
}

TEST_CASE("all builtins validate at 1e-9") {
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    CHECK(qg->report().all_passed());
    CHECK(qg->tol() == 1e-9);
  }
}
