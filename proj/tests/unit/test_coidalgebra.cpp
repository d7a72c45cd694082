#include <doctest.h>

#include "fqg/models.hpp"

#include "fqg/coidalgebra.hpp"

using namespace fqg;

TEST_CASE("expectation of an idempotent is a conditional expectation") {
  auto qg = builtin("fun:S3");
  for (const auto& st : search_idempotents(qg).states) {
    const Mat t = expectation_of_state(st);  // asserts the E properties
    const Coidalgebra c = image_coidalgebra(qg, t);
    CHECK(c.dim() >= 1);
    const Functional back = state_of_coidalgebra(c);
    CHECK(back.norm_diff(st.phi) == doctest::Approx(0.0).epsilon(1e-8));
  }
}

TEST_CASE("coidalgebra dimensions are |G|/|H| on fun:G") {
  auto qg = builtin("fun:S3");
  const auto states = search_idempotents(qg).states;
  std::vector<int> dims;
  for (const auto& st : states) dims.push_back(image_coidalgebra(qg, expectation_of_state(st)).dim());
  std::sort(dims.begin(), dims.end());
  // Subgroup orders 1,2,2,2,3,6 -> quotient sizes 6,3,3,3,2,1.
  CHECK(dims == std::vector<int>({1, 2, 3, 3, 3, 6}));
}

TEST_CASE("quotient coidalgebra matches the image of the Haar idempotent") {
  auto qg = builtin("grp:S3");
  for (const auto& st : search_idempotents(qg).states)
    if (qg->is_central(st.f)) {
      const QuantumSubgroup sub = quantum_subgroup_from_central(PreSubgroup{st.f});
      const Coidalgebra q = quotient_coidalgebra(sub);  // throws on mismatch
      CHECK(q.dim() >= 1);
    }
}

TEST_CASE("haar equivalence three-way split on grp:S3") {
  auto qg = builtin("grp:S3");
  const auto states = search_idempotents(qg).states;
  std::vector<QuantumSubgroup> subs;
  for (const auto& st : states)
    if (qg->is_central(st.f)) subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
  int haar = 0, non_haar = 0;
  for (const auto& st : states) {
    const HaarEquivalenceReport rep = haar_equivalence_report(st, subs);
    CHECK(rep.consistent());
    rep.is_haar ? ++haar : ++non_haar;
  }
  CHECK(haar == 3);
  CHECK(non_haar == 3);
}

TEST_CASE("kp8 carries an idempotent that fails all three characterisations") {
  auto qg = builtin("kp8");
  const auto states = search_idempotents(qg).states;
  std::vector<QuantumSubgroup> subs;
  for (const auto& st : states)
    if (qg->is_central(st.f)) subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
  int all_false = 0;
  for (const auto& st : states) {
    const HaarEquivalenceReport rep = haar_equivalence_report(st, subs);
    CHECK(rep.consistent());
    if (!rep.is_haar) ++all_false;
  }
  CHECK(all_false >= 1);
}

TEST_CASE("multiplicativity holds on the image of every expectation") {
  auto qg = builtin("fun:Z2xZ2");
  for (const auto& st : search_idempotents(qg).states)
    CHECK(multiplicativity_on_image_residual(st) <= 1e-8);
}
