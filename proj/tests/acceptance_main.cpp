// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fqg/coidalgebra.hpp"
#include "fqg/io.hpp"
#include "fqg/lattice.hpp"
#include "fqg/linalg.hpp"
#include "fqg/models.hpp"
#include "fqg/presubgroup.hpp"

using namespace fqg;

namespace {

std::map<std::string, SearchResult>& searches() {
  static std::map<std::string, SearchResult> cache;
  if (cache.empty())
    for (const auto& name : builtin_names()) cache[name] = search_idempotents(builtin(name));
  return cache;
}

Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = Cplx(gauss(rng), gauss(rng));
  return v;
}

// 1. Axiom suite on every builtin, structural residuals <= 1e-9.
bool axiom_suite() {
  const std::vector<std::string> structural = {
      "coassociativity", "cancellation", "counit law",     "haar bi-invariance",
      "haar element",    "V unitary",    "pentagon",       "coproduct"};
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    if (!qg->report().all_passed()) return false;
    for (const auto& c : qg->report().checks)
      for (const auto& key : structural)
        if (c.name.find(key) != std::string::npos && c.residual > 1e-9) return false;
  }
  return true;
}

// 2. phi <-> f_phi <-> omega_{f,f} roundtrips and the state formula.
bool bijection() {
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    for (const auto& st : searches()[name].states) {
      if (state_of_presubgroup(PreSubgroup{st.f}).norm_diff(st.phi) > 1e-8) return false;
      if (presubgroup_of(st.phi).f.norm_diff(st.f) > 1e-8) return false;
      const Cplx e = qg->counit(st.rho);
      if ((st.rho * st.rho).norm_diff(st.rho * e) > 1e-8) return false;
      const Cplx ef = qg->counit(st.f);
      for (int k = 0; k < qg->n(); ++k)
        if (std::abs(st.phi(qg->basis_element(k)) -
                     ef * qg->haar_inner(st.f, qg->basis_element(k))) > 1e-8)
          return false;
    }
  }
  return true;
}

// 3. f <-> f/eps(f) rescaling between pre-subgroups and group-like projections.
bool rescaling() {
  for (const auto& name : builtin_names())
    for (const auto& st : searches()[name].states) {
      const GroupLikeProjection p = to_grouplike(PreSubgroup{st.f});
      if (!is_grouplike_projection(p.p)) return false;
      if (to_presubgroup(p).f.norm_diff(st.f) > 1e-8) return false;
      if (p.p.norm_diff(st.p) > 1e-8) return false;
    }
  return true;
}

// 4. Convolution order == BBS order == reverse coidalgebra inclusion.
bool order_isomorphism() {
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    const auto& states = searches()[name].states;
    std::vector<Coidalgebra> cs;
    for (const auto& st : states) cs.push_back(image_coidalgebra(qg, expectation_of_state(st)));
    for (size_t i = 0; i < states.size(); ++i)
      for (size_t j = 0; j < states.size(); ++j) {
        const bool a = order_le(states[i].phi, states[j].phi);
        const bool b = bbs_order(PreSubgroup{states[i].f}, PreSubgroup{states[j].f});
        const bool c = lin::span_contained(cs[j].basis, cs[i].basis, qg->gram(), 1e-6);
        if (a != b || a != c) return false;
      }
    const Functional eps = counit_functional(qg), h = haar_state(qg);
    for (const auto& st : states)
      if (!order_le(eps, st.phi) || !order_le(st.phi, h)) return false;
  }
  return true;
}

// 5. Exact counts and classification against the group-theoretic oracles.
bool oracle_counts() {
  if (searches()["fun:Z4"].states.size() != 3) return false;
  if (searches()["fun:Z2xZ2"].states.size() != 5) return false;

  {
    auto qg = builtin("fun:S3");
    const auto& states = searches()["fun:S3"].states;
    if (states.size() != 6) return false;
    const auto subgroups = subgroup_oracle(CayleyTable::symmetric(3));
    for (const auto& st : states) {
      bool matched = false;
      for (const auto& sub : subgroups) {
        Vec v = Vec::Zero(6);
        for (int g : sub) v(g) = 1.0 / (double)sub.size();
        if (st.phi.norm_diff(Functional(qg, v)) <= 1e-7) matched = true;
      }
      if (!matched) return false;
    }
  }
  {
    auto qg = builtin("grp:S3");
    const auto& states = searches()["grp:S3"].states;
    if (states.size() != 6) return false;
    std::vector<QuantumSubgroup> subs;
    for (const auto& st : states)
      if (qg->is_central(st.f)) subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
    int haar = 0, non_haar_non_central = 0;
    for (const auto& st : states) {
      const auto rep = haar_equivalence_report(st, subs);
      if (rep.is_haar) ++haar;
      else if (!qg->is_central(st.f)) ++non_haar_non_central;
      // Indicator states: phi(lambda_g) in {0, 1}.
      for (int k = 0; k < 6; ++k) {
        const Cplx v = st.phi.values()(k);
        if (std::min(std::abs(v), std::abs(v - Cplx(1, 0))) > 1e-8) return false;
      }
    }
    if (haar != 3 || non_haar_non_central != 3) return false;
  }
  return true;
}

// 6. f * g_b = g(b) f whenever g * f = f * g = f, over 100 random b.
bool lemma_gb() {
  std::mt19937_64 rng(2024);
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    const auto& states = searches()[name].states;
    for (const auto& fs : states)
      for (const auto& gs : states) {
        if (convolve(gs.phi, fs.phi).norm_diff(fs.phi) > 1e-8 ||
            convolve(fs.phi, gs.phi).norm_diff(fs.phi) > 1e-8)
          continue;
        for (int t = 0; t < 100; ++t) {
          const Vec b = random_vec(qg->n(), rng);
          if (lemma_gb_check(fs.phi, gs.phi, qg->element(b)) / std::max(1.0, b.norm()) > 1e-8)
            return false;
        }
      }
  }
  return true;
}

// 7. phi = eps o E_{C_phi}; on fun:G, dim C_phi = |G| / |H|.
bool remark_roundtrip() {
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    for (const auto& st : searches()[name].states) {
      const Coidalgebra c = image_coidalgebra(qg, expectation_of_state(st));
      if (state_of_coidalgebra(c).norm_diff(st.phi) > 1e-8) return false;
      if (name.rfind("fun:", 0) == 0) {
        // rho = (|G|/|H|) 1_H, so eps(rho) = |G|/|H| is the expected dim.
        const double expected = qg->counit(st.rho).real();
        if (std::abs(expected - (double)c.dim()) > 1e-6) return false;
      }
    }
  }
  return true;
}

// 8. Haar idempotent <=> central f <=> quotient type; kp8 has all-false cases.
bool haar_equivalence() {
  int kp8_all_false = 0;
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    const auto& states = searches()[name].states;
    std::vector<QuantumSubgroup> subs;
    for (const auto& st : states)
      if (qg->is_central(st.f)) subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
    for (const auto& st : states) {
      const auto rep = haar_equivalence_report(st, subs);  // throws on disagreement
      if (!rep.consistent()) return false;
      if (name == "kp8" && !rep.is_haar && !rep.f_central && !rep.quotient_type) ++kp8_all_false;
    }
  }
  return kp8_all_false >= 1;
}

// 9. E_phi(E_phi(a) E_phi(b)) = E_phi(a) E_phi(b) over 100 random pairs.
bool multiplicativity() {
  for (const auto& name : builtin_names())
    for (const auto& st : searches()[name].states)
      if (multiplicativity_on_image_residual(st, 100, 12345) > 1e-8) return false;
  return true;
}

// 10. Determinism of the search and lossless canonical serialization.
bool determinism_serialization() {
  for (const auto& name : {"fun:S3", "grp:S3", "kp8"}) {
    const auto a = search_idempotents(builtin(name), 40, 7);
    const auto b = search_idempotents(builtin(name), 40, 7);
    if (a.states.size() != b.states.size()) return false;
    for (size_t i = 0; i < a.states.size(); ++i)
      if ((a.states[i].phi.values() - b.states[i].phi.values()).norm() != 0.0) return false;
  }
  for (const auto& name : builtin_names()) {
    auto qg = builtin(name);
    const std::string text = write_quantum_group(*qg);
    if (write_quantum_group(*parse_quantum_group(text)) != text) return false;
  }
  // kp8 loads only through the validator; a corrupted copy must be rejected.
  auto kp8 = builtin("kp8");
  if (!kp8->report().all_passed()) return false;
  std::string text = write_quantum_group(*kp8);
  const auto pos = text.find("1.0");
  text.replace(pos, 3, "1.1");
  try {
    (void)parse_quantum_group(text);
    return false;
  } catch (const Error&) {}
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)();
  };
  const Criterion criteria[] = {
      {"1. axiom suite (10 builtins, residuals <= 1e-9)", axiom_suite},
      {"2. bijection idempotent states <-> pre-subgroups (<= 1e-8)", bijection},
      {"3. rescaling pre-subgroups <-> group-like projections (<= 1e-8)", rescaling},
      {"4. order isomorphism (convolution == BBS == coidalgebra)", order_isomorphism},
      {"5. completeness vs subgroup oracles", oracle_counts},
      {"6. lemma f * g_b = g(b) f (100 random b)", lemma_gb},
      {"7. remark phi = eps o E_C and quotient dimensions", remark_roundtrip},
      {"8. haar-equivalence three-way agreement, kp8 all-false witness", haar_equivalence},
      {"9. multiplicativity on the image of E_phi (100 pairs)", multiplicativity},
      {"10. determinism and canonical serialization", determinism_serialization},
  };
  bool all = true;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("       (exception: %s)\n", e.what());
      ok = false;
    }
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", c.name);
    all = all && ok;
  }
  std::printf("%s\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return all ? 0 : 1;
}
