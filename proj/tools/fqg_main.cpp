#include <cstdio>
#include <fstream>
#include <random>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqg/coidalgebra.hpp"
#include "fqg/io.hpp"
#include "fqg/linalg.hpp"
#include "fqg/lattice.hpp"
#include "fqg/models.hpp"
#include "fqg/presubgroup.hpp"

namespace {

using namespace fqg;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kAxiomFail = 3;

std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;  // snap sub-tolerance noise, normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string num(Cplx z) { return "(" + num(z.real()) + ", " + num(z.imag()) + ")"; }

std::string vec_str(const Vec& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) out += (i ? " " : "") + num(v(i));
  return out;
}

struct ModelOpts {
  std::string example;
  std::string input;
  double tol = 1e-9;
};

void add_model_opts(CLI::App* cmd, ModelOpts& opts) {
  auto* ex = cmd->add_option("--example", opts.example, "built-in model name");
  auto* in = cmd->add_option("--input", opts.input, "quantum group JSON file");
  cmd->add_option("--tol", opts.tol, "global tolerance")->capture_default_str();
  ex->excludes(in);
  in->excludes(ex);
}

QGPtr load_model(const ModelOpts& opts) {
  global_tol() = opts.tol;
  if (!opts.example.empty()) return builtin(opts.example);
  if (!opts.input.empty()) return load_quantum_group(opts.input);
  throw CLI::ValidationError("one of --example or --input is required");
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw Error("cannot open output file: " + out_path);
  os << text;
}

/// Haar flags via the three-way equivalence report; reports are certified
/// to be internally consistent, so the is_haar bit alone is printed.
std::vector<bool> haar_flags_of(const QGPtr& qg, const std::vector<IdempotentState>& states) {
  std::vector<QuantumSubgroup> subs;
  for (const auto& st : states)
    if (qg->is_central(st.f)) subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
  std::vector<bool> flags;
  for (const auto& st : states) flags.push_back(haar_equivalence_report(st, subs).is_haar);
  return flags;
}

int cmd_validate(const ModelOpts& opts) {
  const QGPtr qg = load_model(opts);  // throws ValidationError on axiom failure
  std::printf("%s: n = %d\n%s", qg->name().c_str(), qg->n(), qg->report().summary().c_str());
  std::printf("all axioms passed at tol = %s\n", num(qg->tol()).c_str());
  return kOk;
}

int cmd_haar(const ModelOpts& opts) {
  const QGPtr qg = load_model(opts);
  std::printf("haar state h: %s\n", vec_str(qg->haar_values()).c_str());
  std::printf("haar element eta: %s\n", vec_str(qg->haar_element().coords()).c_str());
  for (int i = 0; i < qg->n(); ++i)
    std::printf("S(e_%d) = %s\n", i, vec_str(Vec(qg->antipode().col(i))).c_str());
  return kOk;
}

int cmd_idempotents(const ModelOpts& opts, int seeds, unsigned long long rng_seed,
                    const std::string& format, const std::string& out_path) {
  const QGPtr qg = load_model(opts);
  const SearchResult res = search_idempotents(qg, seeds, rng_seed);
  const std::vector<bool> flags = haar_flags_of(qg, res.states);
  std::vector<int> coidal_dims;
  for (const auto& st : res.states)
    coidal_dims.push_back(image_coidalgebra(qg, expectation_of_state(st)).dim());

  std::string text;
  if (format == "json") {
    nlohmann::json j;
    j["model"] = qg->name();
    j["count"] = res.states.size();
    j["exhaustive"] = res.exhaustive;
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < res.states.size(); ++i) {
      nlohmann::json e;
      e["index"] = i;
      auto cv = [](const Vec& v) {
        nlohmann::json a = nlohmann::json::array();
        for (int k = 0; k < v.size(); ++k)
          a.push_back({std::atof(num(v(k).real()).c_str()), std::atof(num(v(k).imag()).c_str())});
        return a;
      };
      e["state"] = cv(res.states[i].phi.values());
      e["rho"] = cv(res.states[i].rho.coords());
      e["f"] = cv(res.states[i].f.coords());
      e["p"] = cv(res.states[i].p.coords());
      e["is_haar"] = (bool)flags[i];
      e["coidalgebra_dim"] = coidal_dims[i];
      arr.push_back(e);
    }
    j["states"] = arr;
    text = j.dump(2) + "\n";
  } else {
    text = qg->name() + ": " + std::to_string(res.states.size()) + " idempotent states" +
           (res.exhaustive ? "" : " (search non-exhaustive)") + "\n";
    for (size_t i = 0; i < res.states.size(); ++i) {
      text += "phi_" + std::to_string(i) + (flags[i] ? " [haar]" : " [non-haar]") +
              " coidalgebra_dim=" + std::to_string(coidal_dims[i]) + "\n";
      text += "  phi: " + vec_str(res.states[i].phi.values()) + "\n";
      text += "  rho: " + vec_str(res.states[i].rho.coords()) + "\n";
      text += "  f:   " + vec_str(res.states[i].f.coords()) + "\n";
      text += "  p:   " + vec_str(res.states[i].p.coords()) + "\n";
    }
  }
  write_out(text, out_path);
  return kOk;
}

int cmd_lattice(const ModelOpts& opts, int seeds, unsigned long long rng_seed,
                const std::string& format, const std::string& out_path) {
  const QGPtr qg = load_model(opts);
  const SearchResult res = search_idempotents(qg, seeds, rng_seed);
  const IdempotentLattice lat = build_lattice(qg, res.states);
  const std::vector<bool> flags = haar_flags_of(qg, lat.elements);
  write_out(export_lattice(lat, format, res.exhaustive, flags), out_path);
  return kOk;
}

// ---- verify suites -------------------------------------------------------

struct Suite {
  bool ok = true;
  void check(const std::string& name, double residual, double threshold) {
    const bool pass = residual <= threshold;
    ok = ok && pass;
    std::printf("  [%s] %s  residual=%s threshold=%s\n", pass ? "pass" : "FAIL", name.c_str(),
                num(residual).c_str(), num(threshold).c_str());
  }
  void check(const std::string& name, bool pass) {
    ok = ok && pass;
    std::printf("  [%s] %s\n", pass ? "pass" : "FAIL", name.c_str());
  }
};

void verify_bijection(const QGPtr& qg, const std::vector<IdempotentState>& states, Suite& s) {
  for (size_t i = 0; i < states.size(); ++i) {
    const auto& st = states[i];
    const std::string tag = "phi_" + std::to_string(i);
    const Functional back = state_of_presubgroup(PreSubgroup{st.f});
    s.check(tag + ": phi -> f -> omega_ff -> phi", back.norm_diff(st.phi), 1e-8);
    const Element f_back = presubgroup_of(back).f;
    s.check(tag + ": f -> omega_ff -> f", f_back.norm_diff(st.f), 1e-8);
    const Element rho2 = st.rho * st.rho;
    const Cplx eps_rho = qg->counit(st.rho);
    s.check(tag + ": rho^2 = eps(rho) rho", (rho2 - st.rho * eps_rho).coords().norm(), 1e-8);
    double worst = 0.0;
    const Cplx eps_f = qg->counit(st.f);
    for (int k = 0; k < qg->n(); ++k) {
      const Cplx lhs = st.phi(qg->basis_element(k));
      const Cplx rhs = eps_f * qg->haar_inner(st.f, qg->basis_element(k));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    s.check(tag + ": omega_ff = eps(f) <f, .>", worst, 1e-8);
  }
}

void verify_rescaling(const QGPtr& qg, const std::vector<IdempotentState>& states, Suite& s) {
  for (size_t i = 0; i < states.size(); ++i) {
    const auto& st = states[i];
    const std::string tag = "phi_" + std::to_string(i);
    const GroupLikeProjection p = to_grouplike(PreSubgroup{st.f});
    s.check(tag + ": f/eps(f) is group-like projection", is_grouplike_projection(p.p));
    const PreSubgroup f_back = to_presubgroup(p);
    s.check(tag + ": p -> f roundtrip", (f_back.f - st.f).coords().norm(), 1e-8);
    const GroupLikeProjection p_back = to_grouplike(f_back);
    s.check(tag + ": f -> p roundtrip", (p_back.p - st.p).coords().norm(), 1e-8);
  }
}

void verify_order(const QGPtr& qg, const std::vector<IdempotentState>& states, Suite& s) {
  std::vector<Coidalgebra> coidals;
  for (const auto& st : states) coidals.push_back(image_coidalgebra(qg, expectation_of_state(st)));
  bool all = true;
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = 0; j < states.size(); ++j) {
      const bool via_states = order_le(states[i].phi, states[j].phi);
      const bool via_bbs = bbs_order(PreSubgroup{states[i].f}, PreSubgroup{states[j].f});
      const bool via_coidal =
          lin::span_contained(coidals[j].basis, coidals[i].basis, qg->gram(), 1e-6);
      all = all && (via_states == via_bbs) && (via_states == via_coidal);
    }
  s.check("state order == BBS order == reverse coidalgebra inclusion", all);
  const Functional eps = counit_functional(qg);
  const Functional h = haar_state(qg);
  bool extremes = true;
  for (const auto& st : states)
    extremes = extremes && order_le(eps, st.phi) && order_le(st.phi, h);
  s.check("bottom = eps, top = h", extremes);
}

void verify_remark(const QGPtr& qg, const std::vector<IdempotentState>& states, Suite& s) {
  for (size_t i = 0; i < states.size(); ++i) {
    const auto& st = states[i];
    const std::string tag = "phi_" + std::to_string(i);
    const Coidalgebra c = image_coidalgebra(qg, expectation_of_state(st));
    const Functional back = state_of_coidalgebra(c);
    s.check(tag + ": eps o E_{C_phi} = phi", back.norm_diff(st.phi), 1e-8);
  }
}

void verify_lemma_gb(const QGPtr& qg, const std::vector<IdempotentState>& states, Suite& s) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = 0; j < states.size(); ++j) {
      const Functional& f = states[i].phi;
      const Functional& g = states[j].phi;
      if (convolve(g, f).norm_diff(f) > 1e-8 || convolve(f, g).norm_diff(f) > 1e-8) continue;
      double worst = 0.0;
      for (int t = 0; t < 100; ++t) {
        Vec b(qg->n());
        for (int k = 0; k < qg->n(); ++k) b(k) = Cplx(gauss(rng), gauss(rng));
        worst = std::max(worst, lemma_gb_check(f, g, qg->element(b)) / std::max(1.0, b.norm()));
      }
      s.check("f * g_b = g(b) f for (phi_" + std::to_string(i) + ", phi_" + std::to_string(j) + ")",
              worst, 1e-8);
    }
}

void verify_haar_equivalence(const QGPtr& qg, const std::vector<IdempotentState>& states,
                             Suite& s) {
  std::vector<QuantumSubgroup> subs;
  for (const auto& st : states)
    if (qg->is_central(st.f)) subs.push_back(quantum_subgroup_from_central(PreSubgroup{st.f}));
  int haar_count = 0;
  bool all_consistent = true;
  for (const auto& st : states) {
    const HaarEquivalenceReport rep = haar_equivalence_report(st, subs);  // throws if inconsistent
    all_consistent = all_consistent && rep.consistent();
    if (rep.is_haar) ++haar_count;
  }
  s.check("three-way equivalence consistent on all " + std::to_string(states.size()) + " states",
          all_consistent);
  std::printf("  haar idempotents: %d of %zu\n", haar_count, states.size());
  for (const auto& sub : subs) {
    const Coidalgebra q = quotient_coidalgebra(sub);
    s.check("quotient coidalgebra of subgroup dim " + std::to_string(sub.target->n()) +
                " matches image of T",
            true);
    (void)q;
  }
}

void verify_multiplicativity(const QGPtr& qg, const std::vector<IdempotentState>& states,
                             Suite& s) {
  (void)qg;
  for (size_t i = 0; i < states.size(); ++i)
    s.check("E_phi(E_phi(a) E_phi(b)) = E_phi(a) E_phi(b) for phi_" + std::to_string(i),
            multiplicativity_on_image_residual(states[i], 100, 12345), 1e-8);
}

int cmd_verify(const ModelOpts& opts, const std::string& what, int seeds,
               unsigned long long rng_seed) {
  const QGPtr qg = load_model(opts);
  const SearchResult res = search_idempotents(qg, seeds, rng_seed);
  std::printf("%s: verifying '%s' on %zu discovered idempotent states\n", qg->name().c_str(),
              what.c_str(), res.states.size());
  Suite s;
  if (what == "bijection") verify_bijection(qg, res.states, s);
  else if (what == "rescaling") verify_rescaling(qg, res.states, s);
  else if (what == "order") verify_order(qg, res.states, s);
  else if (what == "remark") verify_remark(qg, res.states, s);
  else if (what == "lemma-gb") verify_lemma_gb(qg, res.states, s);
  else if (what == "haar-equivalence") verify_haar_equivalence(qg, res.states, s);
  else if (what == "multiplicativity") verify_multiplicativity(qg, res.states, s);
  else throw CLI::ValidationError("unknown --what value: " + what);
  std::printf("%s\n", s.ok ? "VERIFY PASS" : "VERIFY FAIL");
  return s.ok ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quantum group toolkit: Haar structure, idempotent states, lattices"};
  app.require_subcommand(1);

  ModelOpts opts;
  int seeds = 40;
  unsigned long long rng_seed = 1;
  std::string format_lat = "dot", format_idem = "text", out_path, what;

  auto* validate = app.add_subcommand("validate", "run the axiom suite");
  add_model_opts(validate, opts);

  auto* haar = app.add_subcommand("haar", "print Haar state, Haar element and antipode");
  add_model_opts(haar, opts);

  auto* idem = app.add_subcommand("idempotents", "search for idempotent states");
  add_model_opts(idem, opts);
  idem->add_option("--seeds", seeds, "random seeds for the search")->capture_default_str();
  idem->add_option("--rng-seed", rng_seed, "rng seed")->capture_default_str();
  idem->add_option("--format", format_idem, "text|json")->capture_default_str();
  idem->add_option("--out", out_path, "output file (default stdout)");

  auto* lattice = app.add_subcommand("lattice", "build and export the idempotent-state lattice");
  add_model_opts(lattice, opts);
  lattice->add_option("--seeds", seeds, "random seeds for the search")->capture_default_str();
  lattice->add_option("--rng-seed", rng_seed, "rng seed")->capture_default_str();
  lattice->add_option("--format", format_lat, "dot|json")->capture_default_str();
  lattice->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a named theorem suite");
  add_model_opts(verify, opts);
  verify->add_option("--what", what, "bijection|rescaling|order|remark|lemma-gb|haar-equivalence|multiplicativity")
      ->required();
  verify->add_option("--seeds", seeds, "random seeds for the search")->capture_default_str();
  verify->add_option("--rng-seed", rng_seed, "rng seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts);
    if (haar->parsed()) return cmd_haar(opts);
    if (idem->parsed()) return cmd_idempotents(opts, seeds, rng_seed, format_idem, out_path);
    if (lattice->parsed()) return cmd_lattice(opts, seeds, rng_seed, format_lat, out_path);
    if (verify->parsed()) return cmd_verify(opts, what, seeds, rng_seed);
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "axiom failure:\n%s\n", e.what());
    return kAxiomFail;
  } catch (const SchemaError& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kVerifyFail;
  }
  return kUsage;
}
