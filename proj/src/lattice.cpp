#include "fqg/lattice.hpp"

#include <algorithm>

#include <json.hpp>

#include "fqg/linalg.hpp"

namespace fqg {

namespace {

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::atof(buf);
}

nlohmann::json coords_json(const Vec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i)
    arr.push_back({round12(v(i).real()), round12(v(i).imag())});
  return arr;
}

// Index of the unique maximal (resp. minimal) element of a subset, or -1.
int unique_extremum(const std::vector<int>& subset, const std::vector<std::vector<bool>>& leq,
                    bool maximal) {
  for (int cand : subset) {
    bool ok = true;
    for (int other : subset) {
      const bool dominated = maximal ? leq[other][cand] : leq[cand][other];
      if (!dominated) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  return -1;
}

}  // namespace

IdempotentLattice build_lattice(const QGPtr& qg, std::vector<IdempotentState> states) {
  IdempotentLattice lat;
  lat.owner = qg;
  lat.elements = std::move(states);
  const int m = (int)lat.elements.size();

  for (const auto& st : lat.elements)
    if (!is_idempotent_state(st.phi)) throw Error("build_lattice: element not idempotent");

  lat.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lat.leq[i][j] = order_le(lat.elements[i].phi, lat.elements[j].phi);

  for (int i = 0; i < m; ++i) {
    if (!lat.leq[i][i]) throw Error("build_lattice: order not reflexive");
    for (int j = 0; j < m; ++j) {
      if (i != j && lat.leq[i][j] && lat.leq[j][i])
        throw Error("build_lattice: antisymmetry violated (duplicate states?)");
      for (int k = 0; k < m; ++k)
        if (lat.leq[i][j] && lat.leq[j][k] && !lat.leq[i][k])
          throw Error("build_lattice: order not transitive");
    }
  }

  const Functional eps = counit_functional(qg);
  const Functional h = haar_state(qg);
  for (int i = 0; i < m; ++i) {
    if (lat.elements[i].phi.norm_diff(eps) <= 1e-8) lat.bottom = i;
    if (lat.elements[i].phi.norm_diff(h) <= 1e-8) lat.top = i;
  }
  if (lat.bottom < 0 || lat.top < 0) throw Error("build_lattice: eps or h missing");
  for (int i = 0; i < m; ++i)
    if (!lat.leq[lat.bottom][i] || !lat.leq[i][lat.top])
      throw Error("build_lattice: eps is not bottom or h is not top");

  // Transitive reduction: i -> j is a Hasse edge iff i < j strictly with
  // nothing strictly between.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !lat.leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < m; ++k)
        if (k != i && k != j && lat.leq[i][k] && lat.leq[k][j]) {
          covered = false;
          break;
        }
      if (covered) lat.hasse_edges.emplace_back(i, j);
    }

  for (const auto& st : lat.elements)
    lat.coidalgebras.push_back(image_coidalgebra(qg, expectation_of_state(st)));

  lat.meet_table.assign(m, std::vector<int>(m, -1));
  lat.join_table.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> lower, upper;
      for (int k = 0; k < m; ++k) {
        if (lat.leq[k][i] && lat.leq[k][j]) lower.push_back(k);
        if (lat.leq[i][k] && lat.leq[j][k]) upper.push_back(k);
      }
      lat.meet_table[i][j] = unique_extremum(lower, lat.leq, true);
      lat.join_table[i][j] = unique_extremum(upper, lat.leq, false);
    }
  return lat;
}

namespace {

IdempotentState state_from_basis(const IdempotentLattice& lat, const Mat& basis,
                                 int expected_index) {
  const Coidalgebra c = expected_projection(lat.owner, basis);
  const Functional phi = state_of_coidalgebra(c);
  IdempotentState st = presubgroup_of(phi);
  if (expected_index >= 0 &&
      st.phi.norm_diff(lat.elements[expected_index].phi) > 1e-6)
    throw Error("lattice meet/join disagrees with the poset-theoretic value");
  return st;
}

}  // namespace

IdempotentState join(const IdempotentLattice& lat, int i, int j) {
  // Join of states = intersection of coidalgebras (the correspondence is
  // order-reversing).
  const auto& qg = lat.owner;
  const int n = qg->n();
  const Mat pi_ = lat.coidalgebras[i].expectation;
  const Mat pj_ = lat.coidalgebras[j].expectation;
  Mat stacked(2 * n, n);
  stacked.topRows(n) = Mat::Identity(n, n) - pi_;
  stacked.bottomRows(n) = Mat::Identity(n, n) - pj_;
  const Mat inter = lin::gram_orthonormalize(lin::nullspace(stacked, 1e-9), qg->gram());
  return state_from_basis(lat, inter, lat.join_table[i][j]);
}

IdempotentState meet(const IdempotentLattice& lat, int i, int j) {
  // Meet of states = *-algebra generated by the union of the coidalgebras.
  const auto& qg = lat.owner;
  const Algebra& alg = qg->algebra();
  Mat cols(qg->n(), 1 + lat.coidalgebras[i].dim() + lat.coidalgebras[j].dim());
  cols.col(0) = alg.unit;
  cols.middleCols(1, lat.coidalgebras[i].dim()) = lat.coidalgebras[i].basis;
  cols.rightCols(lat.coidalgebras[j].dim()) = lat.coidalgebras[j].basis;
  Mat basis = lin::gram_orthonormalize(cols, qg->gram());
  for (int round = 0; round < qg->n(); ++round) {
    const int d = (int)basis.cols();
    Mat grown(qg->n(), d + d * d + d);
    grown.leftCols(d) = basis;
    for (int a = 0; a < d; ++a) {
      grown.col(d + d * d + a) = alg.adjoint(basis.col(a));
      for (int b = 0; b < d; ++b)
        grown.col(d + a * d + b) = alg.multiply(basis.col(a), basis.col(b));
    }
    basis = lin::gram_orthonormalize(grown, qg->gram());
    if ((int)basis.cols() == d) break;
  }
  return state_from_basis(lat, basis, lat.meet_table[i][j]);
}

std::string export_lattice(const IdempotentLattice& lat, const std::string& format,
                           bool exhaustive, const std::vector<bool>& haar_flags) {
  const int m = (int)lat.elements.size();
  if (format == "dot") {
    std::string out = "digraph idempotent_lattice {\n  rankdir=BT;\n";
    if (!exhaustive) out += "  label=\"search non-exhaustive\";\n";
    for (int i = 0; i < m; ++i) {
      std::string label = "phi" + std::to_string(i);
      if (i == lat.bottom) label += " = eps";
      if (i == lat.top) label += " = h";
      if (!haar_flags.empty() && haar_flags[i]) label += " [haar]";
      out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const auto& [lo, hi] : lat.hasse_edges)
      out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
    out += "}\n";
    return out;
  }
  if (format == "json") {
    nlohmann::json j;
    j["model"] = lat.owner->name();
    j["exhaustive"] = exhaustive;
    j["bottom"] = lat.bottom;
    j["top"] = lat.top;
    nlohmann::json elems = nlohmann::json::array();
    for (int i = 0; i < m; ++i) {
      nlohmann::json e;
      e["index"] = i;
      e["state"] = coords_json(lat.elements[i].phi.values());
      e["rho"] = coords_json(lat.elements[i].rho.coords());
      e["f"] = coords_json(lat.elements[i].f.coords());
      e["p"] = coords_json(lat.elements[i].p.coords());
      e["coidalgebra_dim"] = lat.coidalgebras[i].dim();
      if (!haar_flags.empty()) e["is_haar"] = (bool)haar_flags[i];
      elems.push_back(e);
    }
    j["elements"] = elems;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [lo, hi] : lat.hasse_edges) edges.push_back({lo, hi});
    j["hasse_edges"] = edges;
    return j.dump(2) + "\n";
  }
  throw Error("export_lattice: unknown format '" + format + "'");
}

}  // namespace fqg
