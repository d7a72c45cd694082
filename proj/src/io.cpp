#include "fqg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fqg {

using nlohmann::json;

namespace {

Cplx read_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("expected complex number as [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

void check_index(int i, int n, const char* what) {
  if (i < 0 || i >= n) throw SchemaError(std::string(what) + ": index out of range");
}

json complex_entry(Cplx c) { return json::array({c.real(), c.imag()}); }

}  // namespace

QGPtr parse_quantum_group(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  for (const char* key : {"dim", "basis", "mult", "star", "unit", "coproduct", "counit"})
    if (!j.contains(key)) throw SchemaError(std::string("missing field: ") + key);

  const int n = j["dim"].get<int>();
  if (n <= 0) throw SchemaError("dim must be positive");
  if ((int)j["basis"].size() != n) throw SchemaError("basis labels must have length dim");

  Algebra alg;
  alg.n = n;
  for (const auto& l : j["basis"]) alg.labels.push_back(l.get<std::string>());
  alg.lmult.assign(n, Mat::Zero(n, n));
  for (const auto& e : j["mult"]) {
    if (!e.is_array() || e.size() != 5) throw SchemaError("mult entry must be [i,j,k,re,im]");
    const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    check_index(i, n, "mult");
    check_index(jj, n, "mult");
    check_index(k, n, "mult");
    alg.lmult[i](k, jj) = Cplx(e[3].get<double>(), e[4].get<double>());
  }
  alg.star = Mat::Zero(n, n);
  for (const auto& e : j["star"]) {
    if (!e.is_array() || e.size() != 4) throw SchemaError("star entry must be [i,j,re,im]");
    const int i = e[0].get<int>(), jj = e[1].get<int>();
    check_index(i, n, "star");
    check_index(jj, n, "star");
    alg.star(jj, i) = Cplx(e[2].get<double>(), e[3].get<double>());
  }
  if ((int)j["unit"].size() != n) throw SchemaError("unit must have length dim");
  alg.unit.resize(n);
  for (int i = 0; i < n; ++i) alg.unit(i) = read_complex(j["unit"][i]);

  Mat delta = Mat::Zero(n * n, n);
  for (const auto& e : j["coproduct"]) {
    if (!e.is_array() || e.size() != 5)
      throw SchemaError("coproduct entry must be [i,j,k,re,im]");
    const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    check_index(i, n, "coproduct");
    check_index(jj, n, "coproduct");
    check_index(k, n, "coproduct");
    delta(jj * n + k, i) = Cplx(e[3].get<double>(), e[4].get<double>());
  }
  if ((int)j["counit"].size() != n) throw SchemaError("counit must have length dim");
  Vec counit(n);
  for (int i = 0; i < n; ++i) counit(i) = read_complex(j["counit"][i]);

  std::string name;
  if (j.contains("metadata") && j["metadata"].contains("name"))
    name = j["metadata"]["name"].get<std::string>();

  return QuantumGroup::build(std::move(alg), std::move(delta), counit, global_tol(), name);
}

QGPtr load_quantum_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quantum_group(ss.str());
}

std::string write_quantum_group(const QuantumGroup& qg) {
  const int n = qg.n();
  const Algebra& alg = qg.algebra();
  json j;
  j["dim"] = n;
  j["basis"] = alg.labels;
  json mult = json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        const Cplx c = alg.lmult[i](k, jj);
        if (c != Cplx(0)) mult.push_back(json::array({i, jj, k, c.real(), c.imag()}));
      }
  j["mult"] = mult;
  json star = json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      const Cplx c = alg.star(jj, i);
      if (c != Cplx(0)) star.push_back(json::array({i, jj, c.real(), c.imag()}));
    }
  j["star"] = star;
  json unit = json::array();
  for (int i = 0; i < n; ++i) unit.push_back(complex_entry(alg.unit(i)));
  j["unit"] = unit;
  json cop = json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        const Cplx c = qg.delta()(jj * n + k, i);
        if (c != Cplx(0)) cop.push_back(json::array({i, jj, k, c.real(), c.imag()}));
      }
  j["coproduct"] = cop;
  json counit = json::array();
  for (int i = 0; i < n; ++i) counit.push_back(complex_entry(qg.counit_values()(i)));
  j["counit"] = counit;
  j["metadata"] = {{"name", qg.name()}};
  return j.dump(2) + "\n";
}

void save_quantum_group(const QuantumGroup& qg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << write_quantum_group(qg);
}

}  // namespace fqg
