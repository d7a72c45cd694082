#include "fqg/models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace fqg {

void CayleyTable::validate() const {
  if (order <= 0 || (int)table.size() != order) throw Error("CayleyTable: bad size");
  for (const auto& row : table) {
    if ((int)row.size() != order) throw Error("CayleyTable: ragged table");
    std::set<int> seen(row.begin(), row.end());
    if ((int)seen.size() != order) throw Error("CayleyTable: not a Latin square");
  }
  for (int j = 0; j < order; ++j) {
    std::set<int> seen;
    for (int i = 0; i < order; ++i) seen.insert(table[i][j]);
    if ((int)seen.size() != order) throw Error("CayleyTable: not a Latin square");
  }
  for (int i = 0; i < order; ++i)
    if (table[identity][i] != i || table[i][identity] != i)
      throw Error("CayleyTable: identity law fails");
  for (int i = 0; i < order; ++i)
    if (table[i][inverse[i]] != identity || table[inverse[i]][i] != identity)
      throw Error("CayleyTable: inverse law fails");
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int k = 0; k < order; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw Error("CayleyTable: not associative");
}

namespace {

CayleyTable from_product(int order, const std::vector<std::string>& names,
                         const std::function<int(int, int)>& prod) {
  CayleyTable g;
  g.order = order;
  g.names = names;
  g.table.assign(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) g.table[i][j] = prod(i, j);
  // identity: the unique e with e*x = x for all x
  g.identity = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = g.table[e][x] == x;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  if (g.identity < 0) throw Error("CayleyTable: no identity");
  g.inverse.assign(order, -1);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      if (g.table[i][j] == g.identity) g.inverse[i] = j;
  g.validate();
  return g;
}

}  // namespace

CayleyTable CayleyTable::cyclic(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return from_product(n, names, [n](int i, int j) { return (i + j) % n; });
}

CayleyTable CayleyTable::direct_product(const CayleyTable& a, const CayleyTable& b) {
  const int order = a.order * b.order;
  std::vector<std::string> names(order);
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < b.order; ++j)
      names[i * b.order + j] = "(" + a.names[i] + "," + b.names[j] + ")";
  return from_product(order, names, [&](int x, int y) {
    const int xi = x / b.order, xj = x % b.order;
    const int yi = y / b.order, yj = y % b.order;
    return a.table[xi][yi] * b.order + b.table[xj][yj];
  });
}

CayleyTable CayleyTable::dihedral(int n) {
  // elements r^i s^e encoded as i + n*e
  std::vector<std::string> names(2 * n);
  for (int i = 0; i < n; ++i) {
    names[i] = "r" + std::to_string(i);
    names[n + i] = "r" + std::to_string(i) + "s";
  }
  return from_product(2 * n, names, [n](int x, int y) {
    const int xi = x % n, xe = x / n;
    const int yi = y % n, ye = y / n;
    // (r^xi s^xe)(r^yi s^ye) = r^(xi + yi * (-1)^xe) s^(xe+ye)
    const int i = ((xi + (xe ? n - yi : yi)) % n + n) % n;
    return i + n * ((xe + ye) % 2);
  });
}

CayleyTable CayleyTable::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) {
    std::string s = "[";
    for (int x : perms[i]) s += std::to_string(x);
    names[i] = s + "]";
  }
  auto index_of = [&](const std::vector<int>& q) {
    return (int)(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  return from_product((int)perms.size(), names, [&, n](int x, int y) {
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = perms[x][perms[y][i]];  // apply y first
    return index_of(q);
  });
}

CayleyTable CayleyTable::quaternion() {
  // {1,-1,i,-i,j,-j,k,-k} encoded as (unit u in {1,i,j,k}) * 2 + (sign bit)
  const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // unit multiplication table with result sign: u_table[a][b] = {unit, sign}
  static const int unit_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_tab[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  return from_product(8, names, [](int x, int y) {
    const int xu = x / 2, xs = x % 2, yu = y / 2, ys = y % 2;
    const int u = unit_tab[xu][yu];
    const int s = (xs + ys + sign_tab[xu][yu]) % 2;
    return u * 2 + s;
  });
}

QGPtr function_algebra(const CayleyTable& g, const std::string& name) {
  g.validate();
  const int n = g.order;
  Algebra alg;
  alg.n = n;
  for (int i = 0; i < n; ++i) alg.labels.push_back("d_" + g.names[i]);
  alg.lmult.assign(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) alg.lmult[i](i, i) = 1.0;  // pointwise product
  alg.star = Mat::Identity(n, n);
  alg.unit = Vec::Ones(n);
  Mat delta = Mat::Zero(n * n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) delta(a * n + b, g.table[a][b]) = 1.0;
  Vec counit = Vec::Zero(n);
  counit(g.identity) = 1.0;
  return QuantumGroup::build(std::move(alg), std::move(delta), counit, global_tol(),
                             name.empty() ? "fun" : name);
}

QGPtr group_algebra(const CayleyTable& g, const std::string& name) {
  g.validate();
  const int n = g.order;
  Algebra alg;
  alg.n = n;
  for (int i = 0; i < n; ++i) alg.labels.push_back("l_" + g.names[i]);
  alg.lmult.assign(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alg.lmult[i](g.table[i][j], j) = 1.0;
  alg.star = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) alg.star(g.inverse[i], i) = 1.0;
  alg.unit = Vec::Unit(n, g.identity);
  Mat delta = Mat::Zero(n * n, n);
  for (int i = 0; i < n; ++i) delta(i * n + i, i) = 1.0;
  return QuantumGroup::build(std::move(alg), std::move(delta), Vec(Vec::Ones(n)),
                             global_tol(), name.empty() ? "grp" : name);
}

std::vector<std::vector<int>> subgroup_oracle(const CayleyTable& g) {
  if (g.order > 24) throw Error("subgroup_oracle: order > 24 not supported");
  auto closure = [&](std::set<int> gen) {
    gen.insert(g.identity);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(gen.begin(), gen.end());
      for (int a : cur)
        for (int b : cur) {
          if (gen.insert(g.table[a][b]).second) grew = true;
          if (gen.insert(g.inverse[a]).second) grew = true;
        }
    }
    return std::vector<int>(gen.begin(), gen.end());
  };
  std::set<std::vector<int>> found;
  found.insert(closure({}));
  for (int a = 0; a < g.order; ++a) {
    found.insert(closure({a}));
    for (int b = a + 1; b < g.order; ++b) {
      found.insert(closure({a, b}));
      for (int c = b + 1; c < g.order; ++c) found.insert(closure({a, b, c}));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::string> builtin_names() {
  return {"fun:Z2", "fun:Z3", "fun:Z4", "fun:Z2xZ2", "fun:S3",
          "fun:D4", "grp:S3", "grp:D4", "grp:Q8",    "kp8"};
}

QGPtr builtin(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, QGPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  QGPtr qg;
  if (name == "fun:Z2") qg = function_algebra(CayleyTable::cyclic(2), name);
  else if (name == "fun:Z3") qg = function_algebra(CayleyTable::cyclic(3), name);
  else if (name == "fun:Z4") qg = function_algebra(CayleyTable::cyclic(4), name);
  else if (name == "fun:Z2xZ2")
    qg = function_algebra(
        CayleyTable::direct_product(CayleyTable::cyclic(2), CayleyTable::cyclic(2)), name);
  else if (name == "fun:S3") qg = function_algebra(CayleyTable::symmetric(3), name);
  else if (name == "fun:D4") qg = function_algebra(CayleyTable::dihedral(4), name);
  else if (name == "grp:S3") qg = group_algebra(CayleyTable::symmetric(3), name);
  else if (name == "grp:D4") qg = group_algebra(CayleyTable::dihedral(4), name);
  else if (name == "grp:Q8") qg = group_algebra(CayleyTable::quaternion(), name);
  else if (name == "kp8") qg = kac_paljutkin();
  else throw Error("unknown builtin model: " + name);

  cache[name] = qg;
  return qg;
}

}  // namespace fqg
