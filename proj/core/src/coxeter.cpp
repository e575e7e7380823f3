#include "tlk/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "tlk/errors.hpp"

namespace tlk {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> entries, std::string name)
    : labels_(std::move(labels)), m_(std::move(entries)), name_(std::move(name)) {
  if (m_.size() != labels_.size()) throw ParseError("Coxeter matrix size does not match its labels");
  for (const auto& row : m_)
    if (row.size() != labels_.size()) throw ParseError("Coxeter matrix is not square");
}

namespace {

CoxeterMatrix from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges, std::string name) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (auto [i, j] : edges) m[i][j] = m[j][i] = 3;
  return CoxeterMatrix(std::move(labels), std::move(m), std::move(name));
}

}  // namespace

CoxeterMatrix CoxeterMatrix::from_type(std::string_view spec) {
  if (spec.size() < 2) throw ParseError("bad type '" + std::string(spec) + "'");
  const char family = spec[0];
  int n = 0;
  auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), n);
  if (ec != std::errc() || ptr != spec.data() + spec.size())
    throw ParseError("bad rank in type '" + std::string(spec) + "'");
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case 'A':
      if (n < 2) throw ParseError("type A needs rank >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case 'D':
      if (n < 4) throw ParseError("type D needs rank >= 4");
      for (int i = 0; i + 2 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 3, n - 1});
      break;
    case 'E':
      if (n != 6) throw ParseError("only E6 is supported among type E");
      edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}};
      break;
    default:
      throw ParseError("unknown type family '" + std::string(1, family) + "' (expected A, D or E)");
  }
  return from_edges(static_cast<std::size_t>(n), edges, std::string(spec));
}

bool CoxeterMatrix::small_type() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && m_[i][j] != 2 && m_[i][j] != 3) return false;
  return true;
}

bool CoxeterMatrix::connected() const {
  if (size() == 0) return true;
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < size(); ++j)
      if (!seen[j] && i != j && m_[i][j] != 2) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

CoxeterMatrix CoxeterMatrix::restricted(const std::vector<int>& subset) const {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m;
  for (int i : subset) {
    labels.push_back(labels_[i]);
    std::vector<int> row;
    for (int j : subset) row.push_back(m_[i][j]);
    m.push_back(std::move(row));
  }
  return CoxeterMatrix(std::move(labels), std::move(m));
}

Diagnostics validate(const CoxeterMatrix& m) {
  Diagnostics d;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 1) {
      d.valid = false;
      d.problems.push_back("diagonal entry m(" + m.label(i) + "," + m.label(i) + ") must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m(i, j) != m(j, i)) {
        d.valid = false;
        if (i < j) d.problems.push_back("m(" + m.label(i) + "," + m.label(j) + ") is not symmetric");
      }
      if (m(i, j) != kInfinity && m(i, j) < 2) {
        d.valid = false;
        d.problems.push_back("off-diagonal entry m(" + m.label(i) + "," + m.label(j) + ") must be >= 2 or infinite");
      }
    }
  }
  d.small_type = m.small_type();
  d.connected = m.connected();
  return d;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

namespace {

void extend(const CoxeterMatrix& m, Perm& p, std::vector<bool>& used, std::size_t k, std::vector<Perm>& out) {
  const std::size_t n = m.size();
  if (k == n) {
    out.push_back(p);
    return;
  }
  for (std::size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = m(p[i], img) == m(i, k);
    if (!ok) continue;
    p[k] = static_cast<int>(img);
    used[img] = true;
    extend(m, p, used, k + 1, out);
    used[img] = false;
  }
}

std::vector<Perm> minimal_generators(std::size_t n, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::set<Perm> span = {identity_perm(n)};
  for (const auto& e : elements) {
    if (span.count(e)) continue;
    gens.push_back(e);
    span = std::set<Perm>();
    for (const auto& g : generated_group(n, gens).elements) span.insert(g);
  }
  return gens;
}

int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  const Perm id = identity_perm(p.size());
  while (q != id) {
    q = compose(p, q);
    ++k;
  }
  return k;
}

}  // namespace

AutomorphismGroup automorphism_group(const CoxeterMatrix& m) {
  AutomorphismGroup g;
  Perm p(m.size());
  std::vector<bool> used(m.size(), false);
  extend(m, p, used, 0, g.elements);
  std::sort(g.elements.begin(), g.elements.end());
  g.generators = minimal_generators(m.size(), g.elements);
  return g;
}

AutomorphismGroup generated_group(std::size_t n, const std::vector<Perm>& gens) {
  std::set<Perm> seen = {identity_perm(n)};
  std::vector<Perm> frontier = {identity_perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  AutomorphismGroup out;
  out.elements.assign(seen.begin(), seen.end());
  out.generators = gens;
  return out;
}

AutomorphismGroup sigma_group(const CoxeterMatrix& m, std::string_view spec) {
  const AutomorphismGroup full = automorphism_group(m);
  if (spec == "full") return full;
  if (spec == "trivial") return generated_group(m.size(), {});
  int want = 0;
  if (spec == "order2") want = 2;
  if (spec == "order3") want = 3;
  if (want == 0) throw ParseError("unknown sigma '" + std::string(spec) + "' (expected full, order2, order3 or trivial)");
  for (const auto& e : full.elements)
    if (perm_order(e) == want) return generated_group(m.size(), {e});
  throw ParseError(m.name() + " has no graph automorphism of order " + std::to_string(want));
}

char orbit_type_letter(OrbitType t) { return "ABCD"[static_cast<int>(t)]; }

std::vector<int> IndexOrbit::delta_word() const {
  if (type == OrbitType::D) return {members[0], members[1], members[0]};
  return members;
}

std::string IndexOrbit::name(const CoxeterMatrix& m) const {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) s += (k ? "," : "") + m.label(members[k]);
  return s + "}";
}

std::vector<IndexOrbit> index_orbits(const CoxeterMatrix& m, const AutomorphismGroup& sigma) {
  std::vector<IndexOrbit> out;
  std::vector<bool> seen(m.size(), false);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (seen[i]) continue;
    std::set<int> members;
    for (const auto& g : sigma.elements) members.insert(g[i]);
    IndexOrbit o;
    o.members.assign(members.begin(), members.end());
    for (int x : o.members) seen[x] = true;
    const auto& v = o.members;
    if (v.size() == 1) {
      o.type = OrbitType::A;
    } else if (v.size() == 2 && m(v[0], v[1]) == 2) {
      o.type = OrbitType::B;
    } else if (v.size() == 2 && m(v[0], v[1]) == 3) {
      o.type = OrbitType::D;
    } else if (v.size() == 3 && m(v[0], v[1]) == 2 && m(v[0], v[2]) == 2 && m(v[1], v[2]) == 2) {
      o.type = OrbitType::C;
    } else {
      throw UnsupportedOrbitShape("orbit " + o.name(m) + " is not of type A, B, C or D");
    }
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        long long t;
        if (__builtin_mul_overflow(x[i][k], y[k][j], &t) || __builtin_add_overflow(out[i][j], t, &out[i][j]))
          throw NonSphericalSupport("coefficients grow without bound");
      }
    }
  return out;
}

// Matrix of the simple reflection s_i on the basis (α_j) of the subset.
IntMatrix reflection(const CoxeterMatrix& sub, std::size_t i) {
  const std::size_t n = sub.size();
  IntMatrix r = int_identity(n);
  r[i][i] = -1;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    int m = sub(i, j);
    long long coef;
    if (m == 2) {
      coef = 0;
    } else if (m == 3) {
      coef = 1;
    } else if (m == kInfinity) {
      coef = 2;
    } else {
      throw Error("reflection coefficients are integral only for m in {2, 3, inf}");
    }
    // s_i(α_j) = α_j + coef·α_i, so column j gains coef in row i.
    r[i][j] = coef;
  }
  return r;
}

}  // namespace

int quotient_entry(const CoxeterMatrix& m, const IndexOrbit& j, const IndexOrbit& k) {
  if (j.members == k.members) return 1;
  std::vector<int> subset = j.members;
  subset.insert(subset.end(), k.members.begin(), k.members.end());
  std::sort(subset.begin(), subset.end());
  const CoxeterMatrix sub = m.restricted(subset);
  auto local = [&](int idx) {
    return static_cast<std::size_t>(std::find(subset.begin(), subset.end(), idx) - subset.begin());
  };
  IntMatrix prod = int_identity(subset.size());
  for (int x : j.delta_word()) prod = int_mul(prod, reflection(sub, local(x)));
  for (int x : k.delta_word()) prod = int_mul(prod, reflection(sub, local(x)));
  const IntMatrix id = int_identity(subset.size());
  IntMatrix power = prod;
  for (int order = 1; order <= 100; ++order) {
    if (power == id) return order;
    power = int_mul(power, prod);
  }
  throw NonSphericalSupport("r_J r_K has order > 100 for J = " + j.name(m) + ", K = " + k.name(m));
}

CoxeterMatrix quotient_matrix(const CoxeterMatrix& m, const AutomorphismGroup& sigma) {
  const auto orbits = index_orbits(m, sigma);
  std::vector<std::string> labels;
  for (const auto& o : orbits) labels.push_back(o.name(m));
  std::vector<std::vector<int>> entries(orbits.size(), std::vector<int>(orbits.size(), 1));
  for (std::size_t a = 0; a < orbits.size(); ++a)
    for (std::size_t b = a + 1; b < orbits.size(); ++b)
      entries[a][b] = entries[b][a] = quotient_entry(m, orbits[a], orbits[b]);
  return CoxeterMatrix(std::move(labels), std::move(entries));
}

std::vector<Perm> isomorphisms(const CoxeterMatrix& x, const CoxeterMatrix& y) {
  std::vector<Perm> out;
  if (x.size() != y.size()) return out;
  Perm p = identity_perm(x.size());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i)
      for (std::size_t j = 0; j < x.size() && ok; ++j) ok = y(p[i], p[j]) == x(i, j);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

CoxeterMatrix chain(int n, const std::vector<int>& bonds, std::string name) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = bonds[i];
  return CoxeterMatrix(std::move(labels), std::move(m), std::move(name));
}

}  // namespace

CoxeterMatrix type_B(int n) {
  std::vector<int> bonds(n > 1 ? n - 1 : 0, 3);
  if (!bonds.empty()) bonds.back() = 4;
  return chain(n, bonds, "B" + std::to_string(n));
}

CoxeterMatrix type_F4() { return chain(4, {3, 4, 3}, "F4"); }
CoxeterMatrix type_G2() { return chain(2, {6}, "G2"); }

}  // namespace tlk
