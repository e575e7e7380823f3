#include "tlk/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tlk/errors.hpp"

namespace tlk {

Coords reflect(const CoxeterMatrix& m, int i, const Coords& v) {
  Coords w = v;
  int sum = -v[i];
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    switch (m(i, j)) {
      case 2:
        break;
      case 3:
        sum += v[j];
        break;
      case kInfinity:
        sum += 2 * v[j];
        break;
      default:
        throw Error("root coordinates are integral only for m in {2, 3, inf}");
    }
  }
  w[i] = sum;
  return w;
}

namespace {

bool nonnegative(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

}  // namespace

PositiveRootSystem PositiveRootSystem::generate(const CoxeterMatrix& m, std::size_t cap) {
  const std::size_t n = m.size();
  PositiveRootSystem rs;
  rs.matrix_ = m;

  // Closure with breadth-first depth: simple roots sit at depth 1.
  std::map<Coords, int> depth;
  std::deque<Coords> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    depth[e] = 1;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coords v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Coords w = reflect(m, static_cast<int>(i), v);
      if (!nonnegative(w) || depth.count(w)) continue;
      depth[w] = depth[v] + 1;
      if (depth.size() > cap)
        throw RootBudgetExceeded("more than " + std::to_string(cap) + " positive roots; the matrix is not spherical");
      queue.push_back(std::move(w));
    }
  }

  for (const auto& [c, dep] : depth) rs.roots_.push_back(c);
  std::sort(rs.roots_.begin(), rs.roots_.end(), [&](const Coords& x, const Coords& y) {
    int dx = depth[x], dy = depth[y];
    if (dx != dy) return dx < dy;
    return x > y;
  });
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    rs.index_[rs.roots_[k]] = static_cast<int>(k);
    rs.depth_.push_back(depth[rs.roots_[k]]);
  }
  rs.simple_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    rs.simple_[i] = rs.index_.at(e);
  }

  rs.steps_.assign(n, std::vector<Step>(rs.roots_.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
      Step& s = rs.steps_[i][k];
      if (rs.simple_[i] == static_cast<int>(k)) {
        s = {Move::Simple, -1};
        continue;
      }
      Coords w = reflect(m, static_cast<int>(i), rs.roots_[k]);
      int t = rs.index_of(w);
      if (t < 0) throw Error("reflection left the positive roots at a non-simple root");
      if (t == static_cast<int>(k)) {
        s = {Move::Loop, t};
      } else if (rs.depth_[t] == rs.depth_[k] + 1) {
        s = {Move::Up, t};
        rs.edges_.push_back({t, static_cast<int>(i), static_cast<int>(k)});
      } else if (rs.depth_[t] + 1 == rs.depth_[k]) {
        s = {Move::Down, t};
      } else {
        throw Error("reflection edge does not change depth by one");
      }
    }
  }
  std::sort(rs.edges_.begin(), rs.edges_.end());
  return rs;
}

int PositiveRootSystem::index_of(const Coords& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

int PositiveRootSystem::apply(const Perm& sigma, int k) const {
  const Coords& c = roots_[k];
  Coords img(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) img[sigma[i]] = c[i];
  int t = index_of(img);
  if (t < 0) throw Error("permutation is not a graph automorphism");
  return t;
}

std::string PositiveRootSystem::root_name(int k) const {
  std::string s;
  const Coords& c = roots_[k];
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (c[i] > 1) s += std::to_string(c[i]);
    s += "α" + matrix_.label(i);
  }
  return s;
}

OrbitPartition sigma_orbits(const PositiveRootSystem& rs, const AutomorphismGroup& sigma) {
  OrbitPartition p;
  p.orbit_of.assign(rs.size(), -1);
  std::vector<SigmaOrbit> found;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    if (p.orbit_of[k] >= 0) continue;
    std::set<int> members;
    for (const auto& g : sigma.elements) members.insert(rs.apply(g, static_cast<int>(k)));
    SigmaOrbit o;
    o.members.assign(members.begin(), members.end());
    o.depth = rs.depth(o.members.front());
    for (int x : o.members) {
      if (rs.depth(x) != o.depth) throw Error("graph automorphism does not preserve depth");
      p.orbit_of[x] = static_cast<int>(found.size());
    }
    found.push_back(std::move(o));
  }
  // Roots are depth-sorted, so discovery order is already (depth, least member).
  p.orbits = std::move(found);
  return p;
}

std::vector<int> j_mesh(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j, int theta) {
  std::set<int> roots(orbits.orbits[theta].members.begin(), orbits.orbits[theta].members.end());
  std::vector<int> frontier(roots.begin(), roots.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int k : frontier)
      for (int i : j.members) {
        const Step& s = rs.step(i, k);
        if (s.move == Move::Simple) continue;
        if (roots.insert(s.target).second) next.push_back(s.target);
      }
    frontier = std::move(next);
  }
  std::set<int> out;
  for (int k : roots) out.insert(orbits.orbit_of[k]);
  for (int o : out)
    for (int k : orbits.orbits[o].members)
      if (!roots.count(k)) throw Error("mesh is not a union of orbits");
  return std::vector<int>(out.begin(), out.end());
}

int theta_j(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j) {
  return orbits.orbit_of[rs.simple(j.members.front())];
}

int theta_j_prime(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j) {
  if (j.type != OrbitType::D) return -1;
  Coords c(rs.rank(), 0);
  c[j.members[0]] = 1;
  c[j.members[1]] = 1;
  return orbits.orbit_of[rs.index_of(c)];
}

const std::vector<std::string>& configuration_tags(OrbitType t) {
  static const std::vector<std::string> tags[4] = {
      {"A1", "A2", "A3"},
      {"B1", "B2", "B3", "B4", "B5"},
      {"C1", "C2", "C3", "C4", "C5", "C6"},
      {"D1", "D2", "D3", "D4", "D5"},
  };
  return tags[static_cast<int>(t)];
}

int configuration_orbit_count(const std::string& tag) {
  static const std::map<std::string, int> counts = {
      {"A1", 1}, {"A2", 1}, {"A3", 2}, {"B1", 1}, {"B2", 1}, {"B3", 2}, {"B4", 3}, {"B5", 4}, {"C1", 1}, {"C2", 1},
      {"C3", 2}, {"C4", 4}, {"C5", 4}, {"C6", 8}, {"D1", 2}, {"D2", 1}, {"D3", 3}, {"D4", 4}, {"D5", 6},
  };
  return counts.at(tag);
}

namespace {

// Depth of each orbit above the lowest one, bottom-up.
const std::map<std::string, std::vector<int>>& depth_profiles() {
  static const std::map<std::string, std::vector<int>> profiles = {
      {"A1", {0}},          {"A2", {0}},          {"A3", {0, 1}},
      {"B1", {0}},          {"B2", {0}},          {"B3", {0, 1}},
      {"B4", {0, 1, 2}},    {"B5", {0, 1, 1, 2}}, {"C1", {0}},
      {"C2", {0}},          {"C3", {0, 1}},       {"C4", {0, 1, 1, 2}},
      {"C5", {0, 1, 2, 3}}, {"C6", {0, 1, 1, 1, 2, 2, 2, 3}},
      {"D1", {0, 1}},       {"D2", {0}},          {"D3", {0, 1, 2}},
      {"D4", {0, 1, 2, 3}}, {"D5", {0, 1, 1, 2, 2, 3}},
  };
  return profiles;
}

}  // namespace

MeshConfiguration classify_mesh(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j,
                                const std::vector<int>& mesh) {
  MeshConfiguration cfg;
  cfg.orbits = mesh;
  std::stable_sort(cfg.orbits.begin(), cfg.orbits.end(),
                   [&](int x, int y) { return orbits.orbits[x].depth < orbits.orbits[y].depth; });
  const int tj = theta_j(rs, orbits, j);
  const bool has_theta = std::find(mesh.begin(), mesh.end(), tj) != mesh.end();
  const std::size_t n = mesh.size();
  std::string tag;
  switch (j.type) {
    case OrbitType::A:
      if (n == 1) tag = has_theta ? "A1" : "A2";
      if (n == 2) tag = "A3";
      break;
    case OrbitType::B:
      if (n == 1) tag = has_theta ? "B1" : "B2";
      if (n >= 2 && n <= 4) tag = "B" + std::to_string(n + 1);
      break;
    case OrbitType::C:
      if (n == 1) tag = has_theta ? "C1" : "C2";
      if (n == 2) tag = "C3";
      if (n == 4) {
        const int spread = orbits.orbits[cfg.orbits.back()].depth - orbits.orbits[cfg.orbits.front()].depth;
        tag = spread == 3 ? "C5" : "C4";
      }
      if (n == 8) tag = "C6";
      break;
    case OrbitType::D:
      if (has_theta) {
        if (n == 2 && std::find(mesh.begin(), mesh.end(), theta_j_prime(rs, orbits, j)) != mesh.end()) tag = "D1";
      } else if (n == 1) {
        tag = "D2";
      } else if (n == 3) {
        tag = "D3";
      } else if (n == 4) {
        tag = "D4";
      } else if (n == 6) {
        tag = "D5";
      }
      break;
  }
  auto describe = [&] {
    std::string s = "J = " + j.name(rs.matrix()) + ", orbits at depths";
    for (int o : cfg.orbits) s += " " + std::to_string(orbits.orbits[o].depth);
    return s;
  };
  if (tag.empty()) throw UnrecognizedConfiguration(describe());
  const auto& profile = depth_profiles().at(tag);
  const int base = orbits.orbits[cfg.orbits.front()].depth;
  for (std::size_t k = 0; k < n; ++k)
    if (orbits.orbits[cfg.orbits[k]].depth - base != profile[k])
      throw UnrecognizedConfiguration(describe() + " do not fit " + tag);
  // Loop pattern of the singleton configurations: every member fixed by each s_j.
  if (tag == "A2" || tag == "B2" || tag == "C2" || tag == "D2") {
    for (int k : orbits.orbits[cfg.orbits[0]].members)
      for (int i : j.members)
        if (rs.step(i, k).move != Move::Loop) throw UnrecognizedConfiguration(describe() + " lacks the loop pattern");
  }
  cfg.tag = tag;
  return cfg;
}

std::vector<MeshConfiguration> meshes(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j) {
  std::vector<MeshConfiguration> out;
  std::vector<bool> covered(orbits.orbits.size(), false);
  for (std::size_t t = 0; t < orbits.orbits.size(); ++t) {
    if (covered[t]) continue;
    auto mesh = j_mesh(rs, orbits, j, static_cast<int>(t));
    for (int o : mesh) covered[o] = true;
    out.push_back(classify_mesh(rs, orbits, j, mesh));
  }
  return out;
}

std::map<std::string, int> census(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j) {
  std::map<std::string, int> counts;
  for (const auto& tag : configuration_tags(j.type)) counts[tag] = 0;
  for (const auto& cfg : meshes(rs, orbits, j)) ++counts[cfg.tag];
  return counts;
}

}  // namespace tlk
