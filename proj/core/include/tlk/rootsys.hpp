#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tlk/coxeter.hpp"

namespace tlk {

using Coords = std::vector<int>;

// (upper, label, lower) with lower = s_label(upper) one level down.
struct Edge {
  int upper;
  int label;
  int lower;
  friend bool operator<(const Edge& x, const Edge& y) {
    return std::tie(x.upper, x.label, x.lower) < std::tie(y.upper, y.label, y.lower);
  }
  friend bool operator==(const Edge& x, const Edge& y) {
    return x.upper == y.upper && x.label == y.label && x.lower == y.lower;
  }
};

// How s_i moves a positive root.
enum class Move { Simple, Loop, Up, Down };

struct Step {
  Move move;
  int target;  // s_i(α) for Up / Down, the root itself for Loop, -1 for Simple
};

class PositiveRootSystem {
 public:
  static constexpr std::size_t kDefaultCap = 10000;
  static PositiveRootSystem generate(const CoxeterMatrix& m, std::size_t cap = kDefaultCap);

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.size(); }
  std::size_t size() const { return roots_.size(); }
  const Coords& coords(int k) const { return roots_[k]; }
  int depth(int k) const { return depth_[k]; }
  int max_depth() const { return depth_.empty() ? 0 : depth_.back(); }
  int simple(int i) const { return simple_[i]; }
  // -1 if the coordinates are not a positive root.
  int index_of(const Coords& c) const;
  const Step& step(int i, int k) const { return steps_[i][k]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Image of root k under a graph automorphism.
  int apply(const Perm& sigma, int k) const;
  std::string root_name(int k) const;  // "α1+α2"

 private:
  CoxeterMatrix matrix_;
  std::vector<Coords> roots_;  // sorted by (depth, coordinates descending)
  std::vector<int> depth_;
  std::vector<int> simple_;
  std::map<Coords, int> index_;
  std::vector<std::vector<Step>> steps_;
  std::vector<Edge> edges_;
};

Coords reflect(const CoxeterMatrix& m, int i, const Coords& v);

struct SigmaOrbit {
  std::vector<int> members;  // sorted root indices
  int depth = 0;
};

struct OrbitPartition {
  std::vector<SigmaOrbit> orbits;  // sorted by (depth, least member)
  std::vector<int> orbit_of;       // root index -> orbit index
};

OrbitPartition sigma_orbits(const PositiveRootSystem& rs, const AutomorphismGroup& sigma);

// Orbit indices of W_J(Θ) ∩ Φ⁺, sorted bottom-up.
std::vector<int> j_mesh(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j, int theta);

// Θ_J = orbit of the simple roots α_j, j ∈ J; Θ'_J = orbit of α_i + α_j for type D.
int theta_j(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j);
int theta_j_prime(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j);

struct MeshConfiguration {
  std::string tag;          // "A1" .. "D5"
  std::vector<int> orbits;  // bottom-up
};

MeshConfiguration classify_mesh(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j,
                                const std::vector<int>& mesh);

// Distinct meshes of J, in order of their lowest orbit.
std::vector<MeshConfiguration> meshes(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j);

// tag -> count, over the distinct meshes.
std::map<std::string, int> census(const PositiveRootSystem& rs, const OrbitPartition& orbits, const IndexOrbit& j);

// Tags of configuration diagrams in display order, and their orbit counts.
const std::vector<std::string>& configuration_tags(OrbitType t);
int configuration_orbit_count(const std::string& tag);

}  // namespace tlk
