#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tlk {

// Entry value standing for m = ∞.
inline constexpr int kInfinity = 0;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  // No validation here; see validate().
  CoxeterMatrix(std::vector<std::string> labels, std::vector<std::vector<int>> entries, std::string name = "");

  // "A<n>" (n >= 2), "D<n>" (n >= 4), "E6"; Bourbaki labels 1..n.
  static CoxeterMatrix from_type(std::string_view spec);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const std::string& name() const { return name_; }

  bool small_type() const;
  bool connected() const;
  // Restriction to a subset of the index set, in the given order.
  CoxeterMatrix restricted(const std::vector<int>& subset) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> m_;
  std::string name_;
};

struct Diagnostics {
  bool valid = true;
  bool small_type = false;
  bool connected = false;
  std::vector<std::string> problems;
};

Diagnostics validate(const CoxeterMatrix& m);

// perm[i] is the image of index i.
using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q);  // p after q
Perm inverse(const Perm& p);
Perm identity_perm(std::size_t n);

struct AutomorphismGroup {
  std::vector<Perm> elements;  // sorted; identity first
  std::vector<Perm> generators;
  std::size_t order() const { return elements.size(); }
};

AutomorphismGroup automorphism_group(const CoxeterMatrix& m);
// Subgroup generated by the given permutations.
AutomorphismGroup generated_group(std::size_t n, const std::vector<Perm>& gens);
// "full", "trivial", "order2" (lexicographically least involution), "order3"
// (least element of order 3; exists only for D4).
AutomorphismGroup sigma_group(const CoxeterMatrix& m, std::string_view spec);

enum class OrbitType { A, B, C, D };
char orbit_type_letter(OrbitType t);

struct IndexOrbit {
  std::vector<int> members;  // sorted
  OrbitType type = OrbitType::A;
  bool spherical = true;

  // Δ_J as a word: (i), (i,j), (i,j,k), (i,j,i).
  std::vector<int> delta_word() const;
  std::string name(const CoxeterMatrix& m) const;  // "{2,4}"
};

std::vector<IndexOrbit> index_orbits(const CoxeterMatrix& m, const AutomorphismGroup& sigma);

// Order of r_J r_K on the root lattice of Γ_{J∪K}, capped at 100.
int quotient_entry(const CoxeterMatrix& m, const IndexOrbit& j, const IndexOrbit& k);
CoxeterMatrix quotient_matrix(const CoxeterMatrix& m, const AutomorphismGroup& sigma);

// Index bijections p with y(p(i), p(j)) = x(i, j).
std::vector<Perm> isomorphisms(const CoxeterMatrix& x, const CoxeterMatrix& y);

// Classical Coxeter matrices used as reference tables.
CoxeterMatrix type_B(int n);
CoxeterMatrix type_F4();
CoxeterMatrix type_G2();

}  // namespace tlk
