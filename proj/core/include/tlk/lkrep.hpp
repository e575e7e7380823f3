#pragma once

#include <string>
#include <vector>

#include "tlk/coxeter.hpp"
#include "tlk/matrix.hpp"
#include "tlk/rootsys.hpp"
#include "tlk/scalar.hpp"

namespace tlk {

struct LKFamily {
  Scalar f;
  std::vector<Row> forms;  // forms[i][k] = f_i(e_{root k})
};

Matrix phi_matrix(const PositiveRootSystem& rs, int i);

// The unique family with f_i(e_{α_i}) = f satisfying the commutation
// conditions, solved one depth level at a time.
LKFamily solve_lk_family(const PositiveRootSystem& rs, const Scalar& f = Scalar::f());

// Failed instances of the defining conditions, empty for a genuine family.
std::vector<std::string> family_violations(const PositiveRootSystem& rs, const std::vector<Matrix>& phi,
                                           const LKFamily& family);

Matrix psi_matrix(const PositiveRootSystem& rs, const Matrix& phi_i, const LKFamily& family, int i);

class LKContext {
 public:
  LKContext(PositiveRootSystem rs, LKFamily family);
  static LKContext build(const CoxeterMatrix& m, const Scalar& f = Scalar::f());

  const PositiveRootSystem& roots() const { return rs_; }
  const CoxeterMatrix& matrix() const { return rs_.matrix(); }
  const LKFamily& family() const { return family_; }
  const Matrix& phi(int i) const { return phi_[i]; }
  const Matrix& psi(int i) const { return psi_[i]; }
  const std::vector<Matrix>& phis() const { return phi_; }
  std::size_t dimension() const { return rs_.size(); }

  Matrix image_of_word(const std::vector<int>& word) const;

 private:
  PositiveRootSystem rs_;
  LKFamily family_;
  std::vector<Matrix> phi_, psi_;
};

struct RelationCheck {
  int i, j, m;
  bool pass;
};

std::vector<RelationCheck> verify_braid_relations(const LKContext& ctx);

struct EquivarianceCheck {
  Perm sigma;
  int i;
  bool pass;
};

Matrix permutation_matrix(const PositiveRootSystem& rs, const Perm& sigma);
std::vector<EquivarianceCheck> verify_equivariance(const LKContext& ctx, const AutomorphismGroup& sigma);
// f_i(e_α) = f_{σ(i)}(e_{σ(α)}) for every σ.
bool family_sigma_symmetric(const LKContext& ctx, const AutomorphismGroup& sigma);

struct LemmaCheck {
  std::string name;
  int i, j;  // j = -1 when the check involves a single generator
  bool pass;
};

// The quadratic relation of φ_i modulo e_{α_i}, the identities relating
// f_jφ_i² to f_j(bc·Id + aφ_i) and f_iφ_jφ_i, and det ψ_i in closed form.
std::vector<LemmaCheck> verify_lemmas(const LKContext& ctx);

// (φ + e⊗f)^n = φ^n + e⊗(f Σ_k f(e)^k φ^{n-1-k}) for φ killing e.
bool rank_one_power_identity(const Matrix& phi, const Row& f, std::size_t e, int n);

}  // namespace tlk
