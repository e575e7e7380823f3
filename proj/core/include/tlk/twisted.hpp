#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlk/coxeter.hpp"
#include "tlk/lkrep.hpp"
#include "tlk/matrix.hpp"
#include "tlk/polynomial.hpp"
#include "tlk/rootsys.hpp"

namespace tlk {

// Matrix of the induced map on V^Σ in the basis e_Θ = Σ_{α∈Θ} e_α.
Matrix restrict(const Matrix& m, const OrbitPartition& orbits);
// Row vector f restricted to V^Σ: f|(e_Θ) = Σ_{α∈Θ} f(e_α).
Row restrict(const Row& f, const OrbitPartition& orbits);

struct TwistedGenerator {
  IndexOrbit orbit;
  std::vector<int> word;  // Δ_J
  Matrix psi, phi;        // on V^Σ
  Row form;               // f_J
  Row form_prime;         // f'_J, type D only
  int theta = -1;         // Θ_J
  int theta_prime = -1;   // Θ'_J, type D only
};

class TwistedContext {
 public:
  TwistedContext(LKContext lk, AutomorphismGroup sigma, std::string name = "");
  static TwistedContext build(const CoxeterMatrix& m, const AutomorphismGroup& sigma, const Scalar& f = Scalar::f(),
                              std::string name = "");
  // "A5", "order2" style specs.
  static TwistedContext from_spec(const std::string& type, const std::string& sigma);

  const std::string& name() const { return name_; }
  const LKContext& lk() const { return lk_; }
  const PositiveRootSystem& roots() const { return lk_.roots(); }
  const AutomorphismGroup& sigma() const { return sigma_; }
  const OrbitPartition& orbits() const { return orbits_; }
  const std::vector<IndexOrbit>& index_orbits() const { return index_orbits_; }
  const CoxeterMatrix& quotient() const { return quotient_; }
  const std::vector<TwistedGenerator>& generators() const { return generators_; }
  const TwistedGenerator& generator(std::size_t j) const { return generators_[j]; }
  std::size_t dimension() const { return orbits_.orbits.size(); }
  const Scalar& f() const { return lk_.family().f; }

  // ψ^Σ of a word in the quotient generators.
  Matrix image_of_word(const std::vector<int>& word) const;
  std::string orbit_name(int theta) const;

 private:
  std::string name_;
  LKContext lk_;
  AutomorphismGroup sigma_;
  OrbitPartition orbits_;
  std::vector<IndexOrbit> index_orbits_;
  CoxeterMatrix quotient_;
  std::vector<TwistedGenerator> generators_;
};

// Alternating products of ψ^Σ_J, ψ^Σ_K of length m^Σ_{J,K} agree.
std::vector<RelationCheck> verify_quotient_braid_relations(const TwistedContext& ctx);

// ψ^Σ_J - φ^Σ_J against the rank-one (or rank-two) form term.
bool decomposition_holds(const TwistedGenerator& g);
// ψ^Σ_J against the restriction of ψ_{Δ_J} built from scratch.
bool generator_matches_word(const TwistedContext& ctx, std::size_t j);
// f_J(e_{Θ_J}) in closed form: f, df, d²f, bcf.
Scalar expected_form_value(OrbitType t, const Scalar& f);

struct ExpectedBlock {
  std::string tag;
  Matrix block;                  // bottom-up, columns are images
  std::vector<UPoly> factors;    // printed factorization of the characteristic polynomial
  std::optional<UPoly> extra;    // a smaller polynomial that already annihilates the block
  UPoly charpoly() const;
};

ExpectedBlock expected_block(const std::string& tag);

struct BlockResult {
  std::string tag;
  std::vector<int> orbits;  // matched order, bottom-up
  bool template_ok = false;
  bool charpoly_ok = false;
  std::optional<bool> extra_ok;
  UPoly charpoly;
};

struct BlockReport {
  std::size_t j = 0;
  std::vector<BlockResult> blocks;
  bool off_block_zero = false;
  bool kills_theta = false;  // φ^Σ_J(e_{Θ_J}) = 0 (and e_{Θ'_J} for type D)
  bool ok() const;
};

BlockReport verify_blocks(const TwistedContext& ctx, std::size_t j);

struct AnnihilatorData {
  std::size_t j = 0;
  UPoly p, q;
  Scalar lambda;  // f_J(e_{Θ_J})
  bool lambda_ok = false;
  bool recurrence_ok = false;
  bool image_ok = false;
  bool annihilates = false;
  bool power_formula_ok = false;
  bool ok() const { return lambda_ok && recurrence_ok && image_ok && annihilates && power_formula_ok; }
};

UPoly p_polynomial(OrbitType t);
// q_{deg-1} = p_deg, q_{n-1} = p_n + q_n·λ.
UPoly q_polynomial(const UPoly& p, const Scalar& lambda);
AnnihilatorData annihilator(const TwistedContext& ctx, std::size_t j);

struct CouplingResult {
  std::size_t j = 0, k = 0;
  int m = 0;
  Scalar value;
  std::optional<Scalar> expected;  // absent when no closed form is known (J of type D)
  bool matches() const { return !expected || value == *expected; }
};

std::optional<Scalar> coupling_closed_form(const TwistedContext& ctx, std::size_t j, std::size_t k);
CouplingResult coupling_coefficient(const TwistedContext& ctx, std::size_t j, std::size_t k);

struct Eigenvalue {
  std::string label;  // "d", "dď", ...
  Scalar value;
  int multiplicity = 0;
};

// Types A and B only; UnsupportedOrbitType otherwise.
std::vector<Eigenvalue> spectrum(const TwistedContext& ctx, std::size_t j);

struct SpectrumCheck {
  bool sums_to_dimension = false;
  bool annihilates = false;           // Π (ψ - λ) = 0 symbolically
  bool distinct = false;              // eigenvalues pairwise distinct at the specialization
  std::vector<std::size_t> nullities; // per eigenvalue, at the specialization
  bool nullities_ok = false;
  bool ok() const { return sums_to_dimension && annihilates && distinct && nullities_ok; }
};

SpectrumCheck verify_spectrum(const TwistedContext& ctx, std::size_t j, const Specialization& at);

enum class Verdict { NotEquivalent, Inconclusive };
const char* verdict_name(Verdict v);

struct EquivalenceResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;
};

EquivalenceResult equivalence_discriminant(const TwistedContext& x, const Specialization& sx, const TwistedContext& y,
                                           const Specialization& sy);

}  // namespace tlk
