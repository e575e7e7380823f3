#include "tlk/lkrep.hpp"

#include <map>
#include <optional>

#include "tlk/errors.hpp"

namespace tlk {

Matrix phi_matrix(const PositiveRootSystem& rs, int i) {
  const std::size_t n = rs.size();
  Matrix m(n, n);
  const Scalar a = Scalar::a(), b = Scalar::b(), c = Scalar::c(), d = Scalar::d();
  for (std::size_t k = 0; k < n; ++k) {
    const Step& s = rs.step(i, static_cast<int>(k));
    switch (s.move) {
      case Move::Simple:
        break;
      case Move::Loop:
        m(k, k) = d;
        break;
      case Move::Up:
        m(k, k) = a;
        m(s.target, k) = c;
        break;
      case Move::Down:
        m(s.target, k) = b;
        break;
    }
  }
  return m;
}

namespace {

using Equation = std::map<int, Scalar>;  // unknown -> coefficient

void accumulate(Equation& e, int unknown, const Scalar& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = e.emplace(unknown, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) e.erase(it);
  }
}

}  // namespace

LKFamily solve_lk_family(const PositiveRootSystem& rs, const Scalar& f) {
  const int r = static_cast<int>(rs.rank());
  const int n = static_cast<int>(rs.size());
  const CoxeterMatrix& m = rs.matrix();
  std::vector<Matrix> phi;
  for (int i = 0; i < r; ++i) phi.push_back(phi_matrix(rs, i));
  auto unknown = [n](int i, int k) { return i * n + k; };
  auto depth_of = [&](int u) { return rs.depth(u % n); };

  // Each instance of (ii) or (iii) evaluated at a basis vector e_k.
  std::vector<Equation> equations;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const int mij = m(i, j);
      if (mij != 2 && !(mij == 3 && i < j)) continue;
      for (int k = 0; k < n; ++k) {
        Equation e;
        for (int l = 0; l < n; ++l) {
          accumulate(e, unknown(i, l), phi[j](l, k));
          if (mij == 3) accumulate(e, unknown(j, l), -phi[i](l, k));
        }
        if (mij == 2) accumulate(e, unknown(i, k), -Scalar::d());
        if (!e.empty()) equations.push_back(std::move(e));
      }
    }

  std::vector<std::optional<Scalar>> value(static_cast<std::size_t>(r) * n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) value[unknown(i, rs.simple(j))] = i == j ? f : Scalar();

  std::map<int, std::vector<const Equation*>> by_level;
  for (const auto& e : equations) {
    int top = 0;
    for (const auto& [u, coef] : e) top = std::max(top, depth_of(u));
    by_level[top].push_back(&e);
  }

  for (int level = 2; level <= rs.max_depth(); ++level) {
    std::vector<int> unknowns;
    std::map<int, int> column;
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < n; ++k)
        if (rs.depth(k) == level) {
          column[unknown(i, k)] = static_cast<int>(unknowns.size());
          unknowns.push_back(unknown(i, k));
        }
    const auto& rows = by_level[level];
    const std::size_t width = unknowns.size();
    Matrix system(rows.size(), width + 1);
    for (std::size_t q = 0; q < rows.size(); ++q)
      for (const auto& [u, coef] : *rows[q]) {
        auto it = column.find(u);
        if (it != column.end()) {
          system(q, it->second) += coef;
        } else {
          system(q, width) -= coef * *value[u];
        }
      }
    const auto pivots = system.rref();
    if (!pivots.empty() && pivots.back() == static_cast<int>(width))
      throw InconsistentFamily("no solution at depth " + std::to_string(level));
    if (pivots.size() < width)
      throw UnderdeterminedFamily(std::to_string(width - pivots.size()) + " free values at depth " +
                                  std::to_string(level));
    for (std::size_t q = 0; q < pivots.size(); ++q) value[unknowns[pivots[q]]] = system(q, width);
  }

  LKFamily family;
  family.f = f;
  family.forms.assign(r, Row(n));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < n; ++k) {
      if (!value[unknown(i, k)]) throw UnderdeterminedFamily("value of f_" + m.label(i) + " unpinned");
      family.forms[i][k] = *value[unknown(i, k)];
    }
  auto violations = family_violations(rs, phi, family);
  if (!violations.empty()) throw InconsistentFamily(violations.front());
  return family;
}

std::vector<std::string> family_violations(const PositiveRootSystem& rs, const std::vector<Matrix>& phi,
                                           const LKFamily& family) {
  std::vector<std::string> out;
  const int r = static_cast<int>(rs.rank());
  const CoxeterMatrix& m = rs.matrix();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const Scalar expect = i == j ? family.f : Scalar();
      if (family.forms[i][rs.simple(j)] != expect)
        out.push_back("f_" + m.label(i) + "(e_α" + m.label(j) + ") = " + family.forms[i][rs.simple(j)].to_string());
      if (i == j) continue;
      if (m(i, j) == 2) {
        if (!is_zero(family.forms[i] * phi[j] - scaled(family.forms[i], Scalar::d())))
          out.push_back("f_" + m.label(i) + "φ_" + m.label(j) + " != d·f_" + m.label(i));
      } else if (m(i, j) == 3 && i < j) {
        if (family.forms[i] * phi[j] != family.forms[j] * phi[i])
          out.push_back("f_" + m.label(i) + "φ_" + m.label(j) + " != f_" + m.label(j) + "φ_" + m.label(i));
      }
    }
  }
  return out;
}

Matrix psi_matrix(const PositiveRootSystem& rs, const Matrix& phi_i, const LKFamily& family, int i) {
  return phi_i + outer(rs.simple(i), family.forms[i]);
}

LKContext::LKContext(PositiveRootSystem rs, LKFamily family) : rs_(std::move(rs)), family_(std::move(family)) {
  for (std::size_t i = 0; i < rs_.rank(); ++i) {
    phi_.push_back(phi_matrix(rs_, static_cast<int>(i)));
    psi_.push_back(psi_matrix(rs_, phi_.back(), family_, static_cast<int>(i)));
  }
}

LKContext LKContext::build(const CoxeterMatrix& m, const Scalar& f) {
  auto rs = PositiveRootSystem::generate(m);
  auto family = solve_lk_family(rs, f);
  return LKContext(std::move(rs), std::move(family));
}

Matrix LKContext::image_of_word(const std::vector<int>& word) const {
  Matrix out = Matrix::identity(dimension());
  for (int i : word) out = out * psi_[i];
  return out;
}

std::vector<RelationCheck> verify_braid_relations(const LKContext& ctx) {
  std::vector<RelationCheck> out;
  const auto& m = ctx.matrix();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const int mij = m(i, j);
      std::vector<int> u, v;
      for (int t = 0; t < mij; ++t) {
        u.push_back(static_cast<int>(t % 2 ? j : i));
        v.push_back(static_cast<int>(t % 2 ? i : j));
      }
      out.push_back({static_cast<int>(i), static_cast<int>(j), mij, ctx.image_of_word(u) == ctx.image_of_word(v)});
    }
  return out;
}

Matrix permutation_matrix(const PositiveRootSystem& rs, const Perm& sigma) {
  Matrix p(rs.size(), rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) p(rs.apply(sigma, static_cast<int>(k)), k) = Scalar(1);
  return p;
}

std::vector<EquivarianceCheck> verify_equivariance(const LKContext& ctx, const AutomorphismGroup& sigma) {
  std::vector<EquivarianceCheck> out;
  for (const auto& g : sigma.elements) {
    const Matrix p = permutation_matrix(ctx.roots(), g);
    for (std::size_t i = 0; i < ctx.matrix().size(); ++i)
      out.push_back({g, static_cast<int>(i), p * ctx.psi(static_cast<int>(i)) == ctx.psi(g[i]) * p});
  }
  return out;
}

bool family_sigma_symmetric(const LKContext& ctx, const AutomorphismGroup& sigma) {
  const auto& rs = ctx.roots();
  const auto& forms = ctx.family().forms;
  for (const auto& g : sigma.elements)
    for (std::size_t i = 0; i < rs.rank(); ++i)
      for (std::size_t k = 0; k < rs.size(); ++k)
        if (forms[i][k] != forms[g[i]][rs.apply(g, static_cast<int>(k))]) return false;
  return true;
}

std::vector<LemmaCheck> verify_lemmas(const LKContext& ctx) {
  std::vector<LemmaCheck> out;
  const auto& rs = ctx.roots();
  const auto& m = ctx.matrix();
  const std::size_t n = rs.size();
  const Scalar a = Scalar::a(), bc = Scalar::b() * Scalar::c(), d = Scalar::d();
  const auto& forms = ctx.family().forms;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Matrix& phi = ctx.phi(static_cast<int>(i));
    const Matrix phi2 = phi * phi;
    const Matrix quad = phi2 - phi.scaled(a) - Matrix::scalar(n, bc);
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      if (static_cast<int>(r) != rs.simple(static_cast<int>(i))) ok = is_zero(quad.row(r));
    out.push_back({"quadratic", static_cast<int>(i), -1, ok});

    std::size_t pairs = 0, loops = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Move mv = rs.step(static_cast<int>(i), static_cast<int>(k)).move;
      pairs += mv == Move::Up;
      loops += mv == Move::Loop;
    }
    const Scalar det = ctx.psi(static_cast<int>(i)).determinant();
    const Scalar closed = ctx.family().f * (-bc).pow(static_cast<unsigned>(pairs)) * d.pow(static_cast<unsigned>(loops));
    out.push_back({"determinant", static_cast<int>(i), -1, !det.is_zero() && det == closed});

    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      const Row lhs = forms[j] * (Matrix::scalar(n, bc) + phi.scaled(a));
      const Row sq = forms[j] * phi2;
      out.push_back({"intermediate", static_cast<int>(i), static_cast<int>(j), lhs == sq});
      if (m(i, j) == 3) {
        const Row alt = (forms[i] * ctx.phi(static_cast<int>(j))) * phi;
        out.push_back({"intermediate-m3", static_cast<int>(i), static_cast<int>(j), sq == alt});
      }
    }
  }
  return out;
}

bool rank_one_power_identity(const Matrix& phi, const Row& f, std::size_t e, int n) {
  const std::size_t dim = phi.rows();
  const Matrix psi = phi + outer(e, f);
  Matrix lhs = Matrix::identity(dim);
  for (int t = 0; t < n; ++t) lhs = lhs * psi;
  std::vector<Matrix> powers = {Matrix::identity(dim)};
  for (int t = 1; t <= n; ++t) powers.push_back(powers.back() * phi);
  const Scalar fe = f[e];
  Row acc(dim);
  for (int k = 0; k < n; ++k) acc = acc + scaled(f * powers[n - 1 - k], fe.pow(static_cast<unsigned>(k)));
  return lhs == powers[n] + outer(e, acc);
}

}  // namespace tlk
