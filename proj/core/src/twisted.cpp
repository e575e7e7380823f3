#include "tlk/twisted.hpp"

#include <algorithm>
#include <functional>

#include "tlk/errors.hpp"

namespace tlk {

Matrix restrict(const Matrix& m, const OrbitPartition& orbits) {
  const std::size_t n = orbits.orbits.size();
  Matrix out(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    // M e_Θ as a vector on V.
    Row image(m.rows());
    for (int k : orbits.orbits[t].members)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, k).is_zero()) image[r] += m(r, k);
    for (std::size_t s = 0; s < n; ++s) {
      const auto& members = orbits.orbits[s].members;
      const Scalar& v = image[members.front()];
      for (int k : members)
        if (image[k] != v) throw NotSigmaStable("image of an orbit vector is not constant on an orbit");
      out(s, t) = v;
    }
  }
  return out;
}

Row restrict(const Row& f, const OrbitPartition& orbits) {
  Row out(orbits.orbits.size());
  for (std::size_t t = 0; t < orbits.orbits.size(); ++t)
    for (int k : orbits.orbits[t].members) out[t] += f[k];
  return out;
}

Scalar expected_form_value(OrbitType t, const Scalar& f) {
  switch (t) {
    case OrbitType::A:
      return f;
    case OrbitType::B:
      return Scalar::d() * f;
    case OrbitType::C:
      return Scalar::d().pow(2) * f;
    case OrbitType::D:
      return Scalar::b() * Scalar::c() * f;
  }
  return f;
}

TwistedContext::TwistedContext(LKContext lk, AutomorphismGroup sigma, std::string name)
    : name_(std::move(name)), lk_(std::move(lk)), sigma_(std::move(sigma)) {
  const auto& rs = lk_.roots();
  const auto& m = lk_.matrix();
  orbits_ = sigma_orbits(rs, sigma_);
  index_orbits_ = tlk::index_orbits(m, sigma_);
  quotient_ = quotient_matrix(m, sigma_);
  const std::size_t n = rs.size();
  const auto& forms = lk_.family().forms;
  for (const auto& o : index_orbits_) {
    TwistedGenerator g;
    g.orbit = o;
    g.word = o.delta_word();
    Matrix psi = Matrix::identity(n), phi = Matrix::identity(n);
    for (int i : g.word) {
      psi = psi * lk_.psi(i);
      phi = phi * lk_.phi(i);
    }
    g.psi = restrict(psi, orbits_);
    g.phi = restrict(phi, orbits_);
    g.theta = theta_j(rs, orbits_, o);
    const int i = o.members[0];
    switch (o.type) {
      case OrbitType::A:
        g.form = restrict(forms[i], orbits_);
        break;
      case OrbitType::B:
        g.form = scaled(restrict(forms[i], orbits_), Scalar::d());
        break;
      case OrbitType::C:
        g.form = scaled(restrict(forms[i], orbits_), Scalar::d().pow(2));
        break;
      case OrbitType::D: {
        const int j = o.members[1];
        const Matrix& phi_i = lk_.phi(i);
        const Row fj_phi = forms[j] * phi_i;
        g.form = restrict(scaled(forms[j], Scalar::b() * Scalar::c()) + scaled(fj_phi, Scalar::a()), orbits_);
        g.form_prime = restrict(scaled(fj_phi, Scalar::c()), orbits_);
        g.theta_prime = theta_j_prime(rs, orbits_, o);
        break;
      }
    }
    if (!decomposition_holds(g))
      throw DecompositionMismatch("generator " + o.name(m) + " of " + name_);
    generators_.push_back(std::move(g));
  }
}

TwistedContext TwistedContext::build(const CoxeterMatrix& m, const AutomorphismGroup& sigma, const Scalar& f,
                                     std::string name) {
  return TwistedContext(LKContext::build(m, f), sigma, std::move(name));
}

TwistedContext TwistedContext::from_spec(const std::string& type, const std::string& sigma) {
  const auto m = CoxeterMatrix::from_type(type);
  return build(m, sigma_group(m, sigma), Scalar::f(), type + "/" + sigma);
}

Matrix TwistedContext::image_of_word(const std::vector<int>& word) const {
  Matrix out = Matrix::identity(dimension());
  for (int j : word) out = out * generators_[j].psi;
  return out;
}

std::string TwistedContext::orbit_name(int theta) const {
  std::string s = "{";
  const auto& members = orbits_.orbits[theta].members;
  for (std::size_t k = 0; k < members.size(); ++k) s += (k ? ", " : "") + roots().root_name(members[k]);
  return s + "}";
}

std::vector<RelationCheck> verify_quotient_braid_relations(const TwistedContext& ctx) {
  std::vector<RelationCheck> out;
  const auto& q = ctx.quotient();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      const int m = q(i, j);
      if (m == kInfinity) continue;
      std::vector<int> u, v;
      for (int t = 0; t < m; ++t) {
        u.push_back(static_cast<int>(t % 2 ? j : i));
        v.push_back(static_cast<int>(t % 2 ? i : j));
      }
      out.push_back({static_cast<int>(i), static_cast<int>(j), m, ctx.image_of_word(u) == ctx.image_of_word(v)});
    }
  return out;
}

bool decomposition_holds(const TwistedGenerator& g) {
  Matrix expect = g.phi + outer(g.theta, g.form);
  if (g.orbit.type == OrbitType::D) expect = expect + outer(g.theta_prime, g.form_prime);
  return g.psi == expect;
}

bool generator_matches_word(const TwistedContext& ctx, std::size_t j) {
  const auto& g = ctx.generator(j);
  return restrict(ctx.lk().image_of_word(g.word), ctx.orbits()) == g.psi;
}

// ---------------------------------------------------------------------------
// Configuration blocks

namespace {

using Strings = std::vector<std::vector<const char*>>;

Matrix parse_block(const Strings& rows) {
  Matrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = Scalar::parse(rows[r][c]);
  return m;
}

UPoly lin(const char* root) { return UPoly::linear(Scalar::parse(root)); }

// X² + (dď)³
UPoly d_quadratic() { return UPoly({Scalar::parse("(d*ď)^3"), Scalar(0), Scalar(1)}); }

UPoly product(const std::vector<UPoly>& fs) {
  UPoly p = UPoly::constant(Scalar(1));
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

UPoly ExpectedBlock::charpoly() const { return product(factors); }

ExpectedBlock expected_block(const std::string& tag) {
  ExpectedBlock e;
  e.tag = tag;
  const UPoly x = UPoly::x();
  if (tag == "A1" || tag == "B1" || tag == "C1") {
    e.block = parse_block({{"0"}});
    e.factors = {x};
  } else if (tag == "A2") {
    e.block = parse_block({{"d"}});
    e.factors = {lin("d")};
  } else if (tag == "A3") {
    e.block = parse_block({{"a", "b"}, {"c", "0"}});
    e.factors = {lin("d"), lin("ď")};
  } else if (tag == "B2") {
    e.block = parse_block({{"d^2"}});
    e.factors = {lin("d^2")};
  } else if (tag == "B3") {
    e.block = parse_block({{"a*d", "b*d"}, {"c*d", "0"}});
    e.factors = {lin("d^2"), lin("d*ď")};
  } else if (tag == "B4") {
    e.block = parse_block({{"a^2", "2*a*b", "b^2"}, {"a*c", "b*c", "0"}, {"c^2", "0", "0"}});
    e.factors = {lin("d^2"), lin("d*ď"), lin("ď^2")};
  } else if (tag == "B5") {
    e.block = parse_block({{"a^2", "a*b", "a*b", "b^2"},
                           {"a*c", "0", "b*c", "0"},
                           {"a*c", "b*c", "0", "0"},
                           {"c^2", "0", "0", "0"}});
    e.factors = {lin("d^2"), lin("d*ď"), lin("d*ď"), lin("ď^2")};
    e.extra = product({lin("d^2"), lin("d*ď"), lin("ď^2")});
  } else if (tag == "C2") {
    e.block = parse_block({{"d^3"}});
    e.factors = {lin("d^3")};
  } else if (tag == "C3") {
    e.block = parse_block({{"a*d^2", "b*d^2"}, {"c*d^2", "0"}});
    e.factors = {lin("d^3"), lin("d^2*ď")};
  } else if (tag == "C4") {
    e.block = parse_block({{"a^2*d", "a*b*d", "a*b*d", "b^2*d"},
                           {"a*c*d", "0", "b*c*d", "0"},
                           {"a*c*d", "b*c*d", "0", "0"},
                           {"c^2*d", "0", "0", "0"}});
    e.factors = {lin("d^3"), lin("d^2*ď"), lin("d^2*ď"), lin("d*ď^2")};
    e.extra = product({lin("d^3"), lin("d^2*ď"), lin("d*ď^2")});
  } else if (tag == "C5") {
    e.block = parse_block({{"a^3", "3*a^2*b", "3*a*b^2", "b^3"},
                           {"a^2*c", "2*a*b*c", "b^2*c", "0"},
                           {"a*c^2", "b*c^2", "0", "0"},
                           {"c^3", "0", "0", "0"}});
    e.factors = {lin("d^3"), lin("d^2*ď"), lin("d*ď^2"), lin("ď^3")};
  } else if (tag == "C6") {
    e.block = parse_block({
        {"a^3", "a^2*b", "a^2*b", "a^2*b", "a*b^2", "a*b^2", "a*b^2", "b^3"},
        {"a^2*c", "0", "a*b*c", "a*b*c", "0", "0", "b^2*c", "0"},
        {"a^2*c", "a*b*c", "0", "a*b*c", "0", "b^2*c", "0", "0"},
        {"a^2*c", "a*b*c", "a*b*c", "0", "b^2*c", "0", "0", "0"},
        {"a*c^2", "0", "0", "b*c^2", "0", "0", "0", "0"},
        {"a*c^2", "0", "b*c^2", "0", "0", "0", "0", "0"},
        {"a*c^2", "b*c^2", "0", "0", "0", "0", "0", "0"},
        {"c^3", "0", "0", "0", "0", "0", "0", "0"},
    });
    e.factors = {lin("d^3"),   lin("d^2*ď"), lin("d^2*ď"), lin("d^2*ď"),
                 lin("d*ď^2"), lin("d*ď^2"), lin("d*ď^2"), lin("ď^3")};
    e.extra = product({lin("d^3"), lin("d^2*ď"), lin("d*ď^2"), lin("ď^3")});
  } else if (tag == "D1") {
    e.block = parse_block({{"0", "0"}, {"0", "0"}});
    e.factors = {x, x};
  } else if (tag == "D2") {
    e.block = parse_block({{"d^3"}});
    e.factors = {lin("d^3")};
  } else if (tag == "D3") {
    e.block = parse_block({{"a*d^2", "a*b*d", "b^2*d"}, {"a*c*d", "b*c*d", "0"}, {"c^2*d", "0", "0"}});
    e.factors = {lin("d^3"), d_quadratic()};
  } else if (tag == "D4") {
    e.block = parse_block({{"a*(a^2+b*c)", "2*a^2*b", "2*a*b^2", "b^3"},
                           {"a^2*c", "2*a*b*c", "b^2*c", "0"},
                           {"a*c^2", "b*c^2", "0", "0"},
                           {"c^3", "0", "0", "0"}});
    e.factors = {lin("d^3"), d_quadratic(), lin("ď^3")};
  } else if (tag == "D5") {
    e.block = parse_block({
        {"a*(a^2+b*c)", "a^2*b", "a^2*b", "a*b^2", "a*b^2", "b^3"},
        {"a^2*c", "a*b*c", "a*b*c", "0", "b^2*c", "0"},
        {"a^2*c", "a*b*c", "a*b*c", "b^2*c", "0", "0"},
        {"a*c^2", "0", "b*c^2", "0", "0", "0"},
        {"a*c^2", "b*c^2", "0", "0", "0", "0"},
        {"c^3", "0", "0", "0", "0", "0"},
    });
    e.factors = {lin("d^3"), d_quadratic(), d_quadratic(), lin("ď^3")};
    e.extra = product({lin("d^3"), d_quadratic(), lin("ď^3")});
  } else {
    throw UnrecognizedConfiguration("no configuration named " + tag);
  }
  return e;
}

bool BlockReport::ok() const {
  if (!off_block_zero || !kills_theta) return false;
  for (const auto& b : blocks)
    if (!b.template_ok || !b.charpoly_ok || (b.extra_ok && !*b.extra_ok)) return false;
  return true;
}

namespace {

// Calls visit on every reordering that permutes orbits of equal depth only;
// stops when visit returns true.
bool for_each_depth_order(const TwistedContext& ctx, const std::vector<int>& orbits,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t s = 0; s < orbits.size();) {
    std::size_t t = s;
    while (t < orbits.size() && ctx.orbits().orbits[orbits[t]].depth == ctx.orbits().orbits[orbits[s]].depth) ++t;
    groups.push_back({s, t});
    s = t;
  }
  std::vector<int> order = orbits;
  std::function<bool(std::size_t)> rec = [&](std::size_t g) -> bool {
    if (g == groups.size()) return visit(order);
    auto [s, t] = groups[g];
    std::sort(order.begin() + s, order.begin() + t);
    do {
      if (rec(g + 1)) return true;
    } while (std::next_permutation(order.begin() + s, order.begin() + t));
    return false;
  };
  return rec(0);
}

}  // namespace

BlockReport verify_blocks(const TwistedContext& ctx, std::size_t j) {
  BlockReport report;
  report.j = j;
  const auto& g = ctx.generator(j);
  const auto configs = meshes(ctx.roots(), ctx.orbits(), g.orbit);
  std::vector<int> mesh_of(ctx.dimension(), -1);
  for (std::size_t q = 0; q < configs.size(); ++q)
    for (int o : configs[q].orbits) mesh_of[o] = static_cast<int>(q);

  report.off_block_zero = true;
  for (std::size_t r = 0; r < ctx.dimension(); ++r)
    for (std::size_t c = 0; c < ctx.dimension(); ++c)
      if (mesh_of[r] != mesh_of[c] && !g.phi(r, c).is_zero()) report.off_block_zero = false;

  report.kills_theta = is_zero(g.phi.column(g.theta));
  if (g.theta_prime >= 0) report.kills_theta = report.kills_theta && is_zero(g.phi.column(g.theta_prime));

  for (const auto& cfg : configs) {
    BlockResult res;
    res.tag = cfg.tag;
    res.orbits = cfg.orbits;
    const ExpectedBlock expect = expected_block(cfg.tag);
    res.template_ok = for_each_depth_order(ctx, cfg.orbits, [&](const std::vector<int>& order) {
      if (g.phi.submatrix(order, order) != expect.block) return false;
      res.orbits = order;
      return true;
    });
    const Matrix block = g.phi.submatrix(res.orbits, res.orbits);
    res.charpoly = block.charpoly();
    res.charpoly_ok = res.charpoly == expect.charpoly();
    if (expect.extra) res.extra_ok = evaluate(*expect.extra, block).is_zero();
    report.blocks.push_back(std::move(res));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Annihilators and coupling

UPoly p_polynomial(OrbitType t) {
  switch (t) {
    case OrbitType::A:
      return product({lin("d"), lin("ď")});
    case OrbitType::B:
      return product({lin("d^2"), lin("d*ď"), lin("ď^2")});
    case OrbitType::C:
      return product({lin("d^3"), lin("d^2*ď"), lin("d*ď^2"), lin("ď^3")});
    case OrbitType::D:
      return product({lin("d^3"), d_quadratic(), lin("ď^3")});
  }
  return UPoly();
}

UPoly q_polynomial(const UPoly& p, const Scalar& lambda) {
  const int deg = p.degree();
  if (deg < 1) return UPoly();
  std::vector<Scalar> q(deg);
  q[deg - 1] = p.coeff(deg);
  for (int n = deg - 1; n >= 1; --n) q[n - 1] = p.coeff(n) + q[n] * lambda;
  return UPoly(std::move(q));
}

AnnihilatorData annihilator(const TwistedContext& ctx, std::size_t j) {
  AnnihilatorData data;
  data.j = j;
  const auto& g = ctx.generator(j);
  const std::size_t n = ctx.dimension();
  data.p = p_polynomial(g.orbit.type);
  data.lambda = g.form[g.theta];
  data.lambda_ok = data.lambda == expected_form_value(g.orbit.type, ctx.f());
  if (g.orbit.type == OrbitType::D)
    data.lambda_ok = data.lambda_ok && g.form[g.theta_prime].is_zero() && g.form_prime[g.theta].is_zero();
  data.q = q_polynomial(data.p, data.lambda);
  // Q_J is the quotient of P_J - P_J(λ) by X - λ.
  data.recurrence_ok =
      data.q.degree() == data.p.degree() - 1 &&
      data.q * UPoly::linear(data.lambda) == data.p - UPoly::constant(data.p.evaluate(data.lambda));

  const Matrix p_psi = evaluate(data.p, g.psi);
  data.image_ok = true;
  for (std::size_t r = 0; r < n; ++r) {
    if (static_cast<int>(r) == g.theta || static_cast<int>(r) == g.theta_prime) continue;
    if (!is_zero(p_psi.row(r))) data.image_ok = false;
  }
  data.annihilates = (Matrix::scalar(n, data.lambda) * p_psi - g.psi * p_psi).is_zero();

  const Matrix q_phi = evaluate(data.q, g.phi);
  Matrix expect = evaluate(data.p, g.phi) + outer(g.theta, g.form * q_phi);
  if (g.orbit.type == OrbitType::D) expect = expect + outer(g.theta_prime, g.form_prime * q_phi);
  data.power_formula_ok = p_psi == expect;
  return data;
}

std::optional<Scalar> coupling_closed_form(const TwistedContext& ctx, std::size_t j, std::size_t k) {
  const int m = ctx.quotient()(j, k);
  if (m == 2) return Scalar();
  const Scalar a = Scalar::a(), d = Scalar::d(), dc = Scalar::dcheck(), f = ctx.f();
  switch (ctx.generator(j).orbit.type) {
    case OrbitType::A:
      return -Scalar(static_cast<long>(ctx.generator(k).orbit.members.size())) * a * f;
    case OrbitType::B:
      return a * d.pow(2) * f * (dc.pow(2) - d * f);
    case OrbitType::C:
      return a * d.pow(5) * f * (-d.pow(3) * f.pow(2) + a * d * dc.pow(2) * f - dc.pow(5));
    case OrbitType::D:
      return std::nullopt;
  }
  return std::nullopt;
}

CouplingResult coupling_coefficient(const TwistedContext& ctx, std::size_t j, std::size_t k) {
  CouplingResult res;
  res.j = j;
  res.k = k;
  res.m = ctx.quotient()(j, k);
  const auto& g = ctx.generator(j);
  const UPoly q = q_polynomial(p_polynomial(g.orbit.type), g.form[g.theta]);
  const Row row = g.form * evaluate(q, g.phi);
  res.value = row[ctx.generator(k).theta];
  res.expected = coupling_closed_form(ctx, j, k);
  return res;
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<Eigenvalue> spectrum(const TwistedContext& ctx, std::size_t j) {
  const auto& g = ctx.generator(j);
  const auto counts = census(ctx.roots(), ctx.orbits(), g.orbit);
  const Scalar d = Scalar::d(), dc = Scalar::dcheck(), f = ctx.f();
  auto n = [&](const char* tag) { return counts.at(tag); };
  switch (g.orbit.type) {
    case OrbitType::A:
      return {{"d", d, n("A2") + n("A3")}, {"ď", dc, n("A3")}, {"f", f, n("A1")}};
    case OrbitType::B:
      return {{"d^2", d * d, n("B2") + n("B3") + n("B4")},
              {"d*ď", d * dc, n("B3") + n("B4")},
              {"ď^2", dc * dc, n("B4")},
              {"d*f", d * f, n("B1")}};
    default:
      throw UnsupportedOrbitType(std::string("spectrum is available for orbit types A and B, not ") +
                                 orbit_type_letter(g.orbit.type));
  }
}

SpectrumCheck verify_spectrum(const TwistedContext& ctx, std::size_t j, const Specialization& at) {
  SpectrumCheck check;
  const auto table = spectrum(ctx, j);
  const auto& psi = ctx.generator(j).psi;
  const std::size_t n = ctx.dimension();
  int total = 0;
  Matrix prod = Matrix::identity(n);
  for (const auto& e : table) {
    total += e.multiplicity;
    if (e.multiplicity > 0) prod = prod * (psi - Matrix::scalar(n, e.value));
  }
  check.sums_to_dimension = total == static_cast<int>(n);
  check.annihilates = prod.is_zero();

  const Matrix spec = psi.specialize(at);
  check.distinct = true;
  check.nullities_ok = true;
  std::vector<Scalar> values;
  for (const auto& e : table) {
    const Scalar v = e.value.specialize(at);
    for (const auto& w : values)
      if (w == v) check.distinct = false;
    values.push_back(v);
    const std::size_t nullity = n - (spec - Matrix::scalar(n, v)).rank();
    check.nullities.push_back(nullity);
    if (nullity != static_cast<std::size_t>(e.multiplicity)) check.nullities_ok = false;
  }
  return check;
}

// ---------------------------------------------------------------------------
// Equivalence

const char* verdict_name(Verdict v) { return v == Verdict::NotEquivalent ? "NotEquivalent" : "Inconclusive"; }

namespace {

// value string -> multiplicity after specialization; eigenvalues that
// coincide at the point are merged.
std::optional<std::map<std::string, int>> specialized_spectrum(const TwistedContext& ctx, std::size_t j,
                                                               const Specialization& s) {
  const auto type = ctx.generator(j).orbit.type;
  if (type != OrbitType::A && type != OrbitType::B) return std::nullopt;
  std::map<std::string, int> out;
  for (const auto& e : spectrum(ctx, j))
    if (e.multiplicity > 0) out[e.value.specialize(s).to_string()] += e.multiplicity;
  return out;
}

std::string describe(const std::map<std::string, int>& spec) {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, k] : spec) {
    s += (first ? "" : ", ") + v + ": " + std::to_string(k);
    first = false;
  }
  return s + "}";
}

}  // namespace

EquivalenceResult equivalence_discriminant(const TwistedContext& x, const Specialization& sx, const TwistedContext& y,
                                           const Specialization& sy) {
  EquivalenceResult res;
  if (x.dimension() != y.dimension()) {
    res.verdict = Verdict::NotEquivalent;
    res.witness = "dimension " + std::to_string(x.dimension()) + " vs " + std::to_string(y.dimension());
    return res;
  }
  const auto isos = isomorphisms(x.quotient(), y.quotient());
  if (isos.empty()) {
    res.witness = "quotient Coxeter matrices are not isomorphic; generators cannot be aligned";
    return res;
  }
  std::string first_witness;
  for (const auto& p : isos) {
    std::string witness;
    for (std::size_t j = 0; j < x.generators().size() && witness.empty(); ++j) {
      const std::size_t k = static_cast<std::size_t>(p[j]);
      const auto sp = specialized_spectrum(x, j, sx);
      const auto sq = specialized_spectrum(y, k, sy);
      if (!sp || !sq) continue;
      const std::string where = "generator " + x.quotient().label(j) + " of " + x.name() + " vs " +
                                y.quotient().label(k) + " of " + y.name() + ": ";
      if (sp->size() != sq->size()) {
        witness = where + std::to_string(sp->size()) + " vs " + std::to_string(sq->size()) +
                  " distinct eigenvalues " + describe(*sp) + " vs " + describe(*sq);
      } else if (*sp != *sq) {
        witness = where + "eigenvalue multisets differ " + describe(*sp) + " vs " + describe(*sq);
      }
    }
    if (witness.empty()) {
      res.verdict = Verdict::Inconclusive;
      res.witness = "spectra agree under some alignment of the generators";
      return res;
    }
    if (first_witness.empty()) first_witness = witness;
  }
  res.verdict = Verdict::NotEquivalent;
  res.witness = first_witness;
  return res;
}

}  // namespace tlk
