#include "tlk/report.hpp"

#include <algorithm>

#include "tlk/errors.hpp"

namespace tlk {

namespace {

std::string j_name(const TwistedContext& ctx, std::size_t j) { return ctx.quotient().label(j); }

std::string type_name(const TwistedContext& ctx, std::size_t j) {
  return std::string(1, orbit_type_letter(ctx.generator(j).orbit.type));
}

Json relations_json(const std::vector<RelationCheck>& checks, const std::vector<std::string>& labels, bool& pass) {
  Json out = Json::array();
  for (const auto& r : checks) {
    out.push_back({{"pair", {labels[r.i], labels[r.j]}}, {"m", r.m}, {"pass", r.pass}});
    pass = pass && r.pass;
  }
  return out;
}

std::vector<std::string> index_labels(const CoxeterMatrix& m) { return m.labels(); }

Json block_report_json(const TwistedContext& ctx, const BlockReport& rep) {
  Json blocks = Json::array();
  for (const auto& b : rep.blocks) {
    Json orbits = Json::array();
    for (int o : b.orbits) orbits.push_back(ctx.orbit_name(o));
    Json jb = {{"tag", b.tag},
               {"orbits", orbits},
               {"template_ok", b.template_ok},
               {"charpoly", b.charpoly.to_string()},
               {"charpoly_ok", b.charpoly_ok}};
    if (b.extra_ok) jb["already_annihilated"] = *b.extra_ok;
    blocks.push_back(jb);
  }
  return {{"J", j_name(ctx, rep.j)},
          {"type", type_name(ctx, rep.j)},
          {"off_block_zero", rep.off_block_zero},
          {"kills_theta", rep.kills_theta},
          {"blocks", blocks},
          {"pass", rep.ok()}};
}

Json annihilator_entry(const TwistedContext& ctx, const AnnihilatorData& a) {
  return {{"J", j_name(ctx, a.j)},
          {"type", type_name(ctx, a.j)},
          {"P", a.p.to_string()},
          {"Q", a.q.to_string()},
          {"lambda", a.lambda.to_string()},
          {"lambda_ok", a.lambda_ok},
          {"recurrence_ok", a.recurrence_ok},
          {"image_ok", a.image_ok},
          {"annihilates", a.annihilates},
          {"power_formula_ok", a.power_formula_ok},
          {"pass", a.ok()}};
}

Json coupling_entry(const TwistedContext& ctx, const CouplingResult& c) {
  Json out = {{"J", j_name(ctx, c.j)},
              {"K", j_name(ctx, c.k)},
              {"m", c.m},
              {"value", c.value.to_string()}};
  out["expected"] = c.expected ? Json(c.expected->to_string()) : Json(nullptr);
  out["matches_closed_form"] = c.matches();
  out["nonzero"] = !c.value.is_zero();
  return out;
}

Json word_json(const CoxeterMatrix& q, const Word& w) {
  Json out = Json::array();
  for (int x : w) out.push_back(q.label(static_cast<std::size_t>(x)));
  return out;
}

}  // namespace

Json context_json(const TwistedContext& ctx) {
  Json sigma = Json::array();
  for (const auto& p : ctx.sigma().generators) sigma.push_back(p);
  Json quotient = Json::array();
  const auto& q = ctx.quotient();
  for (std::size_t i = 0; i < q.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < q.size(); ++j) row.push_back(q(i, j));
    quotient.push_back(row);
  }
  Json gens = Json::array();
  for (std::size_t j = 0; j < ctx.generators().size(); ++j) {
    const auto& g = ctx.generator(j);
    Json word = Json::array();
    for (int i : g.word) word.push_back(ctx.lk().matrix().label(static_cast<std::size_t>(i)));
    gens.push_back({{"J", j_name(ctx, j)}, {"type", type_name(ctx, j)}, {"delta_word", word}});
  }
  return {{"name", ctx.name()},
          {"rank", ctx.lk().matrix().size()},
          {"positive_roots", ctx.roots().size()},
          {"sigma_order", ctx.sigma().order()},
          {"sigma_generators", sigma},
          {"dimension", ctx.dimension()},
          {"quotient", {{"labels", q.labels()}, {"matrix", quotient}}},
          {"generators", gens}};
}

Json roots_json(const TwistedContext& ctx) {
  const auto& rs = ctx.roots();
  Json nodes = Json::array();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const int ki = static_cast<int>(k);
    nodes.push_back({{"index", k},
                     {"name", rs.root_name(ki)},
                     {"coords", rs.coords(ki)},
                     {"depth", rs.depth(ki)},
                     {"orbit", ctx.orbits().orbit_of[k]}});
  }
  Json edges = Json::array();
  for (const auto& e : rs.edges())
    edges.push_back({{"upper", e.upper}, {"label", rs.matrix().label(e.label)}, {"lower", e.lower}});
  Json orbits = Json::array();
  for (std::size_t o = 0; o < ctx.orbits().orbits.size(); ++o) {
    const auto& orb = ctx.orbits().orbits[o];
    orbits.push_back({{"index", o}, {"members", orb.members}, {"depth", orb.depth}});
  }
  return {{"context", ctx.name()},
          {"count", rs.size()},
          {"max_depth", rs.max_depth()},
          {"nodes", nodes},
          {"edges", edges},
          {"orbits", orbits}};
}

Json census_json(const TwistedContext& ctx) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < ctx.generators().size(); ++j) {
    const auto& g = ctx.generator(j);
    Json counts = Json::object();
    for (const auto& [tag, n] : census(ctx.roots(), ctx.orbits(), g.orbit)) counts[tag] = n;
    rows.push_back({{"J", j_name(ctx, j)}, {"type", type_name(ctx, j)}, {"counts", counts}});
  }
  return {{"context", ctx.name()}, {"dimension", ctx.dimension()}, {"census", rows}};
}

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = {"family",        "braid",      "equivariance", "lemmas",
                                                 "power",         "definition", "decomposition", "blocks",
                                                 "annihilator",   "coupling",   "spectrum"};
  return names;
}

Json verify_json(const TwistedContext& ctx, const std::vector<std::string>& checks, const Specialization& at) {
  for (const auto& c : checks)
    if (std::find(verify_check_names().begin(), verify_check_names().end(), c) == verify_check_names().end())
      throw ParseError("unknown check '" + c + "'");
  auto wants = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };

  const auto& lk = ctx.lk();
  const auto gamma_labels = index_labels(lk.matrix());
  const auto quotient_labels = index_labels(ctx.quotient());
  const std::size_t nj = ctx.generators().size();
  Json out = {{"context", ctx.name()}};
  Json results = Json::object();
  bool all = true;

  if (wants("family")) {
    const auto v = family_violations(lk.roots(), lk.phis(), lk.family());
    Json first = Json::array();
    for (std::size_t k = 0; k < v.size() && k < 10; ++k) first.push_back(v[k]);
    results["family"] = {{"violations", v.size()}, {"first", first}, {"pass", v.empty()}};
    all = all && v.empty();
  }
  if (wants("braid")) {
    bool pass = true;
    Json j = {{"relations", relations_json(verify_braid_relations(lk), gamma_labels, pass)},
              {"quotient_relations", relations_json(verify_quotient_braid_relations(ctx), quotient_labels, pass)}};
    j["pass"] = pass;
    results["braid"] = j;
    all = all && pass;
  }
  if (wants("equivariance")) {
    bool pass = family_sigma_symmetric(lk, ctx.sigma());
    Json list = Json::array();
    for (const auto& e : verify_equivariance(lk, ctx.sigma())) {
      list.push_back({{"sigma", e.sigma}, {"i", gamma_labels[e.i]}, {"pass", e.pass}});
      pass = pass && e.pass;
    }
    results["equivariance"] = {{"family_symmetric", family_sigma_symmetric(lk, ctx.sigma())},
                               {"generators", list},
                               {"pass", pass}};
    all = all && pass;
  }
  if (wants("lemmas")) {
    bool pass = true;
    Json list = Json::array();
    for (const auto& l : verify_lemmas(lk)) {
      Json e = {{"name", l.name}, {"i", gamma_labels[l.i]}};
      e["j"] = l.j >= 0 ? Json(gamma_labels[l.j]) : Json(nullptr);
      e["pass"] = l.pass;
      list.push_back(e);
      pass = pass && l.pass;
    }
    results["lemmas"] = {{"instances", list}, {"pass", pass}};
    all = all && pass;
  }
  if (wants("power")) {
    bool pass = true;
    Json list = Json::array();
    for (std::size_t i = 0; i < lk.matrix().size(); ++i) {
      const int ii = static_cast<int>(i);
      for (int n = 1; n <= 4; ++n) {
        const bool ok = rank_one_power_identity(lk.phi(ii), lk.family().forms[i],
                                                static_cast<std::size_t>(lk.roots().simple(ii)), n);
        list.push_back({{"i", gamma_labels[i]}, {"n", n}, {"pass", ok}});
        pass = pass && ok;
      }
    }
    results["power"] = {{"instances", list}, {"pass", pass}};
    all = all && pass;
  }
  if (wants("definition")) {
    bool pass = true;
    Json list = Json::array();
    for (std::size_t j = 0; j < nj; ++j) {
      const bool ok = generator_matches_word(ctx, j);
      list.push_back({{"J", j_name(ctx, j)}, {"pass", ok}});
      pass = pass && ok;
    }
    results["definition"] = {{"generators", list}, {"pass", pass}};
    all = all && pass;
  }
  if (wants("decomposition")) {
    bool pass = true;
    Json list = Json::array();
    for (std::size_t j = 0; j < nj; ++j) {
      const auto& g = ctx.generator(j);
      const bool ok = decomposition_holds(g);
      const bool value_ok = g.form[g.theta] == expected_form_value(g.orbit.type, ctx.f());
      list.push_back({{"J", j_name(ctx, j)},
                      {"type", type_name(ctx, j)},
                      {"form_value", g.form[g.theta].to_string()},
                      {"form_value_ok", value_ok},
                      {"pass", ok && value_ok}});
      pass = pass && ok && value_ok;
    }
    results["decomposition"] = {{"generators", list}, {"pass", pass}};
    all = all && pass;
  }
  if (wants("blocks")) {
    bool pass = true;
    Json list = Json::array();
    for (std::size_t j = 0; j < nj; ++j) {
      const auto rep = verify_blocks(ctx, j);
      list.push_back(block_report_json(ctx, rep));
      pass = pass && rep.ok();
    }
    results["blocks"] = {{"generators", list}, {"pass", pass}};
    all = all && pass;
  }
  if (wants("annihilator")) {
    const Json a = annihilator_json(ctx);
    results["annihilator"] = a;
    all = all && a["pass"].get<bool>();
  }
  if (wants("coupling")) {
    const Json c = coupling_json(ctx);
    results["coupling"] = c;
    all = all && c["pass"].get<bool>();
  }
  if (wants("spectrum")) {
    const Json s = spectrum_json(ctx, at);
    results["spectrum"] = s;
    all = all && s["pass"].get<bool>();
  }
  out["checks"] = results;
  out["pass"] = all;
  return out;
}

Json spectrum_json(const TwistedContext& ctx, const Specialization& at) {
  Json list = Json::array();
  bool pass = true;
  for (std::size_t j = 0; j < ctx.generators().size(); ++j) {
    Json e = {{"J", j_name(ctx, j)}, {"type", type_name(ctx, j)}};
    const auto t = ctx.generator(j).orbit.type;
    if (t != OrbitType::A && t != OrbitType::B) {
      e["supported"] = false;
      list.push_back(e);
      continue;
    }
    e["supported"] = true;
    const auto table = spectrum(ctx, j);
    const auto check = verify_spectrum(ctx, j, at);
    Json eig = Json::array();
    for (std::size_t k = 0; k < table.size(); ++k)
      eig.push_back({{"label", table[k].label},
                     {"value", table[k].value.to_string()},
                     {"multiplicity", table[k].multiplicity},
                     {"nullity", check.nullities[k]}});
    e["eigenvalues"] = eig;
    e["sums_to_dimension"] = check.sums_to_dimension;
    e["annihilates"] = check.annihilates;
    e["distinct_at_point"] = check.distinct;
    e["nullities_ok"] = check.nullities_ok;
    e["pass"] = check.ok();
    pass = pass && check.ok();
    list.push_back(e);
  }
  return {{"context", ctx.name()}, {"at", at.to_string()}, {"generators", list}, {"pass", pass}};
}

Json annihilator_json(const TwistedContext& ctx) {
  Json list = Json::array();
  bool pass = true;
  for (std::size_t j = 0; j < ctx.generators().size(); ++j) {
    const auto a = annihilator(ctx, j);
    list.push_back(annihilator_entry(ctx, a));
    pass = pass && a.ok();
  }
  return {{"context", ctx.name()}, {"generators", list}, {"pass", pass}};
}

Json coupling_json(const TwistedContext& ctx) {
  Json list = Json::array();
  bool pass = true;
  const std::size_t n = ctx.generators().size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const auto c = coupling_coefficient(ctx, j, k);
      list.push_back(coupling_entry(ctx, c));
      pass = pass && c.matches() && (c.m == 2 || !c.value.is_zero());
    }
  return {{"context", ctx.name()}, {"pairs", list}, {"pass", pass}};
}

Json irreducible_json(const TwistedContext& ctx, const Specialization& at, const BurnsideResult& r) {
  return {{"context", ctx.name()},
          {"at", at.to_string()},
          {"backend", backend_name(r.backend)},
          {"n", r.n},
          {"dimension", r.dimension},
          {"full", r.n * r.n},
          {"products", r.products},
          {"irreducible", r.irreducible()}};
}

Json faithful_json(const TwistedContext& ctx, const FaithfulnessReport& r, const MultiplicativityReport& mult) {
  const auto& q = ctx.quotient();
  Json levels = Json::array();
  for (const auto& l : r.levels) levels.push_back({{"length", l.length}, {"words", l.words}, {"classes", l.classes}});
  auto pairs = [&](const std::vector<Collision>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back({{"wordA", word_json(q, c.a)}, {"wordB", word_json(q, c.b)}});
    return out;
  };
  return {{"context", ctx.name()},
          {"levels", levels},
          {"collisions", pairs(r.collisions)},
          {"inconsistencies", pairs(r.inconsistencies)},
          {"multiplicativity", {{"samples", mult.samples}, {"failures", pairs(mult.failures)}}},
          {"pass", r.ok() && mult.ok()}};
}

Json equiv_json(const TwistedContext& x, const Specialization& sx, const TwistedContext& y, const Specialization& sy,
                const EquivalenceResult& r) {
  return {{"first", {{"context", x.name()}, {"at", sx.to_string()}, {"dimension", x.dimension()}}},
          {"second", {{"context", y.name()}, {"at", sy.to_string()}, {"dimension", y.dimension()}}},
          {"verdict", verdict_name(r.verdict)},
          {"witness", r.witness}};
}

}  // namespace tlk
