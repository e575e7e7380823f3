// One PASS/FAIL line per acceptance criterion; exits 1 if any fails.
// --heavy adds the F4 certificate to AC7, --only ACn runs a single criterion.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tlk/burnside.hpp"
#include "tlk/errors.hpp"
#include "tlk/lkrep.hpp"
#include "tlk/monoid.hpp"
#include "tlk/twisted.hpp"

using namespace tlk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 8) failures.push_back(why);
  }
};

std::map<std::string, TwistedContext> cache;

const TwistedContext& ctx(const std::string& type, const std::string& sigma) {
  const std::string key = type + "/" + sigma;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, TwistedContext::from_spec(type, sigma)).first;
  return it->second;
}

struct ContextSpec {
  std::string type, sigma;
};

const std::vector<ContextSpec> kContexts = {
    {"A3", "full"}, {"A5", "full"}, {"A7", "full"}, {"D4", "order2"}, {"D5", "full"}, {"D6", "full"},
    {"E6", "full"}, {"A2", "full"}, {"A4", "full"}, {"A6", "full"}, {"A8", "full"}, {"D4", "order3"},
};

// The census tables, keyed by the orbit type of J; absent tags are zero.
std::map<std::string, int> expected_census(const std::string& type, const std::string& sigma, OrbitType t) {
  const char family = type[0];
  const int rank = std::stoi(type.substr(1));
  if (family == 'A' && rank % 2 == 1) {
    const int n = (rank + 1) / 2;
    if (t == OrbitType::A) return {{"A1", 1}, {"A2", (n - 1) * (n - 1)}, {"A3", n - 1}};
    return {{"B1", 1}, {"B2", (n - 2) * (n - 2)}, {"B3", 2 * n - 4}, {"B4", 1}};
  }
  if (family == 'A') {
    const int n = rank / 2;
    if (t == OrbitType::B) return {{"B1", 1}, {"B2", (n - 1) * (n - 2)}, {"B3", 2 * n - 3}, {"B4", 1}};
    return {{"D1", 1}, {"D2", (n - 1) * (n - 1)}, {"D3", n - 1}};
  }
  if (family == 'D' && sigma == "order3") {
    if (t == OrbitType::A) return {{"A1", 1}, {"A2", 1}, {"A3", 2}};
    return {{"C1", 1}, {"C2", 1}, {"C5", 1}};
  }
  if (family == 'D') {
    const int n = rank;
    if (t == OrbitType::A) return {{"A1", 1}, {"A2", n * n - 6 * n + 10}, {"A3", 2 * n - 5}};
    return {{"B1", 1}, {"B2", (n - 2) * (n - 3)}, {"B3", 0}, {"B4", n - 2}};
  }
  if (t == OrbitType::A) return {{"A1", 1}, {"A2", 9}, {"A3", 7}};
  return {{"B1", 1}, {"B2", 6}, {"B3", 4}, {"B4", 3}};
}

std::string label(const TwistedContext& c, std::size_t j) { return c.name() + " J=" + c.quotient().label(j); }

Outcome ac1() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t rows = 0;
  for (const auto& s : kContexts) {
    const auto& c = ctx(s.type, s.sigma);
    for (std::size_t j = 0; j < c.generators().size(); ++j) {
      const auto& g = c.generator(j);
      const auto got = census(c.roots(), c.orbits(), g.orbit);
      const auto want = expected_census(s.type, s.sigma, g.orbit.type);
      ++rows;
      for (const auto& tag : configuration_tags(g.orbit.type)) {
        const int w = want.count(tag) ? want.at(tag) : 0;
        const int v = got.count(tag) ? got.at(tag) : 0;
        if (v != w) o.fail(label(c, j) + " N_" + tag + " = " + std::to_string(v) + ", table says " + std::to_string(w));
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 10) o.fail("runtime " + std::to_string(t) + " s");
  o.detail = std::to_string(kContexts.size()) + " contexts, " + std::to_string(rows) + " generator rows";
  return o;
}

Outcome ac2() {
  Outcome o;
  std::size_t blocks = 0;
  for (const auto& s : kContexts) {
    const auto& c = ctx(s.type, s.sigma);
    for (std::size_t j = 0; j < c.generators().size(); ++j) {
      const auto rep = verify_blocks(c, j);
      if (!rep.off_block_zero) o.fail(label(c, j) + ": nonzero entry outside the blocks");
      if (!rep.kills_theta) o.fail(label(c, j) + ": phi does not kill e_Theta_J");
      for (const auto& b : rep.blocks) {
        ++blocks;
        if (!b.template_ok) o.fail(label(c, j) + ": block " + b.tag + " differs from the printed matrix");
        if (!b.charpoly_ok) o.fail(label(c, j) + ": block " + b.tag + " has characteristic polynomial " +
                                   b.charpoly.to_string());
      }
    }
  }
  o.detail = std::to_string(blocks) + " blocks matched";
  return o;
}

Outcome ac3() {
  Outcome o;
  std::size_t gens = 0, extra_in_context = 0;
  for (const auto& s : kContexts) {
    const auto& c = ctx(s.type, s.sigma);
    for (std::size_t j = 0; j < c.generators().size(); ++j) {
      ++gens;
      if (!annihilator(c, j).annihilates) o.fail(label(c, j) + ": (X - lambda) P_J does not annihilate psi");
      for (const auto& b : verify_blocks(c, j).blocks)
        if (b.extra_ok) {
          ++extra_in_context;
          if (!*b.extra_ok) o.fail(label(c, j) + ": smaller annihilator fails on block " + b.tag);
        }
    }
  }
  // The smaller annihilators must hold on the configuration matrices themselves.
  for (const char* tag : {"B5", "C4", "C6", "D5"}) {
    const auto e = expected_block(tag);
    if (!e.extra || !evaluate(*e.extra, e.block).is_zero()) o.fail(std::string("template ") + tag + ": smaller annihilator fails");
  }
  o.detail = std::to_string(gens) + " generators; B5/C4/C6/D5 on templates, " + std::to_string(extra_in_context) +
             " occurrences in contexts";
  return o;
}

Outcome ac4() {
  Outcome o;
  std::size_t gens = 0;
  for (const auto& s : kContexts) {
    const auto& c = ctx(s.type, s.sigma);
    for (std::size_t j = 0; j < c.generators().size(); ++j) {
      ++gens;
      const auto& g = c.generator(j);
      if (!decomposition_holds(g)) o.fail(label(c, j) + ": psi - phi is not the form term");
      if (!generator_matches_word(c, j)) o.fail(label(c, j) + ": psi differs from the restricted Delta_J word");
      if (g.form[g.theta] != expected_form_value(g.orbit.type, c.f()))
        o.fail(label(c, j) + ": f_J(e_Theta_J) = " + g.form[g.theta].to_string());
    }
  }
  o.detail = std::to_string(gens) + " generators";
  return o;
}

Outcome ac5() {
  Outcome o;
  std::size_t pairs = 0, adjacent = 0;
  const std::vector<ContextSpec> targets = {{"A5", "full"}, {"A7", "full"}, {"D5", "full"}, {"E6", "full"},
                                            {"D4", "order3"}};
  for (const auto& s : targets) {
    const auto& c = ctx(s.type, s.sigma);
    const std::size_t n = c.generators().size();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (j == k) continue;
        const auto r = coupling_coefficient(c, j, k);
        ++pairs;
        if (r.m >= 3) ++adjacent;
        const std::string where = c.name() + " (" + c.quotient().label(j) + "," + c.quotient().label(k) + ")";
        if (!r.expected) {
          o.fail(where + ": no closed form");
          continue;
        }
        if (r.value != *r.expected) o.fail(where + ": " + r.value.to_string() + " vs " + r.expected->to_string());
        if (r.m >= 3 && r.value.is_zero()) o.fail(where + ": vanishes");
      }
  }
  o.detail = "B3 (A5), B4 (A7, D5), F4 (E6), G2 (D4/order3): " + std::to_string(adjacent) + " adjacent of " +
             std::to_string(pairs) + " ordered pairs";
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto at = Specialization::default_point();
  std::size_t tables = 0;
  for (const auto& s : kContexts) {
    const auto& c = ctx(s.type, s.sigma);
    for (std::size_t j = 0; j < c.generators().size(); ++j) {
      const auto t = c.generator(j).orbit.type;
      if (t != OrbitType::A && t != OrbitType::B) continue;
      ++tables;
      const auto table = spectrum(c, j);
      const auto want = expected_census(s.type, s.sigma, t);
      auto n = [&](const char* tag) { return want.count(tag) ? want.at(tag) : 0; };
      const std::vector<int> mult = t == OrbitType::A
                                        ? std::vector<int>{n("A2") + n("A3"), n("A3"), n("A1")}
                                        : std::vector<int>{n("B2") + n("B3") + n("B4"), n("B3") + n("B4"), n("B4"),
                                                           n("B1")};
      for (std::size_t k = 0; k < table.size(); ++k)
        if (table[k].multiplicity != mult[k])
          o.fail(label(c, j) + ": multiplicity of " + table[k].label + " is " + std::to_string(table[k].multiplicity));
      const auto check = verify_spectrum(c, j, at);
      if (!check.ok()) o.fail(label(c, j) + ": annihilation or rank check failed");
    }
  }
  // E6, J of type A: {d: 16, ď: 7, f: 1}.
  const auto& e6 = ctx("E6", "full");
  for (std::size_t j = 0; j < e6.generators().size(); ++j)
    if (e6.generator(j).orbit.type == OrbitType::A) {
      const auto t = spectrum(e6, j);
      if (t[0].multiplicity != 16 || t[1].multiplicity != 7 || t[2].multiplicity != 1) o.fail("E6 type A table");
    }
  o.detail = std::to_string(tables) + " tables, rank checks at " + at.to_string();
  return o;
}

Outcome ac7(bool heavy, Backend heavy_backend) {
  Outcome o;
  const auto at = Specialization::parse("a=1,b=1,d=2,f=3");
  struct Case {
    ContextSpec spec;
    std::size_t n;
    bool irreducible;
  };
  std::vector<Case> cases = {{{"A3", "full"}, 4, true},
                             {{"D4", "order3"}, 6, true},
                             {{"A5", "full"}, 9, true},
                             {{"A2", "full"}, 2, false}};
  if (heavy) cases.push_back({{"E6", "full"}, 24, true});
  std::ostringstream detail;
  for (const auto& cs : cases) {
    const auto& c = ctx(cs.spec.type, cs.spec.sigma);
    const bool big = c.dimension() > 20;
    const auto t0 = Clock::now();
    const auto r = burnside_certificate(c, at, 1000000, big ? heavy_backend : Backend::Exact);
    const double t = seconds_since(t0);
    const std::size_t want = cs.irreducible ? cs.n * cs.n : 1;
    if (r.n != cs.n) o.fail(c.name() + ": size " + std::to_string(r.n));
    if (r.dimension != want) o.fail(c.name() + ": dimension " + std::to_string(r.dimension));
    if (big && t >= 600) o.fail(c.name() + ": runtime " + std::to_string(t) + " s");
    detail << c.name() << " " << r.dimension << "; ";
  }
  if (!heavy) detail << "F4 behind --heavy; ";
  detail << "at " << at.to_string();
  o.detail = detail.str();
  return o;
}

Outcome ac8() {
  Outcome o;
  const std::vector<std::pair<ContextSpec, std::size_t>> cases = {
      {{"A3", "full"}, 6}, {{"D4", "order3"}, 6}, {{"A5", "full"}, 4}};
  std::ostringstream detail;
  for (const auto& [s, len] : cases) {
    const auto& c = ctx(s.type, s.sigma);
    const auto r = faithfulness_spotcheck(c, len);
    std::size_t classes = 0;
    for (const auto& l : r.levels) classes += l.classes;
    if (!r.collisions.empty()) o.fail(c.name() + ": " + std::to_string(r.collisions.size()) + " collisions");
    if (!r.inconsistencies.empty())
      o.fail(c.name() + ": " + std::to_string(r.inconsistencies.size()) + " within-class mismatches");
    detail << (detail.tellp() > 0 ? "; " : "") << c.name() << " len " << len << " (" << classes << " classes)";
  }
  o.detail = detail.str();
  return o;
}

Outcome ac9() {
  Outcome o;
  // (i) same type, different (d, ď, f).
  const std::vector<std::pair<std::string, std::string>> points = {
      {"a=1,b=1,d=2,f=3", "a=1,b=1,d=3,f=3"},
      {"a=1,b=1,d=2,f=3", "a=1,b=1,d=2,f=5"},
      {"a=1,b=2,d=3,f=7", "a=2,b=1,d=3,f=7"},
  };
  const std::vector<ContextSpec> same = {{"A5", "full"}, {"D5", "full"}, {"E6", "full"}};
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& c = ctx(same[k].type, same[k].sigma);
    const auto sx = Specialization::parse(points[k].first), sy = Specialization::parse(points[k].second);
    if (equivalence_discriminant(c, sx, c, sy).verdict != Verdict::NotEquivalent)
      o.fail(c.name() + " at " + points[k].first + " vs " + points[k].second);
    if (equivalence_discriminant(c, sx, c, sx).verdict != Verdict::Inconclusive)
      o.fail(c.name() + " against itself is not inconclusive");
  }
  // (ii) A7 vs D5, both of quotient type B4.
  const auto p = Specialization::parse("a=1,b=1,d=2,f=3");
  const auto r = equivalence_discriminant(ctx("A7", "full"), p, ctx("D5", "full"), p);
  if (r.verdict != Verdict::NotEquivalent || r.witness.find("dimension") != std::string::npos)
    o.fail("A7 vs D5: " + r.witness);
  // (iii) A_{2n-1} vs A_{2n}.
  for (int n = 2; n <= 4; ++n) {
    const auto& x = ctx("A" + std::to_string(2 * n - 1), "full");
    const auto& y = ctx("A" + std::to_string(2 * n), "full");
    const auto d = equivalence_discriminant(x, p, y, p);
    if (d.verdict != Verdict::NotEquivalent || x.dimension() != std::size_t(n * n) ||
        y.dimension() != std::size_t(n * (n + 1)))
      o.fail(x.name() + " vs " + y.name() + ": " + d.witness);
  }
  o.detail = "3 same-type pairs, A7 vs D5 by spectrum, A3/A4 A5/A6 A7/A8 by dimension";
  return o;
}

Outcome ac10() {
  Outcome o;
  std::size_t instances = 0;
  for (const char* type : {"A3", "A5", "D4", "E6", "A2", "A4"}) {
    const auto& c = ctx(type, "full");
    const auto& lk = c.lk();
    const auto v = family_violations(lk.roots(), lk.phis(), lk.family());
    if (!v.empty()) o.fail(std::string(type) + ": " + v.front());
    for (const auto& r : verify_braid_relations(lk)) {
      ++instances;
      if (!r.pass) o.fail(std::string(type) + ": braid relation " + std::to_string(r.i) + "," + std::to_string(r.j));
    }
    for (const auto& r : verify_quotient_braid_relations(c)) {
      ++instances;
      if (!r.pass) o.fail(std::string(type) + ": quotient braid relation");
    }
    for (const auto& e : verify_equivariance(lk, c.sigma())) {
      ++instances;
      if (!e.pass) o.fail(std::string(type) + ": equivariance at " + std::to_string(e.i));
    }
    if (!family_sigma_symmetric(lk, c.sigma())) o.fail(std::string(type) + ": family not sigma-symmetric");
    for (const auto& l : verify_lemmas(lk)) {
      ++instances;
      if (!l.pass) o.fail(std::string(type) + ": " + l.name);
    }
    for (std::size_t i = 0; i < lk.matrix().size(); ++i)
      for (int n = 1; n <= 4; ++n) {
        ++instances;
        const int ii = static_cast<int>(i);
        if (!rank_one_power_identity(lk.phi(ii), lk.family().forms[i], lk.roots().simple(ii), n))
          o.fail(std::string(type) + ": power identity, n = " + std::to_string(n));
      }
  }
  o.detail = std::to_string(instances) + " identities on A3, A5, D4, E6, A2, A4";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool heavy = false;
  Backend heavy_backend = Backend::Exact;
  std::string only;
  for (int k = 1; k < argc; ++k) {
    if (!std::strcmp(argv[k], "--heavy")) {
      heavy = true;
    } else if (!std::strcmp(argv[k], "--backend") && k + 1 < argc) {
      heavy_backend = parse_backend(argv[++k]);
    } else if (!std::strcmp(argv[k], "--only") && k + 1 < argc) {
      only = argv[++k];
    } else {
      std::cerr << "usage: acceptance [--heavy] [--backend exact|modp] [--only ACn]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1},
      {"AC2", ac2},
      {"AC3", ac3},
      {"AC4", ac4},
      {"AC5", ac5},
      {"AC6", ac6},
      {"AC7", [&] { return ac7(heavy, heavy_backend); }},
      {"AC8", ac8},
      {"AC9", ac9},
      {"AC10", ac10},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    if (!only.empty() && name != only) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", seconds_since(t0));
    std::cout << name << (name.size() == 3 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << " ("
              << time << ")\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
