#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tlk/burnside.hpp"
#include "tlk/errors.hpp"
#include "tlk/monoid.hpp"
#include "tlk/report.hpp"
#include "tlk/twisted.hpp"

namespace tlk::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
  if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("budget '" + key + "' needs a non-negative integer, got '" + value + "'");
  try {
    return std::stoull(value);
  } catch (const std::out_of_range&) {
    throw ParseError("budget '" + key + "' is out of range");
  }
}

struct Options {
  std::string type, sigma = "full", params;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t root_cap = 0, word_cap = 0, product_cap = 0;  // 0: keep the default
  std::vector<std::string> checks;
  std::size_t max_len = 4, samples = 20;
  bool heavy = false;
  std::string backend = "exact";
  std::string type2, sigma2 = "full", params2;
};

TwistedContext make_context(const std::string& type, const std::string& sigma, const Budget& budget) {
  if (type.empty()) throw ParseError("--type is required");
  const auto m = CoxeterMatrix::from_type(type);
  const auto group = sigma_group(m, sigma);
  auto rs = PositiveRootSystem::generate(m, budget.root_cap);
  auto family = solve_lk_family(rs);
  return TwistedContext(LKContext(std::move(rs), std::move(family)), group, type + "/" + sigma);
}

Specialization params_or(const std::string& text, Specialization fallback) {
  return text.empty() ? fallback : Specialization::parse(text);
}

// Burnside point: the default (★)-compatible values with f = 3. At f = 1 the
// eigenvalues d, ď, f collide and the span can drop (A3 gives 12 of 16).
Specialization certificate_point() { return Specialization::parse("a=1,b=1,d=2,f=3"); }

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void table_census(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "  dimension " << j["dimension"] << "\n";
  for (const auto& row : j["census"]) {
    out << std::left << std::setw(14) << row["J"].get<std::string>() << row["type"].get<std::string>();
    for (const auto& [tag, n] : row["counts"].items()) out << "  " << tag << "=" << n;
    out << "\n";
  }
}

void table_roots(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "  " << j["count"] << " positive roots, max depth " << j["max_depth"]
      << "\n";
  for (const auto& n : j["nodes"])
    out << std::setw(4) << n["index"] << "  depth " << std::setw(3) << n["depth"] << "  orbit " << std::setw(3)
        << n["orbit"] << "  " << n["name"].get<std::string>() << "\n";
  out << j["edges"].size() << " edges\n";
}

void table_verify(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "\n";
  for (const auto& [name, r] : j["checks"].items())
    out << "  " << std::left << std::setw(14) << name << mark(r["pass"].get<bool>()) << "\n";
  out << "overall " << mark(j["pass"].get<bool>()) << "\n";
}

void table_spectrum(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "  rank checks at " << j["at"].get<std::string>() << "\n";
  for (const auto& g : j["generators"]) {
    out << std::left << std::setw(14) << g["J"].get<std::string>() << g["type"].get<std::string>();
    if (!g["supported"].get<bool>()) {
      out << "  (no spectrum for this orbit type)\n";
      continue;
    }
    for (const auto& e : g["eigenvalues"]) out << "  " << e["label"].get<std::string>() << ":" << e["multiplicity"];
    out << "  " << mark(g["pass"].get<bool>()) << "\n";
  }
}

void table_annihilator(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "\n";
  for (const auto& g : j["generators"])
    out << std::left << std::setw(14) << g["J"].get<std::string>() << g["type"].get<std::string>() << "  lambda "
        << g["lambda"].get<std::string>() << "  P " << g["P"].get<std::string>() << "  "
        << mark(g["pass"].get<bool>()) << "\n";
}

void table_coupling(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "\n";
  for (const auto& p : j["pairs"])
    out << std::left << std::setw(10) << p["J"].get<std::string>() << std::setw(10) << p["K"].get<std::string>()
        << "m=" << p["m"] << "  " << p["value"].get<std::string>() << "  expected " << cell(p["expected"]) << "  "
        << mark(p["matches_closed_form"].get<bool>()) << "\n";
}

void table_irreducible(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << " at " << j["at"].get<std::string>() << "  [" << j["backend"].get<std::string>()
      << "]  dimension " << j["dimension"] << " / " << j["full"] << "  "
      << (j["irreducible"].get<bool>() ? "irreducible" : "NOT irreducible") << "\n";
}

void table_faithful(const Json& j, std::ostream& out) {
  out << j["context"].get<std::string>() << "\n";
  for (const auto& l : j["levels"])
    out << "  length " << l["length"] << "  words " << l["words"] << "  classes " << l["classes"] << "\n";
  out << "collisions " << j["collisions"].size() << "  inconsistencies " << j["inconsistencies"].size()
      << "  multiplicativity failures " << j["multiplicativity"]["failures"].size() << "  "
      << mark(j["pass"].get<bool>()) << "\n";
}

void table_equiv(const Json& j, std::ostream& out) {
  out << j["first"]["context"].get<std::string>() << " vs " << j["second"]["context"].get<std::string>() << ": "
      << j["verdict"].get<std::string>() << "\n  " << j["witness"].get<std::string>() << "\n";
}

}  // namespace

Budget parse_budget(const std::string& text, Budget base) {
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("budget entry '" + item + "' needs key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "root")
      base.root_cap = parse_count(key, value);
    else if (key == "word")
      base.word_cap = parse_count(key, value);
    else if (key == "product")
      base.product_cap = parse_count(key, value);
    else
      throw ParseError("unknown budget key '" + key + "' (expected root, word or product)");
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Lawrence-Krammer representations: constructions and exact checks", "tlk"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--type", o.type, "Coxeter type: A<n>, D<n> or E6");
  app.add_option("--sigma", o.sigma, "graph automorphism group: full, order2, order3 or trivial")
      ->capture_default_str();
  app.add_option("--params", o.params, "specialization such as a=1,b=1,d=2,f=3");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--root-cap", o.root_cap, "maximum number of positive roots");
  app.add_option("--word-cap", o.word_cap, "maximum number of enumerated words");
  app.add_option("--product-cap", o.product_cap, "maximum number of matrix products in the span");

  auto* roots = app.add_subcommand("roots", "positive roots, the reflection graph and the orbit partition");
  auto* census = app.add_subcommand("census", "configuration counts of every J-mesh");
  auto* verify = app.add_subcommand("verify", "run exact checks");
  std::string check_list;
  verify->add_option("--check", check_list, "comma separated subset of the checks (default: all)");
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue multiplicities for generators of type A and B");
  auto* annih = app.add_subcommand("annihilator", "annihilating polynomials of the twisted generators");
  auto* coupling = app.add_subcommand("coupling", "coupling coefficients for every ordered pair J != K");
  auto* irreducible = app.add_subcommand("irreducible", "Burnside certificate at a rational point");
  irreducible->add_flag("--heavy", o.heavy, "allow contexts with more than 20 orbits");
  irreducible->add_option("--backend", o.backend, "exact or modp")->capture_default_str();
  auto* faithful = app.add_subcommand("faithful", "injectivity spot-check on monoid classes");
  faithful->add_option("--max-len", o.max_len, "longest word length")->capture_default_str();
  faithful->add_option("--samples", o.samples, "sampled pairs for the multiplicativity check")->capture_default_str();
  auto* equiv = app.add_subcommand("equiv", "spectral non-equivalence discriminant between two contexts");
  equiv->add_option("--type2", o.type2, "Coxeter type of the second context")->required();
  equiv->add_option("--sigma2", o.sigma2, "automorphism group of the second context")->capture_default_str();
  equiv->add_option("--params2", o.params2, "specialization of the second context");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Budget budget;
    if (const char* env = std::getenv("TLK_BUDGET")) budget = parse_budget(env, budget);
    if (o.root_cap) budget.root_cap = o.root_cap;
    if (o.word_cap) budget.word_cap = o.word_cap;
    if (o.product_cap) budget.product_cap = o.product_cap;

    const bool table = o.format == "table";
    Json result;
    void (*render)(const Json&, std::ostream&) = nullptr;
    int code = 0;
    auto verdict = [&](const Json& j) { return j["pass"].get<bool>() ? 0 : 1; };

    const TwistedContext ctx = make_context(o.type, o.sigma, budget);
    if (roots->parsed()) {
      result = roots_json(ctx);
      render = table_roots;
    } else if (census->parsed()) {
      result = census_json(ctx);
      render = table_census;
    } else if (verify->parsed()) {
      auto checks = split(check_list, ',');
      if (checks.empty()) checks = verify_check_names();
      result = verify_json(ctx, checks, params_or(o.params, Specialization::default_point()));
      render = table_verify;
      code = verdict(result);
    } else if (spectrum->parsed()) {
      result = spectrum_json(ctx, params_or(o.params, Specialization::default_point()));
      render = table_spectrum;
      code = verdict(result);
    } else if (annih->parsed()) {
      result = annihilator_json(ctx);
      render = table_annihilator;
      code = verdict(result);
    } else if (coupling->parsed()) {
      result = coupling_json(ctx);
      render = table_coupling;
      code = verdict(result);
    } else if (irreducible->parsed()) {
      if (ctx.dimension() > kHeavyDimension && !o.heavy)
        throw ParseError(ctx.name() + " has " + std::to_string(ctx.dimension()) + " orbits; pass --heavy to run it");
      const auto at = params_or(o.params, certificate_point());
      const auto r = burnside_certificate(ctx, at, budget.product_cap, parse_backend(o.backend));
      result = irreducible_json(ctx, at, r);
      render = table_irreducible;
      code = r.irreducible() ? 0 : 1;
    } else if (faithful->parsed()) {
      const auto r = faithfulness_spotcheck(ctx, o.max_len, budget.word_cap);
      const auto mult = multiplicativity_check(ctx, o.max_len, o.samples, o.seed);
      result = faithful_json(ctx, r, mult);
      render = table_faithful;
      code = verdict(result);
    } else if (equiv->parsed()) {
      const TwistedContext other = make_context(o.type2, o.sigma2, budget);
      const auto sx = params_or(o.params, Specialization{});
      const auto sy = params_or(o.params2, sx);
      result = equiv_json(ctx, sx, other, sy, equivalence_discriminant(ctx, sx, other, sy));
      render = table_equiv;
    }

    if (table)
      render(result, out);
    else
      out << result.dump(2) << "\n";
    return code;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tlk::cli
