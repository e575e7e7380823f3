#include <cstdlib>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"
#include "tlk/errors.hpp"
#include "tlk/report.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tlk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const Result& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("census") {
    const auto r = run({"census", "--type", "E6", "--sigma", "full"});
    REQUIRE(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["dimension"] == 24);
    bool seen_a = false;
    for (const auto& row : j["census"])
      if (row["type"] == "A") {
        seen_a = true;
        CHECK(row["counts"]["A2"] == 9);
        CHECK(row["counts"]["A3"] == 7);
      }
    CHECK(seen_a);
    const auto t = run({"census", "--type", "E6", "--format", "table"});
    CHECK(t.out.find("B1=1  B2=6  B3=4  B4=3") != std::string::npos);
  }

  TEST_CASE("verify") {
    const auto r = run({"verify", "--type", "D4", "--sigma", "order3", "--check", "braid,decomposition,annihilator"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 3);
    const auto all = run({"verify", "--type", "A3"});
    CHECK(all.code == 0);
    CHECK(json_of(all)["checks"].size() == tlk::verify_check_names().size());
    CHECK(run({"verify", "--type", "A3", "--check", "nonsense"}).code == 2);
  }

  TEST_CASE("irreducible") {
    const auto r = run({"irreducible", "--type", "A3", "--sigma", "full"});
    CHECK(r.code == 0);
    CHECK(json_of(r)["dimension"] == 16);
    CHECK(json_of(r)["irreducible"] == true);
    // The degenerate point f = 1 reports 12 and exits 1.
    const auto d = run({"irreducible", "--type", "A3", "--params", "a=1,b=1,d=2,f=1"});
    CHECK(d.code == 1);
    CHECK(json_of(d)["dimension"] == 12);
    CHECK(run({"irreducible", "--type", "A2"}).code == 1);
    CHECK(run({"irreducible", "--type", "E6"}).code == 2);  // needs --heavy
    CHECK(run({"irreducible", "--type", "A3", "--params", "a=1,b=1,d=2"}).code == 2);
    CHECK(run({"irreducible", "--type", "A5", "--product-cap", "3"}).code == 3);
  }

  TEST_CASE("spectrum, annihilator, coupling") {
    const auto s = run({"spectrum", "--type", "E6"});
    CHECK(s.code == 0);
    for (const auto& g : json_of(s)["generators"])
      if (g["type"] == "A") CHECK(g["eigenvalues"][0]["multiplicity"] == 16);
    CHECK(run({"annihilator", "--type", "A4"}).code == 0);
    const auto c = run({"coupling", "--type", "D4", "--sigma", "order3"});
    CHECK(c.code == 0);
    CHECK(json_of(c)["pairs"].size() == 2);
  }

  TEST_CASE("faithful and equiv") {
    const auto f = run({"faithful", "--type", "A3", "--max-len", "5"});
    CHECK(f.code == 0);
    CHECK(json_of(f)["collisions"].empty());
    CHECK(json_of(f)["levels"][4]["classes"] == 15);
    const auto e = run({"equiv", "--type", "A7", "--type2", "D5", "--params", "a=1,b=1,d=2,f=3"});
    CHECK(e.code == 0);
    CHECK(json_of(e)["verdict"] == "NotEquivalent");
    const auto same = run({"equiv", "--type", "A5", "--type2", "A5"});
    CHECK(json_of(same)["verdict"] == "Inconclusive");
  }

  TEST_CASE("roots") {
    const auto r = run({"roots", "--type", "A3"});
    CHECK(r.code == 0);
    const auto j = json_of(r);
    CHECK(j["nodes"].size() == 6);
    CHECK(j["edges"].size() == 6);
    CHECK(j["nodes"][0]["name"] == "α1");
  }

  TEST_CASE("output is deterministic") {
    for (const char* sub : {"census", "verify", "coupling", "faithful"}) {
      const auto x = run({sub, "--type", "A5"});
      const auto y = run({sub, "--type", "A5"});
      CHECK(x.out == y.out);
    }
  }

  TEST_CASE("usage errors and budgets") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"census"}).code == 2);
    CHECK(run({"census", "--type", "B3"}).code == 2);
    CHECK(run({"census", "--type", "A3", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"census", "--type", "E6", "--root-cap", "10"}).code == 3);
    CHECK(run({"faithful", "--type", "A5", "--max-len", "6", "--word-cap", "100"}).code == 3);

    const auto b = tlk::cli::parse_budget("root=5,product=7");
    CHECK(b.root_cap == 5);
    CHECK(b.product_cap == 7);
    CHECK(b.word_cap == tlk::cli::Budget{}.word_cap);
    CHECK_THROWS_AS(tlk::cli::parse_budget("root"), tlk::ParseError);
    CHECK_THROWS_AS(tlk::cli::parse_budget("disk=3"), tlk::ParseError);
    CHECK_THROWS_AS(tlk::cli::parse_budget("root=-1"), tlk::ParseError);

    setenv("TLK_BUDGET", "root=10", 1);
    CHECK(run({"census", "--type", "E6"}).code == 3);
    CHECK(run({"census", "--type", "E6", "--root-cap", "100"}).code == 0);
    setenv("TLK_BUDGET", "junk", 1);
    CHECK(run({"census", "--type", "A3"}).code == 2);
    unsetenv("TLK_BUDGET");
  }
}
