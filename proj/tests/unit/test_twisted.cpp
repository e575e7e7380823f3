#include <map>

#include <doctest.h>

#include "oracles.hpp"
#include "tlk/errors.hpp"
#include "tlk/twisted.hpp"

using namespace tlk;

namespace {

const TwistedContext& ctx(const std::string& type, const std::string& sigma = "full") {
  static std::map<std::string, TwistedContext> cache;
  const std::string key = type + "/" + sigma;
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, TwistedContext::from_spec(type, sigma)).first;
  return it->second;
}

std::size_t first_of_type(const TwistedContext& c, OrbitType t) {
  for (std::size_t j = 0; j < c.generators().size(); ++j)
    if (c.generator(j).orbit.type == t) return j;
  FAIL("no generator of the requested type");
  return 0;
}

const std::vector<std::string> kTags = {"A1", "A2", "A3", "B1", "B2", "B3", "B4", "B5", "C1", "C2",
                                        "C3", "C4", "C5", "C6", "D1", "D2", "D3", "D4", "D5"};

}  // namespace

TEST_SUITE("twisted") {
  TEST_CASE("restriction") {
    const auto& c = ctx("A3");
    const std::size_t n = c.lk().dimension();
    CHECK(restrict(Matrix::identity(n), c.orbits()) == Matrix::identity(c.dimension()));
    const Matrix s = permutation_matrix(c.roots(), c.sigma().elements.back());
    CHECK(restrict(s, c.orbits()) == Matrix::identity(c.dimension()));
    // ψ_1 alone does not commute with the swap.
    CHECK_THROWS_AS(restrict(c.lk().psi(0), c.orbits()), NotSigmaStable);
  }

  TEST_CASE("A2: the twisted generator is the homothety bcf") {
    const auto& c = ctx("A2");
    REQUIRE(c.generators().size() == 1);
    const Scalar bcf = Scalar::b() * Scalar::c() * Scalar::f();
    CHECK(c.generator(0).psi == Matrix::scalar(2, bcf));
    const auto& g = c.generator(0);
    CHECK(g.orbit.type == OrbitType::D);
    CHECK(g.form[g.theta] == bcf);
    CHECK(g.form[g.theta_prime].is_zero());
    CHECK(g.form_prime[g.theta].is_zero());
  }

  TEST_CASE("form values by orbit type") {
    const auto& a5 = ctx("A5");
    const auto jb = first_of_type(a5, OrbitType::B);
    CHECK(a5.generator(jb).form[a5.generator(jb).theta] == Scalar::d() * Scalar::f());
    const auto& g2 = ctx("D4", "order3");
    const auto jc = first_of_type(g2, OrbitType::C);
    CHECK(g2.generator(jc).form[g2.generator(jc).theta] == Scalar::d() * Scalar::d() * Scalar::f());
    for (const auto* p : {&a5, &g2, &ctx("A4")})
      for (std::size_t j = 0; j < p->generators().size(); ++j) {
        CHECK(decomposition_holds(p->generator(j)));
        CHECK(generator_matches_word(*p, j));
      }
  }

  TEST_CASE("configuration templates are self-consistent") {
    for (const auto& tag : kTags) {
      CAPTURE(tag);
      const auto e = expected_block(tag);
      CHECK(e.block.rows() == static_cast<std::size_t>(configuration_orbit_count(tag)));
      // The printed factorization against an independent characteristic polynomial.
      CHECK(oracle::charpoly(e.block) == e.charpoly());
      CHECK(e.block.charpoly() == e.charpoly());
      if (e.extra) {
        CHECK(evaluate(*e.extra, e.block).is_zero());
        CHECK(e.extra->degree() < e.charpoly().degree());
      }
    }
    Matrix a3(2, 2);
    a3(0, 0) = Scalar::a();
    a3(0, 1) = Scalar::b();
    a3(1, 0) = Scalar::c();
    CHECK(expected_block("A3").block == a3);
    CHECK(expected_block("A3").charpoly() ==
          UPoly::from_roots({Scalar::d(), Scalar::dcheck()}));
    CHECK(expected_block("B4").charpoly() ==
          UPoly::from_roots({Scalar::d() * Scalar::d(), Scalar::d() * Scalar::dcheck(),
                             Scalar::dcheck() * Scalar::dcheck()}));
    CHECK_THROWS_AS(expected_block("Z9"), UnrecognizedConfiguration);
  }

  TEST_CASE("blocks of small contexts") {
    for (auto [type, sigma] : std::vector<std::pair<const char*, const char*>>{
             {"A3", "full"}, {"A4", "full"}, {"D4", "order3"}, {"D4", "order2"}}) {
      CAPTURE(type);
      const auto& c = ctx(type, sigma);
      for (std::size_t j = 0; j < c.generators().size(); ++j) {
        const auto rep = verify_blocks(c, j);
        CHECK(rep.ok());
        for (const auto& b : rep.blocks)
          CHECK(oracle::charpoly(c.generator(j).phi.submatrix(b.orbits, b.orbits)) == expected_block(b.tag).charpoly());
      }
    }
  }

  TEST_CASE("annihilators") {
    const auto& a3 = ctx("A3");
    const auto ja = first_of_type(a3, OrbitType::A);
    const auto data = annihilator(a3, ja);
    CHECK(data.ok());
    // Q_J = X + (f - a) for type A.
    CHECK(data.q == UPoly({Scalar::f() - Scalar::a(), Scalar(1)}));
    CHECK(data.q.degree() == data.p.degree() - 1);
    const auto& a2 = ctx("A2");
    const auto d = annihilator(a2, 0);
    CHECK(d.ok());
    CHECK(d.lambda == Scalar::b() * Scalar::c() * Scalar::f());
    for (std::size_t j = 0; j < ctx("D4", "order3").generators().size(); ++j)
      CHECK(annihilator(ctx("D4", "order3"), j).ok());
  }

  TEST_CASE("coupling coefficients") {
    const auto& a5 = ctx("A5");  // quotient B3
    const auto ja = first_of_type(a5, OrbitType::A);
    for (std::size_t k = 0; k < a5.generators().size(); ++k) {
      if (k == ja) continue;
      const auto r = coupling_coefficient(a5, ja, k);
      if (r.m >= 3) CHECK(r.value == Scalar(-2) * Scalar::a() * Scalar::f());
      if (r.m == 2) CHECK(r.value.is_zero());
    }
    const auto& g2 = ctx("D4", "order3");
    const auto jc = first_of_type(g2, OrbitType::C), ka = first_of_type(g2, OrbitType::A);
    const Scalar a = Scalar::a(), d = Scalar::d(), dc = Scalar::dcheck(), f = Scalar::f();
    CHECK(coupling_coefficient(g2, jc, ka).value ==
          a * d.pow(5) * f * (-d.pow(3) * f * f + a * d * dc * dc * f - dc.pow(5)));
    const auto& e6 = ctx("E6");
    const auto jb = first_of_type(e6, OrbitType::B);
    for (std::size_t k = 0; k < e6.generators().size(); ++k)
      if (k != jb && e6.quotient()(jb, k) >= 3)
        CHECK(coupling_coefficient(e6, jb, k).value == a * d * d * f * (dc * dc - d * f));
  }

  TEST_CASE("spectra") {
    const auto at = Specialization::default_point();
    auto mults = [](const std::vector<Eigenvalue>& t) {
      std::vector<int> m;
      for (const auto& e : t) m.push_back(e.multiplicity);
      return m;
    };
    const auto& e6 = ctx("E6");
    CHECK(mults(spectrum(e6, first_of_type(e6, OrbitType::A))) == std::vector<int>{16, 7, 1});
    const auto& a5 = ctx("A5");
    CHECK(mults(spectrum(a5, first_of_type(a5, OrbitType::B))) == std::vector<int>{4, 3, 1, 1});
    const auto& d5 = ctx("D5");
    CHECK(mults(spectrum(d5, first_of_type(d5, OrbitType::A))) == std::vector<int>{10, 5, 1});
    CHECK(verify_spectrum(a5, first_of_type(a5, OrbitType::B), at).ok());
    CHECK(verify_spectrum(d5, first_of_type(d5, OrbitType::A), at).ok());
    CHECK_THROWS_AS(spectrum(ctx("A4"), first_of_type(ctx("A4"), OrbitType::D)), UnsupportedOrbitType);
    const auto& g2 = ctx("D4", "order3");
    CHECK_THROWS_AS(spectrum(g2, first_of_type(g2, OrbitType::C)), UnsupportedOrbitType);
  }

  TEST_CASE("quotient braid relations") {
    for (auto [type, sigma] : std::vector<std::pair<const char*, const char*>>{
             {"A3", "full"}, {"D4", "order3"}, {"A5", "full"}, {"E6", "full"}}) {
      CAPTURE(type);
      for (const auto& r : verify_quotient_braid_relations(ctx(type, sigma))) CHECK(r.pass);
    }
  }

  TEST_CASE("equivalence discriminant") {
    const auto p = Specialization::parse("a=1,b=1,d=2,f=3");
    const auto q = Specialization::parse("a=1,b=1,d=2,f=5");
    CHECK(equivalence_discriminant(ctx("A5"), p, ctx("A5"), p).verdict == Verdict::Inconclusive);
    CHECK(equivalence_discriminant(ctx("A5"), p, ctx("A5"), q).verdict == Verdict::NotEquivalent);
    const auto dim = equivalence_discriminant(ctx("A5"), p, ctx("A6"), p);
    CHECK(dim.verdict == Verdict::NotEquivalent);
    CHECK(dim.witness.find("dimension 9 vs 12") != std::string::npos);
    const auto spec = equivalence_discriminant(ctx("A7"), p, ctx("D5"), p);
    CHECK(spec.verdict == Verdict::NotEquivalent);
    CHECK(spec.witness.find("dimension") == std::string::npos);
  }
}
