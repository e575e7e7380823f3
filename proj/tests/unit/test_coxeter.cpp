#include <doctest.h>

#include "tlk/coxeter.hpp"
#include "tlk/errors.hpp"

using namespace tlk;

namespace {

using IMatrix = std::vector<std::vector<long>>;

IMatrix imul(const IMatrix& x, const IMatrix& y) {
  const std::size_t n = x.size();
  IMatrix z(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
  return z;
}

IMatrix ident(std::size_t n) {
  IMatrix z(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1;
  return z;
}

// s_i on the root lattice: α_j -> α_j - A_ij α_i.
IMatrix reflection(const CoxeterMatrix& m, int i) {
  IMatrix s = ident(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    const long a = static_cast<std::size_t>(i) == j ? 2 : (m(i, j) == 3 ? -1 : 0);
    s[i][j] -= a;
  }
  return s;
}

int order_of_product(const CoxeterMatrix& m, const IndexOrbit& j, const IndexOrbit& k) {
  IMatrix r = ident(m.size());
  for (int i : j.delta_word()) r = imul(r, reflection(m, i));
  IMatrix q = ident(m.size());
  for (int i : k.delta_word()) q = imul(q, reflection(m, i));
  const IMatrix p = imul(r, q);
  IMatrix x = p;
  for (int n = 1; n <= 100; ++n) {
    if (x == ident(m.size())) return n;
    x = imul(x, p);
  }
  return -1;
}

}  // namespace

TEST_SUITE("coxeter") {
  TEST_CASE("standard types") {
    const auto a5 = CoxeterMatrix::from_type("A5");
    CHECK(a5.size() == 5);
    CHECK(a5(0, 1) == 3);
    CHECK(a5(0, 2) == 2);
    CHECK(a5.small_type());
    CHECK(a5.connected());
    const auto d4 = CoxeterMatrix::from_type("D4");
    int deg2 = 0;
    for (std::size_t j = 0; j < 4; ++j) deg2 += d4(1, j) == 3;
    CHECK(deg2 == 3);  // node 2 is the branch point
    const auto e6 = CoxeterMatrix::from_type("E6");
    CHECK(e6(0, 2) == 3);
    CHECK(e6(1, 3) == 3);
    CHECK(validate(e6).valid);
    CHECK_THROWS_AS(CoxeterMatrix::from_type("B3"), ParseError);
    CHECK_THROWS_AS(CoxeterMatrix::from_type("D3"), ParseError);
    CHECK_THROWS_AS(CoxeterMatrix::from_type("E7"), ParseError);
  }

  TEST_CASE("validation") {
    CoxeterMatrix bad({"1", "2"}, {{1, 3}, {4, 1}});
    CHECK_FALSE(validate(bad).valid);
    CoxeterMatrix disc({"1", "2"}, {{1, 2}, {2, 1}});
    CHECK(validate(disc).valid);
    CHECK_FALSE(validate(disc).connected);
  }

  TEST_CASE("automorphism groups") {
    CHECK(automorphism_group(CoxeterMatrix::from_type("A5")).order() == 2);
    CHECK(automorphism_group(CoxeterMatrix::from_type("D4")).order() == 6);
    CHECK(automorphism_group(CoxeterMatrix::from_type("D5")).order() == 2);
    CHECK(automorphism_group(CoxeterMatrix::from_type("E6")).order() == 2);
    const auto d4 = CoxeterMatrix::from_type("D4");
    CHECK(sigma_group(d4, "order3").order() == 3);
    CHECK(sigma_group(d4, "order2").order() == 2);
    CHECK(sigma_group(d4, "trivial").order() == 1);
    CHECK_THROWS_AS(sigma_group(CoxeterMatrix::from_type("A5"), "order3"), ParseError);
    for (const auto& p : automorphism_group(d4).elements)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(d4(p[i], p[j]) == d4(i, j));
  }

  TEST_CASE("index orbits and types") {
    const auto a5 = CoxeterMatrix::from_type("A5");
    const auto orbits = index_orbits(a5, sigma_group(a5, "full"));
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].members == std::vector<int>{0, 4});
    CHECK(orbits[0].type == OrbitType::B);
    CHECK(orbits[2].type == OrbitType::A);
    CHECK(orbits[0].name(a5) == "{1,5}");
    const auto a4 = CoxeterMatrix::from_type("A4");
    const auto o4 = index_orbits(a4, sigma_group(a4, "full"));
    CHECK(o4[1].type == OrbitType::D);
    CHECK(o4[1].delta_word() == std::vector<int>{1, 2, 1});
    const auto d4 = CoxeterMatrix::from_type("D4");
    const auto o3 = index_orbits(d4, sigma_group(d4, "order3"));
    CHECK(o3[0].type == OrbitType::C);
    CHECK(o3[0].delta_word().size() == 3);
  }

  TEST_CASE("quotient entries agree with the order of r_J r_K") {
    for (auto [type, sigma] : std::vector<std::pair<const char*, const char*>>{
             {"A3", "full"}, {"A4", "full"}, {"A5", "full"}, {"A7", "full"}, {"D4", "order2"},
             {"D4", "order3"}, {"D5", "full"}, {"E6", "full"}, {"A6", "full"}}) {
      CAPTURE(type);
      const auto m = CoxeterMatrix::from_type(type);
      const auto g = sigma_group(m, sigma);
      const auto orbits = index_orbits(m, g);
      for (std::size_t j = 0; j < orbits.size(); ++j)
        for (std::size_t k = 0; k < orbits.size(); ++k)
          if (j != k) CHECK(quotient_entry(m, orbits[j], orbits[k]) == order_of_product(m, orbits[j], orbits[k]));
    }
  }

  TEST_CASE("quotient types") {
    auto iso = [](const char* type, const char* sigma, const CoxeterMatrix& target) {
      const auto m = CoxeterMatrix::from_type(type);
      return !isomorphisms(quotient_matrix(m, sigma_group(m, sigma)), target).empty();
    };
    CHECK(iso("A3", "full", type_B(2)));
    CHECK(iso("A5", "full", type_B(3)));
    CHECK(iso("A7", "full", type_B(4)));
    CHECK(iso("D5", "full", type_B(4)));
    CHECK(iso("D4", "order2", type_B(3)));
    CHECK(iso("D4", "order3", type_G2()));
    CHECK(iso("E6", "full", type_F4()));
    CHECK(iso("A4", "full", type_B(2)));
    CHECK(iso("A6", "full", type_B(3)));
    CHECK_FALSE(iso("A5", "full", type_B(4)));
    const auto a2 = CoxeterMatrix::from_type("A2");
    CHECK(quotient_matrix(a2, sigma_group(a2, "full")).size() == 1);
  }

  TEST_CASE("permutations") {
    const Perm p{1, 2, 0}, q{0, 2, 1};
    CHECK(compose(p, inverse(p)) == identity_perm(3));
    CHECK(compose(p, q) == Perm{1, 0, 2});
  }
}
