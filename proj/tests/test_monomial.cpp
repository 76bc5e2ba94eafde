#include <catch2/catch_amalgamated.hpp>

#include "borel.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace borel;
using borel::testing::four_variable_example;

TEST_CASE("revlex order on small examples", "[monomial]") {
  Monomial x1{1, 0, 0}, x2{0, 1, 0}, x2sq{0, 2, 0}, x1x3{1, 0, 1};
  CHECK(revlex_compare(x1, x2) > 0);
  CHECK(revlex_compare(x2sq, x1x3) > 0);
  CHECK(revlex_compare(x1x3, x1x3) == 0);
  CHECK(revlex_compare(Monomial(3), x2) < 0);
  CHECK_THROWS_AS((revlex_compare(x1, Monomial{1, 0})), Error);
}

TEST_CASE("revlex agrees with its definition and is a monomial order", "[monomial][property]") {
  Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    Monomial a = testing::random_monomial(rng, n, rng.uniform(0, 6));
    Monomial b = testing::random_monomial(rng, n, rng.uniform(0, 6));
    Monomial c = testing::random_monomial(rng, n, rng.uniform(0, 6));
    int ab = testing::revlex_by_definition(a, b);
    auto cmp = revlex_compare(a, b);
    REQUIRE((cmp > 0) == (ab > 0));
    REQUIRE((cmp == 0) == (ab == 0));
    REQUIRE((revlex_compare(b, a) > 0) == (cmp < 0));
    if (cmp > 0) REQUIRE(revlex_compare(a * c, b * c) > 0);
    if (cmp > 0 && revlex_compare(b, c) > 0) REQUIRE(revlex_compare(a, c) > 0);
  }
}

TEST_CASE("monomial arithmetic and printing", "[monomial]") {
  Monomial m{2, 0, 1};
  CHECK(m.degree() == 3);
  CHECK(m.max_var() == 3);
  CHECK(Monomial(3).max_var() == 0);
  CHECK(to_string(m) == "x1^2*x3");
  CHECK(to_string(Monomial(2)) == "1");
  std::vector<std::string> names{"x", "y", "z"};
  CHECK(to_string(m, names) == "x^2*z");
  CHECK(m / Monomial{1, 0, 0} == Monomial{1, 0, 1});
  CHECK_THROWS_AS((m / Monomial{0, 1, 0}), Error);
  CHECK(m.lcm(Monomial{0, 3, 0}) == Monomial{2, 3, 1});
  CHECK_THROWS_AS((Monomial{1} * Monomial{std::numeric_limits<Monomial::Exponent>::max()}), Error);
}

TEST_CASE("monomials of a degree are listed in descending revlex", "[monomial]") {
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial{2, 0, 0});
  CHECK(ms.back() == Monomial{0, 0, 2});
  for (std::size_t k = 1; k < ms.size(); ++k) CHECK(revlex_compare(ms[k - 1], ms[k]) > 0);
}

TEST_CASE("minimalize", "[monomial]") {
  CHECK(MonomialIdeal(1, {Monomial{2}, Monomial{3}}).generators() == std::vector<Monomial>{Monomial{2}});
  CHECK(MonomialIdeal(2, {Monomial{1, 0}, Monomial{0, 1}, Monomial{1, 1}}).size() == 2);
  MonomialIdeal I = four_variable_example();
  auto gens = I.generators();
  gens.push_back(Monomial{2, 0, 0, 1});
  CHECK(MonomialIdeal(4, gens) == I);
}

TEST_CASE("minimalize is idempotent and preserves membership", "[monomial][property]") {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Monomial> S;
    for (int j = 0, c = static_cast<int>(rng.uniform(1, 6)); j < c; ++j) S.push_back(testing::random_monomial(rng, n, rng.uniform(0, 4)));
    MonomialIdeal I(n, S);
    REQUIRE(MonomialIdeal(n, I.generators()) == I);
    for (int j = 0; j < 20; ++j) {
      Monomial m = testing::random_monomial(rng, n, rng.uniform(0, 6));
      REQUIRE(I.contains(m) == testing::divisible_by_some(S, m));
    }
  }
}

TEST_CASE("membership", "[monomial]") {
  MonomialIdeal I = four_variable_example();
  CHECK(I.contains(Monomial{0, 2, 1, 0}));
  CHECK_FALSE(I.contains(Monomial{0, 0, 2, 2}));
  CHECK_FALSE(I.contains(Monomial(4)));
  CHECK(MonomialIdeal::unit(4).contains(Monomial(4)));
}

TEST_CASE("strong stability", "[monomial]") {
  CHECK(is_strongly_stable(four_variable_example()));
  auto v = find_stability_violation(MonomialIdeal(2, {Monomial{0, 1}}));
  REQUIRE(v.has_value());
  CHECK(v->image == Monomial{1, 0});
  CHECK(is_strongly_stable(MonomialIdeal(2, {Monomial{1, 0}})));
  // Stable but not strongly stable: x1*x3 is missing.
  MonomialIdeal T(3, {Monomial{2, 0, 0}, Monomial{1, 1, 0}, Monomial{0, 2, 0}, Monomial{0, 1, 1}});
  CHECK(is_stable(T));
  CHECK_FALSE(is_strongly_stable(T));
}

TEST_CASE("generator-level strong stability matches the ideal-level definition", "[monomial][property]") {
  Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    MonomialIdeal I = k % 2 ? testing::random_strongly_stable(rng, n, 4) : testing::random_monomial_artinian(rng, n, 4);
    REQUIRE(is_strongly_stable(I) == testing::strongly_stable_by_definition(I, 6));
  }
}

TEST_CASE("colon by a variable power", "[monomial]") {
  MonomialIdeal I(2, {Monomial{2, 0}, Monomial{0, 3}});
  CHECK(colon_power(I, 1, 1) == MonomialIdeal(2, {Monomial{2, 0}, Monomial{0, 2}}));
  CHECK(colon_power(I, 1, 0) == I);
  MonomialIdeal C = colon_power(four_variable_example(), 3, 5);
  for (const auto& m : {Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 1, 0}, Monomial{0, 0, 0, 2}})
    CHECK(C.is_minimal_generator(m));
}

TEST_CASE("standard monomials", "[monomial]") {
  CHECK(standard_monomials(MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}), 2).empty());
  CHECK(standard_monomials(MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 3}}), 2) == std::vector<Monomial>{Monomial{0, 2}});
  auto lin = standard_monomials(four_variable_example(), 1);
  CHECK(lin == std::vector<Monomial>{Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 1, 0}, Monomial{0, 0, 0, 1}});
}

TEST_CASE("standard and non-standard monomials partition each degree", "[monomial][property]") {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    MonomialIdeal I = testing::random_monomial_artinian(rng, n, 4);
    for (std::int64_t d = 0; d <= 6; ++d) {
      std::int64_t inside = 0;
      for (const auto& e : testing::all_exponents(n, d)) inside += I.contains(Monomial(e)) ? 1 : 0;
      REQUIRE(static_cast<std::int64_t>(standard_monomials(I, d).size()) + inside ==
              binomial(static_cast<std::int64_t>(n) - 1 + d, d));
    }
  }
}
