#include <catch2/catch_amalgamated.hpp>

#include "borel.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace borel;
using testing::ideal_of;

namespace {

BettiTable table(std::size_t n, std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
  BettiTable B(n);
  for (const auto& [q, i, v] : entries) B.set(q, i, v);
  return B;
}

}  // namespace

TEST_CASE("Hilbert functions", "[hilbert]") {
  CHECK(hilbert_function(testing::two_squares_gin()).values() == std::vector<std::int64_t>{1, 2, 1});
  CHECK(hilbert_function(testing::codim3_wlp()).values() == std::vector<std::int64_t>{1, 3, 3, 1});
  HilbertFunction H = hilbert_function(testing::four_variable_example());
  CHECK(H(0) == 1);
  CHECK(H(1) == 4);
  CHECK(H.socle_degree() == 6);
  CHECK(H.values() == testing::hilbert_by_counting(testing::four_variable_example(), 10));
  CHECK(socle_degree(HilbertFunction({1})) == 0);
  CHECK(socle_degree(HilbertFunction({1, 2, 1})) == 2);
  CHECK_THROWS_AS((hilbert_function(ideal_of(2, {{1, 0}}))), Error);
  CHECK_THROWS_AS((hilbert_function(ideal_of(1, {{50}}), 10)), Error);
}

TEST_CASE("Artinian test", "[hilbert]") {
  CHECK(is_artinian(ideal_of(2, {{2, 0}, {0, 3}})));
  CHECK_FALSE(is_artinian(ideal_of(2, {{1, 0}})));
  CHECK(is_artinian(testing::four_variable_example()));
}

TEST_CASE("Hilbert function agrees with counting", "[hilbert][property]") {
  Rng rng(31);
  for (int k = 0; k < 150; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    MonomialIdeal I = testing::random_monomial_artinian(rng, n, 4);
    REQUIRE(hilbert_function(I).values() == testing::hilbert_by_counting(I, 4 * static_cast<std::int64_t>(n)));
  }
}

TEST_CASE("Eliahou-Kervaire on small examples", "[betti]") {
  CHECK(ek_betti(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}})) == table(2, {{0, 2, 3}, {1, 3, 2}}));
  CHECK(ek_betti(ideal_of(2, {{1, 0}})) == table(2, {{0, 1, 1}}));
  CHECK(ek_betti(testing::codim3_wlp()) ==
        table(3, {{0, 2, 3}, {0, 3, 2}, {0, 4, 1}, {1, 3, 2}, {1, 4, 4}, {1, 5, 2}, {2, 5, 2}, {2, 6, 1}}));
  try {
    ek_betti(testing::codim3_no_wlp());
    FAIL("expected NotStable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStable);
  }
}

TEST_CASE("Koszul homology Betti numbers", "[betti][koszul]") {
  CHECK(koszul_betti(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}})) == table(2, {{0, 2, 3}, {1, 3, 2}}));
  CHECK(koszul_betti(ideal_of(2, {{1, 0}, {0, 1}})) == table(2, {{0, 1, 2}, {1, 2, 1}}));
  CHECK(koszul_betti(testing::squares(2), 2) == table(2, {{0, 2, 2}, {1, 4, 1}}));
  CHECK(koszul_betti(testing::squares(3), 3) == table(3, {{0, 2, 3}, {1, 4, 3}, {2, 6, 1}}));
  // A non-stable monomial ideal, where Eliahou-Kervaire does not apply.
  BettiTable B = koszul_betti(testing::codim3_no_wlp());
  CHECK(B(0, 2) == 3);
  CHECK(hilbert_from_betti(B) == hilbert_function(testing::codim3_no_wlp()));
}

TEST_CASE("Eliahou-Kervaire matches the symbol count and the Hilbert function", "[betti][property]") {
  Rng rng(37);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    MonomialIdeal I = k % 2 ? testing::random_stable(rng, n, 6) : testing::random_strongly_stable(rng, n, 6);
    REQUIRE(is_stable(I));
    BettiTable B = ek_betti(I);
    REQUIRE(B == testing::ek_by_symbols(I));
    REQUIRE(hilbert_from_betti(B) == hilbert_function(I));
  }
}

TEST_CASE("quotient indexing", "[betti]") {
  auto q = quotient_indexing(table(2, {{0, 2, 3}, {1, 3, 2}}));
  CHECK(q.at({0, 0}) == 1);
  CHECK(q.at({1, 2}) == 3);
  CHECK(q.at({2, 3}) == 2);
}

TEST_CASE("reduction numbers", "[reduction]") {
  MonomialIdeal I = testing::four_variable_example();
  CHECK(reduction_number(I, 1) == 2);
  CHECK(reduction_number(I, 0) == 6);
  CHECK(reduction_number(testing::two_squares_gin(), 1) == 1);
  CHECK(reduction_number(testing::two_squares_gin(), 0) == 2);
  CHECK_THROWS_AS(reduction_number(I, 4), Error);
  CHECK(reduction_number_direct(testing::polys(I), 4, 1) == 2);
  CHECK(reduction_number_direct(testing::polys(I), 4, 0) == 6);
  CHECK(reduction_number_direct(testing::squares(2), 2, 1) == 1);
}

TEST_CASE("r_0 is the socle degree", "[reduction][property]") {
  Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    MonomialIdeal I = testing::random_strongly_stable(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 6);
    REQUIRE(reduction_number(I, 0) == hilbert_function(I).socle_degree());
  }
}

TEST_CASE("f-index of the four-variable example", "[f_index]") {
  FIndex F = f_index(testing::four_variable_example());
  CHECK(F.f1 == 2);
  CHECK(F.J(1) == std::vector<ExponentTuple>{{0}, {1}});
  CHECK(F.f({0}) == 3);
  CHECK(F.f({1}) == 1);
  CHECK(F.J(2) == std::vector<ExponentTuple>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});
  CHECK(F.f({0, 0}) == 3);
  CHECK(F.f({0, 1}) == 2);
  CHECK(F.f({0, 2}) == 1);
  CHECK(F.f({1, 0}) == 2);
  CHECK(F.J(3) == std::vector<ExponentTuple>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0},
                                             {0, 1, 1}, {0, 2, 0}, {1, 0, 0}, {1, 0, 1}});
  CHECK(generators_from_f(F) == testing::four_variable_example());
  CHECK_FALSE(check_f_index_invariants(F).has_value());
}

TEST_CASE("f-index edge cases", "[f_index]") {
  FIndex F = f_index(ideal_of(1, {{1}}));
  CHECK(F.f1 == 1);
  CHECK(F.levels.empty());
  CHECK(generators_from_f(F) == ideal_of(1, {{1}}));
  CHECK_THROWS_AS(F.J(1), Error);

  FIndex G = f_index(testing::codim3_wlp());
  CHECK(G.f1 == 2);
  CHECK(G.f({0}) == 2);
  CHECK(G.f({1}) == 1);
  CHECK(G.f({0, 0}) == 4);
  CHECK(G.f({0, 1}) == 2);
  CHECK(G.f({1, 0}) == 2);
  CHECK(generators_from_f(G) == testing::codim3_wlp());
  CHECK_FALSE(G.find({2, 0}).has_value());

  try {
    f_index(testing::codim3_no_wlp());
    FAIL("expected NotStable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotStable);
  }
  CHECK_THROWS_AS((f_index(ideal_of(2, {{1, 0}}))), Error);
}

TEST_CASE("generators with maximal variable x_n", "[f_index]") {
  MonomialIdeal I = testing::four_variable_example();
  CHECK(max_n_generator_count(I, 7) == 1);
  CHECK(max_n_generator_count(I, 3) == 0);
  CHECK(max_n_generator_count(I, 6) == 3);
  CHECK(max_n_generator_count(I, 20) == 0);
}

TEST_CASE("f-index agrees with scanning and rebuilds the ideal", "[f_index][property]") {
  Rng rng(43);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    MonomialIdeal I = testing::random_strongly_stable(rng, n, 6);
    FIndex F = f_index(I);
    REQUIRE(generators_from_f(F) == I);
    REQUIRE_FALSE(check_f_index_invariants(F).has_value());
    const std::int64_t t = hilbert_function(I).socle_degree();
    for (std::size_t i = 1; i < n; ++i) {
      auto scanned = testing::J_by_scanning(I, i, t);
      auto J = F.J(i);
      REQUIRE(std::set<ExponentTuple>(J.begin(), J.end()) == scanned);
    }
    if (n >= 2) {
      auto low = low_generators_from_last_J(n, F.J(n - 1));
      for (const auto& g : low) REQUIRE(I.is_minimal_generator(g));
      std::size_t expected = 0;
      for (const auto& g : I.generators()) expected += g.max_var() < n ? 1 : 0;
      REQUIRE(low.size() == expected);
    }
  }
}

TEST_CASE("Hilbert drops past r_1 count the x_n generators", "[f_index][property]") {
  Rng rng(47);
  std::vector<MonomialIdeal> corpus{testing::four_variable_example()};
  for (int k = 0; k < 150; ++k) corpus.push_back(testing::random_strongly_stable(rng, static_cast<std::size_t>(rng.uniform(2, 4)), 7));
  for (const auto& I : corpus) {
    HilbertFunction H = hilbert_function(I);
    const std::int64_t r1 = reduction_number(I, 1);
    for (std::int64_t d = r1 + 1; d <= H.socle_degree() + 1; ++d) REQUIRE(H(d - 1) - H(d) == max_n_generator_count(I, d));
  }
}
