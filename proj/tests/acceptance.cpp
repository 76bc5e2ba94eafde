// Exit gate: one PASS/FAIL line per acceptance criterion, each under its
// time budget. Nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "borel.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace borel;
using testing::ideal_of;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

MonomialIdeal gin_of(const MonomialIdeal& I, std::uint64_t seed = 0) {
  GinOptions o;
  o.seed = seed;
  return gin(to_polynomials(I), I.num_vars(), o);
}

std::string c1() {
  FIndex F = f_index(testing::four_variable_example());
  expect(F.f1 == 2, "f_1");
  expect(F.J(1) == std::vector<ExponentTuple>{{0}, {1}}, "J_1");
  expect(F.f({0}) == 3 && F.f({1}) == 1, "f_2 values");
  expect(F.J(2) == std::vector<ExponentTuple>{{0, 0}, {0, 1}, {0, 2}, {1, 0}}, "J_2");
  expect(F.f({0, 0}) == 3 && F.f({0, 1}) == 2 && F.f({0, 2}) == 1 && F.f({1, 0}) == 2, "f_3 values");
  expect(F.J(3) == std::vector<ExponentTuple>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0},
                                              {0, 1, 1}, {0, 2, 0}, {1, 0, 0}, {1, 0, 1}},
         "J_3");
  return "f_1=2, f_2=(3,1), f_3=(3,2,1,2), |J_3|=8";
}

std::string c2() {
  const MonomialIdeal I = testing::codim3_no_wlp();
  const MonomialIdeal G = gin_of(I);
  auto crit = wlp_criterion(f_index(G), reduction_number(G, 1));
  expect(!crit.verdict, "criterion accepts the no-WLP ideal");
  expect(crit.witnesses.size() == 1 && crit.witnesses[0].tuple == ExponentTuple{1, 0} && crit.witnesses[0].lhs == 2 &&
             crit.witnesses[0].required == 3,
         "witness is not x1*x3 with 2 < 3");
  expect(!wlp_oracle(I).verdict, "oracle accepts the no-WLP ideal");
  const MonomialIdeal J = testing::codim3_wlp();
  expect(wlp_criterion(f_index(J), reduction_number(J, 1)).verdict, "criterion rejects J");
  expect(wlp_oracle(J).verdict, "oracle rejects J");
  return "I: false/false, witness x1*x3 degree 2 < 3; J: true/true";
}

std::string c3() {
  const MonomialIdeal I = testing::four_variable_example();
  const std::int64_t r1 = reduction_number(I, 1);
  expect(r1 == 2, "r_1 = " + std::to_string(r1));
  expect(slp_criterion(f_index(I), r1).verdict, "criterion");
  expect(slp_oracle(I).verdict, "oracle");
  return "criterion and oracle true, r_1 = 2";
}

std::string c4() {
  const MonomialIdeal I = testing::four_variable_example();
  const std::int64_t t = hilbert_function(I).socle_degree();
  expect(t == 6, "t = " + std::to_string(t));
  auto rep = ssp_criterion(f_index(I), t);
  expect(!rep.verdict, "criterion accepts I");
  expect(rep.witnesses.size() == 1 && rep.witnesses[0].tuple == ExponentTuple{1, 0, 1} && rep.witnesses[0].f_value == 2 &&
             rep.witnesses[0].required == 3,
         "witness is not f_4(1,0,1) = 2 < 3");
  const MonomialIdeal J = testing::four_variable_ssp_variant();
  expect(ssp_criterion(f_index(J), hilbert_function(J).socle_degree()).verdict, "criterion rejects J");
  return "I: false at f_4(1,0,1) = 2 < 3, t = 6; J: true";
}

std::string c5() {
  auto [A, B] = nonunique_ssp_pair();
  expect(A.size() == 33 && B.size() == 33, "generator counts");
  expect(is_strongly_stable(A) && is_strongly_stable(B), "strong stability");
  expect(ek_betti(A) == ek_betti(B), "Betti tables differ");
  expect(hilbert_function(A).socle_degree() == 12, "t != 12");
  expect(ssp_criterion(f_index(A), 12).verdict && ssp_criterion(f_index(B), 12).verdict, "SSP criterion");
  expect(!(A == B), "ideals are equal");
  return "strongly stable, equal Betti tables, SSP with t = 12, unequal";
}

std::vector<MonomialIdeal> wlp_samples;

std::string c6() {
  Rng rng(2024);
  std::size_t counts[4] = {0, 0, 0, 0};
  const int total = 520;
  for (int k = 0; k < total; ++k) {
    // Plain Borel closures, nudged ones, and a three-variable family near
    // the SLP boundary.
    const auto family = k % 3;
    const MonomialIdeal I = family == 0   ? testing::random_strongly_stable(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 8)
                            : family == 1 ? testing::perturbed_strongly_stable(rng, static_cast<std::size_t>(rng.uniform(2, 4)), 8)
                                          : testing::random_slp_boundary(rng, 8);
    const std::size_t n = I.num_vars();
    const FIndex F = f_index(I);
    const HilbertFunction H = hilbert_function(I);
    expect(H.socle_degree() <= 8, "socle bound");
    const std::int64_t r1 = n >= 2 ? reduction_number(I, 1) : 0;
    const bool wo = wlp_oracle(I).verdict, so = slp_oracle(I).verdict, po = ssp_oracle(I).verdict;
    const bool wc = wlp_criterion(F, r1).verdict, sc = slp_criterion(F, r1).verdict,
               pc = ssp_criterion(F, H.socle_degree()).verdict;
    const bool wb = wlp_betti_criterion(ek_betti(I), n).verdict;
    const std::string tag = " on " + to_string(I);
    expect(wo == wc && wo == wb, "WLP disagreement" + tag);
    expect(so == sc, "SLP disagreement" + tag);
    expect(po == pc, "SSP disagreement" + tag);
    expect((!po || so) && (!so || wo), "implication chain" + tag);
    counts[0] += wo;
    counts[1] += so;
    counts[2] += po;
    counts[3] += wo && !so;
    if (wo) wlp_samples.push_back(I);
  }
  std::ostringstream s;
  s << total << " ideals, 0 disagreements (WLP " << counts[0] << ", SLP " << counts[1] << ", SSP " << counts[2] << ", WLP without SLP " << counts[3] << ")";
  return s.str();
}

std::string c7() {
  const MonomialIdeal want = testing::two_squares_gin();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GinOptions o;
    o.seed = seed;
    expect(gin(testing::squares(2), 2, o) == want, "gin(x1^2, x2^2) with seed " + std::to_string(seed));
  }
  auto [A, B] = nonunique_ssp_pair();
  const std::vector<MonomialIdeal> fixtures{testing::four_variable_example(), testing::four_variable_ssp_variant(),
                                            testing::codim3_wlp(), gin_of(testing::codim3_no_wlp()), want, A, B};
  for (const auto& I : fixtures) expect(gin_of(I, 3) == I, "gin moves " + to_string(I));
  Rng rng(77);
  for (int k = 0; k < 50; ++k) {
    auto gens = testing::random_artinian_ideal(rng, 3, 3);
    GinOptions o;
    o.seed = static_cast<std::uint64_t>(k);
    expect(hilbert_function(gin(gens, 3, o)) == hilbert_function(gens, 3), "Hilbert function changed under gin");
  }
  return "20 seeds, " + std::to_string(fixtures.size()) + " fixtures fixed, 50 Hilbert functions preserved";
}

std::string c8() {
  Rng rng(88);
  int checks = 0;
  for (int k = 0; k < 50; ++k) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto gens = testing::random_artinian_ideal(rng, n, 3);
    GinOptions o;
    o.seed = static_cast<std::uint64_t>(k);
    const MonomialIdeal G = gin(gens, n, o);
    for (std::size_t i = 0; i < n; ++i) {
      GinOptions d;
      d.seed = static_cast<std::uint64_t>(1000 + k);
      expect(reduction_number(G, i) == reduction_number_direct(gens, n, i, d), "r_" + std::to_string(i));
      ++checks;
    }
  }
  int formula = 0;
  for (const auto& I : wlp_samples) {
    if (I.num_vars() < 2) continue;
    expect(r1_from_hf_wlp(hilbert_function(I)) == reduction_number(I, 1), "r_1 formula on " + to_string(I));
    ++formula;
  }
  expect(formula > 0, "no WLP samples");
  return std::to_string(checks) + " reduction numbers on 50 ideals, r_1 formula on " + std::to_string(formula) + " WLP samples";
}

std::string c9() {
  const auto corpus = testing::codim3_corpus(99, 200);
  int slp = 0, ssp = 0, fixed = 0;
  for (const auto& I : corpus) {
    const HilbertFunction H = hilbert_function(I);
    const BettiTable E = ek_betti(I);
    const std::string tag = " on " + to_string(I);
    if (wlp_oracle(I).verdict) {
      expect(betti_gin_from_betti_I(E, H) == E, "Betti fixed point" + tag);
      ++fixed;
    }
    if (slp_oracle(I).verdict) {
      expect(reconstruct_gin_slp(E, H) == I, "SLP round trip" + tag);
      ++slp;
    }
    if (ssp_oracle(I).verdict) {
      expect(reconstruct_gin_ssp(H) == I, "SSP round trip" + tag);
      ++ssp;
    }
  }
  expect(slp > 0 && ssp > 0, "corpus has no SLP or SSP members");
  std::ostringstream s;
  s << corpus.size() << " ideals: " << slp << " SLP and " << ssp << " SSP round trips, " << fixed << " Betti fixed points";
  return s.str();
}

std::string c10() {
  Rng rng(1010);
  int not_strongly = 0, cancelling = 0;
  for (int k = 0; k < 30; ++k) {
    const MonomialIdeal I = k % 2 ? testing::random_stable_only(rng, 3, 6) : testing::random_stable(rng, 3, 6);
    expect(is_stable(I), "corpus ideal not stable");
    expect(hilbert_function(I).socle_degree() <= 6, "socle bound");
    expect(ek_betti(I) == koszul_betti(I), "Eliahou-Kervaire differs from Koszul on " + to_string(I));
    not_strongly += is_strongly_stable(I) ? 0 : 1;
  }
  for (int k = 0; k < 20; ++k) {
    auto gens = k % 2 ? testing::random_artinian_ideal(rng, 3, 2) : testing::polys(testing::random_monomial_artinian(rng, 3, 3));
    GinOptions o;
    o.seed = static_cast<std::uint64_t>(k);
    const MonomialIdeal G = gin(gens, 3, o);
    auto r = cancellation_check(koszul_betti(gens, 3), ek_betti(G));
    expect(r.feasible, "cancellation infeasible");
    cancelling += r.pairs.empty() ? 0 : 1;
  }
  std::ostringstream s;
  s << "30 stable ideals (" << not_strongly << " not strongly stable), 20 (I, gin(I)) pairs (" << cancelling
    << " with cancellations)";
  return s.str();
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "f-index of the four-variable example", 1, c1},
      {2, "WLP criterion and oracle on the codim-3 pair", 1, c2},
      {3, "SLP and r_1 on the four-variable example", 1, c3},
      {4, "SSP criterion with witness and t", 1, c4},
      {5, "two codim-4 ideals with one Betti table", 5, c5},
      {6, "criterion, Betti test and oracle agree", 120, c6},
      {7, "gin engine", 120, c7},
      {8, "reduction numbers", 120, c8},
      {9, "codim-3 round trips", 120, c9},
      {10, "Eliahou-Kervaire vs Koszul, cancellation", 300, c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget_seconds) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    failed += ok ? 0 : 1;
    std::printf("%s criterion %2d: %s [%.2f s] %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
