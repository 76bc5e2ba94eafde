#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "borel/betti.hpp"
#include "borel/f_index.hpp"
#include "borel/lefschetz.hpp"

// Reconstruction of gin(I) in three variables from Betti or Hilbert data,
// under WLP / SLP / SSP.

namespace borel {

namespace detail {

inline void require_three(std::size_t n) {
  if (n != 3) fail(ErrorKind::InvalidArgument, "codimension-3 procedures need n = 3, got n = " + std::to_string(n));
}

inline int min_generator_degree(const BettiTable& B) {
  auto a = B.min_degree(0);
  if (!a) fail(ErrorKind::InconsistentInput, "Betti table has no generators");
  return *a;
}

}  // namespace detail

/// The unique non-decreasing sequence taking value d exactly counts[d] times.
inline std::vector<int> recover_sequence(const std::map<int, std::int64_t>& counts, std::int64_t domain_size) {
  std::int64_t total = 0;
  for (const auto& [d, c] : counts) {
    if (c < 0) fail(ErrorKind::SumMismatch, "negative multiplicity at value " + std::to_string(d));
    total += c;
  }
  if (total != domain_size)
    fail(ErrorKind::SumMismatch,
         "multiplicities sum to " + std::to_string(total) + ", expected " + std::to_string(domain_size));
  std::vector<int> out;
  for (const auto& [d, c] : counts) out.insert(out.end(), static_cast<std::size_t>(c), d);
  return out;
}

/// Betti table of gin(I) from that of I, assuming R/I has WLP. Row q = 2
/// and every entry of degree >= r1 + 2 come from the Hilbert function; the
/// rest is filled downward from degree r1 + 1 using
///   beta_{1,i+1}(gin) = beta_{0,i+1}(gin) + beta_{1,i+1}(I) - beta_{0,i+1}(I)
///   beta_{0,i}(gin)   = beta_{1,i+1}(gin) - beta_{2,i+2}(gin) + [i = a].
inline BettiTable betti_gin_from_betti_I(const BettiTable& B_I, const HilbertFunction& H) {
  detail::require_three(B_I.num_vars());
  if (!(hilbert_from_betti(B_I) == H)) fail(ErrorKind::InconsistentInput, "Betti table and Hilbert function disagree");
  const std::int64_t r1 = r1_from_hf_wlp(H);
  const PartialBettiTable known = betti_from_hf_wlp(H, r1, 3);
  const int a = detail::min_generator_degree(B_I);
  const int top = static_cast<int>(H.socle_degree()) + 1;

  std::map<BettiTable::Key, std::int64_t> g;
  for (int q = 0; q <= 2; ++q)
    for (int d = 0; d <= top; ++d)
      if (auto v = known.at(q, q + d)) g[{q, q + d}] = *v;

  auto get = [&](int q, int i) {
    auto it = g.find({q, i});
    return it == g.end() ? std::int64_t{0} : it->second;
  };
  for (auto i = static_cast<int>(r1) + 1; i >= 0; --i) {
    std::int64_t b1 = get(0, i + 1) + B_I(1, i + 1) - B_I(0, i + 1);
    std::int64_t b0 = b1 - get(2, i + 2) + (i == a ? 1 : 0);
    if (b1 < 0 || b0 < 0)
      fail(ErrorKind::InconsistentInput, "recursion produced a negative Betti number in degree " + std::to_string(i));
    g[{1, i + 1}] = b1;
    g[{0, i}] = b0;
  }
  for (int i = 0; i < a; ++i)
    if (get(0, i) != 0) fail(ErrorKind::InconsistentInput, "gin would have generators below the initial degree");

  BettiTable out(3);
  for (const auto& [k, v] : g) out.set(k.first, k.second, v);
  if (!(hilbert_from_betti(out) == H)) fail(ErrorKind::InconsistentInput, "derived gin table has the wrong Hilbert function");
  return out;
}

/// f_1 and f_2 of gin(I): the generators x_1^{f_1} and x_1^j x_2^{f_2(j)}.
struct Max2Generators {
  int f1 = 0;
  std::vector<int> f2;  // f2[j] for 0 <= j < f1

  std::vector<Monomial> generators(std::size_t n = 3) const {
    std::vector<Monomial> out{monomial_from_tuple(n, {}, f1)};
    for (int j = 0; j < f1; ++j) out.push_back(monomial_from_tuple(n, {j}, f2[static_cast<std::size_t>(j)]));
    return out;
  }
};

/// Under WLP the generators of degree <= r1 all avoid x_3, so the row
/// beta_{0,.} of gin up to r1 counts x_1^{f_1} and the x_1^j x_2^{f_2(j)};
/// the a - (those) remaining ones sit in degree r1 + 1.
inline Max2Generators reconstruct_max2_generators(const BettiTable& B_gin, std::int64_t r1) {
  detail::require_three(B_gin.num_vars());
  const int a = detail::min_generator_degree(B_gin);
  if (a > r1 + 1) fail(ErrorKind::InconsistentTable, "initial degree exceeds r1 + 1");
  std::map<int, std::int64_t> counts;
  std::int64_t below = 0;
  for (int i = 0; i <= r1; ++i) {
    if (B_gin(2, i + 2) != 0) fail(ErrorKind::InconsistentTable, "x_3-divisible generator in degree <= r1 contradicts WLP");
    std::int64_t c = B_gin(0, i) - (i == a ? 1 : 0);
    if (c < 0) fail(ErrorKind::InconsistentTable, "no room for x_1^a in degree " + std::to_string(i));
    if (c > 0) counts[i] = c;
    below += c;
  }
  const auto last = static_cast<int>(r1) + 1;
  const std::int64_t at_last = a - below;
  if (at_last < 0) fail(ErrorKind::InconsistentTable, "too many generators below degree r1 + 1");
  if (at_last + (a == last ? 1 : 0) != B_gin(0, last) - B_gin(2, last + 2))
    fail(ErrorKind::InconsistentTable, "generator count in degree r1 + 1 does not match the table");
  if (at_last > 0) counts[last] = at_last;

  std::vector<int> s = recover_sequence(counts, a);
  if (s.back() != last || s.front() < a) fail(ErrorKind::InconsistentTable, "degree chain does not run from a to r1 + 1");
  Max2Generators out;
  out.f1 = a;
  out.f2.resize(static_cast<std::size_t>(a));
  for (int j = 0; j < a; ++j) {
    out.f2[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(a - 1 - j)] - j;
    if (j > 0 && out.f2[static_cast<std::size_t>(j)] >= out.f2[static_cast<std::size_t>(j - 1)])
      fail(ErrorKind::InconsistentTable, "f_2 is not strictly decreasing");
  }
  if (out.f2.back() < 1) fail(ErrorKind::InconsistentTable, "f_2 must be positive");
  return out;
}

namespace detail {

inline std::vector<ExponentTuple> j2_from(const Max2Generators& m) {
  std::vector<ExponentTuple> out;
  for (int j = 0; j < m.f1; ++j)
    for (int b = 0; b < m.f2[static_cast<std::size_t>(j)]; ++b) out.push_back({j, b});
  return out;
}

inline FIndex f_index_from(const Max2Generators& m, std::map<ExponentTuple, int> f3) {
  FIndex F;
  F.n = 3;
  F.f1 = m.f1;
  std::map<ExponentTuple, int> level2;
  for (int j = 0; j < m.f1; ++j) level2[{j}] = m.f2[static_cast<std::size_t>(j)];
  F.levels = {std::move(level2), std::move(f3)};
  return F;
}

}  // namespace detail

/// gin(I) from the Betti table and Hilbert function of I, assuming SLP.
inline MonomialIdeal reconstruct_gin_slp(const BettiTable& B_I, const HilbertFunction& H) {
  detail::require_three(B_I.num_vars());
  const BettiTable B_gin = betti_gin_from_betti_I(B_I, H);
  const std::int64_t r1 = r1_from_hf_wlp(H);
  const Max2Generators low = reconstruct_max2_generators(B_gin, r1);

  // Blocks |alpha| = r1 down to 0, alpha_1 descending inside each block.
  std::vector<ExponentTuple> order = detail::j2_from(low);
  std::sort(order.begin(), order.end(), [](const ExponentTuple& x, const ExponentTuple& y) {
    if (weight(x) != weight(y)) return weight(x) > weight(y);
    return x[0] > y[0];
  });
  std::map<int, std::int64_t> counts;
  for (const auto& [k, v] : B_gin.entries())
    if (k.first == 2) counts[k.second - 2] = v;
  std::vector<int> degrees;
  try {
    degrees = recover_sequence(counts, static_cast<std::int64_t>(order.size()));
  } catch (const Error& e) {
    fail(ErrorKind::InconsistentTable, std::string("beta_{2,.} does not match |J_2|: ") + e.what());
  }
  std::map<ExponentTuple, int> f3;
  for (std::size_t k = 0; k < order.size(); ++k) f3[order[k]] = degrees[k] - weight(order[k]);

  const FIndex F = detail::f_index_from(low, std::move(f3));
  if (auto why = check_f_index_invariants(F)) fail(ErrorKind::StabilityViolated, *why);
  MonomialIdeal out = generators_from_f(F);
  if (!is_strongly_stable(out)) fail(ErrorKind::StabilityViolated, "reconstruction is not strongly stable: " + to_string(out));
  if (!(ek_betti(out) == B_gin)) fail(ErrorKind::InconsistentTable, "reconstruction has the wrong Betti table");
  if (!(hilbert_function(out) == H)) fail(ErrorKind::InconsistentTable, "reconstruction has the wrong Hilbert function");
  return out;
}

/// gin(I) from the Hilbert function alone, assuming SSP.
inline MonomialIdeal reconstruct_gin_ssp(const HilbertFunction& H) {
  if (!H.is_symmetric()) fail(ErrorKind::AsymmetricHilbert, "SSP forces a symmetric Hilbert function");
  const std::int64_t r1 = r1_from_hf_wlp(H);
  const std::int64_t t = H.socle_degree();
  const PartialBettiTable known = betti_from_hf_wlp(H, r1, 3);

  std::vector<ExponentTuple> J2;
  std::map<ExponentTuple, int> f3;
  for (std::int64_t d = 0; d <= r1; ++d) {
    const std::int64_t want = known.at(2, static_cast<int>(2 + t - d + 1)).value_or(0);
    if (want > d + 1) fail(ErrorKind::InconsistentInput, "more tuples requested than |alpha| = " + std::to_string(d) + " allows");
    // Revlex-smallest first: the most x_2.
    for (std::int64_t k = 0; k < want; ++k) {
      ExponentTuple alpha{static_cast<int>(k), static_cast<int>(d - k)};
      J2.push_back(alpha);
      f3[alpha] = static_cast<int>(t - 2 * d + 1);
    }
  }
  if (J2.empty()) fail(ErrorKind::InconsistentInput, "Hilbert function leaves J_2 empty");

  std::vector<Monomial> gens = low_generators_from_last_J(3, J2);
  for (const auto& [alpha, v] : f3) gens.push_back(monomial_from_tuple(3, alpha, v));
  MonomialIdeal out(3, std::move(gens));
  if (!is_strongly_stable(out)) fail(ErrorKind::InconsistentInput, "reconstruction is not strongly stable: " + to_string(out));
  if (!(hilbert_function(out) == H)) fail(ErrorKind::InconsistentInput, "reconstruction has the wrong Hilbert function");
  if (!ssp_criterion(f_index(out), t).verdict) fail(ErrorKind::InconsistentInput, "reconstruction fails the SSP criterion");
  return out;
}

/// If x^alpha x_n^c and x_{n-1}^{|alpha|} x_n^c are both minimal generators,
/// every x^beta x_n^c with beta reached from alpha by moving factors toward
/// x_{n-1} must be one too. Checked one inverse elementary move at a time.
inline bool borel_move_generator_check(const MonomialIdeal& I) {
  const std::size_t n = I.num_vars();
  if (n < 2) return true;
  std::set<Monomial> G(I.generators().begin(), I.generators().end());
  for (const auto& g : I.generators()) {
    const auto c = g[n - 1];
    const auto lower = g.degree() - c;
    if (lower == 0) continue;
    Monomial corner = Monomial::variable(n, n - 2, static_cast<Monomial::Exponent>(lower)) * Monomial::variable(n, n - 1, c);
    if (!G.count(corner)) continue;
    for (std::size_t j = 0; j + 1 < n - 1; ++j) {
      if (g[j] == 0) continue;
      for (std::size_t i = j + 1; i < n - 1; ++i) {
        Monomial moved = g / Monomial::variable(n, j) * Monomial::variable(n, i);
        if (!G.count(moved)) return false;
      }
    }
  }
  return true;
}

/// SSP test for an algebra sharing its Hilbert function with an SSP algebra:
/// the flag {x_2^{r1+1}, x_2^i x_3^{t-2i+1}} must lie in gin(J).
inline bool ssp_flag_test(const MonomialIdeal& gin_J, const HilbertFunction& H) {
  const std::int64_t r1 = r1_from_hf_wlp(H);
  for (const auto& m : ssp_flag(r1, H.socle_degree(), gin_J.num_vars()))
    if (!gin_J.contains(m)) return false;
  return true;
}

struct CancellationResult {
  bool feasible = true;
  /// (q, d) -> number of (beta_{q,d}, beta_{q+1,d}) pairs cancelled.
  std::map<BettiTable::Key, std::int64_t> pairs;
};

/// Whether B_I arises from B_gin by cancelling consecutive pairs in equal
/// internal degree. Per degree the system is a chain, so solving it from
/// q = 0 upward is exact.
inline CancellationResult cancellation_check(const BettiTable& B_I, const BettiTable& B_gin) {
  if (B_I.num_vars() != B_gin.num_vars()) fail(ErrorKind::MismatchedVariables, "Betti tables over different rings");
  const int n = static_cast<int>(B_gin.num_vars());
  CancellationResult out;
  std::set<int> degrees;
  for (const auto& [k, v] : B_I.entries()) degrees.insert(k.second);
  for (const auto& [k, v] : B_gin.entries()) degrees.insert(k.second);
  for (int d : degrees) {
    std::int64_t carry = 0;
    for (int q = 0; q < n; ++q) {
      std::int64_t diff = B_gin(q, d) - B_I(q, d);
      std::int64_t c = diff - carry;
      if (q == n - 1) {
        if (c != 0) out.feasible = false;
        break;
      }
      if (c < 0) {
        out.feasible = false;
        break;
      }
      if (c > 0) out.pairs[{q, d}] = c;
      carry = c;
    }
    if (!out.feasible) break;
  }
  if (!out.feasible) out.pairs.clear();
  return out;
}

/// Two strongly stable ideals of k[x,y,z,w] with equal Betti tables, both
/// with SSP and socle degree 12, yet different. Reconstruction from numerical
/// data cannot work in four variables.
inline std::pair<MonomialIdeal, MonomialIdeal> nonunique_ssp_pair() {
  using E = std::vector<Monomial::Exponent>;
  const std::vector<E> shared = {
      {0, 3, 0, 7}, {1, 1, 1, 7}, {0, 2, 1, 7}, {1, 0, 2, 7}, {0, 1, 2, 7}, {0, 0, 3, 7}, {1, 1, 0, 9},
      {0, 2, 0, 9}, {1, 0, 1, 9}, {0, 1, 1, 9}, {0, 0, 2, 9}, {1, 0, 0, 11}, {0, 1, 0, 11}, {0, 0, 1, 11},
      {0, 0, 0, 13}};
  const std::vector<E> first = {
      {2, 0, 0, 0}, {1, 2, 0, 0}, {0, 4, 0, 0}, {0, 3, 1, 0}, {1, 1, 3, 0}, {0, 2, 3, 0}, {1, 0, 5, 0},
      {0, 1, 5, 0}, {0, 0, 7, 0}, {0, 0, 6, 1}, {1, 0, 4, 3}, {0, 1, 4, 3}, {0, 0, 5, 3}, {1, 1, 2, 5},
      {0, 2, 2, 5}, {1, 0, 3, 5}, {0, 1, 3, 5}, {0, 0, 4, 5}};
  const std::vector<E> second = {
      {2, 0, 0, 0}, {1, 2, 0, 0}, {0, 4, 0, 0}, {1, 1, 2, 0}, {0, 3, 2, 0}, {1, 0, 4, 0}, {0, 2, 4, 0},
      {0, 1, 5, 0}, {0, 0, 7, 0}, {0, 0, 6, 1}, {0, 2, 3, 3}, {0, 1, 4, 3}, {0, 0, 5, 3}, {0, 3, 1, 5},
      {0, 2, 2, 5}, {1, 0, 3, 5}, {0, 1, 3, 5}, {0, 0, 4, 5}};
  auto build = [&](const std::vector<E>& head) {
    std::vector<Monomial> gens;
    for (const auto& e : head) gens.emplace_back(e);
    for (const auto& e : shared) gens.emplace_back(e);
    return MonomialIdeal(4, std::move(gens));
  };
  return {build(first), build(second)};
}

}  // namespace borel
