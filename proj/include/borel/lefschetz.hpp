#pragma once

#include <algorithm>
#include <map>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borel/betti.hpp"
#include "borel/f_index.hpp"
#include "borel/hilbert.hpp"
#include "borel/koszul.hpp"
#include "borel/reduction.hpp"

namespace borel {

enum class Property { WLP, SLP, SSP };
enum class Method { Criterion, Betti, Oracle };

constexpr std::string_view to_string(Property p) {
  switch (p) {
    case Property::WLP: return "WLP";
    case Property::SLP: return "SLP";
    case Property::SSP: return "SSP";
  }
  return "?";
}

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::Criterion: return "criterion";
    case Method::Betti: return "betti";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

/// One failed inequality. For criteria `tuple` is alpha in J_{n-1} and
/// `f_value` is f_n(alpha); for oracles `tuple` is (d, i) for the map
/// x_n^i : A_d -> A_{d+i} and `f_value` is its rank. `lhs` is the quantity
/// that had to reach `required`.
struct Witness {
  ExponentTuple tuple;
  std::int64_t f_value = 0;
  std::int64_t lhs = 0;
  std::int64_t required = 0;
  std::string condition;
};

struct LefschetzReport {
  Property property = Property::WLP;
  bool verdict = true;
  Method method = Method::Criterion;
  std::optional<std::int64_t> r1;  // absent when n = 1
  std::int64_t t = 0;
  std::vector<Witness> witnesses;
};

/// Rank of x_n^i : (R/I)_d -> (R/I)_{d+i}. Multiplication by a variable power
/// sends distinct monomials to distinct monomials, so the rank is the number
/// of standard T of degree d with T x_n^i still standard.
inline std::int64_t mult_rank(const MonomialIdeal& I, std::int64_t d, std::int64_t i) {
  const std::size_t n = I.num_vars();
  if (n == 0) return 0;
  Monomial shift = Monomial::variable(n, n - 1, static_cast<Monomial::Exponent>(i));
  std::int64_t r = 0;
  for (const auto& T : standard_monomials(I, d))
    if (!I.contains(T * shift)) ++r;
  return r;
}

/// Rank of (x_1 + ... + x_n)^i : (R/I)_d -> (R/I)_{d+i}. For a monomial
/// ideal in characteristic 0 this is the generic rank: the torus acts on R/I
/// and moves any general linear form to the sum of the variables.
inline std::int64_t sum_power_rank(const MonomialIdeal& I, std::int64_t d, std::int64_t i) {
  const std::size_t n = I.num_vars();
  const auto source = standard_monomials(I, d);
  const auto target = standard_monomials(I, d + i);
  if (source.empty() || target.empty()) return 0;
  std::map<Monomial, std::size_t> column;
  for (std::size_t k = 0; k < target.size(); ++k) column.emplace(target[k], k);
  // Multinomial coefficients of (x_1 + ... + x_n)^i.
  std::vector<std::pair<Monomial, Rational>> power;
  for (const auto& m : monomials_of_degree(n, i)) {
    Integer c;
    mpz_fac_ui(c.get_mpz_t(), static_cast<unsigned long>(i));
    for (std::size_t v = 0; v < n; ++v) {
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[v]));
      c /= f;
    }
    power.emplace_back(m, Rational(c));
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& T : source) {
    std::vector<Rational> row(target.size());
    for (const auto& [m, c] : power)
      if (auto it = column.find(T * m); it != column.end()) row[it->second] += c;
    rows.push_back(std::move(row));
  }
  return static_cast<std::int64_t>(detail::rank(std::move(rows)));
}

namespace detail {

inline std::optional<std::int64_t> first_reduction_number(const MonomialIdeal& I) {
  if (I.num_vars() < 2) return std::nullopt;
  return reduction_number(I, 1);
}

/// Generic rank of L^i on A_d. Strongly stable ideals use x_n, which is
/// generic for them; other monomial ideals use the sum of the variables.
class RankOracle {
 public:
  explicit RankOracle(const MonomialIdeal& I) : I_(I), stable_(is_strongly_stable(I)), H_(hilbert_function(I)) {}

  std::int64_t operator()(std::int64_t d, std::int64_t i) const {
    return stable_ ? mult_rank(I_, d, i) : sum_power_rank(I_, d, i);
  }
  const HilbertFunction& hilbert() const { return H_; }

  LefschetzReport report(Property p) const {
    LefschetzReport rep;
    rep.property = p;
    rep.method = Method::Oracle;
    // r1 is read off gin; only available here when I is its own gin.
    if (stable_) rep.r1 = first_reduction_number(I_);
    rep.t = H_.socle_degree();
    return rep;
  }

 private:
  const MonomialIdeal& I_;
  bool stable_;
  HilbertFunction H_;
};

}  // namespace detail

/// WLP by brute force: a general linear form has maximal rank
/// A_d -> A_{d+1} for 0 <= d <= t.
inline LefschetzReport wlp_oracle(const MonomialIdeal& I) {
  const detail::RankOracle rank(I);
  const HilbertFunction& H = rank.hilbert();
  LefschetzReport rep = rank.report(Property::WLP);
  for (std::int64_t d = 0; d <= rep.t; ++d) {
    std::int64_t r = rank(d, 1), want = std::min(H(d), H(d + 1));
    if (r != want) rep.witnesses.push_back({{static_cast<int>(d), 1}, r, r, want, "rank L: A_d -> A_{d+1} is maximal"});
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// SLP by brute force over 1 <= i <= t and 0 <= d <= t. Powers beyond t map
/// into zero and are maximal rank trivially.
inline LefschetzReport slp_oracle(const MonomialIdeal& I) {
  const detail::RankOracle rank(I);
  const HilbertFunction& H = rank.hilbert();
  LefschetzReport rep = rank.report(Property::SLP);
  for (std::int64_t i = 1; i <= rep.t; ++i) {
    for (std::int64_t d = 0; d + i <= rep.t; ++d) {
      std::int64_t r = rank(d, i), want = std::min(H(d), H(d + i));
      if (r != want)
        rep.witnesses.push_back({{static_cast<int>(d), static_cast<int>(i)}, r, r, want, "rank L^i: A_d -> A_{d+i} is maximal"});
    }
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// SSP by brute force: L^{t-2i} : A_i -> A_{t-i} bijective, 0 <= i <= t/2.
inline LefschetzReport ssp_oracle(const MonomialIdeal& I) {
  const detail::RankOracle rank(I);
  const HilbertFunction& H = rank.hilbert();
  LefschetzReport rep = rank.report(Property::SSP);
  const std::int64_t t = rep.t;
  for (std::int64_t i = 0; 2 * i <= t; ++i) {
    std::int64_t r = rank(i, t - 2 * i);
    if (r != H(i) || H(i) != H(t - i))
      rep.witnesses.push_back({{static_cast<int>(i), static_cast<int>(t - 2 * i)}, r, r, std::max(H(i), H(t - i)),
                               "L^{t-2i}: A_i -> A_{t-i} is bijective"});
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// WLP iff |alpha| + f_n(alpha) >= r1 + 1 for every alpha in J_{n-1}, i.e.
/// every minimal generator divisible by x_n has degree above r1.
inline LefschetzReport wlp_criterion(const FIndex& F, std::int64_t r1) {
  LefschetzReport rep;
  rep.property = Property::WLP;
  if (F.n >= 2) rep.r1 = r1;
  for (const auto& [alpha, v] : F.top()) {
    std::int64_t degree = weight(alpha) + v;
    if (degree < r1 + 1) rep.witnesses.push_back({alpha, v, degree, r1 + 1, "|alpha| + f_n(alpha) >= r1 + 1"});
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// SLP iff, over J_{n-1}, the WLP inequality holds and
/// f_n(alpha) >= f_n(0,..,0,|alpha|+1) + 1, where f_n of a tuple outside
/// J_{n-1} counts as 0.
inline LefschetzReport slp_criterion(const FIndex& F, std::int64_t r1) {
  LefschetzReport rep = wlp_criterion(F, r1);
  rep.property = Property::SLP;
  for (const auto& [alpha, v] : F.top()) {
    ExponentTuple edge(alpha.size(), 0);
    edge.back() = weight(alpha) + 1;
    std::int64_t next = F.find(edge).value_or(0);
    if (v < next + 1) rep.witnesses.push_back({alpha, v, v, next + 1, "f_n(alpha) >= f_n(0,...,0,|alpha|+1) + 1"});
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// SSP iff f_n(alpha) = t - 2|alpha| + 1 for every alpha in J_{n-1}.
inline LefschetzReport ssp_criterion(const FIndex& F, std::int64_t t) {
  LefschetzReport rep;
  rep.property = Property::SSP;
  rep.t = t;
  for (const auto& [alpha, v] : F.top()) {
    std::int64_t want = t - 2 * weight(alpha) + 1;
    if (v != want) rep.witnesses.push_back({alpha, v, v, want, "f_n(alpha) = t - 2|alpha| + 1"});
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

/// Wiebe's Betti-number test for WLP on the Betti table of a gin.
struct BettiWlpVerdict {
  bool verdict = true;     // beta_{n-1,n-1+j} = beta_{0,j} for all j > d
  bool condition3 = true;  // beta_{i,i+j} = binom(n-1,i) beta_{0,j} for all j > d, all i
  std::optional<int> d;    // min{ j | beta_{n-1,n-1+j} > 0 }
};

inline BettiWlpVerdict wlp_betti_criterion(const BettiTable& B, std::size_t n) {
  BettiWlpVerdict out;
  const int top = static_cast<int>(n) - 1;
  if (auto m = B.min_degree(top)) out.d = *m - top;
  if (!out.d) return out;
  const int max_j = B.max_internal_degree();
  for (int j = *out.d + 1; j <= max_j; ++j) {
    if (B(top, top + j) != B(0, j)) out.verdict = false;
    for (int i = 0; i <= top; ++i)
      if (B(i, i + j) != binomial(top, i) * B(0, j)) out.condition3 = false;
  }
  return out;
}

/// r_1 = min{ d | H(d-1) >= H(d) } - 1, valid under WLP.
inline std::int64_t r1_from_hf_wlp(const HilbertFunction& H) {
  for (std::int64_t d = 1; d <= H.socle_degree() + 1; ++d)
    if (H(d - 1) >= H(d)) return d - 1;
  fail(ErrorKind::StrictlyIncreasing, "Hilbert function never stops increasing");
}

/// The Betti numbers of gin(I) that the Hilbert function alone fixes under
/// WLP: beta_{n-1,n-1+d} for every d, and every beta_{i,i+d} once d >= r1 + 2.
class PartialBettiTable {
 public:
  PartialBettiTable(HilbertFunction H, std::int64_t r1, std::size_t n) : H_(std::move(H)), r1_(r1), n_(n) {
    for (std::int64_t d = r1_ + 1; d <= H_.socle_degree() + 1; ++d)
      if (H_(d - 1) < H_(d)) fail(ErrorKind::InconsistentInput, "Hilbert function increases past r1; WLP cannot hold");
  }

  std::optional<std::int64_t> at(int q, int i) const {
    const std::int64_t d = i - q;
    const int top = static_cast<int>(n_) - 1;
    if (q < 0 || q > top) return 0;
    if (q == top) return d <= r1_ ? 0 : H_(d - 1) - H_(d);
    if (d >= r1_ + 2) return binomial(top, q) * (H_(d - 1) - H_(d));
    return std::nullopt;
  }

  /// Every determined nonzero entry, as a table.
  BettiTable known_nonzero() const {
    BettiTable B(n_);
    const int top = static_cast<int>(n_) - 1;
    for (int q = 0; q <= top; ++q)
      for (std::int64_t d = 0; d <= H_.socle_degree() + 1; ++d)
        if (auto v = at(q, q + static_cast<int>(d)); v && *v > 0) B.set(q, q + static_cast<int>(d), *v);
    return B;
  }

  std::int64_t r1() const noexcept { return r1_; }
  std::size_t num_vars() const noexcept { return n_; }

 private:
  HilbertFunction H_;
  std::int64_t r1_;
  std::size_t n_;
};

inline PartialBettiTable betti_from_hf_wlp(const HilbertFunction& H, std::int64_t r1, std::size_t n) {
  return PartialBettiTable(H, r1, n);
}

/// {x_{n-1}^{r1+1}} together with x_{n-1}^i x_n^{t-2i+1} for 0 <= i <= r1.
inline std::vector<Monomial> ssp_flag(std::int64_t r1, std::int64_t t, std::size_t n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "the flag needs at least two variables");
  std::vector<Monomial> out;
  out.push_back(Monomial::variable(n, n - 2, static_cast<Monomial::Exponent>(r1 + 1)));
  for (std::int64_t i = 0; i <= r1; ++i) {
    Monomial m = Monomial::variable(n, n - 2, static_cast<Monomial::Exponent>(i)) *
                 Monomial::variable(n, n - 1, static_cast<Monomial::Exponent>(t - 2 * i + 1));
    out.push_back(std::move(m));
  }
  return out;
}

/// SSP as SLP plus a symmetric Hilbert function.
inline bool ssp_via_slp_symmetry(const MonomialIdeal& I) {
  return hilbert_function(I).is_symmetric() && slp_oracle(I).verdict;
}

/// Runs one property check on an Artinian monomial ideal. Oracles work on
/// I directly; the criteria and the Betti test read gin(I), which is I
/// itself when I is strongly stable and is computed otherwise.
inline LefschetzReport analyze(const MonomialIdeal& ideal, Property p, Method m, const GinOptions& options = {}) {
  if (m == Method::Oracle) {
    switch (p) {
      case Property::WLP: return wlp_oracle(ideal);
      case Property::SLP: return slp_oracle(ideal);
      case Property::SSP: return ssp_oracle(ideal);
    }
  }
  const MonomialIdeal I = is_strongly_stable(ideal) ? ideal : gin(to_polynomials(ideal), ideal.num_vars(), options);
  const HilbertFunction H = hilbert_function(I);
  const FIndex F = f_index(I);
  const auto r1 = detail::first_reduction_number(I);
  LefschetzReport rep;
  if (m == Method::Betti) {
    if (p != Property::WLP) fail(ErrorKind::InvalidArgument, "the Betti-number test only decides WLP");
    const BettiTable B = ek_betti(I);
    auto v = wlp_betti_criterion(B, I.num_vars());
    rep.property = p;
    rep.method = m;
    rep.verdict = v.verdict;
    if (!v.verdict) {
      // Report the generators that break the condition: x_n-divisible ones of degree <= r1.
      for (const auto& [alpha, fv] : F.top())
        if (r1 && weight(alpha) + fv < *r1 + 1)
          rep.witnesses.push_back({alpha, fv, weight(alpha) + fv, *r1 + 1, "beta_{n-1,n-1+j} = beta_{0,j} for j > d"});
      if (rep.witnesses.empty()) rep.witnesses.push_back({{}, 0, 0, 0, "beta_{n-1,n-1+j} = beta_{0,j} for j > d"});
    }
  } else {
    switch (p) {
      case Property::WLP: rep = wlp_criterion(F, r1.value_or(0)); break;
      case Property::SLP: rep = slp_criterion(F, r1.value_or(0)); break;
      case Property::SSP: rep = ssp_criterion(F, H.socle_degree()); break;
    }
    rep.method = m;
  }
  rep.r1 = r1;
  rep.t = H.socle_degree();
  return rep;
}

}  // namespace borel
