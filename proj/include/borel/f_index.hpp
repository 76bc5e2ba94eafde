#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "borel/monomial_ideal.hpp"

namespace borel {

using ExponentTuple = std::vector<int>;

inline int weight(const ExponentTuple& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

inline std::string to_string(const ExponentTuple& alpha) {
  std::string out = "(";
  for (std::size_t k = 0; k < alpha.size(); ++k) out += (k ? "," : "") + std::to_string(alpha[k]);
  return out + ")";
}

/// Encoding of a strongly stable Artinian ideal by its f-functions.
///
/// f_1 = min{ t | x_1^t in I } and, for 2 <= i <= n and alpha in J_{i-1},
/// f_i(alpha) = min{ t | x^alpha x_i^t in I }. J_i collects the tuples
/// (alpha_1..alpha_i) with alpha_1 < f_1 and alpha_j < f_j(alpha_1..alpha_{j-1});
/// equivalently the exponent vectors in x_1..x_i of monomials outside I.
struct FIndex {
  std::size_t n = 0;
  int f1 = 0;
  /// levels[k] maps each tuple of J_{k+1} to f_{k+2}; k = 0..n-2.
  std::vector<std::map<ExponentTuple, int>> levels;

  /// f_{|alpha|+1}(alpha); the empty tuple gives f_1. Nullopt outside J.
  std::optional<int> find(const ExponentTuple& alpha) const {
    if (alpha.empty()) return f1;
    if (alpha.size() > levels.size()) return std::nullopt;
    const auto& level = levels[alpha.size() - 1];
    auto it = level.find(alpha);
    if (it == level.end()) return std::nullopt;
    return it->second;
  }

  int f(const ExponentTuple& alpha) const {
    auto v = find(alpha);
    if (!v) fail(ErrorKind::InvalidArgument, "tuple " + to_string(alpha) + " is not in the index set");
    return *v;
  }

  /// J_i in lexicographic order, 1 <= i <= n-1.
  std::vector<ExponentTuple> J(std::size_t i) const {
    if (i == 0 || i > levels.size()) fail(ErrorKind::InvalidArgument, "J_i is defined for 1 <= i <= n-1");
    std::vector<ExponentTuple> out;
    for (const auto& [alpha, v] : levels[i - 1]) out.push_back(alpha);
    return out;
  }

  /// The tuples of J_{n-1} with their f_n value; empty when n = 1.
  const std::map<ExponentTuple, int>& top() const {
    static const std::map<ExponentTuple, int> empty;
    return levels.empty() ? empty : levels.back();
  }

  friend bool operator==(const FIndex&, const FIndex&) = default;
};

/// x_1^alpha_1 ... x_k^alpha_k * x_{k+1}^power in n variables.
inline Monomial monomial_from_tuple(std::size_t n, const ExponentTuple& alpha, int power) {
  std::vector<Monomial::Exponent> e(n, 0);
  for (std::size_t k = 0; k < alpha.size(); ++k) e[k] = alpha[k];
  if (alpha.size() < n) e[alpha.size()] = power;
  return Monomial(std::move(e));
}

inline FIndex f_index(const MonomialIdeal& I) {
  if (!is_strongly_stable(I)) fail(ErrorKind::NotStable, "f-index needs a strongly stable ideal: " + to_string(I));
  if (!is_artinian(I)) fail(ErrorKind::NotArtinian, "f-index needs an Artinian quotient: " + to_string(I));
  if (I.is_unit()) fail(ErrorKind::InvalidArgument, "f-index needs a proper ideal");
  const std::size_t n = I.num_vars();

  auto min_power = [&](const ExponentTuple& alpha) {
    int t = 0;
    while (!I.contains(monomial_from_tuple(n, alpha, t))) ++t;  // terminates: I is Artinian
    return t;
  };

  FIndex F;
  F.n = n;
  F.f1 = min_power({});
  std::vector<ExponentTuple> previous;  // J_{i-1}
  for (int a = 0; a < F.f1; ++a) previous.push_back({a});
  for (std::size_t i = 2; i <= n; ++i) {
    std::map<ExponentTuple, int> level;
    std::vector<ExponentTuple> next;
    for (const auto& alpha : previous) {
      int v = min_power(alpha);
      level.emplace(alpha, v);
      for (int b = 0; b < v; ++b) {
        ExponentTuple beta = alpha;
        beta.push_back(b);
        next.push_back(std::move(beta));
      }
    }
    F.levels.push_back(std::move(level));
    previous = std::move(next);
  }
  return F;
}

/// {x_1^{f_1}} together with x^alpha x_i^{f_i(alpha)} over alpha in J_{i-1}.
inline MonomialIdeal generators_from_f(const FIndex& F) {
  std::vector<Monomial> gens{monomial_from_tuple(F.n, {}, F.f1)};
  for (const auto& level : F.levels)
    for (const auto& [alpha, v] : level) gens.push_back(monomial_from_tuple(F.n, alpha, v));
  return MonomialIdeal(F.n, std::move(gens));
}

/// Checks the structural properties every f-index of a strongly stable
/// Artinian ideal has. Returns a description of the first failure.
inline std::optional<std::string> check_f_index_invariants(const FIndex& F) {
  if (F.f1 <= 0) return "f_1 must be positive";
  for (std::size_t k = 0; k < F.levels.size(); ++k) {
    const std::size_t i = k + 2;  // the level holds f_i
    for (const auto& [alpha, v] : F.levels[k]) {
      if (v <= 0) return "f_" + std::to_string(i) + to_string(alpha) + " is not positive";
      // |alpha| <= f_{i-1}(0..0) - 1 for alpha in J_{i-1}
      int bound = F.f(ExponentTuple(i - 2, 0)) - 1;
      if (weight(alpha) > bound) return "|alpha| bound fails at " + to_string(alpha);
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] == 0) continue;
        ExponentTuple lower = alpha;
        --lower[j];
        auto lv = F.find(lower);
        if (!lv) return "J_" + std::to_string(i - 1) + " is not closed downward at " + to_string(alpha);
        if (v > *lv - 1) return "monotonicity fails between " + to_string(alpha) + " and " + to_string(lower);
        for (std::size_t s = j + 1; s < alpha.size(); ++s) {
          ExponentTuple moved = lower;
          ++moved[s];
          auto mv = F.find(moved);
          if (!mv) return "J_" + std::to_string(i - 1) + " is not closed under reverse Borel moves at " + to_string(alpha);
          if (v > *mv) return "Borel-move monotonicity fails between " + to_string(alpha) + " and " + to_string(moved);
        }
      }
    }
  }
  return std::nullopt;
}

/// Rebuilds the generators T with max(T) <= n-1 from J_{n-1} alone:
/// g_i(alpha) = max{ b | (alpha, b, 0..0) in J_{n-1} } + 1.
inline std::vector<Monomial> low_generators_from_last_J(std::size_t n, const std::vector<ExponentTuple>& last_J) {
  std::vector<Monomial> out;
  if (n < 2) return out;
  const std::size_t len = n - 1;
  for (std::size_t i = 1; i <= len; ++i) {
    std::map<ExponentTuple, int> best;  // prefix of length i-1 -> max b
    for (const auto& t : last_J) {
      if (t.size() != len) fail(ErrorKind::InvalidArgument, "J tuples must have length n-1");
      bool tail_zero = true;
      for (std::size_t k = i; k < len; ++k) tail_zero = tail_zero && t[k] == 0;
      if (!tail_zero) continue;
      ExponentTuple prefix(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      auto [it, inserted] = best.emplace(prefix, t[i - 1]);
      if (!inserted) it->second = std::max(it->second, t[i - 1]);
    }
    for (const auto& [prefix, b] : best) out.push_back(monomial_from_tuple(n, prefix, b + 1));
  }
  return out;
}

/// #{ T in G(I) | max(T) = n, deg(T) = d }.
inline std::int64_t max_n_generator_count(const MonomialIdeal& I, std::int64_t d) {
  std::int64_t c = 0;
  for (const auto& g : I.generators())
    if (g.degree() == d && g.max_var() == I.num_vars()) ++c;
  return c;
}

}  // namespace borel
