#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "borel/groebner.hpp"
#include "borel/random.hpp"

namespace borel {

/// An invertible integer matrix acting by x_i -> sum_j g[i][j] x_j.
class CoordinateChange {
 public:
  explicit CoordinateChange(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (const auto& r : rows_)
      if (r.size() != n) fail(ErrorKind::InvalidArgument, "coordinate change must be square");
    if (determinant() == 0) fail(ErrorKind::SingularMatrix, "coordinate change is singular");
  }

  static CoordinateChange identity(std::size_t n) {
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return CoordinateChange(std::move(rows));
  }

  /// Entries uniform on the nonzero integers in [-bound, bound], redrawn
  /// until invertible. A zero entry aligns g with a coordinate subspace,
  /// which is the most likely way to miss the generic locus.
  static CoordinateChange random(std::size_t n, std::int64_t bound, Rng& rng) {
    if (bound < 1) fail(ErrorKind::InvalidArgument, "entry bound must be positive");
    for (;;) {
      std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
      for (auto& r : rows)
        for (auto& e : r) e = rng.nonzero(bound);
      if (determinant_of(rows) != 0) return CoordinateChange(std::move(rows));
    }
  }

  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
  Integer determinant() const { return determinant_of(rows_); }

 private:
  // Fraction-free Bareiss elimination.
  static Integer determinant_of(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(rows[i][j]);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
  }

  std::vector<std::vector<std::int64_t>> rows_;
};

/// Substitutes x_i -> sum_j g[i][j] x_j in every polynomial.
inline std::vector<Polynomial> apply_change(const std::vector<Polynomial>& gens, const CoordinateChange& g) {
  const std::size_t n = g.size();
  std::vector<Polynomial> linear;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t j = 0; j < n; ++j)
      terms.push_back({Monomial::variable(n, j), Rational(static_cast<long>(g.rows()[i][j]))});
    linear.emplace_back(n, std::move(terms));
  }
  std::map<std::pair<std::size_t, Monomial::Exponent>, Polynomial> powers;
  auto power = [&](std::size_t var, Monomial::Exponent e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Polynomial p = Polynomial::from_monomial(Monomial(n));
    for (Monomial::Exponent k = 0; k < e; ++k) p = p * linear[var];
    return powers.emplace(key, std::move(p)).first->second;
  };

  std::vector<Polynomial> out;
  for (const auto& f : gens) {
    if (f.num_vars() != n) fail(ErrorKind::MismatchedVariables, "coordinate change has the wrong size");
    Polynomial acc(n);
    for (const auto& t : f.terms()) {
      Polynomial term = Polynomial::from_monomial(Monomial(n), t.coeff);
      for (std::size_t v = 0; v < n; ++v)
        if (t.monomial[v] > 0) term = term * power(v, t.monomial[v]);
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

struct GinOptions {
  int trials = 3;
  std::int64_t entry_bound = 100;
  std::uint64_t seed = 0;
};

/// Generic initial ideal under revlex: in(g I) for `trials` random integer
/// matrices g, which must all agree. The common value is checked to be
/// strongly stable (Borel-fixed in characteristic 0).
inline MonomialIdeal gin(const std::vector<Polynomial>& gens, std::size_t n, const GinOptions& options = {}) {
  if (options.trials < 2) fail(ErrorKind::InvalidArgument, "gin needs at least two trials");
  for (const auto& f : gens) {
    if (f.num_vars() != n) fail(ErrorKind::MismatchedVariables, "generator has the wrong variable count");
    if (!f.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "gin requires homogeneous generators: " + to_string(f));
  }
  Rng rng(options.seed);
  std::vector<CoordinateChange> changes;
  for (int k = 0; k < options.trials; ++k) changes.push_back(CoordinateChange::random(n, options.entry_bound, rng));

  std::optional<MonomialIdeal> common;
  for (const auto& g : changes) {
    MonomialIdeal in = initial_ideal(buchberger(apply_change(gens, g), n));
    if (!common) {
      common = std::move(in);
    } else if (!(*common == in)) {
      fail(ErrorKind::TrialsDisagree,
           "random coordinate changes produced different initial ideals; raise the entry bound or trials");
    }
  }
  if (!is_strongly_stable(*common))
    fail(ErrorKind::StabilityCheckFailed, "agreeing trials produced a non-strongly-stable ideal " + to_string(*common));
  return *common;
}

inline MonomialIdeal gin(const std::vector<Polynomial>& gens, const GinOptions& options = {}) {
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "no generators: pass the variable count explicitly");
  return gin(gens, gens.front().num_vars(), options);
}

}  // namespace borel
