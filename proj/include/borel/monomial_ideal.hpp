#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

/// Divisibility-minimal subset of `gens`, sorted by degree then descending
/// revlex (the canonical generator order).
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return revlex_compare(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    // Ascending order: a divisor of g has degree <= deg g and was seen first.
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return revlex_compare(a, b) > 0;
  });
  return kept;
}

/// A monomial ideal kept as its minimal generating set.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
    for (const auto& g : gens)
      if (g.num_vars() != n) fail(ErrorKind::MismatchedVariables, "generator has the wrong variable count");
    gens_ = minimalize(std::move(gens));
  }

  /// The unit ideal (1).
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_unit(); }

  bool contains(const Monomial& m) const {
    if (m.num_vars() != n_) fail(ErrorKind::MismatchedVariables, "monomial has the wrong variable count");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool is_minimal_generator(const Monomial& m) const {
    return std::find(gens_.begin(), gens_.end(), m) != gens_.end();
  }

  /// G(I)_d.
  std::vector<Monomial> generators_of_degree(std::int64_t d) const {
    std::vector<Monomial> out;
    for (const auto& g : gens_)
      if (g.degree() == d) out.push_back(g);
    return out;
  }

  std::int64_t max_generator_degree() const {
    std::int64_t d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// A failed strong-stability move: x_to * generator / x_from is not in I.
struct StabilityViolation {
  Monomial generator;
  std::size_t from_var;  // 0-based
  std::size_t to_var;    // 0-based, to_var < from_var
  Monomial image;
};

/// Checks x_j * T / x_i in I for every generator T, every i dividing T and
/// every j < i. This generator-level test is equivalent to strong stability.
inline std::optional<StabilityViolation> find_stability_violation(const MonomialIdeal& I) {
  const std::size_t n = I.num_vars();
  for (const auto& g : I.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        Monomial image = g.with_exponent(i, g[i] - 1).with_exponent(j, g[j] + 1);
        if (!I.contains(image)) return StabilityViolation{g, i, j, image};
      }
    }
  }
  return std::nullopt;
}

inline bool is_strongly_stable(const MonomialIdeal& I) { return !find_stability_violation(I).has_value(); }

/// Stable in the Eliahou–Kervaire sense: x_j T / x_{max(T)} in I for j < max(T).
inline bool is_stable(const MonomialIdeal& I) {
  for (const auto& g : I.generators()) {
    std::size_t m = g.max_var();
    if (m == 0) continue;
    for (std::size_t j = 0; j + 1 < m; ++j) {
      Monomial image = g.with_exponent(m - 1, g[m - 1] - 1).with_exponent(j, g[j] + 1);
      if (!I.contains(image)) return false;
    }
  }
  return true;
}

/// (I : x_var^power), `var` 0-based.
inline MonomialIdeal colon_power(const MonomialIdeal& I, std::size_t var, Monomial::Exponent power) {
  if (var >= I.num_vars()) fail(ErrorKind::InvalidArgument, "variable index out of range");
  if (power < 0) fail(ErrorKind::InvalidArgument, "negative power");
  std::vector<Monomial> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(g.with_exponent(var, std::max(g[var] - power, 0)));
  return MonomialIdeal(I.num_vars(), std::move(gens));
}

/// Degree-d monomials outside I, descending revlex. Exponents are assigned
/// variable by variable; a prefix already in I prunes its whole subtree.
inline std::vector<Monomial> standard_monomials(const MonomialIdeal& I, std::int64_t d) {
  std::vector<Monomial> out;
  const std::size_t n = I.num_vars();
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0 && !I.is_unit()) out.emplace_back(std::vector<Monomial::Exponent>{});
    return out;
  }
  std::vector<Monomial::Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, std::int64_t left) -> void {
    if (var + 1 == n) {
      e[var] = static_cast<Monomial::Exponent>(left);
      Monomial m(e);
      if (!I.contains(m)) out.push_back(std::move(m));
      e[var] = 0;
      return;
    }
    for (std::int64_t k = 0; k <= left; ++k) {
      e[var] = static_cast<Monomial::Exponent>(k);
      if (k > 0 && I.contains(Monomial(e))) break;  // larger k stays in I
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

/// True iff every variable has a pure power in I.
inline bool is_artinian(const MonomialIdeal& I) {
  for (std::size_t v = 0; v < I.num_vars(); ++v) {
    bool found = std::any_of(I.generators().begin(), I.generators().end(),
                             [&](const Monomial& g) { return g.degree() == g[v]; });
    if (!found) return false;
  }
  return true;
}

inline std::string to_string(const MonomialIdeal& I, std::span<const std::string> names = {}) {
  std::string out = "(";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) out += ", ";
    out += to_string(I.generators()[k], names);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const MonomialIdeal& I) { return os << to_string(I); }

}  // namespace borel
