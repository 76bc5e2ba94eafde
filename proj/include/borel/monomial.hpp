#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "borel/error.hpp"

namespace borel {

/// A monomial x_1^{e_1} ... x_n^{e_n} stored as its exponent vector.
///
/// Variables are addressed 0-based in the C++ API (`exponent(0)` is the
/// exponent of x_1). `max_var()` follows the mathematical convention and
/// returns the 1-based index of the last variable present, 0 for the unit.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;

  /// The unit monomial in `n` variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}

  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    for (Exponent e : exps_) {
      if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
      degree_ += e;
    }
  }

  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  /// x_{var+1}^{power} in `n` variables.
  static Monomial variable(std::size_t n, std::size_t var, Exponent power = 1) {
    if (var >= n) fail(ErrorKind::InvalidArgument, "variable index out of range");
    std::vector<Exponent> e(n, 0);
    e[var] = power;
    return Monomial(std::move(e));
  }

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::int64_t degree() const noexcept { return degree_; }
  Exponent exponent(std::size_t var) const { return exps_.at(var); }
  Exponent operator[](std::size_t var) const noexcept { return exps_[var]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  /// 1-based index of the largest variable dividing this monomial; 0 for 1.
  std::size_t max_var() const noexcept {
    for (std::size_t i = exps_.size(); i > 0; --i)
      if (exps_[i - 1] > 0) return i;
    return 0;
  }

  bool divides(const Monomial& other) const {
    check_same_ring(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    check_same_ring(other);
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_add(exps_[i], other.exps_[i]);
    out.degree_ = degree_ + other.degree_;
    return out;
  }

  /// Exact quotient; `other` must divide `*this`.
  Monomial operator/(const Monomial& other) const {
    if (!other.divides(*this)) fail(ErrorKind::InvalidArgument, "monomial division is not exact");
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
    out.degree_ = degree_ - other.degree_;
    return out;
  }

  Monomial lcm(const Monomial& other) const {
    check_same_ring(other);
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
  }

  Monomial gcd(const Monomial& other) const {
    check_same_ring(other);
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(exps_[i], other.exps_[i]);
    return Monomial(std::move(e));
  }

  bool coprime(const Monomial& other) const {
    check_same_ring(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
  }

  /// Copy with the exponent of `var` replaced.
  Monomial with_exponent(std::size_t var, Exponent value) const {
    if (value < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
    Monomial out(*this);
    out.degree_ += static_cast<std::int64_t>(value) - exps_.at(var);
    out.exps_[var] = value;
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  /// Lexicographic on exponent vectors. Only a container key; use
  /// revlex_compare for the monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

  void check_same_ring(const Monomial& other) const {
    if (other.exps_.size() != exps_.size())
      fail(ErrorKind::MismatchedVariables, "monomials live in rings with different variable counts");
  }

 private:
  static Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) fail(ErrorKind::ExponentOverflow, "exponent overflow");
    return a + b;
  }

  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_n: higher
/// degree wins; at equal degree, a > b iff the last nonzero entry of
/// exps(a) - exps(b) is negative.
inline std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b) {
  a.check_same_ring(b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.num_vars(); i > 0; --i) {
    if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
  }
  return std::strong_ordering::equal;
}

struct RevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return revlex_compare(a, b) < 0; }
};

struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return revlex_compare(a, b) > 0; }
};

/// All monomials of degree `d` in `n` variables, descending revlex.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<Monomial::Exponent>{});
    return out;
  }
  std::vector<Monomial::Exponent> e(n, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t var, std::int64_t left) {
    if (var + 1 == n) {
      e[var] = static_cast<Monomial::Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      e[var] = static_cast<Monomial::Exponent>(k);
      rec(var + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

/// Canonical text: factors by increasing index, `^1` suppressed, `1` for the
/// unit. `names` defaults to x1..xn.
inline std::string to_string(const Monomial& m, std::span<const std::string> names = {}) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.empty() ? "x" + std::to_string(i + 1) : names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace borel

template <>
struct std::hash<borel::Monomial> {
  std::size_t operator()(const borel::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
  }
};
