#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse polynomial over Q with terms kept in strictly descending revlex
/// order and no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  /// Combines like terms, drops zeros and sorts.
  Polynomial(std::size_t n, std::vector<Term> terms) : n_(n) {
    std::map<Monomial, Rational, RevlexGreater> acc;
    for (auto& t : terms) {
      if (t.monomial.num_vars() != n) fail(ErrorKind::MismatchedVariables, "term has the wrong variable count");
      acc[t.monomial] += t.coeff;
    }
    for (auto& [m, c] : acc)
      if (c != 0) terms_.push_back({m, c});
  }

  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.num_vars());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Monomial& leading_monomial() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading monomial");
    return terms_.front().monomial;
  }
  const Rational& leading_coeff() const {
    if (is_zero()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    return terms_.front().coeff;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
  }

  bool is_monomial() const { return terms_.size() == 1; }

  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial out(*this);
    Rational lc = leading_coeff();
    for (auto& t : out.terms_) t.coeff /= lc;
    return out;
  }

  /// c * m * this
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order.
    for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coeff * c});
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, -1); }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.mul_term(Monomial(p.n_), c); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check(a, b);
    std::vector<Term> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return Polynomial(a.n_, std::move(acc));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (!(a.terms_[k].monomial == b.terms_[k].monomial) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    return true;
  }

 private:
  static void check(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) fail(ErrorKind::MismatchedVariables, "polynomials live in different rings");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, int sign) {
    check(a, b);
    Polynomial out(a.n_);
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i == a.size()) cmp = -1;
      else if (j == b.size()) cmp = 1;
      else cmp = static_cast<int>(revlex_compare(a.terms_[i].monomial, b.terms_[j].monomial) > 0) -
                 static_cast<int>(revlex_compare(a.terms_[i].monomial, b.terms_[j].monomial) < 0);
      if (cmp > 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        out.terms_.push_back({b.terms_[j].monomial, sign * b.terms_[j].coeff});
        ++j;
      } else {
        Rational c = a.terms_[i].coeff + sign * b.terms_[j].coeff;
        if (c != 0) out.terms_.push_back({a.terms_[i].monomial, c});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Text form `2*x1^2*x2 - 1/3*x3^3`, reparseable by the ideal-file parser.
inline std::string to_string(const Polynomial& p, std::span<const std::string> names = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (t.monomial.is_unit()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += to_string(t.monomial, names);
    }
    first = false;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace borel
