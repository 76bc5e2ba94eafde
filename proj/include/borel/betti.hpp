#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "borel/hilbert.hpp"
#include "borel/monomial_ideal.hpp"

namespace borel {

/// Graded Betti numbers beta_{q,i} = dim Tor_q(I, k)_i of an IDEAL I in n
/// variables (homological degree q, internal degree i). Zero entries are not
/// stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (q, i)

  BettiTable() = default;
  explicit BettiTable(std::size_t n) : n_(n) {}

  std::size_t num_vars() const noexcept { return n_; }
  const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }

  std::int64_t operator()(int q, int i) const {
    auto it = entries_.find({q, i});
    return it == entries_.end() ? 0 : it->second;
  }

  void set(int q, int i, std::int64_t value) {
    if (value < 0) fail(ErrorKind::InvalidArgument, "Betti numbers are non-negative");
    if (value == 0) entries_.erase({q, i});
    else entries_[{q, i}] = value;
  }

  void add(int q, int i, std::int64_t delta) { set(q, i, (*this)(q, i) + delta); }

  bool empty() const noexcept { return entries_.empty(); }

  /// Smallest i with beta_{q,i} > 0, if any.
  std::optional<int> min_degree(int q) const {
    for (const auto& [k, v] : entries_)
      if (k.first == q) return k.second;
    return std::nullopt;
  }

  int max_internal_degree() const {
    int d = 0;
    for (const auto& [k, v] : entries_) d = std::max(d, k.second);
    return d;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t n_ = 0;
  std::map<Key, std::int64_t> entries_;
};

/// Re-indexes to R/I: beta^{R/I}_{0,0} = 1 and beta^{R/I}_{q+1,i} = beta^I_{q,i}.
inline std::map<BettiTable::Key, std::int64_t> quotient_indexing(const BettiTable& B) {
  std::map<BettiTable::Key, std::int64_t> out{{{0, 0}, 1}};
  for (const auto& [k, v] : B.entries()) out[{k.first + 1, k.second}] = v;
  return out;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// Eliahou–Kervaire: beta_{q,i}(I) = sum over T in G(I)_{i-q} of
/// binom(max(T) - 1, q). Requires I stable.
inline BettiTable ek_betti(const MonomialIdeal& I) {
  if (!is_stable(I)) fail(ErrorKind::NotStable, "Eliahou–Kervaire needs a stable ideal: " + to_string(I));
  BettiTable B(I.num_vars());
  for (const auto& g : I.generators()) {
    const auto m = static_cast<std::int64_t>(g.max_var());
    const auto d = static_cast<int>(g.degree());
    if (m == 0) {
      B.add(0, d, 1);
      continue;
    }
    for (int q = 0; q < m; ++q) B.add(q, d + q, binomial(m - 1, q));
  }
  return B;
}

/// Hilbert function of R/I recovered from the Betti numbers of I through the
/// Hilbert series (1 - sum_q (-1)^q beta_{q,i} t^i) / (1 - t)^n.
inline HilbertFunction hilbert_from_betti(const BettiTable& B) {
  const auto n = static_cast<std::int64_t>(B.num_vars());
  std::map<int, std::int64_t> numerator{{0, 1}};
  for (const auto& [k, v] : B.entries()) numerator[k.second] -= (k.first % 2 == 0 ? 1 : -1) * v;
  const int top = B.max_internal_degree();
  std::vector<std::int64_t> values;
  for (std::int64_t d = 0; d <= top + n; ++d) {
    std::int64_t h = 0;
    for (const auto& [e, c] : numerator)
      if (e <= d) h += c * binomial(d - e + n - 1, n - 1);
    values.push_back(h);
  }
  while (!values.empty() && values.back() == 0) values.pop_back();
  if (static_cast<std::int64_t>(values.size()) > top)
    fail(ErrorKind::InconsistentInput, "Betti table does not describe an Artinian quotient");
  for (auto v : values)
    if (v <= 0) fail(ErrorKind::InconsistentInput, "Betti table gives a non-positive Hilbert function value");
  return HilbertFunction(std::move(values));
}

/// Macaulay-style diagram: columns q, rows i - q, plus a total row.
inline std::string betti_diagram(const BettiTable& B) {
  int max_q = -1, min_row = 0, max_row = -1;
  for (const auto& [k, v] : B.entries()) {
    max_q = std::max(max_q, k.first);
    int row = k.second - k.first;
    if (max_row < min_row) min_row = max_row = row;
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
  }
  std::ostringstream os;
  if (max_q < 0) return "(zero table)\n";
  const int w = 6;
  os << std::setw(w) << "";
  for (int q = 0; q <= max_q; ++q) os << std::setw(w) << q;
  os << "\ntotal:";
  for (int q = 0; q <= max_q; ++q) {
    std::int64_t s = 0;
    for (const auto& [k, v] : B.entries())
      if (k.first == q) s += v;
    os << std::setw(w) << s;
  }
  os << "\n";
  for (int row = min_row; row <= max_row; ++row) {
    os << std::setw(w - 1) << row << ":";
    for (int q = 0; q <= max_q; ++q) {
      std::int64_t v = B(q, q + row);
      if (v == 0) os << std::setw(w) << "-";
      else os << std::setw(w) << v;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace borel
