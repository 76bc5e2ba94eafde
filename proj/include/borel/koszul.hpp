#pragma once

#include <bit>
#include <map>
#include <optional>
#include <vector>

#include "borel/betti.hpp"
#include "borel/groebner.hpp"

namespace borel {

namespace detail {

/// Rank of a dense rational matrix (rows are vectors), by row reduction.
inline std::size_t rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

/// Graded pieces of A = R/I with the standard-monomial basis of in(I) and
/// multiplication by variables computed through normal forms.
class GradedQuotient {
 public:
  explicit GradedQuotient(GroebnerBasis G) : G_(std::move(G)), in_(initial_ideal(G_)) {}

  std::size_t num_vars() const { return G_.num_vars(); }
  const MonomialIdeal& initial() const { return in_; }

  const std::vector<Monomial>& basis(std::int64_t d) {
    auto it = basis_.find(d);
    if (it != basis_.end()) return it->second.first;
    auto mons = d < 0 ? std::vector<Monomial>{} : standard_monomials(in_, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < mons.size(); ++k) index.emplace(mons[k], k);
    return basis_.emplace(d, std::make_pair(std::move(mons), std::move(index))).first->second.first;
  }

  /// Coordinates of x_var * m in the degree deg(m)+1 basis.
  std::vector<std::pair<std::size_t, Rational>> multiply(std::size_t var, const Monomial& m) {
    Monomial prod = m * Monomial::variable(num_vars(), var);
    basis(prod.degree());
    const auto& index = basis_.at(prod.degree()).second;
    std::vector<std::pair<std::size_t, Rational>> out;
    if (!in_.contains(prod)) {
      out.emplace_back(index.at(prod), 1);
      return out;
    }
    const Polynomial reduced = normal_form(Polynomial::from_monomial(prod), G_);
    for (const auto& t : reduced.terms())
      out.emplace_back(index.at(t.monomial), t.coeff);
    return out;
  }

 private:
  GroebnerBasis G_;
  MonomialIdeal in_;
  std::map<std::int64_t, std::pair<std::vector<Monomial>, std::map<Monomial, std::size_t>>> basis_;
};

}  // namespace detail

/// Betti numbers of I computed as Koszul homology: Tor_{q+1}(R/I, k)_d is the
/// homology at K_{q+1} of the Koszul complex on x_1..x_n tensored with R/I,
/// taken degree by degree with exact linear algebra. Small inputs only.
inline BettiTable koszul_betti(const GroebnerBasis& G, std::optional<std::int64_t> degree_bound = std::nullopt) {
  detail::GradedQuotient A(G);
  const std::size_t n = G.num_vars();
  const HilbertFunction H = hilbert_function(A.initial());
  const std::int64_t needed = H.socle_degree() + static_cast<std::int64_t>(n);
  const std::int64_t bound = degree_bound.value_or(needed);
  if (bound < needed)
    fail(ErrorKind::DegreeBoundTooSmall,
         "Koszul degree bound " + std::to_string(bound) + " is below socle degree + n = " + std::to_string(needed));

  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) subsets[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

  BettiTable B(n);
  for (std::int64_t d = 0; d <= bound; ++d) {
    // dims[q] = dim K_{q,d}; ranks[q] = rank of d_q : K_{q,d} -> K_{q-1,d}.
    std::vector<std::size_t> dims(n + 2, 0), ranks(n + 2, 0);
    for (std::size_t q = 0; q <= n; ++q) dims[q] = subsets[q].size() * A.basis(d - static_cast<std::int64_t>(q)).size();
    for (std::size_t q = 1; q <= n; ++q) {
      if (dims[q] == 0 || dims[q - 1] == 0) continue;
      const auto& src_basis = A.basis(d - static_cast<std::int64_t>(q));
      const auto& tgt_basis = A.basis(d - static_cast<std::int64_t>(q) + 1);
      const std::size_t block = tgt_basis.size();
      std::map<unsigned, std::size_t> tgt_pos;
      for (std::size_t s = 0; s < subsets[q - 1].size(); ++s) tgt_pos[subsets[q - 1][s]] = s;
      std::vector<std::vector<Rational>> rows;
      for (unsigned S : subsets[q]) {
        for (const auto& m : src_basis) {
          std::vector<Rational> row(dims[q - 1], 0);
          int sign = 1;
          for (std::size_t v = 0; v < n; ++v) {
            if (!(S & (1u << v))) continue;
            std::size_t off = tgt_pos.at(S & ~(1u << v)) * block;
            for (auto& [idx, c] : A.multiply(v, m)) row[off + idx] += sign * c;
            sign = -sign;
          }
          rows.push_back(std::move(row));
        }
      }
      ranks[q] = detail::rank(std::move(rows));
    }
    for (std::size_t q = 1; q <= n; ++q) {
      auto tor = static_cast<std::int64_t>(dims[q]) - static_cast<std::int64_t>(ranks[q]) -
                 static_cast<std::int64_t>(ranks[q + 1]);
      if (tor > 0) B.set(static_cast<int>(q) - 1, static_cast<int>(d), tor);
    }
  }
  return B;
}

inline BettiTable koszul_betti(const MonomialIdeal& I, std::optional<std::int64_t> degree_bound = std::nullopt) {
  return koszul_betti(buchberger(to_polynomials(I), I.num_vars()), degree_bound);
}

inline BettiTable koszul_betti(const std::vector<Polynomial>& gens, std::size_t n,
                               std::optional<std::int64_t> degree_bound = std::nullopt) {
  return koszul_betti(buchberger(gens, n), degree_bound);
}

}  // namespace borel
