#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "borel/monomial_ideal.hpp"
#include "borel/polynomial.hpp"

namespace borel {

/// Reduced Gröbner basis under graded revlex: monic elements sorted by
/// ascending leading monomial, no term of any element divisible by another
/// element's leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t n, std::vector<Polynomial> basis) : n_(n), basis_(std::move(basis)) {}

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return basis_.size(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Polynomial> basis_;
};

namespace detail {

/// Full reduction of `f` by `divisors` (any nonzero polynomials).
inline Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  std::map<Monomial, Rational, RevlexGreater> work;
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);
  std::vector<Polynomial::Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Polynomial* reducer = nullptr;
    for (const Polynomial* g : divisors) {
      if (g->leading_monomial().divides(it->first)) {
        reducer = g;
        break;
      }
    }
    if (!reducer) {
      remainder.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Monomial shift = it->first / reducer->leading_monomial();
    Rational factor = it->second / reducer->leading_coeff();
    for (const auto& t : reducer->terms()) {
      Monomial m = t.monomial * shift;
      auto [pos, inserted] = work.try_emplace(std::move(m), 0);
      pos->second -= factor * t.coeff;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return Polynomial(f.num_vars(), std::move(remainder));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), Rational(1) / f.leading_coeff()) -
         g.mul_term(l / g.leading_monomial(), Rational(1) / g.leading_coeff());
}

}  // namespace detail

/// Remainder of `f` on division by `G`; no term of the result is divisible by
/// a leading monomial of `G`.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.num_vars() != G.num_vars() && G.size() > 0)
    fail(ErrorKind::MismatchedVariables, "polynomial and basis live in different rings");
  std::vector<const Polynomial*> divisors;
  for (const auto& g : G.basis()) divisors.push_back(&g);
  return detail::reduce(f, divisors);
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first, ties by ascending revlex lcm, then by pair index) and the
/// coprime and chain criteria. Zero generators are ignored.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, std::size_t n) {
  std::vector<Polynomial> G;
  for (const auto& f : gens) {
    if (f.num_vars() != n) fail(ErrorKind::MismatchedVariables, "generator has the wrong variable count");
    if (!f.is_zero()) G.push_back(f.monic());
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pairs_for = [&](std::size_t h) {
    for (std::size_t k = 0; k < h; ++k) {
      pending.push_back({k, h, G[k].leading_monomial().lcm(G[h].leading_monomial())});
      pending_keys.insert({k, h});
    }
  };
  for (std::size_t h = 0; h < G.size(); ++h) add_pairs_for(h);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [](const Pair& a, const Pair& b) {
      auto c = revlex_compare(a.lcm, b.lcm);  // graded, so degree comes first
      if (c != 0) return c < 0;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    Pair p = *best;
    pending.erase(best);
    pending_keys.erase({p.i, p.j});

    const Monomial& li = G[p.i].leading_monomial();
    const Monomial& lj = G[p.j].leading_monomial();
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G[k].leading_monomial().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    std::vector<const Polynomial*> divisors;
    for (const auto& g : G) divisors.push_back(&g);
    Polynomial h = detail::reduce(detail::s_polynomial(G[p.i], G[p.j]), divisors);
    if (h.is_zero()) continue;
    G.push_back(h.monic());
    add_pairs_for(G.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < G.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < G.size() && !drop; ++b) {
      if (a == b) continue;
      const auto& la = G[a].leading_monomial();
      const auto& lb = G[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) drop = true;
    }
    if (!drop) minimal.push_back(G[a]);
  }
  // Interreduce.
  std::vector<Polynomial> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Polynomial*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    Polynomial tail = minimal[a] - Polynomial::from_monomial(minimal[a].leading_monomial(), minimal[a].leading_coeff());
    Polynomial r = Polynomial::from_monomial(minimal[a].leading_monomial(), 1) +
                   detail::reduce(tail, others).mul_term(Monomial(n), Rational(1) / minimal[a].leading_coeff());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return revlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis(n, std::move(reduced));
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) fail(ErrorKind::InvalidArgument, "no generators: pass the variable count explicitly");
  return buchberger(gens, gens.front().num_vars());
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& G) {
  return MonomialIdeal(G.num_vars(), G.leading_monomials());
}

/// Polynomial view of monomial generators.
inline std::vector<Polynomial> to_polynomials(const MonomialIdeal& I) {
  std::vector<Polynomial> out;
  for (const auto& g : I.generators()) out.push_back(Polynomial::from_monomial(g));
  return out;
}

inline bool in_ideal(const Polynomial& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

}  // namespace borel
