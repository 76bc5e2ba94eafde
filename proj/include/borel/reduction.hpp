#pragma once

#include <cstdint>
#include <vector>

#include "borel/gin.hpp"
#include "borel/hilbert.hpp"

namespace borel {

/// r_i read off a generic initial ideal: min{ t | x_{n-i}^{t+1} in gin(I) }.
inline std::int64_t reduction_number(const MonomialIdeal& gin_ideal, std::size_t i) {
  const std::size_t n = gin_ideal.num_vars();
  if (i >= n) fail(ErrorKind::InvalidArgument, "reduction number index must satisfy 0 <= i <= n-1");
  const std::size_t var = n - i - 1;  // x_{n-i}, 0-based
  for (const auto& g : gin_ideal.generators())
    if (g.degree() == g[var]) return static_cast<std::int64_t>(g[var]) - 1;
  fail(ErrorKind::NoPurePower, "no pure power of x" + std::to_string(var + 1) + " in " + to_string(gin_ideal));
}

/// r_i from its definition: adjoin i random linear forms (nonzero
/// coefficients in [-entry_bound, entry_bound]) and return the last degree where
/// R/(I + J_i) is nonzero.
inline std::int64_t reduction_number_direct(const std::vector<Polynomial>& gens, std::size_t n, std::size_t i,
                                            const GinOptions& options = {}) {
  if (i >= n) fail(ErrorKind::InvalidArgument, "reduction number index must satisfy 0 <= i <= n-1");
  for (const auto& f : gens)
    if (!f.is_homogeneous()) fail(ErrorKind::NotHomogeneous, "reduction numbers need homogeneous generators");
  Rng rng(options.seed);
  std::vector<Polynomial> all = gens;
  for (std::size_t k = 0; k < i; ++k) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t v = 0; v < n; ++v)
      terms.push_back({Monomial::variable(n, v), Rational(static_cast<long>(rng.nonzero(options.entry_bound)))});
    all.emplace_back(n, std::move(terms));
  }
  return hilbert_function(all, n).socle_degree();
}

}  // namespace borel
