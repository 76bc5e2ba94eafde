#pragma once

// Worked examples shared by the suites, transcribed as exponent vectors.

#include <vector>

#include "borel.hpp"

namespace borel::testing {

inline MonomialIdeal ideal_of(std::size_t n, const std::vector<std::vector<Monomial::Exponent>>& exps) {
  std::vector<Monomial> gens;
  for (const auto& e : exps) gens.emplace_back(e);
  return MonomialIdeal(n, std::move(gens));
}

/// Strongly stable ideal in k[x,y,z,w] with socle degree 6 and r1 = 2.
inline MonomialIdeal four_variable_example() {
  return ideal_of(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 3, 0, 0}, {0, 2, 1, 0}, {1, 0, 2, 0}, {0, 1, 2, 0},
                      {0, 0, 3, 0}, {1, 0, 1, 2}, {0, 2, 0, 3}, {0, 1, 1, 3}, {0, 0, 2, 3}, {1, 0, 0, 5},
                      {0, 1, 0, 5}, {0, 0, 1, 5}, {0, 0, 0, 7}});
}

/// The same ideal with x*z*w^3 in place of x*z*w^2.
inline MonomialIdeal four_variable_ssp_variant() {
  return ideal_of(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 3, 0, 0}, {0, 2, 1, 0}, {1, 0, 2, 0}, {0, 1, 2, 0},
                      {0, 0, 3, 0}, {1, 0, 1, 3}, {0, 2, 0, 3}, {0, 1, 1, 3}, {0, 0, 2, 3}, {1, 0, 0, 5},
                      {0, 1, 0, 5}, {0, 0, 1, 5}, {0, 0, 0, 7}});
}

/// (x1^2, x1x2, x1x3, x2^3, x2x3^2, x3^4): no WLP.
inline MonomialIdeal codim3_no_wlp() {
  return ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 1, 2}, {0, 0, 4}});
}

/// (x1^2, x1x2, x2^2, x1x3^2, x2x3^2, x3^4): Hilbert function 1 3 3 1, SSP.
inline MonomialIdeal codim3_wlp() {
  return ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 2}, {0, 1, 2}, {0, 0, 4}});
}

/// gin(x1^2, x2^2) in two variables.
inline MonomialIdeal two_squares_gin() { return ideal_of(2, {{2, 0}, {1, 1}, {0, 3}}); }

inline std::vector<Polynomial> polys(const MonomialIdeal& I) { return to_polynomials(I); }

inline std::vector<Polynomial> squares(std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(Polynomial::from_monomial(Monomial::variable(n, v, 2)));
  return out;
}

}  // namespace borel::testing
