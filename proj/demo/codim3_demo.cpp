// Computes gin of a complete intersection, checks the Lefschetz properties,
// then rebuilds the gin from the Betti table and from the Hilbert function.

#include <iostream>

#include "borel.hpp"

int main() {
  using namespace borel;
  const std::vector<std::string> names{"x", "y", "z"};
  IdealFile f = parse_ideal("ring: x y z\nI: x^2, y^2, z^2 + x*y\n");

  MonomialIdeal G = gin(f.generators, f.num_vars(), {.trials = 3, .entry_bound = 100, .seed = 1});
  std::cout << "gin:        " << to_string(G, names) << "\n";

  HilbertFunction H = hilbert_function(G);
  for (Property p : {Property::WLP, Property::SLP, Property::SSP})
    std::cout << to_string(p) << ":        " << (analyze(G, p, Method::Criterion).verdict ? "yes" : "no") << "\n";

  BettiTable B = koszul_betti(f.generators, f.num_vars());
  std::cout << "Betti table of I:\n" << betti_diagram(B);
  std::cout << "from Betti: " << to_string(reconstruct_gin_slp(B, H), names) << "\n";
  std::cout << "from HF:    " << to_string(reconstruct_gin_ssp(H), names) << "\n";
}
