#pragma once

#include <cstdint>
#include <vector>

#include "borel/groebner.hpp"
#include "borel/monomial_ideal.hpp"

namespace borel {

/// d -> dim_k (R/I)_d for an Artinian quotient, stored up to the socle
/// degree t; values beyond t are zero.
class HilbertFunction {
 public:
  HilbertFunction() = default;

  explicit HilbertFunction(std::vector<std::int64_t> values) : values_(std::move(values)) {
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
    for (auto v : values_)
      if (v <= 0) fail(ErrorKind::InvalidArgument, "Hilbert function values up to the socle degree must be positive");
  }

  std::int64_t operator()(std::int64_t d) const {
    if (d < 0 || d >= static_cast<std::int64_t>(values_.size())) return 0;
    return values_[static_cast<std::size_t>(d)];
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  /// t = max{ d | H(d) > 0 }; -1 for the zero algebra.
  std::int64_t socle_degree() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (auto v : values_) s += v;
    return s;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0, j = values_.size(); i < j; ++i, --j)
      if (values_[i] != values_[j - 1]) return false;
    return true;
  }

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

 private:
  std::vector<std::int64_t> values_;
};

inline std::int64_t socle_degree(const HilbertFunction& H) { return H.socle_degree(); }

inline constexpr std::int64_t kDefaultDegreeBound = 100;

/// H(R/I, d) for 0 <= d <= max_degree; no Artinian requirement.
inline std::vector<std::int64_t> hilbert_values(const MonomialIdeal& I, std::int64_t max_degree) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 0; d <= max_degree; ++d)
    out.push_back(static_cast<std::int64_t>(standard_monomials(I, d).size()));
  return out;
}

inline HilbertFunction hilbert_function(const MonomialIdeal& I, std::int64_t degree_bound = kDefaultDegreeBound) {
  if (!is_artinian(I)) fail(ErrorKind::NotArtinian, "R/I is not Artinian: " + to_string(I));
  std::vector<std::int64_t> values;
  for (std::int64_t d = 0;; ++d) {
    if (d > degree_bound)
      fail(ErrorKind::NotArtinian, "Hilbert function did not vanish within degree " + std::to_string(degree_bound));
    auto count = static_cast<std::int64_t>(standard_monomials(I, d).size());
    if (count == 0) break;
    values.push_back(count);
  }
  return HilbertFunction(std::move(values));
}

/// Hilbert function of R/(f_1, ..., f_s) via the initial ideal.
inline HilbertFunction hilbert_function(const std::vector<Polynomial>& gens, std::size_t n,
                                        std::int64_t degree_bound = kDefaultDegreeBound) {
  return hilbert_function(initial_ideal(buchberger(gens, n)), degree_bound);
}

}  // namespace borel
