#pragma once

#include <cstdint>
#include <random>

#include "borel/error.hpp"

namespace borel {

/// Portable seeded source of integers.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// (reject values at or above the largest multiple of the range width, then
/// take the remainder), so results replay bit-for-bit on every platform,
/// unlike std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) fail(ErrorKind::InvalidArgument, "empty range");
    const std::uint64_t width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (width == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % width;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % width);
  }

  /// Uniform on the nonzero integers in [-bound, bound].
  std::int64_t nonzero(std::int64_t bound) {
    if (bound < 1) fail(ErrorKind::InvalidArgument, "bound must be positive");
    std::int64_t v = uniform(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  bool coin(std::uint64_t numerator = 1, std::uint64_t denominator = 2) {
    return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace borel
