#pragma once

#include <cstdint>
#include <random>

#include "lieosc/scalar.hpp"

namespace lieosc {

/// Deterministic rational sampler. Uses raw mt19937_64 output reduced by
/// modulo so the stream is identical on every standard library.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// p/q with p in [-max_num, max_num] and q in [1, max_den].
  Rational next(std::int64_t max_num = 9, std::int64_t max_den = 5) {
    auto span = static_cast<std::uint64_t>(2 * max_num + 1);
    std::int64_t p = static_cast<std::int64_t>(engine_() % span) - max_num;
    std::int64_t q = static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(max_den)) + 1;
    return Rational(p, q);
  }

  Rational next_nonzero(std::int64_t max_num = 9, std::int64_t max_den = 5) {
    for (;;) {
      Rational r = next(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lieosc
