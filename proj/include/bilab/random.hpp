#pragma once

// Seeded parameter-tuple generators for the randomized suites.
//
// std::uniform_int_distribution is implementation-defined, so sequences are
// reproducible per standard library, not across them. Integers are drawn
// with a plain modulo reduction instead to keep suites identical everywhere.

#include <array>
#include <cstdint>
#include <random>

#include "bilab/exact.hpp"

namespace bilab {

class TupleGenerator {
 public:
  explicit TupleGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
  }

  /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
  Rat rational(long num_bound, long den_bound) {
    long q = integer(1, den_bound);
    return Rat(integer(-num_bound, num_bound), q);
  }

  /// Rational strictly greater than -1/2 and at most `upper`.
  Rat above_minus_half(long den_bound, long upper) {
    long q = integer(1, den_bound);
    long lo = -((q - 1) / 2);  // smallest p with p/q > -1/2
    return Rat(integer(lo, upper * q), q);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bilab
