#pragma once

#include <cstdint>
#include <string_view>

#include "severi/rational.hpp"

namespace severi {

/// PCG32 (XSH-RR 64/32), O'Neill 2014: 64-bit LCG state, 32-bit permuted output.
///
///   state' = state * 6364136223846793005 + inc        (inc odd)
///   out    = rotr32(((state >> 18) ^ state) >> 27, state >> 59)
///
/// Seeding follows the reference pcg32_srandom_r: state = 0, inc = (seq << 1) | 1,
/// step, state += initstate, step.
class Pcg32 {
 public:
  Pcg32(std::uint64_t initstate, std::uint64_t seq);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Unbiased integer in [0, bound) by rejection (reference pcg32_boundedrand_r).
  std::uint32_t bounded(std::uint32_t bound);
  /// Uniform integer in [-b, b].
  long uniform_int(long b);
  /// Uniform integer in [lo, hi].
  long uniform_range(long lo, long hi);
  /// Nonzero uniform integer in [-b, b].
  long nonzero_int(long b);
  /// Random small nonzero rational p/q with |p| <= b, 1 <= q <= b.
  Rational nonzero_rational(long b);

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 1;
};

/// splitmix64 finalizer, used to derive stream seeds.
std::uint64_t mix64(std::uint64_t x);
/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 0xcbf29ce484222325ULL);

/// Independent stream for (seed, suite, model, check, trial). Two calls with the
/// same key always produce the same sequence, regardless of evaluation order.
Pcg32 keyed_stream(std::uint64_t seed, std::string_view suite, std::string_view model, std::string_view check,
                   std::uint64_t trial);

}  // namespace severi
