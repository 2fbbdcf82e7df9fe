#include "severi/random.hpp"

#include <stdexcept>
#include <string>

namespace severi {

Pcg32::Pcg32(std::uint64_t initstate, std::uint64_t seq) : state_(0), inc_((seq << 1U) | 1U) {
  next_u32();
  state_ += initstate;
  next_u32();
}

std::uint32_t Pcg32::next_u32() {
  std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  auto xorshifted = static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
  auto rot = static_cast<std::uint32_t>(old >> 59U);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31U));
}

std::uint64_t Pcg32::next_u64() {
  std::uint64_t hi = next_u32();
  return (hi << 32U) | next_u32();
}

std::uint32_t Pcg32::bounded(std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("Pcg32::bounded: zero bound");
  std::uint32_t threshold = (-bound) % bound;
  for (;;) {
    std::uint32_t r = next_u32();
    if (r >= threshold) return r % bound;
  }
}

long Pcg32::uniform_int(long b) {
  if (b < 0) throw std::invalid_argument("Pcg32::uniform_int: negative bound");
  return static_cast<long>(bounded(static_cast<std::uint32_t>(2 * b + 1))) - b;
}

long Pcg32::uniform_range(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Pcg32::uniform_range: empty range");
  return lo + static_cast<long>(bounded(static_cast<std::uint32_t>(hi - lo + 1)));
}

long Pcg32::nonzero_int(long b) {
  if (b < 1) throw std::invalid_argument("Pcg32::nonzero_int: bound must be >= 1");
  long v = static_cast<long>(bounded(static_cast<std::uint32_t>(2 * b))) - b;
  return v >= 0 ? v + 1 : v;
}

Rational Pcg32::nonzero_rational(long b) {
  long p = nonzero_int(b);
  long q = uniform_range(1, b);
  return Rational(p, q);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t h) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Pcg32 keyed_stream(std::uint64_t seed, std::string_view suite, std::string_view model, std::string_view check,
                   std::uint64_t trial) {
  std::string key;
  key.reserve(suite.size() + model.size() + check.size() + 24);
  key.append(suite).append("/").append(model).append("/").append(check).append("/").append(std::to_string(trial));
  std::uint64_t h = fnv1a(key);
  return Pcg32(mix64(seed ^ h), mix64(h + 0x632be59bd9b4e019ULL));
}

}  // namespace severi
