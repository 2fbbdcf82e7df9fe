#pragma once

#include <cstdint>
#include <string>

#include "severi/composition.hpp"
#include "severi/cubic_space.hpp"
#include "severi/random.hpp"

namespace testgen {

using namespace severi;

// Hand-rolled seeded generators; each property draws from its own stream so
// adding a case never shifts another one.
class Gen {
 public:
  Gen(const std::string& property, std::uint64_t trial) : rng_(keyed_stream(0x7e57, "unit", property, "", trial)) {}

  Pcg32& rng() { return rng_; }
  long integer(long b = 10) { return rng_.uniform_int(b); }
  Rational rational(long b = 10) { return Rational(rng_.uniform_int(b), rng_.uniform_range(1, b)); }

  CompositionElement element(AlgebraTag tag, long b = 10) {
    std::vector<Rational> c(algebra_dim(tag));
    for (auto& x : c) x = rational(b);
    return CompositionElement(tag, std::move(c));
  }
  Point point(const CubicSpaceModel& m, long b = 10) {
    RVector c(m.dim());
    for (auto& x : c) x = integer(b);
    return m.point(std::move(c));
  }

 private:
  Pcg32 rng_;
};

template <class F>
void for_trials(const std::string& property, std::uint64_t n, F&& f) {
  for (std::uint64_t t = 0; t < n; ++t) {
    Gen g(property, t);
    f(g);
  }
}

inline RVector ints(std::initializer_list<long> v) {
  RVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace testgen
