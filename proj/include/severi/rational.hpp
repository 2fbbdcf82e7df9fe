#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace severi {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Thin value wrapper over GMP's mpq_class so the rest of the code never sees
/// expression templates or unnormalized quotients.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "-p", or "p/q". Throws std::invalid_argument on bad input or q = 0.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  /// Exact text form "p" or "p/q".
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace severi
