#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

/// The four real composition algebras, by Cayley-Dickson doubling level.
enum class AlgebraTag { R, C, H, O };

constexpr std::size_t algebra_dim(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::R: return 1;
    case AlgebraTag::C: return 2;
    case AlgebraTag::H: return 4;
    case AlgebraTag::O: return 8;
  }
  return 0;
}

std::string to_string(AlgebraTag t);

class TagMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of R, C, H or O with exact coordinates on the standard basis
/// 1 = e0, e1, ..., e_{d-1}. The basis ordering is the Cayley-Dickson one:
/// coordinates [0, d/2) are the first half x1, [d/2, d) the second half x2.
class CompositionElement {
 public:
  explicit CompositionElement(AlgebraTag tag);
  CompositionElement(AlgebraTag tag, std::vector<Rational> coords);

  static CompositionElement unit(AlgebraTag tag, std::size_t index);
  static CompositionElement one(AlgebraTag tag) { return unit(tag, 0); }

  AlgebraTag tag() const { return tag_; }
  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  CompositionElement& operator+=(const CompositionElement& o);
  CompositionElement& operator-=(const CompositionElement& o);
  friend CompositionElement operator+(CompositionElement a, const CompositionElement& b) { return a += b; }
  friend CompositionElement operator-(CompositionElement a, const CompositionElement& b) { return a -= b; }
  friend CompositionElement operator*(const Rational& s, CompositionElement a);
  friend bool operator==(const CompositionElement&, const CompositionElement&) = default;

  bool is_zero() const;

 private:
  AlgebraTag tag_;
  std::vector<Rational> coords_;
};

/// Cayley-Dickson product with (x1,x2)(y1,y2) = (x1 y1 - conj(y2) x2, y2 x1 + x2 conj(y1)).
/// Evaluated through a per-tag structure table that is itself generated from
/// the recursive doubling formula.
CompositionElement cd_multiply(const CompositionElement& a, const CompositionElement& b);

/// Direct recursive evaluation of the doubling formula; slow, kept as an
/// independent route for the table-driven product.
CompositionElement cd_multiply_recursive(const CompositionElement& a, const CompositionElement& b);

CompositionElement conjugate(const CompositionElement& a);
Rational real_part(const CompositionElement& a);
/// Sum of squares of coordinates; equals real_part(a * conjugate(a)).
Rational norm_form(const CompositionElement& a);
/// Polar form of the norm: <a, b> = sum of coordinate products.
Rational norm_polar(const CompositionElement& a, const CompositionElement& b);

/// Re(a * b) without forming the full product.
Rational real_part_of_product(const CompositionElement& a, const CompositionElement& b);

inline CompositionElement operator*(const CompositionElement& a, const CompositionElement& b) {
  return cd_multiply(a, b);
}

}  // namespace severi
