#include "severi/composition.hpp"

#include <cstdlib>

namespace severi {

std::string to_string(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::R: return "R";
    case AlgebraTag::C: return "C";
    case AlgebraTag::H: return "H";
    case AlgebraTag::O: return "O";
  }
  return "?";
}

CompositionElement::CompositionElement(AlgebraTag tag) : tag_(tag), coords_(algebra_dim(tag)) {}

CompositionElement::CompositionElement(AlgebraTag tag, std::vector<Rational> coords)
    : tag_(tag), coords_(std::move(coords)) {
  if (coords_.size() != algebra_dim(tag))
    throw std::invalid_argument("CompositionElement: expected " + std::to_string(algebra_dim(tag)) +
                                " coordinates for tag " + to_string(tag) + ", got " +
                                std::to_string(coords_.size()));
}

CompositionElement CompositionElement::unit(AlgebraTag tag, std::size_t index) {
  CompositionElement e(tag);
  e.coords_.at(index) = 1;
  return e;
}

CompositionElement& CompositionElement::operator+=(const CompositionElement& o) {
  if (o.tag_ != tag_) throw TagMismatch("CompositionElement: tag mismatch in +");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

CompositionElement& CompositionElement::operator-=(const CompositionElement& o) {
  if (o.tag_ != tag_) throw TagMismatch("CompositionElement: tag mismatch in -");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CompositionElement operator*(const Rational& s, CompositionElement a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

bool CompositionElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

// Integer-coefficient doubling on plain vectors; only used on basis elements
// (to build the tables) and by the recursive reference product.
template <class T>
std::vector<T> conj_vec(std::vector<T> x) {
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
  return x;
}

template <class T>
std::vector<T> mul_vec(const std::vector<T>& x, const std::vector<T>& y) {
  const std::size_t d = x.size();
  if (d == 1) return {x[0] * y[0]};
  const std::size_t h = d / 2;
  std::vector<T> x1(x.begin(), x.begin() + h), x2(x.begin() + h, x.end());
  std::vector<T> y1(y.begin(), y.begin() + h), y2(y.begin() + h, y.end());
  auto a = mul_vec(x1, y1);
  auto b = mul_vec(conj_vec(y2), x2);
  auto c = mul_vec(y2, x1);
  auto e = mul_vec(x2, conj_vec(y1));
  std::vector<T> out(d);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = a[i] - b[i];
    out[h + i] = c[i] + e[i];
  }
  return out;
}

struct StructureTable {
  std::size_t dim = 0;
  // e_i * e_j = sign[i][j] * e_{index[i][j]}
  std::array<std::array<int, 8>, 8> sign{};
  std::array<std::array<int, 8>, 8> index{};
};

StructureTable build_table(std::size_t d) {
  StructureTable t;
  t.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<long> ei(d, 0), ej(d, 0);
      ei[i] = 1;
      ej[j] = 1;
      auto p = mul_vec(ei, ej);
      int found = 0;
      for (std::size_t k = 0; k < d; ++k) {
        if (p[k] != 0) {
          t.sign[i][j] = static_cast<int>(p[k]);
          t.index[i][j] = static_cast<int>(k);
          ++found;
        }
      }
      if (found != 1 || std::abs(t.sign[i][j]) != 1) std::abort();  // doubling of a basis pair is a signed basis element
    }
  }
  return t;
}

const StructureTable& table(AlgebraTag tag) {
  static const std::array<StructureTable, 4> tables = {build_table(1), build_table(2), build_table(4),
                                                       build_table(8)};
  return tables[static_cast<std::size_t>(tag)];
}

}  // namespace

CompositionElement cd_multiply(const CompositionElement& a, const CompositionElement& b) {
  if (a.tag() != b.tag()) throw TagMismatch("cd_multiply: tag mismatch");
  const auto& t = table(a.tag());
  CompositionElement out(a.tag());
  Rational prod;
  for (std::size_t i = 0; i < t.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.dim; ++j) {
      if (b[j].is_zero()) continue;
      prod = a[i] * b[j];
      auto& slot = out[static_cast<std::size_t>(t.index[i][j])];
      if (t.sign[i][j] > 0)
        slot += prod;
      else
        slot -= prod;
    }
  }
  return out;
}

CompositionElement cd_multiply_recursive(const CompositionElement& a, const CompositionElement& b) {
  if (a.tag() != b.tag()) throw TagMismatch("cd_multiply_recursive: tag mismatch");
  std::vector<Rational> x(a.coords().begin(), a.coords().end());
  std::vector<Rational> y(b.coords().begin(), b.coords().end());
  return CompositionElement(a.tag(), mul_vec(x, y));
}

CompositionElement conjugate(const CompositionElement& a) {
  CompositionElement out = a;
  for (std::size_t i = 1; i < out.dim(); ++i) out[i] = -out[i];
  return out;
}

Rational real_part(const CompositionElement& a) { return a[0]; }

Rational norm_form(const CompositionElement& a) {
  Rational s;
  for (const auto& c : a.coords()) s += c * c;
  return s;
}

Rational norm_polar(const CompositionElement& a, const CompositionElement& b) {
  if (a.tag() != b.tag()) throw TagMismatch("norm_polar: tag mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational real_part_of_product(const CompositionElement& a, const CompositionElement& b) {
  if (a.tag() != b.tag()) throw TagMismatch("real_part_of_product: tag mismatch");
  const auto& t = table(a.tag());
  Rational s;
  for (std::size_t i = 0; i < t.dim; ++i) {
    for (std::size_t j = 0; j < t.dim; ++j) {
      if (t.index[i][j] != 0) continue;
      if (t.sign[i][j] > 0)
        s += a[i] * b[j];
      else
        s -= a[i] * b[j];
    }
  }
  return s;
}

}  // namespace severi
