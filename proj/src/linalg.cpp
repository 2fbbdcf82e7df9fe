#include "severi/linalg.hpp"

#include <utility>

namespace severi {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const RVector> columns, std::size_t height) {
  Matrix m(height, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != height) throw std::invalid_argument("Matrix::from_columns: ragged input");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const RVector> rows, std::size_t width) {
  Matrix m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw std::invalid_argument("Matrix::from_rows: ragged input");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RVector Matrix::row(std::size_t r) const {
  return RVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RVector Matrix::column(std::size_t c) const {
  RVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RVector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  RVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) s += (*this)(r, c) * v[c];
    out[r] = std::move(s);
  }
  return out;
}

RVector Matrix::apply_transpose(std::span<const Rational> v) const {
  if (v.size() != rows_) throw std::invalid_argument("Matrix::apply_transpose: dimension mismatch");
  RVector out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[c] += v[r] * (*this)(r, c);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: dimension mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != Rational(r == c ? 1 : 0)) return false;
  return true;
}

EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    Rational inv = Rational(1) / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularMatrix("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

RVector solve(const Matrix& m, std::span<const Rational> b) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw SingularMatrix("solve: matrix is singular");
  return ech.reduced.column(n);
}

std::vector<RVector> nullspace(const Matrix& m) {
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RVector> column_space_basis(const Matrix& m) {
  auto ech = row_reduce(m);
  std::vector<RVector> basis;
  basis.reserve(ech.pivots.size());
  for (auto p : ech.pivots) basis.push_back(m.column(p));
  return basis;
}

std::optional<RVector> coordinates_in_span(std::span<const RVector> basis, std::span<const Rational> v) {
  const std::size_t h = v.size();
  Matrix aug(h, basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < h; ++r) aug(r, c) = basis[c][r];
  for (std::size_t r = 0; r < h; ++r) aug(r, basis.size()) = v[r];
  auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == basis.size()) return std::nullopt;
  RVector coeffs(basis.size());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) coeffs[ech.pivots[i]] = ech.reduced(i, basis.size());
  return coeffs;
}

bool in_span(std::span<const RVector> basis, std::span<const Rational> v) {
  return coordinates_in_span(basis, v).has_value();
}

bool proportional(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("proportional: length mismatch");
  // Pick one nonzero pivot in a; all minors vanish iff every minor through that pivot vanishes
  // (or a is zero).
  std::size_t p = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) {
      p = i;
      break;
    }
  if (p == a.size()) return true;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[p] * b[j] != a[j] * b[p]) return false;
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace severi
