#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "severi/rational.hpp"

namespace severi {

using RVector = std::vector<Rational>;

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(std::span<const RVector> columns, std::size_t height);
  static Matrix from_rows(std::span<const RVector> rows, std::size_t width);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RVector row(std::size_t r) const;
  RVector column(std::size_t c) const;

  RVector apply(std::span<const Rational> v) const;
  /// v^T * this, i.e. the row vector times the matrix.
  RVector apply_transpose(std::span<const Rational> v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_identity() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with the pivot columns.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Solves m x = b; throws SingularMatrix when m is not invertible.
RVector solve(const Matrix& m, std::span<const Rational> b);
/// Basis of { x : m x = 0 }.
std::vector<RVector> nullspace(const Matrix& m);
/// Basis of the column space, taken as the pivot columns of m itself.
std::vector<RVector> column_space_basis(const Matrix& m);
/// Coefficients c with sum c_i basis_i = v, if v lies in the span.
std::optional<RVector> coordinates_in_span(std::span<const RVector> basis, std::span<const Rational> v);
bool in_span(std::span<const RVector> basis, std::span<const Rational> v);

/// Projective equality: all 2x2 minors of (a, b) vanish.
bool proportional(std::span<const Rational> a, std::span<const Rational> b);
bool is_zero(std::span<const Rational> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace severi
