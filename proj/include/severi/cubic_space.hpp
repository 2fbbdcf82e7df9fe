#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "severi/composition.hpp"
#include "severi/linalg.hpp"
#include "severi/random.hpp"
#include "severi/rational.hpp"

namespace severi {

/// The four Severi models, each presented as a cubic space (V, det, basepoint).
///
///   VERONESE     symmetric 3x3 over Q        dim V = 6,   n = 2
///   SEGRE        3x3 matrices                dim V = 9,   n = 4
///   PFAFFIAN     alternating 6x6 (Pfaffian)  dim V = 15,  n = 8
///   EXCEPTIONAL  Hermitian 3x3 octonionic    dim V = 27,  n = 16
enum class ModelKind { Veronese, Segre, Pfaffian, Exceptional };

inline constexpr ModelKind kAllModels[] = {ModelKind::Veronese, ModelKind::Segre, ModelKind::Pfaffian,
                                           ModelKind::Exceptional};

std::string to_string(ModelKind k);
/// Case-insensitive: "segre" and "SEGRE" both work.
std::optional<ModelKind> parse_model(std::string_view name);

class ModelMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vector of V = Q^{m+1}, tagged with the model it belongs to.
struct Point {
  ModelKind model;
  RVector coords;

  Point(ModelKind k, RVector c) : model(k), coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool is_zero() const { return severi::is_zero(coords); }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rational& s, Point p);
  friend bool operator==(const Point&, const Point&) = default;
};

/// A linear form on V in the dual basis.
struct Covector {
  ModelKind model;
  RVector coords;

  Covector(ModelKind k, RVector c) : model(k), coords(std::move(c)) {}

  bool is_zero() const { return severi::is_zero(coords); }
  Rational operator()(const Point& p) const;

  Covector& operator+=(const Covector& o);
  Covector& operator-=(const Covector& o);
  friend Covector operator+(Covector a, const Covector& b) { return a += b; }
  friend Covector operator-(Covector a, const Covector& b) { return a -= b; }
  friend Covector operator*(const Rational& s, Covector l);
  friend bool operator==(const Covector&, const Covector&) = default;
};

bool proportional(const Point& a, const Point& b);
bool proportional(const Covector& a, const Covector& b);

/// One of the four models. Instances are built once (see `model()`) and are
/// read-only afterwards; the trace-form Gram matrix and its inverse are cached
/// at construction.
class CubicSpaceModel {
 public:
  explicit CubicSpaceModel(ModelKind kind);

  ModelKind kind() const { return kind_; }
  std::string name() const { return to_string(kind_); }
  /// m + 1
  std::size_t dim() const { return dim_; }
  /// n, the dimension of X.
  std::size_t variety_dim() const { return n_; }
  /// m, the dimension of the ambient projective space.
  std::size_t projective_dim() const { return dim_ - 1; }
  const Point& basepoint() const { return basepoint_; }

  Point zero() const { return Point(kind_, RVector(dim_)); }
  Point basis(std::size_t i) const;
  Point point(RVector coords) const;
  Covector covector(RVector coords) const;

  /// The cubic form F(w, w, w).
  Rational det(const Point& w) const;
  /// Symmetric trilinear polarization of det.
  Rational trilinear(const Point& u, const Point& v, const Point& w) const;
  /// y -> F(w, w, y).
  Covector grad(const Point& w) const;
  /// y -> F(u, v, y).
  Covector bilinear_covector(const Point& u, const Point& v) const;
  /// (m+1)x(m+1) array F(omega, b_i, b_j).
  Matrix hessian(const Point& omega) const;

  /// T(x, y) = 9 F(c,c,x) F(c,c,y) - 6 F(c,x,y).
  Rational trace_form(const Point& x, const Point& y) const;
  const Matrix& trace_gram() const { return gram_; }
  /// v -> T(v, .)
  Covector to_dual(const Point& v) const;
  /// Inverse of to_dual.
  Point from_dual(const Covector& l) const;

  /// Adjoint map: the unique point with T(sharp(x), y) = 3 F(x, x, y).
  Point sharp(const Point& x) const;
  /// (x + y)# - x# - y#
  Point cross(const Point& x, const Point& y) const;
  /// U_p(w) = T(p, w) p - cross(sharp(p), w)
  Point u_operator(const Point& p, const Point& w) const;
  /// Matrix of w -> U_p(w) (columns are images of basis vectors).
  Matrix u_matrix(const Point& p) const;

  bool is_on_X(const Point& w) const;
  bool is_on_sec(const Point& w) const { return det(w).is_zero(); }

  void check(const Point& p) const;
  void check(const Covector& l) const;

 private:
  Rational raw_det(std::span<const Rational> w) const;
  RVector raw_grad(RVector w) const;

  ModelKind kind_;
  std::size_t dim_;
  std::size_t n_;
  Point basepoint_;
  std::vector<RVector> basis_grads_;
  Matrix gram_;
  Matrix gram_inv_;
};

/// Shared immutable instance for each model.
const CubicSpaceModel& model(ModelKind kind);

/// Coordinate helpers for the Hermitian models (VERONESE over R, EXCEPTIONAL
/// over O). Layout: [a, b, c, x1, x2, x3] with diagonal (a, b, c) and
/// H23 = x1, H31 = x2, H12 = x3 (other off-diagonal entries are conjugates).
struct HermitianEntries {
  Rational a, b, c;
  CompositionElement x1, x2, x3;
};
AlgebraTag hermitian_algebra(ModelKind kind);
HermitianEntries hermitian_entries(const Point& p);
Point hermitian_point(ModelKind kind, const HermitianEntries& h);

/// PFAFFIAN coordinate index of e_{ij}, 0 <= i < j < 6, in lexicographic order.
std::size_t pfaffian_index(std::size_t i, std::size_t j);

class SamplerExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SamplerOptions {
  long bound = 10;
  int retries = 64;
};

/// Nonzero point of X (sharp = 0): coordinate rank-one seeds, per-model
/// decomposables, and the closure rule sharp(x + y) for x, y on X, with random
/// rescalings and index permutations.
Point sample_X(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt = {});
/// x + y for independent X-samples; lies on Sec(X).
Point sample_sec(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt = {});
/// Same as sample_sec but resampled until the point is off X.
Point sample_sec_minus_X(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt = {});
/// Random integer point with det != 0.
Point sample_off_sec(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt = {});
/// Acceptance rule of sample_off_sec.
bool accept_off_sec(const CubicSpaceModel& m, const Point& p);

}  // namespace severi
