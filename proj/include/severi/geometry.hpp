#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "severi/cubic_space.hpp"
#include "severi/linalg.hpp"
#include "severi/random.hpp"

namespace severi {

/// Input violates an operation's precondition (e.g. a base point on Sec(X)).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-generic input: a denominator or span degenerated. Callers resample.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked geometric statement failed on a concrete instance.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Evaluation of G on X itself, where the gradient vanishes.
class TotalTransformRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Linear map V -> V*, stored by rows: row i is the image of basis vector i.
struct LinearMapToDual {
  ModelKind model;
  Matrix rows;

  Covector operator()(const Point& w) const;
  std::size_t rank() const { return severi::rank(rows); }
  /// Solves L(x) = l.
  Point preimage(const Covector& l) const;
};

/// L_{w0}(w) = 2 det(w0) F(w0, w, .) - 3 F(w0, w0, w) w0*, with w0* = F(w0, w0, .).
Covector l_map(const CubicSpaceModel& m, const Point& w0, const Point& w);
LinearMapToDual l_matrix(const CubicSpaceModel& m, const Point& w0);

/// Other intersection of the line (x w0) with Sec(X): x + lambda w0 with
/// lambda = -3 w0*(x) / det(w0). Requires x on X, w0 off Sec, w0*(x) != 0.
Point second_point(const CubicSpaceModel& m, const Point& x, const Point& w0);

/// G(w) = F(w, w, .) / F(w, w, w), kept as a projective direction plus the scale.
struct CremonaImage {
  Covector direction;
  Rational scale;
};
CremonaImage cremona(const CubicSpaceModel& m, const Point& w);

/// sharp(sharp(w0)) == det(w0) w0, the trace-form transport of G* o G = id.
bool involution_check(const CubicSpaceModel& m, const Point& w0);

/// Dual cubic F*(l1, l2, l3) = F(i^-1 l1, i^-1 l2, i^-1 l3) with i(v) = T(v, .).
Rational dual_trilinear(const CubicSpaceModel& m, const Covector& a, const Covector& b, const Covector& c);
Rational dual_det(const CubicSpaceModel& m, const Covector& l);

struct Triple {
  Point u, v, w;
};

struct DiamondResult {
  bool consistent = false;
  /// The fitted lambda_{w0}, if any triple had F(u, v, w) != 0.
  std::optional<Rational> lambda;
  std::size_t triples_checked = 0;
};

/// Checks F*(L u, L v, L w) = lambda F(u, v, w) with one lambda for all triples.
DiamondResult diamond_check(const CubicSpaceModel& m, const Point& w0, std::span<const Triple> triples);

/// Limit direction F(x, d, .) of G along x + eps d, for x on X. Asserts dual_det = 0.
Covector total_transform_probe(const CubicSpaceModel& m, const Point& x, const Point& d);

struct SecantDecomp {
  Point P, x, y;
};
/// P = x + y with x, y sampled on X and P off X.
SecantDecomp sample_secant_decomp(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt = {});

/// Entry locus data of a point P on Sec - X. On Sigma_P the adjoint map takes
/// values on one line: sharp(w) = q_P(w) axis, and quadric_gram is the polar
/// form of q_P in the sigma_basis coordinates.
struct EntryLocus {
  Point P;
  std::vector<Point> sigma_basis;
  Matrix quadric_gram;
  Point axis;

  /// Coordinates of w in sigma_basis, if w lies in Sigma_P.
  std::optional<RVector> coordinates(const Point& w) const;
  Point combine(std::span<const Rational> coeffs) const;
  /// q_P evaluated from coordinates via the Gram matrix.
  Rational quadric(std::span<const Rational> coeffs) const;
};

EntryLocus entry_locus(const CubicSpaceModel& m, const Point& P, Pcg32& rng);

/// Rational points of Q_P obtained by intersecting lines through a known
/// quadric point with the quadric; each returned point lies in Sigma_P.
std::vector<Point> quadric_points(const EntryLocus& locus, const Point& on_quadric, Pcg32& rng, std::size_t count,
                                  long bound = 10);

/// grad(P') proportional to grad(P); both must be on Sec - X.
bool tangent_char_check(const CubicSpaceModel& m, const Point& P, const Point& P2);

/// Companion point x = L_{w0}^{-1}(grad P) on X inside span(Sigma_P, w0) but
/// outside Sigma_P; det(x + t q) = 0 is asserted for each probe q on Q_P and
/// t in {1, -2, 1/3}.
Point companion_point(const CubicSpaceModel& m, const EntryLocus& locus, const Point& w0,
                      std::span<const Point> cone_probes);

struct HomogeneityMap {
  Matrix A;
  Point P, w, w2;
};

/// Automorphism A = L_{w'}^{-1} o L_w of V with A(x) proportional to x' and
/// A(X) inside X (checked on `preserve_checks` fresh X-samples).
HomogeneityMap homogeneity_map(const CubicSpaceModel& m, const Point& x, const Point& x2, Pcg32& rng,
                               const SamplerOptions& opt = {}, std::size_t preserve_checks = 20);

/// P(w0) = 2 det(w0) p - 6 w0*(p) w0.
Point transport_point(const CubicSpaceModel& m, const Point& p, const Point& w0);
/// Samples w0 off Sec until P(w0) is off Sec.
Point good_w0_for(const CubicSpaceModel& m, const Point& p, Pcg32& rng, const SamplerOptions& opt = {});

struct SecTransitivity {
  std::size_t rank = 0;
  /// dim(Ker L intersect Ker w0*)
  std::size_t kernel_intersection_dim = 0;
};
/// Rank of the derivative w -> L(w) of omega -> L_omega(p) at w0.
SecTransitivity sec_transitivity(const CubicSpaceModel& m, const Point& p, const Point& w0);
std::size_t sec_transitivity_rank(const CubicSpaceModel& m, const Point& p, const Point& w0);

/// Whether F(omega, ., .) has full rank.
bool gram_invertibility_check(const CubicSpaceModel& m, const Point& omega);

// ---------------------------------------------------------------------------
// Terracini dimension counts

enum class FamilyKind {
  Segre,          ///< P^a x P^b in P((a+1)(b+1) - 1)
  Veronese2,      ///< nu_2(P^a) in P(S^2 Q^{a+1})
  Grassmann2,     ///< G(2, a) in P(Lambda^2 Q^a)
  SegreVeronese,  ///< P^a x nu_2(P^b)
};

struct SurfaceFamily {
  FamilyKind kind;
  std::size_t a = 0;
  std::size_t b = 0;

  static SurfaceFamily segre(std::size_t a, std::size_t b) { return {FamilyKind::Segre, a, b}; }
  static SurfaceFamily veronese2(std::size_t k) { return {FamilyKind::Veronese2, k, 0}; }
  static SurfaceFamily grassmann2(std::size_t k) { return {FamilyKind::Grassmann2, k, 0}; }
  static SurfaceFamily segre_veronese(std::size_t a, std::size_t b) { return {FamilyKind::SegreVeronese, a, b}; }

  std::size_t ambient_dim() const;   ///< dimension of the affine ambient space
  std::size_t variety_dim() const;   ///< projective dimension of the variety
  std::size_t param_count() const;
  RVector evaluate(std::span<const Rational> params) const;
  /// First-order coordinate perturbations of the parametrization.
  std::vector<RVector> tangent_vectors(std::span<const Rational> params) const;
};

/// dim span(T_s X, T_t X) of the affine cone; equals dim of the affine cone over
/// Sec(X) at a generic point of the secant line.
std::size_t terracini_dim(const SurfaceFamily& family, std::span<const Rational> s, std::span<const Rational> t);
/// Same count with the tangent spaces of a model cut out as ker(d -> cross(x, d)).
std::size_t terracini_dim(const CubicSpaceModel& m, const Point& x, const Point& y);
/// Affine tangent space of X at x inside a model.
std::vector<RVector> model_tangent_space(const CubicSpaceModel& m, const Point& x);

}  // namespace severi
