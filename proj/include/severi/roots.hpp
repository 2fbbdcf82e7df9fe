#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "severi/linalg.hpp"
#include "severi/rational.hpp"

namespace severi {

enum class RootType { A, B, C, D, E, F, G };

char to_char(RootType t);
std::optional<RootType> parse_root_type(char c);

class InvalidRootSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Irreducible root system in Bourbaki's coordinates.
///
///   A_n  in Q^{n+1}, alpha_i = e_i - e_{i+1}
///   B_n  in Q^n,     alpha_n = e_n
///   C_n  in Q^n,     alpha_n = 2 e_n
///   D_n  in Q^n,     alpha_n = e_{n-1} + e_n
///   E_r  in Q^8,     alpha_1 = (e1 + e8 - e2 - ... - e7)/2, alpha_2 = e1 + e2, alpha_k = e_{k-1} - e_{k-2}
///   F_4  in Q^4,     alpha_1 = e2 - e3, alpha_2 = e3 - e4, alpha_3 = e4, alpha_4 = (e1 - e2 - e3 - e4)/2
///   G_2  in Q^3 (sum zero), alpha_1 = e1 - e2, alpha_2 = -2 e1 + e2 + e3
///
/// Simple and positive roots are listed directly; fundamental weights are the
/// basis dual to the simple coroots inside the span of the roots, and w0 is
/// kept as a reduced word in the simple reflections.
struct RootSystem {
  RootType type;
  int rank = 0;
  std::size_t ambient = 0;
  std::vector<RVector> simple_roots;
  std::vector<RVector> positive_roots;
  std::vector<RVector> fundamental_weights;
  /// Reduced word (0-based simple reflection indices) for the longest element.
  std::vector<std::size_t> w0_word;
  /// -w0(omega_i) = omega_{minus_w0[i]}
  std::vector<std::size_t> minus_w0;
  RVector rho;
  RVector rho_check;
  RVector highest_root;
  int coxeter_number = 0;

  std::string label() const;
  /// Reflection in the hyperplane orthogonal to simple root i.
  RVector reflect(const RVector& v, std::size_t i) const;
  /// Coefficients of v over the simple roots (v must lie in their span).
  RVector simple_coefficients(const RVector& v) const;
  Matrix cartan_matrix() const;
  /// Index into positive_roots, if v is a positive root.
  std::optional<std::size_t> positive_index(const RVector& v) const;
};

RootSystem build(RootType type, int rank);
/// Parses labels such as "A5", "E6", "g2".
RootSystem build(std::string_view label);

/// Number of positive roots for the type, from the classical formulas.
std::size_t classical_positive_count(RootType type, int rank);

/// Diagram involution expected for -w0 (identity unless A_n, D_odd, E6).
std::vector<std::size_t> diagram_involution(RootType type, int rank);

/// sum lambda_i omega_i with lambda_i >= 0 not all zero.
struct DominantWeight {
  std::vector<long> coeffs;
  RVector coords;

  std::string str() const;
  friend bool operator==(const DominantWeight& a, const DominantWeight& b) { return a.coeffs == b.coeffs; }
};

DominantWeight make_weight(const RootSystem& rs, std::vector<long> coeffs);

Rational inner(const RVector& a, const RVector& b);
RVector coroot(const RVector& alpha);

/// w0 applied to an arbitrary vector via the reduced word.
RVector w0_action(const RootSystem& rs, const RVector& v);
RVector w0_action(const RootSystem& rs, const DominantWeight& lambda);
/// lambda - w0(lambda)
RVector lambda_minus_w0(const RootSystem& rs, const DominantWeight& lambda);
/// The dominant weight -w0(lambda), the highest weight of the dual module.
DominantWeight dual_weight(const RootSystem& rs, const DominantWeight& lambda);

/// <lambda, rho_check>
Rational height(const RootSystem& rs, const RVector& v);
/// All dominant weights with <lambda, rho_check> <= bound.
std::vector<DominantWeight> dominant_weights_up_to(const RootSystem& rs, const Rational& bound);

/// #{alpha > 0 : <lambda, alpha> != 0}, the dimension of the closed orbit.
std::size_t orbit_dim(const RootSystem& rs, const DominantWeight& lambda);
/// Weyl dimension formula. Throws std::logic_error if the product is not integral.
Rational weyl_dim(const RootSystem& rs, const DominantWeight& lambda);

}  // namespace severi
