#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "severi/roots.hpp"

namespace severi {

/// Positive roots alpha, beta (indices into positive_roots, alpha <= beta)
/// with alpha + beta = lambda - w0(lambda).
struct WitnessPair {
  std::size_t alpha;
  std::size_t beta;
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct CandidateReport {
  std::string system;
  DominantWeight lambda;
  std::vector<WitnessPair> witnesses;
  std::size_t n = 0;    ///< orbit dimension
  Rational dim_v;       ///< Weyl dimension of V
  Rational m;           ///< dim V - 1
  bool severi_condition = false;  ///< m = 3n/2 + 2
  bool adjoint = false;
  std::string verdict;
  std::string identification;
};

/// All witness pairs for lambda.
std::vector<WitnessPair> witness_pairs(const RootSystem& rs, const DominantWeight& lambda);

/// Dominant weights with at least one witness pair. The search stops at
/// <lambda, rho_check> <= h - 1: beyond it <lambda - w0 lambda, rho_check> =
/// 2 <lambda, rho_check> exceeds twice the height of the highest root.
std::vector<CandidateReport> candidate_weights(const RootSystem& rs);

/// lambda is the highest root and (theta, theta) is its only witness.
bool adjoint_exclusion(const RootSystem& rs, const DominantWeight& lambda);

/// Name of the closed orbit for a (type, lambda) pair, or "unidentified".
std::string identify(const RootSystem& rs, const DominantWeight& lambda);

/// Solutions of 2 n1 n2 + (2 d2 - 3) n1 + (2 d1 - 3) n2 + 2 d1 d2 - 6 = 0 for a
/// product X1 x X2 with X_i of dimension n_i spanning P^{n_i + d_i - 1}.
struct NonsimpleSolution {
  long n1, d1, n2, d2;
  std::string identification;
  std::size_t ambient_dim = 0;    ///< (n1 + d1)(n2 + d2)
  std::size_t terracini_dim = 0;  ///< affine dimension of the cone over Sec
  bool accepted = false;          ///< Sec(X) is a proper subvariety
};

/// Left side of the product equation (times 2, so it stays integral).
long nonsimple_lhs(long n1, long d1, long n2, long d2);
/// Normalized to d1 >= d2, and n1 <= n2 when d1 = d2.
std::vector<NonsimpleSolution> nonsimple_solve();

/// Simple root systems of rank <= max_rank (A1.., B2.., C3.., D4.., E6-8, F4, G2).
std::vector<RootSystem> simple_systems_up_to(int max_rank);

/// Every candidate of every simple type up to max_rank, with identification.
std::vector<CandidateReport> deficient_catalog(int max_rank);

struct SeveriVariety {
  std::string system;
  std::string weight;
  std::string identification;
  std::size_t n = 0;
  std::size_t m = 0;
  friend bool operator==(const SeveriVariety&, const SeveriVariety&) = default;
};

struct Classification {
  std::vector<SeveriVariety> varieties;
  /// E6 is out of range when max_rank < 6.
  bool partial = false;
  std::vector<std::string> notes;
};

/// Catalog filtered by adjoint exclusion and m = 3n/2 + 2, one weight per
/// duality pair, merged with the accepted product solutions.
Classification classify_all(int max_rank);

}  // namespace severi
