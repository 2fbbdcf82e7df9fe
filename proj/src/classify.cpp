#include "severi/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "severi/geometry.hpp"
#include "severi/random.hpp"

namespace severi {

std::vector<WitnessPair> witness_pairs(const RootSystem& rs, const DominantWeight& lambda) {
  const RVector target = lambda_minus_w0(rs, lambda);
  std::vector<WitnessPair> out;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    RVector rest = target;
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= rs.positive_roots[i][k];
    auto j = rs.positive_index(rest);
    if (j && *j >= i) out.push_back(WitnessPair{i, *j});
  }
  return out;
}

bool adjoint_exclusion(const RootSystem& rs, const DominantWeight& lambda) {
  if (lambda.coords != rs.highest_root) return false;
  const auto w = witness_pairs(rs, lambda);
  const auto theta = rs.positive_index(rs.highest_root);
  return w.size() == 1 && w[0] == WitnessPair{*theta, *theta};
}

namespace {

bool is_single(const DominantWeight& l, int index, long k) {
  for (std::size_t i = 0; i < l.coeffs.size(); ++i)
    if (l.coeffs[i] != (static_cast<int>(i) + 1 == index ? k : 0)) return false;
  return true;
}

std::string pn(long n) { return "P^" + std::to_string(n); }

}  // namespace

std::string identify(const RootSystem& rs, const DominantWeight& l) {
  const int n = rs.rank;
  if (l.coords == rs.highest_root) return "adjoint variety of " + rs.label();
  switch (rs.type) {
    case RootType::A:
      if (is_single(l, 1, 1) || is_single(l, n, 1)) return pn(n);
      if (is_single(l, 1, 2) || is_single(l, n, 2)) return "v2(" + pn(n) + ")";
      if (is_single(l, 2, 1) || is_single(l, n - 1, 1)) return "G(2," + std::to_string(n + 1) + ")";
      break;
    case RootType::B:
      if (is_single(l, 1, 1)) return "quadric Q^" + std::to_string(2 * n - 1);
      if (is_single(l, n, 1)) return "spinor variety of " + rs.label();
      break;
    case RootType::C:
      if (is_single(l, 1, 1)) return pn(2 * n - 1);
      if (is_single(l, 2, 1)) return "symplectic Grassmannian G_w(2," + std::to_string(2 * n) + ")";
      break;
    case RootType::D:
      if (is_single(l, 1, 1)) return "quadric Q^" + std::to_string(2 * n - 2);
      if (is_single(l, n - 1, 1) || is_single(l, n, 1)) return "spinor variety of " + rs.label();
      break;
    case RootType::E:
      if (n == 6 && (is_single(l, 1, 1) || is_single(l, 6, 1))) return "E6 minimal orbit (Cayley plane)";
      if (n == 7 && is_single(l, 7, 1)) return "E7 minimal orbit (Freudenthal variety)";
      break;
    case RootType::F:
      if (is_single(l, 4, 1)) return "F4 minimal orbit (hyperplane section of the E6 one)";
      break;
    case RootType::G:
      if (is_single(l, 1, 1)) return "G2 minimal orbit (quadric Q^5)";
      break;
  }
  return "unidentified";
}

std::vector<CandidateReport> candidate_weights(const RootSystem& rs) {
  auto weights = dominant_weights_up_to(rs, Rational(rs.coxeter_number - 1));
  std::stable_sort(weights.begin(), weights.end(), [&](const DominantWeight& a, const DominantWeight& b) {
    const Rational ha = height(rs, a.coords), hb = height(rs, b.coords);
    return ha != hb ? ha < hb : a.coeffs > b.coeffs;
  });
  std::vector<CandidateReport> out;
  for (auto& lambda : weights) {
    auto w = witness_pairs(rs, lambda);
    if (w.empty()) continue;
    CandidateReport r;
    r.system = rs.label();
    r.n = orbit_dim(rs, lambda);
    r.dim_v = weyl_dim(rs, lambda);
    r.m = r.dim_v - Rational(1);
    r.severi_condition = r.m == Rational(static_cast<long>(3 * r.n), 2) + Rational(2);
    r.adjoint = adjoint_exclusion(rs, lambda);
    if (r.adjoint)
      r.verdict = "excluded: adjoint variety, dim Sec(X) = 2 dim X";
    else if (r.severi_condition)
      r.verdict = "severi";
    else
      r.verdict = "not severi: m != 3n/2 + 2";
    r.identification = identify(rs, lambda);
    r.witnesses = std::move(w);
    r.lambda = std::move(lambda);
    out.push_back(std::move(r));
  }
  return out;
}

long nonsimple_lhs(long n1, long d1, long n2, long d2) {
  return 2 * n1 * n2 + (2 * d2 - 3) * n1 + (2 * d1 - 3) * n2 + 2 * d1 * d2 - 6;
}

namespace {

// Factor of dimension n spanning P^{n+d-1}, for the shapes the equation produces.
struct Factor {
  bool veronese;
  std::string name;
};

Factor factor(long n, long d) {
  if (d == 1) return {false, pn(n)};
  if (d == 2 && n == 1) return {true, "v2(P^1)"};
  throw std::logic_error("nonsimple_solve: no model for a factor with n=" + std::to_string(n) +
                         ", d=" + std::to_string(d));
}

std::size_t generic_terracini(const SurfaceFamily& f) {
  // generic value = maximum over a few fixed draws
  Pcg32 rng(0x5e7e41, 3);
  std::size_t best = 0;
  for (int k = 0; k < 4; ++k) {
    RVector s(f.param_count()), t(f.param_count());
    for (auto& x : s) x = rng.uniform_int(9);
    for (auto& x : t) x = rng.uniform_int(9);
    try {
      best = std::max(best, terracini_dim(f, s, t));
    } catch (const GenericityError&) {
    }
  }
  return best;
}

}  // namespace

std::vector<NonsimpleSolution> nonsimple_solve() {
  // For d1 >= d2 >= 2 every term is positive. With d2 = 1 the left side is
  // n1 (2 n2 - 1) + (2 d1 - 3) n2 + 2 d1 - 6, positive once d1 >= 3; d1 = 2
  // forces n1 = n2 = 1 and d1 = 1 gives (2 n1 - 1)(2 n2 - 1) = 9, so n <= 5.
  std::vector<NonsimpleSolution> out;
  for (long d1 = 1; d1 <= 2; ++d1)
    for (long d2 = 1; d2 <= d1; ++d2)
      for (long n1 = 1; n1 <= 5; ++n1)
        for (long n2 = 1; n2 <= 5; ++n2) {
          if (d1 == d2 && n1 > n2) continue;
          if (nonsimple_lhs(n1, d1, n2, d2) != 0) continue;
          NonsimpleSolution s{n1, d1, n2, d2, "", 0, 0, false};
          const Factor f1 = factor(n1, d1);
          const Factor f2 = factor(n2, d2);
          s.identification = f1.veronese ? f2.name + " x " + f1.name : f1.name + " x " + f2.name;
          s.ambient_dim = static_cast<std::size_t>((n1 + d1) * (n2 + d2));
          SurfaceFamily fam = f1.veronese ? SurfaceFamily::segre_veronese(static_cast<std::size_t>(n2), 1)
                                          : SurfaceFamily::segre(static_cast<std::size_t>(n1),
                                                                 static_cast<std::size_t>(n2));
          if (f2.veronese) throw std::logic_error("nonsimple_solve: unexpected normalization");
          s.terracini_dim = generic_terracini(fam);
          s.accepted = s.terracini_dim < s.ambient_dim;
          out.push_back(std::move(s));
        }
  return out;
}

std::vector<RootSystem> simple_systems_up_to(int max_rank) {
  std::vector<RootSystem> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(build(RootType::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(build(RootType::B, r));
  for (int r = 3; r <= max_rank; ++r) out.push_back(build(RootType::C, r));
  for (int r = 4; r <= max_rank; ++r) out.push_back(build(RootType::D, r));
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back(build(RootType::E, r));
  if (max_rank >= 4) out.push_back(build(RootType::F, 4));
  if (max_rank >= 2) out.push_back(build(RootType::G, 2));
  return out;
}

std::vector<CandidateReport> deficient_catalog(int max_rank) {
  std::vector<CandidateReport> out;
  for (const auto& rs : simple_systems_up_to(max_rank)) {
    auto c = candidate_weights(rs);
    out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  return out;
}

Classification classify_all(int max_rank) {
  if (max_rank < 1) throw std::invalid_argument("classify_all: max_rank must be >= 1");
  Classification out;
  for (const auto& rs : simple_systems_up_to(max_rank))
    for (const auto& c : candidate_weights(rs)) {
      if (c.adjoint || !c.severi_condition) continue;
      // one representative per pair {lambda, -w0 lambda}
      if (dual_weight(rs, c.lambda).coeffs > c.lambda.coeffs) continue;
      out.varieties.push_back(SeveriVariety{c.system, c.lambda.str(), c.identification, c.n,
                                            static_cast<std::size_t>(c.m.raw().get_num().get_ui())});
    }
  for (const auto& s : nonsimple_solve()) {
    if (!s.accepted || std::max(s.n1, s.n2) > max_rank) continue;
    const auto n1 = std::to_string(s.n1);
    const auto n2 = std::to_string(s.n2);
    out.varieties.push_back(SeveriVariety{"A" + n1 + "xA" + n2, "w1(x)w1'", s.identification,
                                          static_cast<std::size_t>(s.n1 + s.n2), s.ambient_dim - 1});
  }
  std::stable_sort(out.varieties.begin(), out.varieties.end(),
                   [](const SeveriVariety& a, const SeveriVariety& b) { return a.n < b.n; });
  out.notes.push_back("products of three or more factors are excluded by the positivity argument applied pairwise");
  if (max_rank < 6) {
    out.partial = true;
    out.notes.push_back("max_rank < 6: E6 is out of range, result is partial");
  }
  return out;
}

}  // namespace severi
