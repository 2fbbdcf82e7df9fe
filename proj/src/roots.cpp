#include "severi/roots.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace severi {

char to_char(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
    case RootType::E: return 'E';
    case RootType::F: return 'F';
    case RootType::G: return 'G';
  }
  return '?';
}

std::optional<RootType> parse_root_type(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return RootType::A;
    case 'B': return RootType::B;
    case 'C': return RootType::C;
    case 'D': return RootType::D;
    case 'E': return RootType::E;
    case 'F': return RootType::F;
    case 'G': return RootType::G;
    default: return std::nullopt;
  }
}

Rational inner(const RVector& a, const RVector& b) { return dot(a, b); }

RVector coroot(const RVector& alpha) {
  const Rational s = Rational(2) / inner(alpha, alpha);
  RVector out = alpha;
  for (auto& x : out) x *= s;
  return out;
}

namespace {

RVector unit_vec(std::size_t dim, std::size_t i, const Rational& c = 1) {
  RVector v(dim);
  v[i] = c;
  return v;
}

RVector add(RVector a, const RVector& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

void check_rank(RootType t, int r) {
  bool ok = false;
  switch (t) {
    case RootType::A: ok = r >= 1; break;
    case RootType::B: ok = r >= 2; break;
    case RootType::C: ok = r >= 3; break;
    case RootType::D: ok = r >= 4; break;
    case RootType::E: ok = r >= 6 && r <= 8; break;
    case RootType::F: ok = r == 4; break;
    case RootType::G: ok = r == 2; break;
  }
  if (!ok) throw InvalidRootSystem(std::string("no root system of type ") + to_char(t) + std::to_string(r));
}

// e_i - e_j and e_i + e_j for i < j < top
void push_d_roots(std::vector<RVector>& out, std::size_t dim, std::size_t top) {
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = i + 1; j < top; ++j) {
      out.push_back(add(unit_vec(dim, i), unit_vec(dim, j), -1));
      out.push_back(add(unit_vec(dim, i), unit_vec(dim, j)));
    }
}

std::vector<RVector> e_positive_roots(int rank) {
  const Rational h(1, 2);
  std::vector<RVector> out;
  // +-e_i + e_j, i < j <= 5 / 6 / 8
  const std::size_t top = rank == 8 ? 8 : (rank == 7 ? 6 : 5);
  for (std::size_t j = 0; j < top; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      out.push_back(add(unit_vec(8, j), unit_vec(8, i), -1));
      out.push_back(add(unit_vec(8, j), unit_vec(8, i)));
    }
  if (rank == 7) out.push_back(add(unit_vec(8, 7), unit_vec(8, 6), -1));
  // (e8 - ... + sum_{i<=free} (-1)^nu_i e_i)/2, sum nu_i even (odd for E7)
  const std::size_t free = rank == 8 ? 7 : (rank == 7 ? 6 : 5);
  const unsigned parity = rank == 7 ? 1U : 0U;
  for (unsigned mask = 0; mask < (1U << free); ++mask) {
    if ((static_cast<unsigned>(__builtin_popcount(mask)) & 1U) != parity) continue;
    RVector v(8);
    for (std::size_t i = 0; i < free; ++i) v[i] = ((mask >> i) & 1U) ? -h : h;
    for (std::size_t i = free; i < 7; ++i) v[i] = -h;
    v[7] = h;
    out.push_back(std::move(v));
  }
  return out;
}

void set_roots(RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank);
  auto& S = rs.simple_roots;
  auto& P = rs.positive_roots;
  switch (rs.type) {
    case RootType::A:
      rs.ambient = n + 1;
      for (std::size_t i = 0; i < n; ++i) S.push_back(add(unit_vec(n + 1, i), unit_vec(n + 1, i + 1), -1));
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) P.push_back(add(unit_vec(n + 1, i), unit_vec(n + 1, j), -1));
      break;
    case RootType::B:
    case RootType::C:
    case RootType::D: {
      rs.ambient = n;
      for (std::size_t i = 0; i + 1 < n; ++i) S.push_back(add(unit_vec(n, i), unit_vec(n, i + 1), -1));
      if (rs.type == RootType::B) S.push_back(unit_vec(n, n - 1));
      if (rs.type == RootType::C) S.push_back(unit_vec(n, n - 1, 2));
      if (rs.type == RootType::D) S.push_back(add(unit_vec(n, n - 2), unit_vec(n, n - 1)));
      push_d_roots(P, n, n);
      if (rs.type == RootType::B)
        for (std::size_t i = 0; i < n; ++i) P.push_back(unit_vec(n, i));
      if (rs.type == RootType::C)
        for (std::size_t i = 0; i < n; ++i) P.push_back(unit_vec(n, i, 2));
      break;
    }
    case RootType::E: {
      rs.ambient = 8;
      const Rational h(1, 2);
      RVector a1(8, -h);
      a1[0] = h;
      a1[7] = h;
      S.push_back(a1);
      S.push_back(add(unit_vec(8, 0), unit_vec(8, 1)));
      for (std::size_t k = 2; k < n; ++k) S.push_back(add(unit_vec(8, k - 1), unit_vec(8, k - 2), -1));
      P = e_positive_roots(rs.rank);
      break;
    }
    case RootType::F: {
      rs.ambient = 4;
      const Rational h(1, 2);
      S.push_back(add(unit_vec(4, 1), unit_vec(4, 2), -1));
      S.push_back(add(unit_vec(4, 2), unit_vec(4, 3), -1));
      S.push_back(unit_vec(4, 3));
      S.push_back(RVector{h, -h, -h, -h});
      for (std::size_t i = 0; i < 4; ++i) P.push_back(unit_vec(4, i));
      push_d_roots(P, 4, 4);
      for (unsigned mask = 0; mask < 8; ++mask) {
        RVector v{h, h, h, h};
        for (std::size_t i = 0; i < 3; ++i)
          if ((mask >> i) & 1U) v[i + 1] = -h;
        P.push_back(std::move(v));
      }
      break;
    }
    case RootType::G:
      rs.ambient = 3;
      S.push_back(RVector{1, -1, 0});
      S.push_back(RVector{-2, 1, 1});
      P = {RVector{1, -1, 0}, RVector{-2, 1, 1}, RVector{-1, 0, 1},
           RVector{0, -1, 1}, RVector{1, -2, 1}, RVector{-1, -1, 2}};
      break;
  }
}

}  // namespace

std::string RootSystem::label() const { return std::string(1, to_char(type)) + std::to_string(rank); }

RVector RootSystem::reflect(const RVector& v, std::size_t i) const {
  const RVector& a = simple_roots[i];
  return add(v, a, -(inner(v, a) * Rational(2) / inner(a, a)));
}

RVector RootSystem::simple_coefficients(const RVector& v) const {
  auto c = coordinates_in_span(simple_roots, v);
  if (!c) throw std::invalid_argument("simple_coefficients: vector is outside the root span");
  return *c;
}

Matrix RootSystem::cartan_matrix() const {
  Matrix c(simple_roots.size(), simple_roots.size());
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    for (std::size_t j = 0; j < simple_roots.size(); ++j) c(i, j) = inner(simple_roots[i], coroot(simple_roots[j]));
  return c;
}

std::optional<std::size_t> RootSystem::positive_index(const RVector& v) const {
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == v) return i;
  return std::nullopt;
}

RootSystem build(RootType type, int rank) {
  check_rank(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  set_roots(rs);
  const auto r = static_cast<std::size_t>(rank);

  // omega_i = sum_k c_ik alpha_k with <omega_i, alpha_j^v> = delta_ij
  Matrix g(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) g(k, j) = inner(rs.simple_roots[k], coroot(rs.simple_roots[j]));
  const Matrix c = inverse(g);
  for (std::size_t i = 0; i < r; ++i) {
    RVector w(rs.ambient);
    for (std::size_t k = 0; k < r; ++k) w = add(std::move(w), rs.simple_roots[k], c(i, k));
    rs.fundamental_weights.push_back(std::move(w));
  }

  rs.rho.assign(rs.ambient, Rational(0));
  for (const auto& w : rs.fundamental_weights) rs.rho = add(std::move(rs.rho), w);
  rs.rho_check.assign(rs.ambient, Rational(0));
  for (const auto& a : rs.positive_roots) rs.rho_check = add(std::move(rs.rho_check), coroot(a), Rational(1, 2));

  rs.highest_root = rs.positive_roots.front();
  for (const auto& a : rs.positive_roots)
    if (inner(a, rs.rho_check) > inner(rs.highest_root, rs.rho_check)) rs.highest_root = a;
  rs.coxeter_number = static_cast<int>(2 * rs.positive_roots.size() / r);

  // Reflect rho until it is antidominant; the reflections used spell w0.
  RVector v = rs.rho;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < r; ++i)
      if (inner(v, rs.simple_roots[i]).sign() > 0) {
        v = rs.reflect(v, i);
        rs.w0_word.push_back(i);
        moved = true;
        break;
      }
  }

  for (std::size_t i = 0; i < r; ++i) {
    RVector img = w0_action(rs, rs.fundamental_weights[i]);
    for (auto& x : img) x = -x;
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < r; ++j)
      if (rs.fundamental_weights[j] == img) hit = j;
    if (!hit) throw std::logic_error("build: -w0 does not permute the fundamental weights");
    rs.minus_w0.push_back(*hit);
  }
  return rs;
}

RootSystem build(std::string_view label) {
  if (label.size() < 2) throw InvalidRootSystem("bad root system label '" + std::string(label) + "'");
  auto t = parse_root_type(label[0]);
  int r = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), r);
  if (!t || ec != std::errc() || ptr != label.data() + label.size())
    throw InvalidRootSystem("bad root system label '" + std::string(label) + "'");
  return build(*t, r);
}

std::size_t classical_positive_count(RootType type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  switch (type) {
    case RootType::A: return n * (n + 1) / 2;
    case RootType::B:
    case RootType::C: return n * n;
    case RootType::D: return n * (n - 1);
    case RootType::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case RootType::F: return 24;
    case RootType::G: return 6;
  }
  return 0;
}

std::vector<std::size_t> diagram_involution(RootType type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  if (type == RootType::A)
    for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
  if (type == RootType::D && n % 2 == 1) std::swap(p[n - 2], p[n - 1]);
  if (type == RootType::E && n == 6) {
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
  }
  return p;
}

std::string DominantWeight::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (coeffs[i] != 1) out += std::to_string(coeffs[i]);
    out += "w" + std::to_string(i + 1);
  }
  return out;
}

DominantWeight make_weight(const RootSystem& rs, std::vector<long> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(rs.rank))
    throw std::invalid_argument("make_weight: expected " + std::to_string(rs.rank) + " coefficients");
  bool nonzero = false;
  RVector coords(rs.ambient);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) throw std::invalid_argument("make_weight: negative coefficient");
    if (coeffs[i] != 0) nonzero = true;
    coords = add(std::move(coords), rs.fundamental_weights[i], Rational(coeffs[i]));
  }
  if (!nonzero) throw std::invalid_argument("make_weight: zero weight");
  return DominantWeight{std::move(coeffs), std::move(coords)};
}

RVector w0_action(const RootSystem& rs, const RVector& v) {
  RVector out = v;
  for (std::size_t i : rs.w0_word) out = rs.reflect(out, i);
  return out;
}

RVector w0_action(const RootSystem& rs, const DominantWeight& lambda) { return w0_action(rs, lambda.coords); }

RVector lambda_minus_w0(const RootSystem& rs, const DominantWeight& lambda) {
  return add(lambda.coords, w0_action(rs, lambda), -1);
}

DominantWeight dual_weight(const RootSystem& rs, const DominantWeight& lambda) {
  std::vector<long> c(lambda.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[rs.minus_w0[i]] = lambda.coeffs[i];
  return make_weight(rs, std::move(c));
}

Rational height(const RootSystem& rs, const RVector& v) { return inner(v, rs.rho_check); }

std::vector<DominantWeight> dominant_weights_up_to(const RootSystem& rs, const Rational& bound) {
  const auto r = static_cast<std::size_t>(rs.rank);
  std::vector<Rational> h(r);
  for (std::size_t i = 0; i < r; ++i) h[i] = height(rs, rs.fundamental_weights[i]);

  std::vector<DominantWeight> out;
  std::vector<long> c(r, 0);
  // depth-first over coefficients, last index varying fastest
  auto rec = [&](auto&& self, std::size_t i, const Rational& used) -> void {
    if (i == r) {
      for (long x : c)
        if (x != 0) {
          out.push_back(make_weight(rs, c));
          break;
        }
      return;
    }
    for (long k = 0;; ++k) {
      const Rational total = used + Rational(k) * h[i];
      if (total > bound) break;
      c[i] = k;
      self(self, i + 1, total);
    }
    c[i] = 0;
  };
  rec(rec, 0, Rational(0));
  return out;
}

std::size_t orbit_dim(const RootSystem& rs, const DominantWeight& lambda) {
  std::size_t n = 0;
  for (const auto& a : rs.positive_roots)
    if (!inner(lambda.coords, a).is_zero()) ++n;
  return n;
}

Rational weyl_dim(const RootSystem& rs, const DominantWeight& lambda) {
  const RVector lr = add(lambda.coords, rs.rho);
  Rational d(1);
  for (const auto& a : rs.positive_roots) d = d * inner(lr, a) / inner(rs.rho, a);
  if (!d.is_integer() || d.sign() <= 0) throw std::logic_error("weyl_dim: non-integral value " + d.str());
  return d;
}

}  // namespace severi
