#include "severi/cubic_space.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace severi {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Veronese: return "veronese";
    case ModelKind::Segre: return "segre";
    case ModelKind::Pfaffian: return "pfaffian";
    case ModelKind::Exceptional: return "exceptional";
  }
  return "?";
}

std::optional<ModelKind> parse_model(std::string_view name) {
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto k : kAllModels)
    if (to_string(k) == lower) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Point / Covector

namespace {

void require_same(ModelKind a, ModelKind b, const char* what) {
  if (a != b) throw ModelMismatch(std::string(what) + ": " + to_string(a) + " vs " + to_string(b));
}

}  // namespace

Point& Point::operator+=(const Point& o) {
  require_same(model, o.model, "Point +");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same(model, o.model, "Point -");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Point operator*(const Rational& s, Point p) {
  for (auto& c : p.coords) c *= s;
  return p;
}

Rational Covector::operator()(const Point& p) const {
  require_same(model, p.model, "Covector(Point)");
  return dot(coords, p.coords);
}

Covector& Covector::operator+=(const Covector& o) {
  require_same(model, o.model, "Covector +");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Covector& Covector::operator-=(const Covector& o) {
  require_same(model, o.model, "Covector -");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Covector operator*(const Rational& s, Covector l) {
  for (auto& c : l.coords) c *= s;
  return l;
}

bool proportional(const Point& a, const Point& b) {
  require_same(a.model, b.model, "proportional");
  return proportional(std::span<const Rational>(a.coords), std::span<const Rational>(b.coords));
}

bool proportional(const Covector& a, const Covector& b) {
  require_same(a.model, b.model, "proportional");
  return proportional(std::span<const Rational>(a.coords), std::span<const Rational>(b.coords));
}

// ---------------------------------------------------------------------------
// Per-model cubic forms

AlgebraTag hermitian_algebra(ModelKind kind) {
  if (kind == ModelKind::Veronese) return AlgebraTag::R;
  if (kind == ModelKind::Exceptional) return AlgebraTag::O;
  throw std::invalid_argument("hermitian_algebra: " + to_string(kind) + " is not a Hermitian model");
}

namespace {

CompositionElement slice(AlgebraTag tag, std::span<const Rational> w, std::size_t offset) {
  const std::size_t d = algebra_dim(tag);
  return CompositionElement(tag, RVector(w.begin() + static_cast<std::ptrdiff_t>(offset),
                                         w.begin() + static_cast<std::ptrdiff_t>(offset + d)));
}

// abc - a N(x1) - b N(x2) - c N(x3) + 2 Re((x2 x3) x1)
Rational hermitian_det(AlgebraTag tag, std::span<const Rational> w) {
  const std::size_t d = algebra_dim(tag);
  auto x1 = slice(tag, w, 3);
  auto x2 = slice(tag, w, 3 + d);
  auto x3 = slice(tag, w, 3 + 2 * d);
  Rational r = w[0] * w[1] * w[2];
  r -= w[0] * norm_form(x1);
  r -= w[1] * norm_form(x2);
  r -= w[2] * norm_form(x3);
  r += Rational(2) * real_part_of_product(x2 * x3, x1);
  return r;
}

Rational det3(std::span<const Rational> m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

struct Matching {
  std::array<std::size_t, 3> slot;
  int sign;
};

// Perfect matchings of {0..5} with Pfaffian signs, from the expansion
// Pf(A) = sum_j (-1)^{j+1} a_{0j} Pf(A without 0, j) (0-based j >= 1).
std::vector<Matching> pfaffian_matchings() {
  std::vector<Matching> out;
  std::vector<std::size_t> idx = {0, 1, 2, 3, 4, 5};
  struct Rec {
    static void go(const std::vector<std::size_t>& rest, std::vector<std::size_t>& acc, int sign,
                   std::vector<Matching>& out) {
      if (rest.empty()) {
        out.push_back({{acc[0], acc[1], acc[2]}, sign});
        return;
      }
      for (std::size_t j = 1; j < rest.size(); ++j) {
        std::vector<std::size_t> next;
        for (std::size_t k = 1; k < rest.size(); ++k)
          if (k != j) next.push_back(rest[k]);
        acc.push_back(pfaffian_index(rest[0], rest[j]));
        go(next, acc, (j % 2 == 1) ? sign : -sign, out);
        acc.pop_back();
      }
    }
  };
  std::vector<std::size_t> acc;
  Rec::go(idx, acc, 1, out);
  return out;
}

Rational pfaffian6(std::span<const Rational> e) {
  static const std::vector<Matching> matchings = pfaffian_matchings();
  Rational r;
  for (const auto& mt : matchings) {
    const auto& a = e[mt.slot[0]];
    const auto& b = e[mt.slot[1]];
    const auto& c = e[mt.slot[2]];
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    if (mt.sign > 0)
      r += a * b * c;
    else
      r -= a * b * c;
  }
  return r;
}

std::size_t model_dim(ModelKind k) {
  switch (k) {
    case ModelKind::Veronese: return 6;
    case ModelKind::Segre: return 9;
    case ModelKind::Pfaffian: return 15;
    case ModelKind::Exceptional: return 27;
  }
  return 0;
}

std::size_t model_n(ModelKind k) {
  switch (k) {
    case ModelKind::Veronese: return 2;
    case ModelKind::Segre: return 4;
    case ModelKind::Pfaffian: return 8;
    case ModelKind::Exceptional: return 16;
  }
  return 0;
}

RVector basepoint_coords(ModelKind k) {
  RVector c(model_dim(k));
  switch (k) {
    case ModelKind::Veronese:
    case ModelKind::Exceptional:
      c[0] = c[1] = c[2] = 1;
      break;
    case ModelKind::Segre:
      c[0] = c[4] = c[8] = 1;
      break;
    case ModelKind::Pfaffian:
      c[pfaffian_index(0, 1)] = c[pfaffian_index(2, 3)] = c[pfaffian_index(4, 5)] = 1;
      break;
  }
  return c;
}

}  // namespace

std::size_t pfaffian_index(std::size_t i, std::size_t j) {
  if (!(i < j && j < 6)) throw std::out_of_range("pfaffian_index: need 0 <= i < j < 6");
  // rows 0..i-1 contribute (5 - r) entries each
  return i * 5 - i * (i - 1) / 2 + (j - i - 1);
}

HermitianEntries hermitian_entries(const Point& p) {
  const AlgebraTag tag = hermitian_algebra(p.model);
  const std::size_t d = algebra_dim(tag);
  return HermitianEntries{p.coords[0], p.coords[1], p.coords[2], slice(tag, p.coords, 3),
                          slice(tag, p.coords, 3 + d), slice(tag, p.coords, 3 + 2 * d)};
}

Point hermitian_point(ModelKind kind, const HermitianEntries& h) {
  const AlgebraTag tag = hermitian_algebra(kind);
  if (h.x1.tag() != tag || h.x2.tag() != tag || h.x3.tag() != tag)
    throw TagMismatch("hermitian_point: entries do not match the model's algebra");
  RVector c{h.a, h.b, h.c};
  for (const auto* x : {&h.x1, &h.x2, &h.x3}) c.insert(c.end(), x->coords().begin(), x->coords().end());
  return Point(kind, std::move(c));
}

// ---------------------------------------------------------------------------
// CubicSpaceModel

CubicSpaceModel::CubicSpaceModel(ModelKind kind)
    : kind_(kind), dim_(model_dim(kind)), n_(model_n(kind)), basepoint_(kind, basepoint_coords(kind)) {
  basis_grads_.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    RVector e(dim_);
    e[i] = 1;
    basis_grads_.push_back(raw_grad(std::move(e)));
  }
  // T(b_i, b_j) = 9 F(c,c,b_i) F(c,c,b_j) - 6 F(c,b_i,b_j)
  const Covector gc = grad(basepoint_);
  const Matrix h = hessian(basepoint_);
  gram_ = Matrix(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) gram_(i, j) = Rational(9) * gc.coords[i] * gc.coords[j] - Rational(6) * h(i, j);
  gram_inv_ = inverse(gram_);
}

Point CubicSpaceModel::basis(std::size_t i) const {
  RVector e(dim_);
  e.at(i) = 1;
  return Point(kind_, std::move(e));
}

Point CubicSpaceModel::point(RVector coords) const {
  if (coords.size() != dim_)
    throw std::invalid_argument(name() + ": expected " + std::to_string(dim_) + " coordinates, got " +
                                std::to_string(coords.size()));
  return Point(kind_, std::move(coords));
}

Covector CubicSpaceModel::covector(RVector coords) const {
  if (coords.size() != dim_)
    throw std::invalid_argument(name() + ": expected " + std::to_string(dim_) + " coordinates, got " +
                                std::to_string(coords.size()));
  return Covector(kind_, std::move(coords));
}

void CubicSpaceModel::check(const Point& p) const {
  if (p.model != kind_) throw ModelMismatch("point of model " + to_string(p.model) + " used with " + name());
  if (p.coords.size() != dim_) throw std::invalid_argument(name() + ": point has wrong length");
}

void CubicSpaceModel::check(const Covector& l) const {
  if (l.model != kind_) throw ModelMismatch("covector of model " + to_string(l.model) + " used with " + name());
  if (l.coords.size() != dim_) throw std::invalid_argument(name() + ": covector has wrong length");
}

Rational CubicSpaceModel::raw_det(std::span<const Rational> w) const {
  switch (kind_) {
    case ModelKind::Veronese: return hermitian_det(AlgebraTag::R, w);
    case ModelKind::Segre: return det3(w);
    case ModelKind::Pfaffian: return pfaffian6(w);
    case ModelKind::Exceptional: return hermitian_det(AlgebraTag::O, w);
  }
  return {};
}

Rational CubicSpaceModel::det(const Point& w) const {
  check(w);
  return raw_det(w.coords);
}

Rational CubicSpaceModel::trilinear(const Point& u, const Point& v, const Point& w) const {
  check(u);
  check(v);
  check(w);
  Rational s = det(u + v + w) - det(u + v) - det(u + w) - det(v + w) + det(u) + det(v) + det(w);
  return s / Rational(6);
}

// F(w, w, e_j) = (det(w + e_j) - det(w - e_j) - 2 det(e_j)) / 6
RVector CubicSpaceModel::raw_grad(RVector w) const {
  RVector g(dim_);
  RVector e(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    e[j] = 1;
    Rational de = raw_det(e);
    e[j] = 0;
    const Rational orig = w[j];
    w[j] = orig + Rational(1);
    Rational plus = raw_det(w);
    w[j] = orig - Rational(1);
    Rational minus = raw_det(w);
    w[j] = orig;
    g[j] = (plus - minus - Rational(2) * de) / Rational(6);
  }
  return g;
}

Covector CubicSpaceModel::grad(const Point& w) const {
  check(w);
  return Covector(kind_, raw_grad(w.coords));
}

// F(u, v, .) = (F(u+v, u+v, .) - F(u, u, .) - F(v, v, .)) / 2
Covector CubicSpaceModel::bilinear_covector(const Point& u, const Point& v) const {
  Covector s = grad(u + v) - grad(u) - grad(v);
  return Rational(1, 2) * std::move(s);
}

Matrix CubicSpaceModel::hessian(const Point& omega) const {
  check(omega);
  const Covector g = grad(omega);
  Matrix h(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    RVector shifted = omega.coords;
    shifted[i] += Rational(1);
    RVector gi = raw_grad(std::move(shifted));
    for (std::size_t j = 0; j < dim_; ++j) h(i, j) = (gi[j] - g.coords[j] - basis_grads_[i][j]) / Rational(2);
  }
  return h;
}

Rational CubicSpaceModel::trace_form(const Point& x, const Point& y) const {
  check(x);
  check(y);
  return dot(gram_.apply(x.coords), y.coords);
}

Covector CubicSpaceModel::to_dual(const Point& v) const {
  check(v);
  return Covector(kind_, gram_.apply(v.coords));
}

Point CubicSpaceModel::from_dual(const Covector& l) const {
  check(l);
  return Point(kind_, gram_inv_.apply(l.coords));
}

Point CubicSpaceModel::sharp(const Point& x) const {
  return Rational(3) * from_dual(grad(x));
}

Point CubicSpaceModel::cross(const Point& x, const Point& y) const {
  return sharp(x + y) - sharp(x) - sharp(y);
}

Point CubicSpaceModel::u_operator(const Point& p, const Point& w) const {
  return trace_form(p, w) * p - cross(sharp(p), w);
}

Matrix CubicSpaceModel::u_matrix(const Point& p) const {
  check(p);
  const Point ps = sharp(p);
  const Point ps_sharp = sharp(ps);
  const Covector tp = to_dual(p);
  Matrix u(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Point e = basis(i);
    // cross(p#, e_i) = (p# + e_i)# - p## - e_i#
    Point cr = sharp(ps + e) - ps_sharp - sharp(e);
    Point col = tp.coords[i] * p - cr;
    for (std::size_t r = 0; r < dim_; ++r) u(r, i) = col.coords[r];
  }
  return u;
}

bool CubicSpaceModel::is_on_X(const Point& w) const {
  const bool by_sharp = sharp(w).is_zero();
  const bool by_grad = grad(w).is_zero();
  if (by_sharp != by_grad) throw std::logic_error(name() + ": sharp and grad disagree on membership in X");
  return by_sharp;
}

const CubicSpaceModel& model(ModelKind kind) {
  static const CubicSpaceModel veronese(ModelKind::Veronese);
  static const CubicSpaceModel segre(ModelKind::Segre);
  static const CubicSpaceModel pfaffian(ModelKind::Pfaffian);
  static const CubicSpaceModel exceptional(ModelKind::Exceptional);
  switch (kind) {
    case ModelKind::Veronese: return veronese;
    case ModelKind::Segre: return segre;
    case ModelKind::Pfaffian: return pfaffian;
    case ModelKind::Exceptional: return exceptional;
  }
  throw std::invalid_argument("model: unknown kind");
}

// ---------------------------------------------------------------------------
// Samplers

namespace {

CompositionElement random_element(AlgebraTag tag, Pcg32& rng, long bound) {
  CompositionElement e(tag);
  for (std::size_t i = 0; i < e.dim(); ++i) e[i] = rng.uniform_int(bound);
  return e;
}

std::array<std::size_t, 3> random_perm3(Pcg32& rng) {
  std::array<std::size_t, 3> p{0, 1, 2};
  for (std::size_t i = 2; i > 0; --i) std::swap(p[i], p[rng.bounded(static_cast<std::uint32_t>(i + 1))]);
  return p;
}

// v v^dagger for v = (v_0, v_1, v_2); rank one whenever the entries of v
// generate an associative subalgebra (one of them real suffices).
Point hermitian_outer(ModelKind kind, const std::array<CompositionElement, 3>& v) {
  HermitianEntries h{norm_form(v[0]), norm_form(v[1]), norm_form(v[2]), v[1] * conjugate(v[2]),
                     v[2] * conjugate(v[0]), v[0] * conjugate(v[1])};
  return hermitian_point(kind, h);
}

// H'_{ij} = H_{s(i) s(j)}
Point permute_hermitian(const Point& p, const std::array<std::size_t, 3>& s) {
  auto h = hermitian_entries(p);
  const Rational diag[3] = {h.a, h.b, h.c};
  auto entry = [&](std::size_t i, std::size_t j) -> CompositionElement {
    // H12 = x3, H23 = x1, H31 = x2
    if (i == 0 && j == 1) return h.x3;
    if (i == 1 && j == 2) return h.x1;
    if (i == 2 && j == 0) return h.x2;
    if (i == 1 && j == 0) return conjugate(h.x3);
    if (i == 2 && j == 1) return conjugate(h.x1);
    return conjugate(h.x2);  // (0, 2)
  };
  HermitianEntries out{diag[s[0]], diag[s[1]], diag[s[2]], entry(s[1], s[2]), entry(s[2], s[0]),
                       entry(s[0], s[1])};
  return hermitian_point(p.model, out);
}

Point permute_segre(const Point& p, const std::array<std::size_t, 3>& rows, const std::array<std::size_t, 3>& cols,
                    bool transpose) {
  RVector out(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t src = 3 * rows[i] + cols[j];
      out[transpose ? 3 * j + i : 3 * i + j] = p.coords[src];
    }
  return Point(ModelKind::Segre, std::move(out));
}

Point permute_pfaffian(const Point& p, const std::array<std::size_t, 6>& s) {
  RVector out(15);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      std::size_t a = s[i], b = s[j];
      const Rational& v = p.coords[pfaffian_index(std::min(a, b), std::max(a, b))];
      out[pfaffian_index(i, j)] = a < b ? v : -v;
    }
  return Point(ModelKind::Pfaffian, std::move(out));
}

Point random_symmetry(const CubicSpaceModel& m, const Point& p, Pcg32& rng) {
  switch (m.kind()) {
    case ModelKind::Veronese:
    case ModelKind::Exceptional:
      return permute_hermitian(p, random_perm3(rng));
    case ModelKind::Segre:
      return permute_segre(p, random_perm3(rng), random_perm3(rng), rng.bounded(2) == 1);
    case ModelKind::Pfaffian: {
      std::array<std::size_t, 6> s{0, 1, 2, 3, 4, 5};
      for (std::size_t i = 5; i > 0; --i) std::swap(s[i], s[rng.bounded(static_cast<std::uint32_t>(i + 1))]);
      return permute_pfaffian(p, s);
    }
  }
  return p;
}

std::vector<Point> coordinate_seeds(const CubicSpaceModel& m) {
  std::vector<Point> seeds;
  switch (m.kind()) {
    case ModelKind::Veronese:
    case ModelKind::Exceptional: {
      const AlgebraTag tag = hermitian_algebra(m.kind());
      const std::size_t d = algebra_dim(tag);
      for (std::size_t i = 0; i < 3; ++i) seeds.push_back(m.basis(i));
      // E_ii + E_jj + (u at ij) with N(u) = 1, for every unit u = +-e_k
      for (std::size_t k = 0; k < d; ++k) {
        for (int sgn : {1, -1}) {
          CompositionElement u = Rational(sgn) * CompositionElement::unit(tag, k);
          CompositionElement z(tag);
          seeds.push_back(hermitian_point(m.kind(), {1, 1, 0, z, z, u}));
        }
      }
      break;
    }
    case ModelKind::Segre:
    case ModelKind::Pfaffian:
      for (std::size_t i = 0; i < m.dim(); ++i) seeds.push_back(m.basis(i));
      break;
  }
  return seeds;
}

Point decomposable(const CubicSpaceModel& m, Pcg32& rng, long bound) {
  switch (m.kind()) {
    case ModelKind::Veronese:
    case ModelKind::Exceptional: {
      const AlgebraTag tag = hermitian_algebra(m.kind());
      std::array<CompositionElement, 3> v{random_element(tag, rng, bound), random_element(tag, rng, bound),
                                          random_element(tag, rng, bound)};
      // keep one entry real so the three entries generate an associative subalgebra
      const std::size_t real_slot = rng.bounded(3);
      CompositionElement r(tag);
      r[0] = rng.uniform_int(bound);
      v[real_slot] = r;
      return hermitian_outer(m.kind(), v);
    }
    case ModelKind::Segre: {
      RVector out(9);
      long u[3], w[3];
      for (auto& x : u) x = rng.uniform_int(bound);
      for (auto& x : w) x = rng.uniform_int(bound);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[3 * i + j] = Rational(u[i] * w[j]);
      return Point(ModelKind::Segre, std::move(out));
    }
    case ModelKind::Pfaffian: {
      RVector out(15);
      long u[6], w[6];
      for (auto& x : u) x = rng.uniform_int(bound);
      for (auto& x : w) x = rng.uniform_int(bound);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) out[pfaffian_index(i, j)] = Rational(u[i] * w[j] - u[j] * w[i]);
      return Point(ModelKind::Pfaffian, std::move(out));
    }
  }
  return m.zero();
}

}  // namespace

Point sample_X(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt) {
  static thread_local std::vector<std::vector<Point>> seed_cache(4);
  auto& seeds = seed_cache[static_cast<std::size_t>(m.kind())];
  if (seeds.empty()) seeds = coordinate_seeds(m);

  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    const std::uint32_t strategy = rng.bounded(8);
    std::optional<Point> x;
    if (strategy == 0) {
      x = seeds[rng.bounded(static_cast<std::uint32_t>(seeds.size()))];
    } else if (strategy == 1) {
      // closure rule: det(y + z) = 0 for y, z on X, so sharp(y + z) lies on X
      const long small = std::min<long>(opt.bound, 3);
      Point y = decomposable(m, rng, small);
      Point z = decomposable(m, rng, small);
      x = m.sharp(y + z);
    } else {
      x = decomposable(m, rng, opt.bound);
    }
    if (x->is_zero()) continue;
    Point out = rng.nonzero_rational(std::min<long>(opt.bound, 5)) * random_symmetry(m, *x, rng);
    if (!m.sharp(out).is_zero())
      throw std::logic_error("sample_X(" + m.name() + "): produced a point off X");
    return out;
  }
  throw SamplerExhausted("sample_X(" + m.name() + "): retry budget exhausted");
}

Point sample_sec(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt) {
  Point x = sample_X(m, rng, opt);
  Point y = sample_X(m, rng, opt);
  return x + y;
}

Point sample_sec_minus_X(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt) {
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    Point p = sample_sec(m, rng, opt);
    if (!m.sharp(p).is_zero()) return p;
  }
  throw SamplerExhausted("sample_sec_minus_X(" + m.name() + "): retry budget exhausted");
}

bool accept_off_sec(const CubicSpaceModel& m, const Point& p) { return !m.det(p).is_zero(); }

Point sample_off_sec(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt) {
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    RVector c(m.dim());
    for (auto& x : c) x = rng.uniform_int(opt.bound);
    Point p(m.kind(), std::move(c));
    if (accept_off_sec(m, p)) return p;
  }
  throw SamplerExhausted("sample_off_sec(" + m.name() + "): retry budget exhausted");
}

}  // namespace severi
