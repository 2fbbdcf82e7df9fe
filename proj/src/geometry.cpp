#include "severi/geometry.hpp"

#include <string>

namespace severi {

namespace {

Rational require_off_sec(const CubicSpaceModel& m, const Point& w0, const char* what) {
  Rational d = m.det(w0);
  if (d.is_zero()) throw PreconditionError(std::string(what) + ": base point lies on Sec(X)");
  return d;
}

void require_on_X(const CubicSpaceModel& m, const Point& x, const char* what) {
  if (x.is_zero()) throw PreconditionError(std::string(what) + ": zero vector");
  if (!m.sharp(x).is_zero()) throw PreconditionError(std::string(what) + ": point is not on X");
}

void require_sec_minus_X(const CubicSpaceModel& m, const Point& p, const char* what) {
  if (!m.det(p).is_zero()) throw PreconditionError(std::string(what) + ": point is not on Sec(X)");
  if (m.grad(p).is_zero()) throw PreconditionError(std::string(what) + ": point lies on X");
}

Point random_point(const CubicSpaceModel& m, Pcg32& rng, long bound) {
  RVector c(m.dim());
  for (auto& x : c) x = rng.uniform_int(bound);
  return m.point(std::move(c));
}

// Coefficient k with v = k * axis, where axis has a 1 at its first nonzero slot.
std::optional<Rational> ratio_to_axis(const Point& v, const Point& axis) {
  std::size_t pivot = 0;
  while (axis.coords[pivot].is_zero()) ++pivot;
  Rational k = v.coords[pivot];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.coords[i] != k * axis.coords[i]) return std::nullopt;
  return k;
}

}  // namespace

// ---------------------------------------------------------------------------
// L_{w0}, second point, Cremona map

Covector LinearMapToDual::operator()(const Point& w) const {
  if (w.model != model) throw ModelMismatch("LinearMapToDual: model mismatch");
  return Covector(model, rows.apply_transpose(w.coords));
}

Point LinearMapToDual::preimage(const Covector& l) const {
  if (l.model != model) throw ModelMismatch("LinearMapToDual: model mismatch");
  return Point(model, solve(rows.transpose(), l.coords));
}

Covector l_map(const CubicSpaceModel& m, const Point& w0, const Point& w) {
  const Rational d0 = require_off_sec(m, w0, "l_map");
  const Covector g0 = m.grad(w0);
  return Rational(2) * d0 * m.bilinear_covector(w0, w) - Rational(3) * g0(w) * g0;
}

LinearMapToDual l_matrix(const CubicSpaceModel& m, const Point& w0) {
  const Rational d0 = require_off_sec(m, w0, "l_matrix");
  const Covector g0 = m.grad(w0);
  const Matrix h = m.hessian(w0);
  Matrix rows(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      rows(i, j) = Rational(2) * d0 * h(i, j) - Rational(3) * g0.coords[i] * g0.coords[j];
  return LinearMapToDual{m.kind(), std::move(rows)};
}

Point second_point(const CubicSpaceModel& m, const Point& x, const Point& w0) {
  require_on_X(m, x, "second_point");
  const Rational d0 = require_off_sec(m, w0, "second_point");
  const Rational a = m.grad(w0)(x);
  if (a.is_zero()) throw GenericityError("second_point: w0*(x) = 0, the line meets Sec(X) only at x");
  // det(x + t w0) = 3 t^2 w0*(x) + t^3 det(w0) on X
  const Rational lambda = Rational(-3) * a / d0;
  return x + lambda * w0;
}

CremonaImage cremona(const CubicSpaceModel& m, const Point& w) {
  Covector g = m.grad(w);
  if (g.is_zero()) throw TotalTransformRegime("cremona: point lies on X (total-transform regime)");
  return CremonaImage{std::move(g), m.det(w)};
}

bool involution_check(const CubicSpaceModel& m, const Point& w0) {
  const Rational d0 = require_off_sec(m, w0, "involution_check");
  return m.sharp(m.sharp(w0)) == d0 * w0;
}

// ---------------------------------------------------------------------------
// Dual cubic and the identity F*(Lu, Lv, Lw) = lambda F(u, v, w)

Rational dual_trilinear(const CubicSpaceModel& m, const Covector& a, const Covector& b, const Covector& c) {
  return m.trilinear(m.from_dual(a), m.from_dual(b), m.from_dual(c));
}

Rational dual_det(const CubicSpaceModel& m, const Covector& l) { return m.det(m.from_dual(l)); }

DiamondResult diamond_check(const CubicSpaceModel& m, const Point& w0, std::span<const Triple> triples) {
  const LinearMapToDual L = l_matrix(m, w0);
  DiamondResult res;
  res.consistent = true;
  for (const auto& t : triples) {
    const Rational f = m.trilinear(t.u, t.v, t.w);
    const Rational fs = dual_trilinear(m, L(t.u), L(t.v), L(t.w));
    ++res.triples_checked;
    if (f.is_zero()) {
      if (!fs.is_zero()) res.consistent = false;
    } else if (!res.lambda) {
      res.lambda = fs / f;
      if (res.lambda->is_zero()) res.consistent = false;
    } else if (fs != *res.lambda * f) {
      res.consistent = false;
    }
  }
  if (!res.lambda) res.consistent = false;
  return res;
}

Covector total_transform_probe(const CubicSpaceModel& m, const Point& x, const Point& d) {
  require_on_X(m, x, "total_transform_probe");
  Covector l = m.bilinear_covector(x, d);
  if (l.is_zero()) throw GenericityError("total_transform_probe: F(x, d, .) = 0, resample d");
  if (!dual_det(m, l).is_zero()) throw InvariantViolation("total_transform_probe: limit of G is off Sec(Y)");
  return l;
}

// ---------------------------------------------------------------------------
// Entry loci

SecantDecomp sample_secant_decomp(const CubicSpaceModel& m, Pcg32& rng, const SamplerOptions& opt) {
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    Point x = sample_X(m, rng, opt);
    Point y = sample_X(m, rng, opt);
    Point P = x + y;
    if (!m.sharp(P).is_zero()) return SecantDecomp{std::move(P), std::move(x), std::move(y)};
  }
  throw SamplerExhausted("sample_secant_decomp(" + m.name() + "): retry budget exhausted");
}

std::optional<RVector> EntryLocus::coordinates(const Point& w) const {
  std::vector<RVector> cols;
  cols.reserve(sigma_basis.size());
  for (const auto& s : sigma_basis) cols.push_back(s.coords);
  return coordinates_in_span(cols, w.coords);
}

Point EntryLocus::combine(std::span<const Rational> coeffs) const {
  Point out(P.model, RVector(P.size()));
  for (std::size_t i = 0; i < sigma_basis.size(); ++i)
    if (!coeffs[i].is_zero()) out += coeffs[i] * sigma_basis[i];
  return out;
}

Rational EntryLocus::quadric(std::span<const Rational> coeffs) const {
  return dot(coeffs, quadric_gram.apply(coeffs));
}

EntryLocus entry_locus(const CubicSpaceModel& m, const Point& P, Pcg32& rng) {
  m.check(P);
  if (!m.det(P).is_zero()) throw PreconditionError("entry_locus: P is not on Sec(X)");
  const Point ps = m.sharp(P);
  if (ps.is_zero()) throw PreconditionError("entry_locus: P lies on X");

  const std::size_t expected = m.variety_dim() / 2 + 2;
  std::vector<Point> basis;
  for (auto& v : column_space_basis(m.u_matrix(P))) basis.emplace_back(m.kind(), std::move(v));
  if (basis.size() < expected)
    throw GenericityError("entry_locus: image of U_P has dimension " + std::to_string(basis.size()) + " < " +
                          std::to_string(expected));
  if (basis.size() > expected)
    throw InvariantViolation("entry_locus: image of U_P has dimension " + std::to_string(basis.size()) + " > " +
                             std::to_string(expected));

  std::size_t pivot = 0;
  while (ps.coords[pivot].is_zero()) ++pivot;
  Point axis = (Rational(1) / ps.coords[pivot]) * ps;

  const std::size_t k = basis.size();
  std::vector<Point> sharps;
  sharps.reserve(k);
  for (const auto& s : basis) sharps.push_back(m.sharp(s));

  Matrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto qi = ratio_to_axis(sharps[i], axis);
    if (!qi) throw InvariantViolation("entry_locus: sharp of a Sigma_P basis vector is off the axis");
    gram(i, i) = *qi;
    for (std::size_t j = i + 1; j < k; ++j) {
      Point cr = m.sharp(basis[i] + basis[j]) - sharps[i] - sharps[j];
      auto c = ratio_to_axis(cr, axis);
      if (!c) throw InvariantViolation("entry_locus: cross product on Sigma_P is off the axis");
      gram(i, j) = gram(j, i) = *c / Rational(2);
    }
  }
  if (rank(gram) != k) throw InvariantViolation("entry_locus: quadric Q_P is singular");

  EntryLocus locus{P, std::move(basis), std::move(gram), std::move(axis)};

  RVector coeffs(k);
  for (auto& c : coeffs) c = rng.uniform_int(5);
  if (m.sharp(locus.combine(coeffs)) != locus.quadric(coeffs) * locus.axis)
    throw InvariantViolation("entry_locus: sharp(w) != q_P(w) axis on a random element of Sigma_P");
  return locus;
}

std::vector<Point> quadric_points(const EntryLocus& locus, const Point& on_quadric, Pcg32& rng, std::size_t count,
                                  long bound) {
  auto c0 = locus.coordinates(on_quadric);
  if (!c0) throw PreconditionError("quadric_points: starting point is not in Sigma_P");
  if (!locus.quadric(*c0).is_zero()) throw PreconditionError("quadric_points: starting point is not on Q_P");

  const Matrix& g = locus.quadric_gram;
  const RVector gc0 = g.apply(*c0);
  std::vector<Point> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 64 * count + 64; ++attempt) {
    RVector v(c0->size());
    for (auto& x : v) x = rng.uniform_int(bound);
    const Rational qv = dot(v, g.apply(v));
    if (qv.is_zero()) continue;
    // q(c0 + t v) = 2 t B(c0, v) + t^2 q(v)
    const Rational t = Rational(-2) * dot(gc0, v) / qv;
    RVector c = *c0;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += t * v[i];
    Point p = locus.combine(c);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  if (out.size() < count) throw GenericityError("quadric_points: could not produce enough points");
  return out;
}

bool tangent_char_check(const CubicSpaceModel& m, const Point& P, const Point& P2) {
  require_sec_minus_X(m, P, "tangent_char_check");
  require_sec_minus_X(m, P2, "tangent_char_check");
  return proportional(m.grad(P), m.grad(P2));
}

Point companion_point(const CubicSpaceModel& m, const EntryLocus& locus, const Point& w0,
                      std::span<const Point> cone_probes) {
  require_off_sec(m, w0, "companion_point");
  const Covector gp = m.grad(locus.P);
  if (gp(w0).is_zero()) throw GenericityError("companion_point: w0 lies in the tangent hyperplane at P");

  Point x = l_matrix(m, w0).preimage(gp);
  if (x.is_zero() || !m.sharp(x).is_zero()) throw InvariantViolation("companion_point: x is not on X");

  std::vector<RVector> span_m;
  for (const auto& s : locus.sigma_basis) span_m.push_back(s.coords);
  if (in_span(span_m, x.coords)) throw InvariantViolation("companion_point: x lies in Sigma_P");
  span_m.push_back(w0.coords);
  if (!in_span(span_m, x.coords)) throw InvariantViolation("companion_point: x is outside span(Sigma_P, w0)");

  const Rational ts[] = {Rational(1), Rational(-2), Rational(1, 3)};
  for (const auto& q : cone_probes)
    for (const auto& t : ts)
      if (!m.det(x + t * q).is_zero()) throw InvariantViolation("companion_point: cone C(x, Q_P) leaves Sec(X)");
  return x;
}

// ---------------------------------------------------------------------------
// Homogeneity

HomogeneityMap homogeneity_map(const CubicSpaceModel& m, const Point& x, const Point& x2, Pcg32& rng,
                               const SamplerOptions& opt, std::size_t preserve_checks) {
  require_on_X(m, x, "homogeneity_map");
  require_on_X(m, x2, "homogeneity_map");

  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    Point P = sample_sec_minus_X(m, rng, opt);
    const Covector gp = m.grad(P);
    if (gp(x).is_zero() || gp(x2).is_zero()) continue;

    // Sigma_P is the image of U_P; draw from it directly
    const Point ps = m.sharp(P);
    const Covector tp = m.to_dual(P);
    auto sigma_sample = [&]() {
      Point r = random_point(m, rng, opt.bound);
      return tp(r) * P - m.cross(ps, r);
    };
    auto off_sec_through = [&](const Point& base) -> std::optional<Point> {
      for (int k = 0; k < 8; ++k) {
        Point w = sigma_sample() + base;
        if (!m.det(w).is_zero()) return w;
      }
      return std::nullopt;
    };

    auto w = off_sec_through(x);
    if (!w) continue;
    auto w2 = (x == x2) ? w : off_sec_through(x2);
    if (!w2) continue;

    const LinearMapToDual lw = l_matrix(m, *w);
    const LinearMapToDual lw2 = l_matrix(m, *w2);
    Matrix a = inverse(lw2.rows.transpose()) * lw.rows.transpose();

    Point ax(m.kind(), a.apply(x.coords));
    if (ax.is_zero() || !proportional(ax, x2))
      throw InvariantViolation("homogeneity_map: A(x) is not proportional to x'");
    for (std::size_t i = 0; i < preserve_checks; ++i) {
      Point xi = sample_X(m, rng, opt);
      Point image(m.kind(), a.apply(xi.coords));
      if (image.is_zero() || !m.sharp(image).is_zero())
        throw InvariantViolation("homogeneity_map: A does not preserve X");
    }
    return HomogeneityMap{std::move(a), std::move(P), std::move(*w), std::move(*w2)};
  }
  throw GenericityError("homogeneity_map(" + m.name() + "): resampling budget exhausted");
}

Point transport_point(const CubicSpaceModel& m, const Point& p, const Point& w0) {
  const Rational d0 = m.det(w0);
  return Rational(2) * d0 * p - Rational(6) * m.grad(w0)(p) * w0;
}

Point good_w0_for(const CubicSpaceModel& m, const Point& p, Pcg32& rng, const SamplerOptions& opt) {
  require_sec_minus_X(m, p, "good_w0_for");
  for (int attempt = 0; attempt < opt.retries; ++attempt) {
    Point w0 = sample_off_sec(m, rng, opt);
    if (!m.det(transport_point(m, p, w0)).is_zero()) return w0;
  }
  throw GenericityError("good_w0_for(" + m.name() + "): sampling budget exhausted");
}

SecTransitivity sec_transitivity(const CubicSpaceModel& m, const Point& p, const Point& w0) {
  require_sec_minus_X(m, p, "sec_transitivity");
  const Rational d0 = require_off_sec(m, w0, "sec_transitivity");
  const std::size_t n = m.dim();
  const Covector g0 = m.grad(w0);
  const Covector b = m.bilinear_covector(w0, p);  // F(w0, p, .)
  const Matrix hp = m.hessian(p);                  // F(p, e_k, .)
  const Matrix hw = m.hessian(w0);                 // F(w0, e_k, .)
  const Rational g0p = g0(p);                      // F(w0, w0, p)

  // L(e_k) = 6 F(w0,w0,e_k) F(w0,p,.) + 2 det(w0) F(e_k,p,.) - 6 F(w0,e_k,p) w0* - 6 F(w0,w0,p) F(w0,e_k,.)
  Matrix rows(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      rows(k, j) = Rational(6) * g0.coords[k] * b.coords[j] + Rational(2) * d0 * hp(k, j) -
                   Rational(6) * b.coords[k] * g0.coords[j] - Rational(6) * g0p * hw(k, j);

  SecTransitivity out;
  out.rank = rank(rows);
  // kernel of w -> (L(w), w0*(w))
  Matrix stacked(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) stacked(j, k) = rows(k, j);
    stacked(n, j) = g0.coords[j];
  }
  out.kernel_intersection_dim = n - rank(stacked);
  return out;
}

std::size_t sec_transitivity_rank(const CubicSpaceModel& m, const Point& p, const Point& w0) {
  return sec_transitivity(m, p, w0).rank;
}

bool gram_invertibility_check(const CubicSpaceModel& m, const Point& omega) {
  return rank(m.hessian(omega)) == m.dim();
}

// ---------------------------------------------------------------------------
// Terracini

std::size_t SurfaceFamily::ambient_dim() const {
  switch (kind) {
    case FamilyKind::Segre: return (a + 1) * (b + 1);
    case FamilyKind::Veronese2: return (a + 1) * (a + 2) / 2;
    case FamilyKind::Grassmann2: return a * (a - 1) / 2;
    case FamilyKind::SegreVeronese: return (a + 1) * (b + 1) * (b + 2) / 2;
  }
  return 0;
}

std::size_t SurfaceFamily::variety_dim() const {
  switch (kind) {
    case FamilyKind::Segre: return a + b;
    case FamilyKind::Veronese2: return a;
    case FamilyKind::Grassmann2: return 2 * (a - 2);
    case FamilyKind::SegreVeronese: return a + b;
  }
  return 0;
}

std::size_t SurfaceFamily::param_count() const {
  switch (kind) {
    case FamilyKind::Segre: return a + b + 2;
    case FamilyKind::Veronese2: return a + 1;
    case FamilyKind::Grassmann2: return 2 * a;
    case FamilyKind::SegreVeronese: return a + b + 2;
  }
  return 0;
}

namespace {

// Coordinates of S^2: pairs i <= j in lexicographic order.
RVector sym2(std::span<const Rational> u, std::span<const Rational> v) {
  // symmetrized product (u v + v u)/2 restricted to i <= j; with u = v this is u_i u_j
  RVector out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i; j < u.size(); ++j) out.push_back((u[i] * v[j] + u[j] * v[i]) / Rational(2));
  return out;
}

RVector wedge(std::span<const Rational> u, std::span<const Rational> v) {
  RVector out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) out.push_back(u[i] * v[j] - u[j] * v[i]);
  return out;
}

RVector tensor(std::span<const Rational> u, std::span<const Rational> v) {
  RVector out;
  out.reserve(u.size() * v.size());
  for (const auto& x : u)
    for (const auto& y : v) out.push_back(x * y);
  return out;
}

RVector unit(std::size_t n, std::size_t i) {
  RVector e(n);
  e[i] = 1;
  return e;
}

}  // namespace

RVector SurfaceFamily::evaluate(std::span<const Rational> params) const {
  if (params.size() != param_count()) throw std::invalid_argument("SurfaceFamily: wrong parameter count");
  switch (kind) {
    case FamilyKind::Segre: return tensor(params.first(a + 1), params.subspan(a + 1));
    case FamilyKind::Veronese2: return sym2(params, params);
    case FamilyKind::Grassmann2: return wedge(params.first(a), params.subspan(a));
    case FamilyKind::SegreVeronese: {
      auto v = params.subspan(a + 1);
      return tensor(params.first(a + 1), sym2(v, v));
    }
  }
  return {};
}

std::vector<RVector> SurfaceFamily::tangent_vectors(std::span<const Rational> params) const {
  if (params.size() != param_count()) throw std::invalid_argument("SurfaceFamily: wrong parameter count");
  std::vector<RVector> out;
  switch (kind) {
    case FamilyKind::Segre: {
      auto u = params.first(a + 1);
      auto v = params.subspan(a + 1);
      for (std::size_t i = 0; i < u.size(); ++i) out.push_back(tensor(unit(u.size(), i), v));
      for (std::size_t j = 0; j < v.size(); ++j) out.push_back(tensor(u, unit(v.size(), j)));
      break;
    }
    case FamilyKind::Veronese2:
      // d/du_l (u_i u_j) = 2 * sym(e_l, u)
      for (std::size_t l = 0; l < params.size(); ++l) {
        RVector d = sym2(unit(params.size(), l), params);
        for (auto& x : d) x *= Rational(2);
        out.push_back(std::move(d));
      }
      break;
    case FamilyKind::Grassmann2: {
      auto u = params.first(a);
      auto v = params.subspan(a);
      for (std::size_t l = 0; l < a; ++l) out.push_back(wedge(unit(a, l), v));
      for (std::size_t l = 0; l < a; ++l) out.push_back(wedge(u, unit(a, l)));
      break;
    }
    case FamilyKind::SegreVeronese: {
      auto u = params.first(a + 1);
      auto v = params.subspan(a + 1);
      const RVector vv = sym2(v, v);
      for (std::size_t i = 0; i < u.size(); ++i) out.push_back(tensor(unit(u.size(), i), vv));
      for (std::size_t l = 0; l < v.size(); ++l) {
        RVector d = sym2(unit(v.size(), l), v);
        for (auto& x : d) x *= Rational(2);
        out.push_back(tensor(u, d));
      }
      break;
    }
  }
  return out;
}

std::size_t terracini_dim(const SurfaceFamily& family, std::span<const Rational> s, std::span<const Rational> t) {
  const std::size_t n = family.ambient_dim();
  auto ts = family.tangent_vectors(s);
  auto tt = family.tangent_vectors(t);
  if (rank(Matrix::from_columns(ts, n)) != family.variety_dim() + 1 ||
      rank(Matrix::from_columns(tt, n)) != family.variety_dim() + 1)
    throw GenericityError("terracini_dim: tangent space degenerates at a parameter point");
  ts.insert(ts.end(), tt.begin(), tt.end());
  return rank(Matrix::from_columns(ts, n));
}

std::vector<RVector> model_tangent_space(const CubicSpaceModel& m, const Point& x) {
  require_on_X(m, x, "model_tangent_space");
  // d -> cross(x, d) = sharp(x + d) - sharp(d) since sharp(x) = 0
  Matrix c(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Point e = m.basis(i);
    Point col = m.sharp(x + e) - m.sharp(e);
    for (std::size_t r = 0; r < m.dim(); ++r) c(r, i) = col.coords[r];
  }
  auto t = nullspace(c);
  if (t.size() != m.variety_dim() + 1)
    throw InvariantViolation("model_tangent_space: tangent space has dimension " + std::to_string(t.size()) +
                             ", expected " + std::to_string(m.variety_dim() + 1));
  return t;
}

std::size_t terracini_dim(const CubicSpaceModel& m, const Point& x, const Point& y) {
  auto tx = model_tangent_space(m, x);
  auto ty = model_tangent_space(m, y);
  tx.insert(tx.end(), ty.begin(), ty.end());
  return rank(Matrix::from_columns(tx, m.dim()));
}

}  // namespace severi
