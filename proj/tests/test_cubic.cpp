#include "doctest.h"
#include "severi/cubic_space.hpp"
#include "severi/linalg.hpp"
#include "support.hpp"

using namespace severi;
using testgen::for_trials;
using testgen::Gen;
using testgen::ints;

namespace {

const CubicSpaceModel& segre() { return model(ModelKind::Segre); }

Point mat(std::initializer_list<long> v) { return segre().point(ints(v)); }
Point diag(long a, long b, long c) { return mat({a, 0, 0, 0, b, 0, 0, 0, c}); }
Point e(std::size_t i, std::size_t j) { return segre().basis(3 * i + j); }

RVector mat_mul(const RVector& a, const RVector& b) {
  RVector c(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return c;
}

// Column-permutation expansion: F(M1,M2,M3) = 1/6 sum over sigma in S3 of
// det[M_sigma(1) col 1 | M_sigma(2) col 2 | M_sigma(3) col 3].
Rational column_formula(const Point& m1, const Point& m2, const Point& m3) {
  const Point* ms[3] = {&m1, &m2, &m3};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Rational sum;
  for (const auto& p : perms) {
    RVector d(9);
    for (int col = 0; col < 3; ++col)
      for (int row = 0; row < 3; ++row) d[3 * row + col] = ms[p[col]]->coords[3 * row + col];
    sum += segre().det(segre().point(d));
  }
  return sum / Rational(6);
}

CompositionElement oct(std::initializer_list<long> v) {
  std::vector<Rational> c;
  for (long x : v) c.emplace_back(x);
  return CompositionElement(AlgebraTag::O, std::move(c));
}

}  // namespace

TEST_SUITE("cubic-spaces") {
  TEST_CASE("dimensions and basepoints") {
    const std::size_t dims[] = {6, 9, 15, 27}, ns[] = {2, 4, 8, 16};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& m = model(kAllModels[k]);
      CAPTURE(m.name());
      CHECK(m.dim() == dims[k]);
      CHECK(m.variety_dim() == ns[k]);
      CHECK(2 * m.projective_dim() == 3 * m.variety_dim() + 4);
      CHECK(m.det(m.basepoint()) == Rational(1));
      CHECK(m.sharp(m.basepoint()) == m.basepoint());
      CHECK(m.trace_form(m.basepoint(), m.basepoint()) == Rational(3));
      CHECK(rank(m.trace_gram()) == m.dim());
    }
  }

  TEST_CASE("model names") {
    CHECK(parse_model("segre") == ModelKind::Segre);
    CHECK(parse_model("EXCEPTIONAL") == ModelKind::Exceptional);
    CHECK_FALSE(parse_model("cayley"));
    CHECK_THROWS_AS(segre().point(ints({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(segre().det(model(ModelKind::Veronese).basepoint()), ModelMismatch);
  }

  TEST_CASE("segre determinant and polarization") {
    CHECK(segre().det(diag(1, 1, 1)) == Rational(1));
    CHECK(segre().det(diag(1, 1, 0)) == Rational(0));
    CHECK(segre().det(mat({2, -1, 3, 0, 4, 1, 5, 2, -2})) == Rational(-85));
    CHECK(segre().trilinear(diag(1, 1, 1), diag(1, 1, 1), diag(1, 2, 3)) == Rational(2));
    Gen g("segre-column-formula", 0);
    auto a = g.point(segre()), b = g.point(segre()), c = g.point(segre());
    CHECK(segre().trilinear(a, b, c) == column_formula(a, b, c));
  }

  TEST_CASE("segre gradient and trace form") {
    CHECK(segre().grad(e(0, 0)).is_zero());
    const Covector g = segre().grad(diag(1, 1, 1));
    for_trials("segre-grad-id", 20, [&](Gen& gen) {
      auto m = gen.point(segre());
      CHECK(g(m) == (m.coords[0] + m.coords[4] + m.coords[8]) / Rational(3));
      auto n = gen.point(segre());
      const RVector p = mat_mul(m.coords, n.coords);
      CHECK(segre().trace_form(m, n) == p[0] + p[4] + p[8]);
    });
  }

  TEST_CASE("segre sharp is the adjugate") {
    CHECK(segre().sharp(diag(1, 2, 3)) == diag(6, 3, 2));
    CHECK(segre().sharp(mat({2, -1, 3, 0, 4, 1, 5, 2, -2})) == mat({-10, 4, -13, 5, -19, -2, -20, -9, 8}));
    CHECK(segre().sharp(e(1, 2)).is_zero());
    CHECK(segre().sharp(segre().sharp(diag(1, 2, 3))) == diag(6, 12, 18));
  }

  TEST_CASE("segre cross product") {
    CHECK(segre().cross(e(0, 0), e(1, 1)) == e(2, 2));
    for_trials("segre-cross-c", 20, [](Gen& g) {
      auto x = g.point(segre());
      const Rational tr = x.coords[0] + x.coords[4] + x.coords[8];
      CHECK(segre().cross(segre().basepoint(), x) == tr * segre().basepoint() - x);
    });
  }

  TEST_CASE("segre U operator is p w p") {
    for_trials("segre-u", 30, [](Gen& g) {
      auto p = g.point(segre()), w = g.point(segre());
      CHECK(segre().u_operator(p, w).coords == mat_mul(mat_mul(p.coords, w.coords), p.coords));
    });
  }

  TEST_CASE("segre loci") {
    CHECK(segre().is_on_X(e(0, 0)));
    CHECK(segre().is_on_sec(diag(1, 1, 0)));
    CHECK_FALSE(segre().is_on_X(diag(1, 1, 0)));
    CHECK_FALSE(segre().is_on_sec(diag(1, 1, 1)));
  }

  TEST_CASE("veronese determinant") {
    // symmetric matrix [[2,3,-1],[3,-3,1],[-1,1,5]]
    const auto& m = model(ModelKind::Veronese);
    CHECK(m.det(m.point(ints({2, -3, 5, 1, -1, 3}))) == Rational(-80));
  }

  TEST_CASE("pfaffian") {
    const auto& m = model(ModelKind::Pfaffian);
    const long vals[] = {3, -1, 2, 0, 5, 1, 4, -2, 7, 1, -3, 2, 6, 1, -1};
    RVector c(15);
    std::size_t k = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = i + 1; j < 6; ++j) c[pfaffian_index(i, j)] = vals[k++];
    // row expansion in Python; its square is det = 15876
    CHECK(m.det(m.point(c)) == Rational(126));
    CHECK(pfaffian_index(0, 1) == 0);
    CHECK(pfaffian_index(4, 5) == 14);
  }

  TEST_CASE("exceptional determinant") {
    const auto& m = model(ModelKind::Exceptional);
    CHECK(m.det(m.basepoint()) == Rational(1));
    // complex entries: matches the ordinary Hermitian determinant
    HermitianEntries h{2, -3, 5, oct({1, 2, 0, 0, 0, 0, 0, 0}), oct({-1, 1, 0, 0, 0, 0, 0, 0}),
                       oct({3, -2, 0, 0, 0, 0, 0, 0})};
    CHECK(m.det(hermitian_point(ModelKind::Exceptional, h)) == Rational(-121));
    // full octonion entries: Freudenthal formula evaluated in Python
    HermitianEntries o{1, 2, -1, oct({1, 0, 2, 0, -1, 0, 0, 1}), oct({0, 1, 0, -1, 0, 2, 1, 0}),
                       oct({2, 0, 0, 1, 0, -1, 0, 1})};
    const Point p = hermitian_point(ModelKind::Exceptional, o);
    CHECK(m.det(p) == Rational(-10));
    auto back = hermitian_entries(p);
    CHECK(back.x2 == o.x2);
  }

  TEST_CASE("exceptional closure sample") {
    const auto& m = model(ModelKind::Exceptional);
    HermitianEntries h{1, 1, 0, oct({0, 0, 0, 0, 0, 0, 0, 0}), oct({0, 0, 0, 0, 0, 0, 0, 0}),
                       oct({0, 1, 0, 0, 1, 0, 0, 0})};
    // diag(1,1,0) plus an octonion H12 entry of norm 2 gives det 0, off X
    const Point P = hermitian_point(ModelKind::Exceptional, h);
    REQUIRE(m.det(P).is_zero());
    const Point s = m.sharp(P);
    CHECK_FALSE(s.is_zero());
    CHECK(m.sharp(s).is_zero());
  }

  TEST_CASE("jordan identities on seeded samples") {
    for (ModelKind k : kAllModels) {
      const auto& m = model(k);
      CAPTURE(m.name());
      for_trials("jordan-" + m.name(), 15, [&](Gen& g) {
        auto x = g.point(m), y = g.point(m);
        const Rational d = m.det(x);
        CHECK(m.sharp(m.sharp(x)) == d * x);
        CHECK(m.det(m.sharp(x)) == d * d);
        CHECK(Rational(3) * m.grad(x)(y) == m.trace_form(m.sharp(x), y));
        CHECK(m.grad(x)(x) == d);
        CHECK(m.trilinear(x, x, x) == d);
        CHECK(m.cross(x, y) == m.cross(y, x));
        CHECK(m.u_operator(x, m.sharp(x)) == d * x);
        CHECK(m.u_operator(m.basepoint(), y) == y);
        CHECK(m.from_dual(m.to_dual(y)) == y);
        CHECK(m.hessian(x).apply(y.coords) == m.bilinear_covector(x, y).coords);
      });
    }
  }

  TEST_CASE("samplers") {
    for (ModelKind k : kAllModels) {
      const auto& m = model(k);
      CAPTURE(m.name());
      for_trials("sampler-" + m.name(), 10, [&](Gen& g) {
        auto x = sample_X(m, g.rng());
        CHECK_FALSE(x.is_zero());
        CHECK(m.sharp(x).is_zero());
        CHECK(m.grad(x).is_zero());
        CHECK(m.det(sample_sec(m, g.rng())).is_zero());
        auto p = sample_sec_minus_X(m, g.rng());
        CHECK(m.det(p).is_zero());
        CHECK_FALSE(m.is_on_X(p));
        CHECK_FALSE(m.det(sample_off_sec(m, g.rng())).is_zero());
      });
    }
    CHECK(accept_off_sec(segre(), diag(1, 1, 1)));
  }
}
