#include "severi/commands.hpp"
#include "severi/composition.hpp"
#include "severi/linalg.hpp"

namespace severi {

namespace {

CompositionElement random_element(AlgebraTag tag, Pcg32& rng, long bound) {
  std::vector<Rational> c(algebra_dim(tag));
  for (auto& x : c) x = rng.uniform_int(bound);
  return CompositionElement(tag, std::move(c));
}

Point random_point(const CubicSpaceModel& m, Pcg32& rng, long bound) {
  RVector c(m.dim());
  for (auto& x : c) x = rng.uniform_int(bound);
  return m.point(std::move(c));
}

void input(Trial& t, const std::string& name, const CompositionElement& e) {
  t.input(name, coord_strings(RVector(e.coords().begin(), e.coords().end())));
}

// 3x3 row-major helpers for the SEGRE oracles
RVector mat_mul(const RVector& a, const RVector& b) {
  RVector c(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return c;
}

RVector adjugate(const RVector& a) {
  RVector c(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // adj(a)_{ij} = cofactor_{ji}
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      c[3 * i + j] = a[3 * r0 + c0] * a[3 * r1 + c1] - a[3 * r0 + c1] * a[3 * r1 + c0];
    }
  return c;
}

Rational trace(const RVector& a) { return a[0] + a[4] + a[8]; }

SuiteReport algebra_suite(const RunConfig& cfg, AlgebraTag tag) {
  SuiteRunner r(cfg, "algebra-core", to_string(tag));
  const long b = cfg.bound;
  const std::size_t n = cfg.trials;

  r.run("table_matches_recursive", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b), y = random_element(tag, t.rng(), b);
    input(t, "x", x);
    input(t, "y", y);
    return cd_multiply(x, y) == cd_multiply_recursive(x, y);
  });
  r.run("unit_law", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b);
    input(t, "x", x);
    auto one = CompositionElement::one(tag);
    return one * x == x && x * one == x;
  });
  r.run("norm_multiplicative", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b), y = random_element(tag, t.rng(), b);
    input(t, "x", x);
    input(t, "y", y);
    return norm_form(x * y) == norm_form(x) * norm_form(y);
  });
  r.run("norm_from_conjugate", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b);
    input(t, "x", x);
    return x * conjugate(x) == norm_form(x) * CompositionElement::one(tag) && real_part(x * conjugate(x)) == norm_form(x);
  });
  r.run("conjugation_involution", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b);
    input(t, "x", x);
    return conjugate(conjugate(x)) == x;
  });
  r.run("conjugation_anti_automorphism", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b), y = random_element(tag, t.rng(), b);
    input(t, "x", x);
    input(t, "y", y);
    return conjugate(x * y) == conjugate(y) * conjugate(x);
  });
  r.run("alternativity", n, [&](Trial& t) {
    auto x = random_element(tag, t.rng(), b), y = random_element(tag, t.rng(), b);
    input(t, "x", x);
    input(t, "y", y);
    return x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x);
  });
  if (tag != AlgebraTag::O) {
    r.run("associativity", n, [&](Trial& t) {
      auto x = random_element(tag, t.rng(), b), y = random_element(tag, t.rng(), b), z = random_element(tag, t.rng(), b);
      input(t, "x", x);
      input(t, "y", y);
      input(t, "z", z);
      return (x * y) * z == x * (y * z);
    });
  } else {
    // one record: the search must exhibit a non-associative triple
    r.run("nonassociative_witness", 1, [&](Trial& t) {
      for (std::size_t k = 0; k < n; ++k) {
        auto x = random_element(tag, t.rng(), b), y = random_element(tag, t.rng(), b),
             z = random_element(tag, t.rng(), b);
        if ((x * y) * z != x * (y * z)) {
          input(t, "x", x);
          input(t, "y", y);
          input(t, "z", z);
          t.observe("draws_until_witness", k + 1);
          return true;
        }
      }
      return false;
    });
  }
  return r.take();
}

SuiteReport cubic_suite(const RunConfig& cfg, const CubicSpaceModel& m) {
  SuiteRunner r(cfg, "cubic-spaces", m.name());
  const long b = cfg.bound;
  const std::size_t n = cfg.trials;
  const SamplerOptions opt = cfg.sampler();

  r.run("basepoint", 1, [&](Trial&) {
    const Point& c = m.basepoint();
    return m.det(c) == Rational(1) && m.sharp(c) == c && m.trace_form(c, c) == Rational(3);
  });
  r.run("trace_gram_full_rank", 1, [&](Trial&) { return rank(m.trace_gram()) == m.dim(); });
  r.run("adjoint_identity", n, [&](Trial& t) {
    auto x = random_point(m, t.rng(), b);
    t.input("x", x);
    return m.sharp(m.sharp(x)) == m.det(x) * x;
  });
  r.run("det_of_sharp", n, [&](Trial& t) {
    auto x = random_point(m, t.rng(), b);
    t.input("x", x);
    const Rational d = m.det(x);
    return m.det(m.sharp(x)) == d * d;
  });
  r.run("grad_sharp_compatibility", n, [&](Trial& t) {
    auto x = random_point(m, t.rng(), b), y = random_point(m, t.rng(), b);
    t.input("x", x);
    t.input("y", y);
    return Rational(3) * m.grad(x)(y) == m.trace_form(m.sharp(x), y);
  });
  r.run("euler", n, [&](Trial& t) {
    auto w = random_point(m, t.rng(), b);
    t.input("w", w);
    return m.grad(w)(w) == m.det(w) && m.grad(Rational(2) * w) == Rational(4) * m.grad(w);
  });
  r.run("trilinear_symmetry", n, [&](Trial& t) {
    auto u = random_point(m, t.rng(), b), v = random_point(m, t.rng(), b), w = random_point(m, t.rng(), b);
    t.input("u", u);
    t.input("v", v);
    t.input("w", w);
    const Rational f = m.trilinear(u, v, w);
    return f == m.trilinear(v, u, w) && f == m.trilinear(w, v, u);
  });
  r.run("trace_symmetry", n, [&](Trial& t) {
    auto x = random_point(m, t.rng(), b), y = random_point(m, t.rng(), b);
    t.input("x", x);
    t.input("y", y);
    return m.trace_form(x, y) == m.trace_form(y, x);
  });
  r.run("cross_diagonal", n, [&](Trial& t) {
    auto x = random_point(m, t.rng(), b);
    t.input("x", x);
    return m.cross(x, x) == Rational(2) * m.sharp(x);
  });
  r.run("u_operator_jordan", n, [&](Trial& t) {
    auto p = random_point(m, t.rng(), b);
    t.input("p", p);
    return m.u_operator(p, m.sharp(p)) == m.det(p) * p;
  });
  r.run("sample_X_on_X", n, [&](Trial& t) {
    auto x = sample_X(m, t.rng(), opt);
    t.input("x", x);
    return !x.is_zero() && m.sharp(x).is_zero();
  });
  r.run("sample_sec_on_cubic", n, [&](Trial& t) {
    auto p = sample_sec(m, t.rng(), opt);
    t.input("p", p);
    return m.det(p).is_zero();
  });
  r.run("sample_off_sec", n, [&](Trial& t) {
    auto w = sample_off_sec(m, t.rng(), opt);
    t.input("w", w);
    return !m.det(w).is_zero();
  });
  if (m.kind() == ModelKind::Segre) {
    r.run("oracle_adjugate", n, [&](Trial& t) {
      auto x = random_point(m, t.rng(), b);
      t.input("x", x);
      return m.sharp(x).coords == adjugate(x.coords);
    });
    r.run("oracle_trace_pairing", n, [&](Trial& t) {
      auto x = random_point(m, t.rng(), b), y = random_point(m, t.rng(), b);
      t.input("x", x);
      t.input("y", y);
      return m.trace_form(x, y) == trace(mat_mul(x.coords, y.coords));
    });
    r.run("oracle_u_operator", n, [&](Trial& t) {
      auto p = random_point(m, t.rng(), b), w = random_point(m, t.rng(), b);
      t.input("p", p);
      t.input("w", w);
      return m.u_operator(p, w).coords == mat_mul(mat_mul(p.coords, w.coords), p.coords);
    });
  }
  return r.take();
}

}  // namespace

VerificationReport cmd_verify_algebra(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.command = "verify-algebra";
  rep.config = cfg;
  for (AlgebraTag tag : {AlgebraTag::R, AlgebraTag::C, AlgebraTag::H, AlgebraTag::O})
    rep.suites.push_back(algebra_suite(cfg, tag));
  for (ModelKind k : cfg.models) rep.suites.push_back(cubic_suite(cfg, model(k)));
  return rep;
}

}  // namespace severi
