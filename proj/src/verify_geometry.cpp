#include <algorithm>

#include "severi/commands.hpp"
#include "severi/geometry.hpp"

namespace severi {

namespace {

Point random_point(const CubicSpaceModel& m, Pcg32& rng, long bound) {
  RVector c(m.dim());
  for (auto& x : c) x = rng.uniform_int(bound);
  return m.point(std::move(c));
}

// Re-runs f on GenericityError within the retry budget, counting resamples.
template <class F>
auto with_resampling(Trial& t, int retries, F&& f) -> decltype(f()) {
  for (int k = 0;; ++k) {
    try {
      return f();
    } catch (const GenericityError& e) {
      t.observe("resampled");
      if (k + 1 >= retries) throw SamplerExhausted(std::string("retry budget exhausted: ") + e.what());
    }
  }
}

Rational pow4(const Rational& x) {
  const Rational s = x * x;
  return s * s;
}

SuiteReport geometry_suite(const RunConfig& cfg, const CubicSpaceModel& m) {
  SuiteRunner r(cfg, "severi-geometry", m.name());
  const std::size_t n = cfg.trials;
  const long b = cfg.bound;
  const SamplerOptions opt = cfg.sampler();
  const std::size_t entry_dim = m.variety_dim() / 2 + 2;

  r.run("secant_on_cubic", n, [&](Trial& t) {
    auto x = sample_X(m, t.rng(), opt), y = sample_X(m, t.rng(), opt);
    t.input("x", x);
    t.input("y", y);
    return m.det(x + y).is_zero();
  });
  r.run("l_matrix_full_rank", n, [&](Trial& t) {
    auto w = sample_off_sec(m, t.rng(), opt);
    t.input("w", w);
    return l_matrix(m, w).rank() == m.dim();
  });
  r.run("l_map_at_w0", n, [&](Trial& t) {
    auto w = sample_off_sec(m, t.rng(), opt);
    t.input("w", w);
    return l_map(m, w, w) == -m.det(w) * m.grad(w);
  });
  r.run("second_point_duality", n, [&](Trial& t) {
    return with_resampling(t, cfg.retries, [&] {
      auto x = sample_X(m, t.rng(), opt);
      auto w = sample_off_sec(m, t.rng(), opt);
      Point s = second_point(m, x, w);
      t.input("x", x);
      t.input("w0", w);
      const Covector l = l_map(m, w, x);
      const Covector gs = m.grad(s);
      return m.det(s).is_zero() && !gs.is_zero() && proportional(l, gs) && dual_det(m, l).is_zero();
    });
  });
  r.run("involution", n, [&](Trial& t) {
    auto w = sample_off_sec(m, t.rng(), opt);
    t.input("w0", w);
    return involution_check(m, w);
  });
  r.run("diamond", n, [&](Trial& t) {
    auto w = sample_off_sec(m, t.rng(), opt);
    t.input("w0", w);
    std::vector<Triple> triples;
    for (int k = 0; k < 10; ++k)
      triples.push_back(Triple{random_point(m, t.rng(), b), random_point(m, t.rng(), b), random_point(m, t.rng(), b)});
    const DiamondResult d = diamond_check(m, w, triples);
    // closed form: lambda_{w0} = -det(w0)^4 / 27 with the trace-form transport
    return d.consistent && d.lambda && *d.lambda == -pow4(m.det(w)) / Rational(27);
  });
  r.run("total_transform", n, [&](Trial& t) {
    return with_resampling(t, cfg.retries, [&] {
      auto x = sample_X(m, t.rng(), opt);
      auto d = random_point(m, t.rng(), b);
      t.input("x", x);
      t.input("d", d);
      total_transform_probe(m, x, d);
      return true;
    });
  });
  r.run("entry_locus", n, [&](Trial& t) {
    return with_resampling(t, cfg.retries, [&] {
      SecantDecomp sd = sample_secant_decomp(m, t.rng(), opt);
      EntryLocus locus = entry_locus(m, sd.P, t.rng());
      t.input("x", sd.x);
      t.input("y", sd.y);
      if (locus.sigma_basis.size() != entry_dim) return false;
      // {q_P = 0} lies in X ...
      auto cx = locus.coordinates(sd.x);
      if (!cx || !locus.quadric(*cx).is_zero()) return false;
      for (const auto& q : quadric_points(locus, sd.x, t.rng(), 3, b))
        if (!m.sharp(q).is_zero()) return false;
      // ... and the rest of Sigma_P misses X
      for (int k = 0; k < 3; ++k) {
        RVector c(entry_dim);
        for (auto& v : c) v = t.rng().uniform_int(b);
        const bool on_quadric = locus.quadric(c).is_zero();
        const bool on_x = m.sharp(locus.combine(c)).is_zero();
        if (on_quadric != on_x) return false;
      }
      return true;
    });
  });
  r.run("tangent_char_inside", n, [&](Trial& t) {
    return with_resampling(t, cfg.retries, [&] {
      auto P = sample_sec_minus_X(m, t.rng(), opt);
      auto w = m.u_operator(P, random_point(m, t.rng(), b));
      if (m.sharp(w).is_zero()) throw GenericityError("U_P image point on X");
      t.input("P", P);
      t.input("P2", w);
      return tangent_char_check(m, P, w);
    });
  });
  r.run("tangent_char_outside", n, [&](Trial& t) {
    auto P = sample_sec_minus_X(m, t.rng(), opt);
    auto P2 = sample_sec_minus_X(m, t.rng(), opt);
    t.input("P", P);
    t.input("P2", P2);
    return !tangent_char_check(m, P, P2);
  });
  r.run("companion_point", n, [&](Trial& t) {
    return with_resampling(t, cfg.retries, [&] {
      SecantDecomp sd = sample_secant_decomp(m, t.rng(), opt);
      EntryLocus locus = entry_locus(m, sd.P, t.rng());
      auto w = sample_off_sec(m, t.rng(), opt);
      t.input("x", sd.x);
      t.input("y", sd.y);
      t.input("w0", w);
      auto probes = quadric_points(locus, sd.x, t.rng(), 3, b);
      companion_point(m, locus, w, probes);
      return true;
    });
  });
  r.run("homogeneity", n, [&](Trial& t) {
    auto x = sample_X(m, t.rng(), opt), x2 = sample_X(m, t.rng(), opt);
    t.input("x", x);
    t.input("x2", x2);
    homogeneity_map(m, x, x2, t.rng(), opt, 20);
    return true;
  });
  r.run("sec_transitivity", n, [&](Trial& t) {
    auto p = sample_sec_minus_X(m, t.rng(), opt);
    auto w = good_w0_for(m, p, t.rng(), opt);
    t.input("p", p);
    t.input("w0", w);
    const SecTransitivity s = sec_transitivity(m, p, w);
    return s.rank >= m.projective_dim() && s.kernel_intersection_dim == 0;
  });
  r.run("gram_invertibility", n, [&](Trial& t) {
    auto w = sample_off_sec(m, t.rng(), opt);
    t.input("omega", w);
    return gram_invertibility_check(m, w);
  });
  // not a theorem: F(omega, ., .) at omega on X is only observed
  r.run("observe_gram_on_X", std::min<std::size_t>(n, 10), [&](Trial& t) {
    auto x = sample_X(m, t.rng(), opt);
    t.input("omega", x);
    t.observe(gram_invertibility_check(m, x) ? "full_rank" : "singular");
    return true;
  });
  r.run("terracini", n, [&](Trial& t) {
    return with_resampling(t, cfg.retries, [&] {
      auto x = sample_X(m, t.rng(), opt), y = sample_X(m, t.rng(), opt);
      if (m.sharp(x + y).is_zero()) throw GenericityError("line xy lies in X");
      t.input("x", x);
      t.input("y", y);
      return terracini_dim(m, x, y) == 3 * m.variety_dim() / 2 + 2;
    });
  });
  return r.take();
}

}  // namespace

VerificationReport cmd_verify_geometry(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.command = "verify-geometry";
  rep.config = cfg;
  for (ModelKind k : cfg.models) rep.suites.push_back(geometry_suite(cfg, model(k)));
  return rep;
}

}  // namespace severi
