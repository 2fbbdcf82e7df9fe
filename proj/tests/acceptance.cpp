// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "severi/classify.hpp"
#include "severi/commands.hpp"
#include "severi/geometry.hpp"
#include "severi/linalg.hpp"
#include "severi/roots.hpp"

using namespace severi;

namespace {

constexpr std::uint64_t kSeed = 20240101;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << "first failure: " << why << "; ";
    ok = false;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

Pcg32 stream(const std::string& criterion, const CubicSpaceModel& m, std::uint64_t trial) {
  return keyed_stream(kSeed, "acceptance", m.name(), criterion, trial);
}

Point random_point(const CubicSpaceModel& m, Pcg32& rng, long b = 10) {
  RVector c(m.dim());
  for (auto& x : c) x = rng.uniform_int(b);
  return m.point(std::move(c));
}

// Runs body on successive trial streams until `target` instances were
// accepted; GenericityError means resample. Gives up after 4 * target + 64 draws.
std::size_t collect(const std::string& criterion, const CubicSpaceModel& m, std::size_t target, Outcome& out,
                    const std::function<bool(Pcg32&)>& body) {
  std::size_t accepted = 0, trial = 0;
  const std::size_t budget = 4 * target + 64;
  for (; accepted < target && trial < budget; ++trial) {
    Pcg32 rng = stream(criterion, m, trial);
    try {
      if (!body(rng)) {
        out.fail(m.name() + " " + criterion + " trial " + std::to_string(trial));
        return accepted;
      }
      ++accepted;
    } catch (const GenericityError&) {
    } catch (const SamplerExhausted&) {
    } catch (const std::exception& e) {
      out.fail(m.name() + " " + criterion + " trial " + std::to_string(trial) + ": " + e.what());
      return accepted;
    }
  }
  if (accepted < target) out.fail(m.name() + " " + criterion + ": only " + std::to_string(accepted) + " instances");
  return accepted;
}

Rational pow4(const Rational& x) {
  const Rational s = x * x;
  return s * s;
}

nlohmann::json fixture(const std::string& name) {
  std::ifstream in(default_fixture_dir() + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}

std::vector<std::string> strings(const RVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

// ---------------------------------------------------------------------------

void classification(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Classification c = classify_all(8);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::pair<std::size_t, std::size_t> nm[] = {{2, 5}, {4, 8}, {8, 14}, {16, 26}};
  o.require(c.varieties.size() == 4, "expected 4 varieties, got " + std::to_string(c.varieties.size()));
  for (std::size_t k = 0; k < std::min<std::size_t>(4, c.varieties.size()); ++k)
    o.require(c.varieties[k].n == nm[k].first && c.varieties[k].m == nm[k].second, "(n, m) mismatch at " + std::to_string(k));
  const auto fx = fixture("severi_varieties.json")["varieties"];
  o.require(fx.size() == c.varieties.size(), "fixture size");
  for (std::size_t k = 0; k < std::min(fx.size(), c.varieties.size()); ++k) {
    const auto& v = c.varieties[k];
    o.require(fx[k]["system"] == v.system && fx[k]["weight"] == v.weight && fx[k]["identification"] == v.identification &&
                  fx[k]["n"] == v.n && fx[k]["m"] == v.m,
              "fixture row " + std::to_string(k));
  }
  o.require(!c.partial, "flagged partial");
  o.require(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  o.detail << c.varieties.size() << " varieties, classify_all(8) in " << static_cast<int>(secs * 1000) << " ms";
}

void e6_table(Outcome& o) {
  const RootSystem e6 = build(RootType::E, 6);
  const auto rows = fixture("e6_table.json")["rows"];
  std::vector<RVector> values;
  for (int i = 1; i <= 6; ++i) {
    std::vector<long> c(6, 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    values.push_back(lambda_minus_w0(e6, make_weight(e6, c)));
    o.require(rows[static_cast<std::size_t>(i - 1)]["value"] == strings(values.back()), "row " + std::to_string(i));
  }
  // dual nodes give the same row: 1/6 and 3/5
  o.require(values[2] == values[4], "rows 3 and 5 differ");
  o.require(values[0] == values[5], "rows 1 and 6 differ");
  o.require(values[1] != values[3] && values[0] != values[2], "unexpected coincidence");
  o.detail << "6 rows exact, rows 1/6 and 3/5 coincide";
}

void an_candidates(Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    const std::string wn = "w" + std::to_string(n), wn1 = "w" + std::to_string(n - 1);
    const std::set<std::string> expected = {"w1", wn, "2w1", "2" + wn, "w2", wn1, "w1+" + wn};
    std::set<std::string> got;
    for (const auto& c : candidate_weights(build(RootType::A, n))) got.insert(c.lambda.str());
    o.require(got == expected, "A" + std::to_string(n));
  }
  o.detail << "A2..A8 each yield {w1, wn, 2w1, 2wn, w2, w(n-1), w1+wn}";
}

void nonsimple(Outcome& o) {
  const auto sols = nonsimple_solve();
  o.require(sols.size() == 3, "expected 3 solutions");
  std::size_t acc = 0;
  for (const auto& s : sols) acc += s.accepted ? 1 : 0;
  o.require(acc == 1, "expected exactly one accepted");

  // max over a few fixed draws gives the generic value
  auto generic = [](const SurfaceFamily& f, std::uint64_t salt) {
    std::size_t best = 0;
    for (std::uint64_t k = 0; k < 4; ++k) {
      Pcg32 rng = keyed_stream(kSeed, "acceptance", "terracini-family", std::to_string(salt), k);
      RVector s(f.param_count()), t(f.param_count());
      for (auto& x : s) x = rng.uniform_int(9);
      for (auto& x : t) x = rng.uniform_int(9);
      try {
        best = std::max(best, terracini_dim(f, s, t));
      } catch (const GenericityError&) {
      }
    }
    return best;
  };
  const std::size_t d15 = generic(SurfaceFamily::segre(1, 5), 1);
  const std::size_t dsv = generic(SurfaceFamily::segre_veronese(1, 1), 2);
  const std::size_t d22 = generic(SurfaceFamily::segre(2, 2), 3);
  o.require(d15 == 12, "segre(1,5) -> " + std::to_string(d15));
  o.require(dsv == 6, "P1 x v2(P1) -> " + std::to_string(dsv));
  o.require(d22 == 8, "segre(2,2) -> " + std::to_string(d22));
  for (const auto& s : sols) {
    const std::size_t t = s.n1 == 2 ? d22 : (s.d1 == 2 ? dsv : d15);
    o.require(s.terracini_dim == t, "recorded terracini value for " + s.identification);
    o.require(s.accepted == (t < s.ambient_dim), "verdict for " + s.identification);
  }
  o.detail << "3 families, 1 accepted; terracini segre(1,5)=" << d15 << " P1xv2(P1)=" << dsv << " segre(2,2)=" << d22;
}

void adjoint_identity(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    collect("adjoint", m, 1000, o, [&](Pcg32& rng) {
      const Point x = random_point(m, rng);
      return m.sharp(m.sharp(x)) == m.det(x) * x;
    });
  }
  o.detail << "1000 samples x 4 models";
}

void involution_diamond(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    collect("involution", m, 500, o, [&](Pcg32& rng) { return involution_check(m, sample_off_sec(m, rng)); });
    collect("diamond", m, 10, o, [&](Pcg32& rng) {
      const Point w0 = sample_off_sec(m, rng);
      std::vector<Triple> triples;
      for (int t = 0; t < 10; ++t) triples.push_back({random_point(m, rng), random_point(m, rng), random_point(m, rng)});
      const DiamondResult d = diamond_check(m, w0, triples);
      return d.consistent && d.triples_checked == 10 && d.lambda && *d.lambda == -pow4(m.det(w0)) / Rational(27);
    });
  }
  o.detail << "500 involutions x 4 models; 10 w0 x 10 triples, one lambda = -det^4/27 each";
}

void entry_loci(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    const std::size_t dim = m.variety_dim() / 2 + 2;
    collect("entry_locus", m, 50, o, [&](Pcg32& rng) {
      const SecantDecomp sd = sample_secant_decomp(m, rng);
      const EntryLocus locus = entry_locus(m, sd.P, rng);
      if (locus.sigma_basis.size() != dim || rank(locus.quadric_gram) != dim) return false;
      auto cx = locus.coordinates(sd.x), cy = locus.coordinates(sd.y);
      if (!cx || !cy || !locus.quadric(*cx).is_zero() || !locus.quadric(*cy).is_zero()) return false;
      for (const auto& q : quadric_points(locus, sd.x, rng, 3))
        if (!m.sharp(q).is_zero() || !locus.coordinates(q)) return false;
      for (int t = 0; t < 3; ++t) {
        RVector c(dim);
        for (auto& v : c) v = rng.uniform_int(10);
        if (locus.quadric(c).is_zero() != m.sharp(locus.combine(c)).is_zero()) return false;
      }
      return true;
    });
    collect("tangent_positive", m, 50, o, [&](Pcg32& rng) {
      const Point P = sample_sec_minus_X(m, rng);
      const Point P2 = m.u_operator(P, random_point(m, rng));
      if (m.sharp(P2).is_zero()) throw GenericityError("U_P image on X");
      return tangent_char_check(m, P, P2);
    });
    collect("tangent_negative", m, 50, o, [&](Pcg32& rng) {
      const Point P = sample_sec_minus_X(m, rng), P2 = sample_sec_minus_X(m, rng);
      return !tangent_char_check(m, P, P2);
    });
  }
  o.detail << "50 loci of dim 3/4/6/10, 50 positive + 50 negative tangent instances per model";
}

void cremona_duality(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    collect("cremona", m, 200, o, [&](Pcg32& rng) {
      const Point x = sample_X(m, rng), w0 = sample_off_sec(m, rng);
      const Point s = second_point(m, x, w0);
      const Covector l = l_map(m, w0, x);
      return m.det(s).is_zero() && proportional(l, m.grad(s)) && dual_det(m, l).is_zero();
    });
    collect("total_transform", m, 200, o, [&](Pcg32& rng) {
      const Point x = sample_X(m, rng), d = random_point(m, rng);
      return dual_det(m, total_transform_probe(m, x, d)).is_zero();
    });
  }
  o.detail << "200 (x, w0) and 200 (x, d) pairs per model";
}

void homogeneity(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    collect("homogeneity", m, 20, o, [&](Pcg32& rng) {
      const Point x = sample_X(m, rng), x2 = sample_X(m, rng);
      const HomogeneityMap h = homogeneity_map(m, x, x2, rng, {}, 20);
      return proportional(m.point(h.A.apply(x.coords)), x2);
    });
    collect("sec_transitivity", m, 20, o, [&](Pcg32& rng) {
      const Point p = sample_sec_minus_X(m, rng);
      const Point w0 = good_w0_for(m, p, rng);
      const SecTransitivity s = sec_transitivity(m, p, w0);
      return s.rank >= m.projective_dim() && s.kernel_intersection_dim == 0;
    });
  }
  o.detail << "20 maps x 20 preserved X-samples, 20 (p, w0) pairs with rank >= m per model";
}

void secant_dimension(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    collect("sec_on_cubic", m, 200, o, [&](Pcg32& rng) { return m.det(sample_X(m, rng) + sample_X(m, rng)).is_zero(); });
    collect("terracini", m, 20, o, [&](Pcg32& rng) {
      const Point x = sample_X(m, rng), y = sample_X(m, rng);
      if (m.sharp(x + y).is_zero()) throw GenericityError("line in X");
      return terracini_dim(m, x, y) == 3 * m.variety_dim() / 2 + 2;
    });
  }
  o.detail << "terracini = 3n/2 + 2 on 20 pairs, det(x + y) = 0 on 200 pairs per model";
}

void gram(Outcome& o) {
  for (ModelKind k : kAllModels) {
    const auto& m = model(k);
    collect("gram", m, 100, o, [&](Pcg32& rng) { return gram_invertibility_check(m, sample_off_sec(m, rng)); });
  }
  o.detail << "100 off-Sec samples per model";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"classification", classification},
      {"e6-table", e6_table},
      {"an-candidates", an_candidates},
      {"nonsimple-branch", nonsimple},
      {"adjoint-identity", adjoint_identity},
      {"involution-diamond", involution_diamond},
      {"entry-loci", entry_loci},
      {"cremona-duality", cremona_duality},
      {"homogeneity", homogeneity},
      {"secant-dimension", secant_dimension},
      {"gram-invertibility", gram},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %-20s %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
