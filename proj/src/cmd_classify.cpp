#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "severi/classify.hpp"
#include "severi/commands.hpp"

#ifndef SEVERI_FIXTURE_DIR
#define SEVERI_FIXTURE_DIR "fixtures"
#endif

namespace severi {

using nlohmann::ordered_json;

std::string default_fixture_dir() {
  const char* env = std::getenv("SEVERI_FIXTURES");
  if (env != nullptr && *env != '\0') return env;
  return SEVERI_FIXTURE_DIR;
}

namespace {

ordered_json load_fixture(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/" + name);
  if (!in) throw CheckFailed("fixture not found: " + dir + "/" + name);
  return ordered_json::parse(in);
}

ordered_json coords_json(const RVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

int rank_of_label(const std::string& system) {
  // "A5" -> 5, "A2xA2" -> 2 (largest factor)
  int best = 0;
  std::size_t i = 0;
  while (i < system.size()) {
    if (std::isdigit(static_cast<unsigned char>(system[i]))) {
      int v = 0;
      while (i < system.size() && std::isdigit(static_cast<unsigned char>(system[i]))) v = 10 * v + (system[i++] - '0');
      best = std::max(best, v);
    } else {
      ++i;
    }
  }
  return best;
}

bool type_selected(const std::string& types, const std::string& system) {
  if (types.empty()) return true;
  for (char c : types)
    if (std::toupper(static_cast<unsigned char>(c)) == system[0]) return true;
  return false;
}

// Multiset difference of two JSON arrays, one line per unmatched element.
std::string array_diff(const ordered_json& expected, const ordered_json& actual) {
  std::multiset<std::string> e, a;
  for (const auto& x : expected) e.insert(x.dump());
  for (const auto& x : actual) a.insert(x.dump());
  std::ostringstream out;
  for (const auto& x : e)
    if (a.count(x) < e.count(x) && out.str().find("- " + x + "\n") == std::string::npos) out << "- " << x << "\n";
  for (const auto& x : a)
    if (e.count(x) < a.count(x) && out.str().find("+ " + x + "\n") == std::string::npos) out << "+ " << x << "\n";
  if (expected.size() == actual.size() && out.str().empty() && expected != actual) out << "order differs\n";
  return out.str();
}

void require_equal(const ordered_json& expected, const ordered_json& actual, const std::string& what) {
  if (expected == actual) return;
  std::string diff = (expected.is_array() && actual.is_array())
                         ? array_diff(expected, actual)
                         : "- " + expected.dump() + "\n+ " + actual.dump() + "\n";
  throw CheckFailed(what + " differs from fixture:\n" + diff);
}

ordered_json variety_json(const SeveriVariety& v) {
  ordered_json j;
  j["system"] = v.system;
  j["weight"] = v.weight;
  j["identification"] = v.identification;
  j["n"] = v.n;
  j["m"] = v.m;
  return j;
}

ordered_json nonsimple_json(const NonsimpleSolution& s) {
  ordered_json j;
  j["n1"] = s.n1;
  j["d1"] = s.d1;
  j["n2"] = s.n2;
  j["d2"] = s.d2;
  j["identification"] = s.identification;
  j["ambient_dim"] = s.ambient_dim;
  j["terracini_dim"] = s.terracini_dim;
  j["accepted"] = s.accepted;
  return j;
}

ordered_json candidate_json(const RootSystem& rs, const CandidateReport& c) {
  ordered_json j;
  j["system"] = c.system;
  j["weight"] = c.lambda.str();
  j["n"] = c.n;
  j["dim_v"] = c.dim_v.str();
  j["m"] = c.m.str();
  ordered_json w = ordered_json::array();
  for (const auto& p : c.witnesses)
    w.push_back(ordered_json::array({coords_json(rs.positive_roots[p.alpha]), coords_json(rs.positive_roots[p.beta])}));
  j["witnesses"] = w;
  j["adjoint"] = c.adjoint;
  j["severi_condition"] = c.severi_condition;
  j["verdict"] = c.verdict;
  j["identification"] = c.identification;
  return j;
}

// Catalog entries without the witness coordinates, as stored in the fixture.
ordered_json catalog_summary(const ordered_json& entry) {
  ordered_json j = entry;
  j["witnesses"] = entry["witnesses"].size();
  return j;
}

ordered_json e6_table() {
  const RootSystem e6 = build(RootType::E, 6);
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 6; ++i) {
    std::vector<long> c(6, 0);
    c[static_cast<std::size_t>(i)] = 1;
    ordered_json row;
    row["i"] = i + 1;
    row["value"] = coords_json(lambda_minus_w0(e6, make_weight(e6, c)));
    rows.push_back(row);
  }
  return rows;
}

// The symbolic A_n candidate names with n substituted.
std::set<std::string> an_expected(const ordered_json& symbols, int n) {
  std::set<std::string> out;
  for (const auto& s : symbols) {
    std::string t = s.get<std::string>();
    auto sub = [&](const std::string& from, const std::string& to) {
      for (std::size_t p; (p = t.find(from)) != std::string::npos;) t.replace(p, from.size(), to);
    };
    sub("w(n-1)", "w" + std::to_string(n - 1));
    sub("wn", "w" + std::to_string(n));
    // 2 w_n with n = 1 style collisions collapse to the canonical text
    std::vector<long> coeffs(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    while (pos < t.size()) {
      std::size_t plus = t.find('+', pos);
      std::string term = t.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
      std::size_t w = term.find('w');
      long k = w == 0 ? 1 : std::stol(term.substr(0, w));
      coeffs[static_cast<std::size_t>(std::stoi(term.substr(w + 1)) - 1)] += k;
      if (plus == std::string::npos) break;
      pos = plus + 1;
    }
    out.insert(DominantWeight{coeffs, {}}.str());
  }
  return out;
}

}  // namespace

VerificationReport cmd_classify(const RunConfig& cfg, const ClassifyOptions& opt) {
  static const std::set<std::string> kEmits = {"", "e6-table", "an-candidates", "catalog", "nonsimple", "varieties"};
  if (!kEmits.count(opt.emit)) throw std::invalid_argument("unknown --emit value '" + opt.emit + "'");
  if (cfg.max_rank < 1) throw std::invalid_argument("max-rank must be >= 1");

  const std::string dir = opt.fixture_dir.empty() ? default_fixture_dir() : opt.fixture_dir;
  const int max_rank = cfg.max_rank;
  VerificationReport rep;
  rep.command = "classify";
  rep.config = cfg;

  const auto systems = simple_systems_up_to(max_rank);
  const Classification cl = classify_all(max_rank);
  const auto nonsimple = nonsimple_solve();

  ordered_json varieties = ordered_json::array();
  for (const auto& v : cl.varieties) varieties.push_back(variety_json(v));
  ordered_json ns = ordered_json::array();
  for (const auto& s : nonsimple) ns.push_back(nonsimple_json(s));
  ordered_json catalog = ordered_json::array();
  for (const auto& rs : systems)
    if (type_selected(cfg.types, rs.label()))
      for (const auto& c : candidate_weights(rs)) catalog.push_back(candidate_json(rs, c));

  SuiteRunner r(cfg, "root-classifier", "max-rank-" + std::to_string(max_rank));

  r.run("root_system_invariants", systems.size(), [&](Trial& t) {
    const RootSystem& rs = systems[t.index()];
    t.input("system", {rs.label()});
    if (rs.positive_roots.size() != classical_positive_count(rs.type, rs.rank))
      throw CheckFailed(rs.label() + ": wrong number of positive roots");
    for (const auto& a : rs.positive_roots)
      for (const auto& c : rs.simple_coefficients(a))
        if (!c.is_integer() || c.sign() < 0) throw CheckFailed(rs.label() + ": root not a non-negative combination");
    for (const auto& a : rs.positive_roots) {
      RVector b = w0_action(rs, a);
      for (auto& x : b) x = -x;
      if (!rs.positive_index(b)) throw CheckFailed(rs.label() + ": -w0 does not preserve positive roots");
    }
    if (rs.minus_w0 != diagram_involution(rs.type, rs.rank))
      throw CheckFailed(rs.label() + ": -w0 differs from the diagram involution");
    const Matrix cm = rs.cartan_matrix();
    for (std::size_t i = 0; i < rs.minus_w0.size(); ++i) {
      if (rs.minus_w0[rs.minus_w0[i]] != i) throw CheckFailed(rs.label() + ": -w0 is not an involution");
      for (std::size_t j = 0; j < rs.minus_w0.size(); ++j)
        if (cm(rs.minus_w0[i], rs.minus_w0[j]) != cm(i, j)) throw CheckFailed(rs.label() + ": -w0 breaks the Cartan matrix");
    }
    RVector half(rs.ambient);
    for (const auto& a : rs.positive_roots)
      for (std::size_t k = 0; k < half.size(); ++k) half[k] += a[k] / Rational(2);
    return half == rs.rho && rs.w0_word.size() == rs.positive_roots.size();
  });

  r.run("witness_equation", systems.size(), [&](Trial& t) {
    const RootSystem& rs = systems[t.index()];
    t.input("system", {rs.label()});
    for (const auto& c : candidate_weights(rs)) {
      const RVector target = lambda_minus_w0(rs, c.lambda);
      for (const auto& p : c.witnesses) {
        RVector s = rs.positive_roots[p.alpha];
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += rs.positive_roots[p.beta][k];
        if (s != target) throw CheckFailed(rs.label() + " " + c.lambda.str() + ": witness does not satisfy the equation");
      }
    }
    return true;
  });

  r.run("enumeration_boundary", systems.size(), [&](Trial& t) {
    const RootSystem& rs = systems[t.index()];
    t.input("system", {rs.label()});
    const Rational h(rs.coxeter_number);
    if (height(rs, rs.highest_root) != h - Rational(1)) throw CheckFailed(rs.label() + ": highest root height != h - 1");
    std::size_t layer = 0;
    for (const auto& l : dominant_weights_up_to(rs, h)) {
      weyl_dim(rs, l);  // throws unless integral
      if (height(rs, l.coords) <= h - Rational(1)) continue;
      ++layer;
      if (height(rs, lambda_minus_w0(rs, l)) != Rational(2) * height(rs, l.coords))
        throw CheckFailed(rs.label() + ": <lambda - w0 lambda, rho_check> != 2 <lambda, rho_check>");
      if (!witness_pairs(rs, l).empty()) throw CheckFailed(rs.label() + " " + l.str() + ": witness beyond the bound");
    }
    t.observe("boundary_weights", layer);
    return true;
  });

  r.run("deterministic", 1, [&](Trial&) { return classify_all(max_rank).varieties == cl.varieties; });

  r.run("fixture_severi_varieties", 1, [&](Trial&) {
    const ordered_json fx = load_fixture(dir, "severi_varieties.json");
    ordered_json expected = ordered_json::array();
    for (const auto& v : fx["varieties"])
      if (v["min_rank"].get<int>() <= max_rank) {
        ordered_json e = v;
        e.erase("min_rank");
        expected.push_back(e);
      }
    require_equal(expected, varieties, "severi varieties");
    require_equal(fx["nonsimple"], ns, "non-simple branch");
    return true;
  });

  if (max_rank >= 6) {
    r.run("fixture_e6_table", 1, [&](Trial&) {
      require_equal(load_fixture(dir, "e6_table.json")["rows"], e6_table(), "E6 table");
      return true;
    });
  }

  r.run("fixture_an_candidates", 1, [&](Trial& t) {
    const ordered_json fx = load_fixture(dir, "an_candidates.json");
    const int lo = fx["ranks"][0].get<int>();
    const int hi = std::min(fx["ranks"][1].get<int>(), max_rank);
    for (int n = lo; n <= hi; ++n) {
      const RootSystem rs = build(RootType::A, n);
      std::set<std::string> got;
      for (const auto& c : candidate_weights(rs)) got.insert(c.lambda.str());
      const auto want = an_expected(fx["candidates"], n);
      if (got != want) {
        ordered_json g(got), w(want);
        throw CheckFailed("A" + std::to_string(n) + " candidates differ from fixture:\n" + array_diff(w, g));
      }
      ordered_json diffs;
      for (int i = 1; i <= n; ++i) {
        std::vector<long> c(static_cast<std::size_t>(n), 0);
        c[static_cast<std::size_t>(i - 1)] = 1;
        diffs["w" + std::to_string(i)] = coords_json(lambda_minus_w0(rs, make_weight(rs, c)));
      }
      require_equal(fx["omega_minus_w0_omega"]["A" + std::to_string(n)], diffs, "A" + std::to_string(n) + " differences");
      t.observe("ranks_checked");
    }
    return true;
  });

  r.run("fixture_deficient_catalog", 1, [&](Trial&) {
    const ordered_json fx = load_fixture(dir, "deficient_catalog.json");
    ordered_json expected = ordered_json::array();
    for (const auto& e : fx["entries"]) {
      const std::string sys = e["system"].get<std::string>();
      if (rank_of_label(sys) <= max_rank && type_selected(cfg.types, sys) &&
          (sys[0] != 'E' || rank_of_label(sys) <= 8))
        expected.push_back(e);
    }
    ordered_json actual = ordered_json::array();
    for (const auto& e : catalog) actual.push_back(catalog_summary(e));
    require_equal(expected, actual, "deficient catalog");
    return true;
  });

  rep.suites.push_back(r.take());

  ordered_json result;
  if (opt.emit.empty() || opt.emit == "varieties") {
    result["max_rank"] = max_rank;
    result["partial"] = cl.partial;
    result["varieties"] = varieties;
    result["notes"] = cl.notes;
  }
  if (opt.emit.empty() || opt.emit == "nonsimple") result["nonsimple"] = ns;
  if (opt.emit.empty() || opt.emit == "catalog") result["catalog"] = catalog;
  if (opt.emit == "e6-table") result["e6_table"] = e6_table();
  if (opt.emit == "an-candidates") {
    ordered_json an;
    for (int n = 1; n <= max_rank; ++n) {
      ordered_json names = ordered_json::array();
      for (const auto& c : candidate_weights(build(RootType::A, n))) names.push_back(c.lambda.str());
      an["A" + std::to_string(n)] = names;
    }
    result["an_candidates"] = an;
  }
  rep.result_json = result.dump();
  return rep;
}

}  // namespace severi
