#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "severi/commands.hpp"
#include "severi/roots.hpp"

using namespace severi;

namespace {

std::vector<ModelKind> parse_models(const std::string& spec) {
  if (spec.empty() || spec == "all") return {std::begin(kAllModels), std::end(kAllModels)};
  std::vector<ModelKind> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto k = parse_model(item);
    if (!k) throw std::invalid_argument("unknown model '" + item + "'");
    out.push_back(*k);
  }
  return out;
}

int emit(const VerificationReport& rep, const std::string& out) {
  const std::string doc = rep.to_json();
  if (out.empty() || out == "-") {
    std::cout << doc << "\n";
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "severi: cannot write " << out << "\n";
      return 2;
    }
    f << doc << "\n";
    for (const auto& s : rep.suites)
      std::cerr << s.suite << "/" << s.target << ": " << s.passed() << "/" << s.attempted() << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for cubic Jordan spaces and Severi varieties"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.seed = default_seed();
  std::string models = "all", out, emit_what, fixtures, kind, coords;

  auto common = [&](CLI::App* c) {
    c->add_option("--seed", cfg.seed, "RNG seed (default: SEVERI_SEED or 20240101)");
    c->add_option("--out", out, "write the JSON report here instead of stdout");
    c->add_flag("--timing", cfg.timing, "include wall_time_seconds in the report");
  };
  auto sampling = [&](CLI::App* c) {
    common(c);
    c->add_option("--model", models, "comma list of VERONESE,SEGRE,PFAFFIAN,EXCEPTIONAL or all");
    c->add_option("--trials", cfg.trials, "trials per check")->check(CLI::PositiveNumber);
    c->add_option("--bound", cfg.bound, "integer coordinate bound for sampling")->check(CLI::PositiveNumber);
    c->add_option("--retries", cfg.retries, "resampling budget")->check(CLI::PositiveNumber);
  };

  auto* va = app.add_subcommand("verify-algebra", "composition algebras and cubic-space identities");
  sampling(va);
  auto* vg = app.add_subcommand("verify-geometry", "Sec(X), Cremona, entry loci, homogeneity, Terracini");
  sampling(vg);
  auto* cl = app.add_subcommand("classify", "root-theoretic classification of Severi varieties");
  common(cl);
  cl->add_option("--max-rank", cfg.max_rank, "largest simple rank searched")->check(CLI::Range(1, 8));
  cl->add_option("--types", cfg.types, "root system letters for the catalog, e.g. ADE");
  cl->add_option("--emit", emit_what, "e6-table, an-candidates, catalog, nonsimple or varieties");
  cl->add_option("--fixtures", fixtures, "fixture directory (default: SEVERI_FIXTURES or the source tree)");
  auto* cr = app.add_subcommand("cremona", "det, grad, sharp and Cremona image of one point");
  cr->add_option("--out", out, "write the JSON report here instead of stdout");
  cr->add_option("model", kind, "model name")->required();
  cr->add_option("coords", coords, "comma-separated rationals, e.g. 1,0,-1/2,...")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (*va || *vg) {
      cfg.models = parse_models(models);
      rep = *va ? cmd_verify_algebra(cfg) : cmd_verify_geometry(cfg);
    } else if (*cl) {
      for (char c : cfg.types)
        if (!parse_root_type(static_cast<char>(std::toupper(static_cast<unsigned char>(c)))))
          throw std::invalid_argument(std::string("unknown root type '") + c + "'");
      rep = cmd_classify(cfg, ClassifyOptions{emit_what, fixtures});
    } else {
      auto k = parse_model(kind);
      if (!k) throw std::invalid_argument("unknown model '" + kind + "'");
      rep = cmd_cremona(*k, coords);
    }
    if (cfg.timing) rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "severi: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "severi: " << e.what() << "\n";
    return 3;
  }
}
