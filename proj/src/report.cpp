#include "severi/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace severi {

namespace {

constexpr std::size_t kMaxFailureRecords = 10;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("SEVERI_SEED");
  if (env == nullptr || *env == '\0') return 20240101;
  std::string_view s(env);
  int base = 10;
  if (s.starts_with("0x") || s.starts_with("0X")) {
    s.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("SEVERI_SEED is not an unsigned 64-bit integer: " + std::string(env));
  return v;
}

void RunConfig::validate() const {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (retries < 1) throw std::invalid_argument("retries must be >= 1");
  if (models.empty()) throw std::invalid_argument("no model selected");
}

std::size_t SuiteReport::attempted() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.attempted;
  return n;
}

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed;
  return n;
}

bool VerificationReport::ok() const {
  for (const auto& s : suites)
    if (!s.ok()) return false;
  return true;
}

std::string VerificationReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["command"] = command;
  doc["seed"] = config.seed;
  doc["trials"] = config.trials;
  doc["bound"] = config.bound;
  doc["retries"] = config.retries;
  doc["generator"] = "pcg32-xsh-rr";
  ordered_json suites_json = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json sj;
    sj["suite"] = s.suite;
    sj["target"] = s.target;
    sj["attempted"] = s.attempted();
    sj["passed"] = s.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json cj;
      cj["id"] = c.id;
      cj["status"] = c.ok() ? "pass" : "fail";
      cj["attempted"] = c.attempted;
      cj["passed"] = c.passed;
      cj["inputs_digest"] = hex64(c.digest);
      if (!c.observations.empty()) {
        ordered_json obs;
        for (const auto& [k, v] : c.observations) obs[k] = v;
        cj["observations"] = obs;
      }
      if (!c.failures.empty()) {
        ordered_json fails = ordered_json::array();
        for (const auto& f : c.failures) {
          ordered_json fj;
          fj["trial"] = f.trial;
          fj["stream"] = s.suite + "/" + s.target + "/" + c.id + "/" + std::to_string(f.trial);
          fj["message"] = f.message;
          ordered_json in = ordered_json::object();
          for (const auto& [name, coords] : f.inputs) in[name] = coords;
          fj["inputs"] = in;
          fails.push_back(fj);
        }
        cj["failures"] = fails;
      }
      checks.push_back(cj);
    }
    sj["checks"] = checks;
    suites_json.push_back(sj);
  }
  doc["suites"] = suites_json;
  if (!result_json.empty()) doc["result"] = ordered_json::parse(result_json);
  doc["passed"] = ok();
  if (wall_time) doc["wall_time_seconds"] = *wall_time;
  return doc.dump(2) + "\n";
}

std::vector<std::string> coord_strings(const RVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

void Trial::input(const std::string& name, const Point& p) { inputs_.emplace_back(name, coord_strings(p.coords)); }

void Trial::input(const std::string& name, std::vector<std::string> coords) {
  inputs_.emplace_back(name, std::move(coords));
}

SuiteRunner::SuiteRunner(const RunConfig& cfg, std::string suite, std::string target)
    : cfg_(cfg), report_{std::move(suite), std::move(target), {}} {}

void SuiteRunner::run(const std::string& check, std::size_t trials, const std::function<bool(Trial&)>& body) {
  CheckRecord rec;
  rec.id = check;
  for (std::size_t t = 0; t < trials; ++t) {
    Trial trial(t, keyed_stream(cfg_.seed, report_.suite, report_.target, check, t));
    bool ok = false;
    std::string message;
    try {
      ok = body(trial);
      if (!ok) message = "check returned false";
    } catch (const std::exception& e) {
      message = e.what();
    }
    ++rec.attempted;
    if (ok) ++rec.passed;
    for (const auto& [name, coords] : trial.inputs()) {
      rec.digest = fnv1a(name, rec.digest);
      for (const auto& c : coords) rec.digest = fnv1a(c + ",", rec.digest);
    }
    for (const auto& [k, v] : trial.observations()) rec.observations[k] += v;
    if (!ok) {
      if (rec.failures.size() < kMaxFailureRecords) rec.failures.push_back(FailureRecord{t, message, trial.inputs()});
    }
  }
  report_.checks.push_back(std::move(rec));
}

}  // namespace severi
