#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "severi/cubic_space.hpp"
#include "severi/random.hpp"

namespace severi {

/// Seed used when --seed is absent: SEVERI_SEED from the environment if set
/// (decimal or 0x-prefixed hex), else 20240101.
std::uint64_t default_seed();

struct RunConfig {
  std::uint64_t seed = 20240101;
  std::size_t trials = 200;
  long bound = 10;
  int retries = 64;
  std::vector<ModelKind> models{std::begin(kAllModels), std::end(kAllModels)};
  /// Root system type letters for the catalog; empty means all.
  std::string types;
  int max_rank = 8;
  /// Adds wall_time_seconds to reports (and so breaks byte-identical output).
  bool timing = false;

  SamplerOptions sampler() const { return SamplerOptions{bound, retries}; }
  /// Throws std::invalid_argument on a zero trial count, bound < 1 or retries < 1.
  void validate() const;
};

/// Failing trial: enough to regenerate the instance (seed + suite/target/check/trial
/// key the sampling stream) plus the inputs themselves.
struct FailureRecord {
  std::uint64_t trial = 0;
  std::string message;
  std::vector<std::pair<std::string, std::vector<std::string>>> inputs;
};

struct CheckRecord {
  std::string id;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  /// FNV-1a over the text of every registered input, in trial order.
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  std::map<std::string, std::uint64_t> observations;
  std::vector<FailureRecord> failures;

  bool ok() const { return passed == attempted; }
};

struct SuiteReport {
  std::string suite;
  std::string target;
  std::vector<CheckRecord> checks;

  std::size_t attempted() const;
  std::size_t passed() const;
  bool ok() const { return attempted() == passed(); }
};

struct VerificationReport {
  std::string command;
  RunConfig config;
  std::vector<SuiteReport> suites;
  std::optional<double> wall_time;
  /// Command-specific JSON object emitted under "result" (classify, cremona).
  std::string result_json;

  bool ok() const;
  /// Stable-key JSON document.
  std::string to_json() const;
};

/// Per-trial context handed to a check body.
class Trial {
 public:
  Trial(std::uint64_t index, Pcg32 rng) : index_(index), rng_(rng) {}

  std::uint64_t index() const { return index_; }
  Pcg32& rng() { return rng_; }

  /// Registers an input for the digest and for failure records.
  void input(const std::string& name, const Point& p);
  void input(const std::string& name, std::vector<std::string> coords);
  /// Adds to a named counter reported with the check (resamples, observations).
  void observe(const std::string& key, std::uint64_t amount = 1) { observations_[key] += amount; }

  const std::vector<std::pair<std::string, std::vector<std::string>>>& inputs() const { return inputs_; }
  const std::map<std::string, std::uint64_t>& observations() const { return observations_; }

 private:
  std::uint64_t index_;
  Pcg32 rng_;
  std::vector<std::pair<std::string, std::vector<std::string>>> inputs_;
  std::map<std::string, std::uint64_t> observations_;
};

/// Thrown by a check body to fail the trial with a message.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs check bodies over seeded trials and collects records into a suite.
class SuiteRunner {
 public:
  SuiteRunner(const RunConfig& cfg, std::string suite, std::string target);

  /// body returns true on pass; any exception fails the trial with its message.
  void run(const std::string& check, std::size_t trials, const std::function<bool(Trial&)>& body);

  SuiteReport take() { return std::move(report_); }

 private:
  const RunConfig& cfg_;
  SuiteReport report_;
};

std::vector<std::string> coord_strings(const RVector& v);

}  // namespace severi
