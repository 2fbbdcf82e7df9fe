#pragma once

#include <string>

#include "severi/cubic_space.hpp"
#include "severi/report.hpp"

namespace severi {

/// algebra-core suites (R, C, H, O) and cubic-spaces suites for the selected models.
VerificationReport cmd_verify_algebra(const RunConfig& cfg);
/// severi-geometry suites for the selected models.
VerificationReport cmd_verify_geometry(const RunConfig& cfg);

struct ClassifyOptions {
  /// "", "e6-table", "an-candidates", "catalog", "nonsimple" or "varieties".
  std::string emit;
  std::string fixture_dir;
};

/// Runs the classification, checks the root-system invariants and diffs the
/// output against the fixtures. Throws std::invalid_argument on a bad --emit.
VerificationReport cmd_classify(const RunConfig& cfg, const ClassifyOptions& opt);

/// Directory holding the fixtures: SEVERI_FIXTURES if set, else the source tree's.
std::string default_fixture_dir();

/// det, grad, sharp and the Cremona image of a user point given as
/// comma-separated rationals. Throws std::invalid_argument on wrong arity or
/// unparsable input.
VerificationReport cmd_cremona(ModelKind kind, const std::string& coords);

}  // namespace severi
