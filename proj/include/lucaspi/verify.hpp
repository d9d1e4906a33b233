#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucaspi/parallel.hpp"

namespace lucaspi {

enum class Suite { identities, ordering, interleaving, exact_pi, golden, three_term, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckRow {
  std::string label;
  std::string worst;      // worst residual (or margin) in scientific notation
  std::string tolerance;  // bound it was checked against
  std::size_t cases = 0;
  bool passed = true;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRow> rows;
  std::vector<std::string> failures;  // failing (n, m, h, word) tuples

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  int precision_bits = 0;
  std::uint64_t seed = 20240607;
  int identity_samples = 200;
  Execution exec = Execution::parallel;
};

/// Runs the invariant set for a suite (every suite for Suite::all) at the
/// configured precision. Rows are in a fixed order regardless of threads.
std::vector<SuiteResult> run_verify(Suite suite, const VerifyOptions& options);

}  // namespace lucaspi
