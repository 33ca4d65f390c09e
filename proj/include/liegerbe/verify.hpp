#pragma once

// Invariant suites run by `liegerbe verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegerbe/serialize.hpp"

namespace liegerbe {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int max_rank = 8;
  /// Overrides the cocycle tolerance of the forms suite.
  std::optional<double> tol;
};

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  Json details = Json::array();
  double seconds = 0;

  bool ok() const { return failures.empty(); }
  Json to_json() const;
};

/// lattices, characters, action, tits, descent, forms.
const std::vector<std::string>& suite_names();
/// InvalidInput for an unknown suite name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

}  // namespace liegerbe
