#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "mi/solver.hpp"
#include "mi/verification.hpp"

namespace mi {

struct BaselineSummary {
  std::size_t searches_checked = 0;
  bool layers_equal = true;
};

struct RunReport {
  std::optional<std::string> name;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  SolveResult result;
  /// Present with --check-bounds.
  std::optional<BoundReport> bounds;
  std::size_t r = 0;
  double budget_constant = 0.0;
  /// Present with --baseline.
  std::optional<BaselineSummary> baseline;
};

/// Canonical JSON (sorted keys, two-space indent, trailing newline); the
/// same run always renders to the same bytes.
std::string render_report(const RunReport& report);

}  // namespace mi
