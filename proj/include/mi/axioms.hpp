#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mi/execution.hpp"
#include "mi/matroid.hpp"

namespace mi {

inline constexpr std::size_t kMaxAxiomGround = 12;
inline constexpr std::size_t kMaxListedViolations = 256;

enum class Axiom { empty_set, hereditary, exchange };

/// Subsets are bitmasks over the ground set (bit i = element i).
///   empty_set:  first = second = 0.
///   hereditary: first = second minus one element is dependent while
///               second is independent.
///   exchange:   first = X, second = Y with |X| < |Y| both independent and
///               no y in Y\X making X+y independent.
struct AxiomViolation {
  Axiom axiom;
  std::uint32_t first;
  std::uint32_t second;
};

struct AxiomReport {
  /// Every violation is counted; the first kMaxListedViolations (ordered by
  /// axiom, then by first, then by second) are listed.
  std::vector<AxiomViolation> violations;
  std::uint64_t violation_count = 0;

  bool ok() const { return violation_count == 0; }
  std::string summary() const;
};

/// Independence of every subset: table[mask] for mask in [0, 2^n).
/// 2^n oracle calls. Refuses (InputError) for n > kMaxAxiomGround.
std::vector<std::uint8_t> tabulate_independence(const MatroidOracle& matroid,
                                                Execution exec = Execution::parallel);

/// Exhaustively checks the three matroid axioms. Refuses rather than
/// samples when the ground set exceeds kMaxAxiomGround.
AxiomReport axiom_check(const MatroidOracle& matroid, Execution exec = Execution::parallel);

}  // namespace mi
