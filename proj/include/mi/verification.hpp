#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mi/element_set.hpp"
#include "mi/execution.hpp"
#include "mi/matroid.hpp"
#include "mi/solver.hpp"

namespace mi {

inline constexpr std::size_t kMaxBruteForceGround = 20;
inline constexpr std::size_t kMaxCircuitEnumeration = 20;

struct BruteForceResult {
  std::size_t size = 0;
  /// Lexicographically least (as an ascending id list) set of that size.
  ElementSet witness;
};

/// Exhaustive maximum common independent set, growing sets in ascending id
/// order and pruning at the first set dependent in either matroid.
/// Refuses (InputError) above kMaxBruteForceGround elements.
BruteForceResult brute_force_max_common(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                        Execution exec = Execution::parallel);

/// Fully materialized exchange graph of S.
struct ExchangeGraph {
  ElementSet sources;  // X1
  ElementSet sinks;    // X2
  /// (y, x) with S - y + x independent in the first matroid; sorted.
  std::vector<std::pair<Element, Element>> arcs_in_to_out;
  /// (x, y) with S - y + x independent in the second matroid; sorted.
  std::vector<std::pair<Element, Element>> arcs_out_to_in;
};

/// Tests every (y, x) pair in both directions plus every source/sink
/// candidate.
ExchangeGraph build_naive_exchange_graph(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                         const ElementSet& solution, Execution exec = Execution::parallel);

/// Distance classes of an ordinary BFS from the sources, each ascending,
/// stopping after the first layer that contains a sink (the same stopping
/// rule as the lazy search).
std::vector<std::vector<Element>> naive_bfs_layers(const ExchangeGraph& graph, std::size_t n);

/// The unique circuit of S + v by subset enumeration; std::nullopt when
/// S + v is independent. Throws InternalError if the minimal dependent
/// subset is not unique (the oracle is not a matroid).
std::optional<ElementSet> brute_force_circuit(const MatroidOracle& matroid, const ElementSet& solution, Element v);

/// Every u outside S and `reached_out` for which some v in `layer` gives an
/// independent S - v + u, with all such v listed ascending.
std::vector<std::pair<Element, std::vector<Element>>> exhaustive_layer_successors(
    const MatroidOracle& matroid1, const ElementSet& solution, std::span<const Element> layer,
    const ElementSet& reached_out);

struct PathBound {
  std::size_t length = 0;
  std::size_t size_before = 0;
  double bound = 0.0;  // 2|S|/(p-|S|) + 2
  bool ok = false;
};

struct BoundReport {
  std::vector<PathBound> per_path;
  std::size_t total_length = 0;
  double total_bound = 0.0;  // sum over k < p of 2k/(p-k) + 2
  bool total_ok = false;
  std::uint64_t measured_calls = 0;
  double budget = 0.0;  // c * n * (r+1) * log2(r+2)^2
  double budget_ratio = 0.0;
  bool budget_ok = false;

  bool all_paths_ok() const;
  bool ok() const { return all_paths_ok() && total_ok && budget_ok; }
};

/// n * (r+1) * log2(r+2)^2.
double budget_scale(std::size_t n, std::size_t r);

/// Per-path and total-length checks use exact rational arithmetic; the
/// budget check compares measured calls against c_budget * budget_scale.
BoundReport check_bounds(const RunStats& stats, std::size_t n, std::size_t r, double c_budget);

/// Exact test of sum(path_lengths) <= sum_{k<p} (2k/(p-k) + 2).
bool total_length_within_bound(std::size_t total_length, std::size_t p);

}  // namespace mi
