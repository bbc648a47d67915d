#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mi/element_set.hpp"
#include "mi/matroid.hpp"

namespace mi {

/// Ordering s_1..s_k of the current solution whose first reached() slots
/// hold exactly the elements already reached by the search.
class OrderedGround {
 public:
  OrderedGround() = default;
  explicit OrderedGround(std::vector<Element> sequence) : sequence_(std::move(sequence)) {}

  /// Members of `solution` in ascending id order, nothing reached.
  static OrderedGround ascending(const ElementSet& solution) { return OrderedGround(solution.to_vector()); }

  std::size_t size() const { return sequence_.size(); }
  std::size_t reached() const { return reached_; }
  Element operator[](std::size_t position) const { return sequence_[position]; }
  std::span<const Element> sequence() const { return sequence_; }

  void swap_positions(std::size_t a, std::size_t b) { std::swap(sequence_[a], sequence_[b]); }
  void extend_reached(std::size_t count);

 private:
  std::vector<Element> sequence_;
  std::size_t reached_ = 0;
};

/// Alternating sequence x_0, y_1, x_1, ..., x_t with x_i outside the
/// solution and y_i inside it; x_0 is a source and x_t a sink.
struct AugmentingPath {
  std::vector<Element> vertices;

  std::size_t arc_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Everything the search reached (A and B together) when no path exists.
struct ReachableSet {
  ElementSet members;
};

struct SearchOutcome {
  std::variant<AugmentingPath, ReachableSet> result;
  /// Distance classes V_0 = sources, V_1, ... in ascending id order. When a
  /// path is found the last layer is the one that contains its sink.
  std::vector<std::vector<Element>> layers;

  bool found() const { return std::holds_alternative<AugmentingPath>(result); }
  const AugmentingPath& path() const { return std::get<AugmentingPath>(result); }
  const ElementSet& reached() const { return std::get<ReachableSet>(result).members; }
};

/// Min-max witness: r1(U) + r2(E \ U) equals the solution size.
struct Certificate {
  ElementSet U;
  std::size_t r1_of_U = 0;
  std::size_t r2_of_complement = 0;
};

struct RunStats {
  /// calls[0] for the first matroid, calls[1] for the second.
  std::array<PhaseCounts, 2> calls{};
  /// Arc count of each augmenting path, in augmentation order.
  std::vector<std::size_t> path_lengths;
  /// Solution size just before each augmentation (parallel to path_lengths).
  std::vector<std::size_t> sizes_before;
  std::size_t augmentations = 0;
  std::size_t shortcut_additions = 0;
  std::size_t p = 0;

  std::uint64_t calls_for(std::size_t matroid) const;
  std::uint64_t total_calls() const { return calls_for(0) + calls_for(1); }
  std::size_t total_path_length() const;
};

struct SolveResult {
  ElementSet solution;
  Certificate certificate;
  RunStats stats;
};

struct SolveOptions {
  /// Invoked after every search with the solution it ran against.
  std::function<void(const ElementSet& solution, const SearchOutcome& outcome)> on_search;
};

/// {x not in S : S + x independent}. Exactly n - |S| oracle calls, plus one
/// when the result is empty to confirm S is independent (a non-empty result
/// already proves it). Throws ContractViolation when S is dependent.
ElementSet compute_free_additions(const MatroidOracle& matroid, const ElementSet& solution);

/// Minimum i in [0, hi] with {s_1..s_i} + extra dependent, by binary search:
/// ceil(log2(hi + 1)) calls, plus one when the answer is hi to confirm the
/// precondition. std::nullopt when the full prefix plus extra is independent.
std::optional<std::size_t> min_dependent_prefix(const MatroidOracle& matroid, const OrderedGround& order,
                                                Element extra, std::size_t hi);

/// Elements of the unique circuit of S + v that are not yet reached, where S
/// is the ordered solution. Each one found is swapped to the end of the
/// reached prefix and the prefix grows by their number. Returned in
/// discovery order. Throws ContractViolation when S + v is independent.
std::vector<Element> fan_in_neighbors(const MatroidOracle& matroid2, OrderedGround& order, Element v);

/// For every u outside S and `reached_out` (ascending) whose circuit in
/// S + u meets `layer`, emits (u, parent) with parent in that circuit, so
/// S - parent + u is independent. `layer` must be ascending and inside S.
std::vector<std::pair<Element, Element>> fan_out_neighbors(const MatroidOracle& matroid1, const ElementSet& solution,
                                                           std::span<const Element> layer,
                                                           const ElementSet& reached_out);

/// Lazy breadth-first search from `sources` to `sinks` in the exchange graph
/// of S. Case 1 expansions query matroid2 only; Case 2 expansions query
/// matroid1 only.
SearchOutcome search_augmenting_path(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                     const ElementSet& solution, const ElementSet& sources,
                                     const ElementSet& sinks);

/// Same, computing sources and sinks first.
SearchOutcome shortest_augmenting_path(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                       const ElementSet& solution);

/// S symmetric-difference P, then confirms the result is independent in both
/// matroids (two oracle calls). Throws ContractViolation for a malformed path
/// and InternalError when the result is not common independent.
ElementSet augment(const MatroidOracle& matroid1, const MatroidOracle& matroid2, const ElementSet& solution,
                   const AugmentingPath& path);

/// U = E \ R with both ranks computed greedily. Throws InternalError when
/// r1(U) + r2(R) != |S|.
Certificate certificate_from_reachable(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                       const ElementSet& solution, const ElementSet& reached);

/// Maximum common independent set of two matroids over the same ground set.
SolveResult solve(const MatroidOracle& matroid1, const MatroidOracle& matroid2, const SolveOptions& options = {});

}  // namespace mi
