#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mi/matroid.hpp"

namespace mi {

/// Independent iff |X| <= k.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(std::size_t n, std::size_t k) : n_(n), k_(k) {}

  std::size_t ground_size() const override { return n_; }
  std::size_t cap() const { return k_; }

 protected:
  bool independent(std::span<const Element> members) const override { return members.size() <= k_; }

 private:
  std::size_t n_;
  std::size_t k_;
};

/// Independent iff every block holds at most its capacity.
class PartitionMatroid final : public MatroidOracle {
 public:
  /// Blocks must cover [0, n) exactly once, where n is the total number of
  /// listed elements. Empty blocks are allowed.
  PartitionMatroid(std::vector<std::vector<Element>> blocks, std::vector<std::size_t> capacities);

  std::size_t ground_size() const override { return block_of_.size(); }
  const std::vector<std::vector<Element>>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& capacities() const { return capacities_; }

 protected:
  bool independent(std::span<const Element> members) const override;

 private:
  std::vector<std::vector<Element>> blocks_;
  std::vector<std::size_t> capacities_;
  std::vector<std::uint32_t> block_of_;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Cycle matroid of a multigraph; element i is edges[i]. Parallel edges and
/// self-loops are allowed (a self-loop is a matroid loop).
class GraphicMatroid final : public MatroidOracle {
 public:
  GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t ground_size() const override { return edges_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 protected:
  bool independent(std::span<const Element> members) const override;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

/// Column matroid of a 0/1 matrix over GF(2); element i is column i.
class LinearMatroidGF2 final : public MatroidOracle {
 public:
  /// Each column holds row_count entries, each 0 or 1.
  LinearMatroidGF2(std::size_t row_count, const std::vector<std::vector<std::uint8_t>>& columns);

  std::size_t ground_size() const override { return column_count_; }
  std::size_t row_count() const { return row_count_; }
  std::vector<std::vector<std::uint8_t>> columns() const;

 protected:
  bool independent(std::span<const Element> members) const override;

 private:
  std::size_t row_count_;
  std::size_t column_count_;
  std::size_t words_per_column_;
  std::vector<std::uint64_t> bits_;  // column-major, words_per_column_ words each
};

}  // namespace mi
