#include "mi/families.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "mi/errors.hpp"

namespace mi {

PartitionMatroid::PartitionMatroid(std::vector<std::vector<Element>> blocks,
                                   std::vector<std::size_t> capacities)
    : blocks_(std::move(blocks)), capacities_(std::move(capacities)) {
  if (blocks_.size() != capacities_.size()) {
    throw InputError("blocks: " + std::to_string(blocks_.size()) + " blocks but " +
                     std::to_string(capacities_.size()) + " capacities");
  }
  std::size_t n = 0;
  for (const auto& block : blocks_) n += block.size();
  constexpr std::uint32_t kUnassigned = ~std::uint32_t{0};
  block_of_.assign(n, kUnassigned);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Element e : blocks_[b]) {
      if (e >= n) {
        throw InputError("blocks: element " + std::to_string(e) + " outside [0, " + std::to_string(n) + ")");
      }
      if (block_of_[e] != kUnassigned) {
        throw InputError("blocks: element " + std::to_string(e) + " appears in more than one block");
      }
      block_of_[e] = static_cast<std::uint32_t>(b);
    }
  }
}

bool PartitionMatroid::independent(std::span<const Element> members) const {
  thread_local std::vector<std::size_t> load;
  if (load.size() < blocks_.size()) load.resize(blocks_.size(), 0);
  bool ok = true;
  std::size_t touched = 0;
  for (; touched < members.size(); ++touched) {
    const std::uint32_t b = block_of_[members[touched]];
    if (++load[b] > capacities_[b]) {
      ok = false;
      ++touched;
      break;
    }
  }
  for (std::size_t i = 0; i < touched; ++i) load[block_of_[members[i]]] = 0;
  return ok;
}

GraphicMatroid::GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw InputError("edges: edge " + std::to_string(i) + " has an endpoint outside [0, " +
                       std::to_string(vertex_count_) + ")");
    }
  }
}

bool GraphicMatroid::independent(std::span<const Element> members) const {
  // Union-find over the touched vertices only; stamps give O(1) lazy init.
  thread_local std::vector<std::uint32_t> parent;
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t generation = 0;
  if (parent.size() < vertex_count_) {
    parent.resize(vertex_count_);
    stamp.resize(vertex_count_, 0);
  }
  if (++generation == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    generation = 1;
  }
  auto find = [&](std::uint32_t x) {
    if (stamp[x] != generation) {
      stamp[x] = generation;
      parent[x] = x;
      return x;
    }
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Element e : members) {
    const std::uint32_t a = find(edges_[e].first);
    const std::uint32_t b = find(edges_[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

LinearMatroidGF2::LinearMatroidGF2(std::size_t row_count,
                                   const std::vector<std::vector<std::uint8_t>>& columns)
    : row_count_(row_count),
      column_count_(columns.size()),
      words_per_column_((row_count + 63) / 64),
      bits_(columns.size() * ((row_count + 63) / 64), 0) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != row_count_) {
      throw InputError("columns: column " + std::to_string(c) + " has " + std::to_string(columns[c].size()) +
                       " entries, expected " + std::to_string(row_count_));
    }
    for (std::size_t r = 0; r < row_count_; ++r) {
      const std::uint8_t bit = columns[c][r];
      if (bit > 1) throw InputError("columns: entries must be 0 or 1");
      if (bit != 0) bits_[c * words_per_column_ + r / 64] |= std::uint64_t{1} << (r % 64);
    }
  }
}

std::vector<std::vector<std::uint8_t>> LinearMatroidGF2::columns() const {
  std::vector<std::vector<std::uint8_t>> out(column_count_, std::vector<std::uint8_t>(row_count_, 0));
  for (std::size_t c = 0; c < column_count_; ++c) {
    for (std::size_t r = 0; r < row_count_; ++r) {
      out[c][r] = static_cast<std::uint8_t>((bits_[c * words_per_column_ + r / 64] >> (r % 64)) & 1u);
    }
  }
  return out;
}

bool LinearMatroidGF2::independent(std::span<const Element> members) const {
  if (members.size() > row_count_) return false;
  if (members.empty()) return true;
  const std::size_t w = words_per_column_;
  // Reduced basis vectors keyed by their leading (highest) set bit.
  thread_local std::vector<std::uint64_t> basis;
  thread_local std::vector<std::int32_t> pivot_slot;
  thread_local std::vector<std::uint64_t> work;
  thread_local std::vector<std::size_t> used_pivots;
  if (pivot_slot.size() < row_count_) pivot_slot.resize(row_count_, -1);
  basis.resize(members.size() * w);
  work.resize(w);
  used_pivots.clear();

  auto leading_bit = [&](const std::uint64_t* v) -> std::ptrdiff_t {
    for (std::size_t i = w; i-- > 0;) {
      if (v[i] != 0) return static_cast<std::ptrdiff_t>(i * 64 + 63 - std::countl_zero(v[i]));
    }
    return -1;
  };

  bool ok = true;
  for (Element e : members) {
    std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(e * w), w, work.begin());
    std::ptrdiff_t lead = leading_bit(work.data());
    while (lead >= 0 && pivot_slot[static_cast<std::size_t>(lead)] >= 0) {
      const std::uint64_t* b = basis.data() + static_cast<std::size_t>(pivot_slot[static_cast<std::size_t>(lead)]) * w;
      for (std::size_t i = 0; i < w; ++i) work[i] ^= b[i];
      lead = leading_bit(work.data());
    }
    if (lead < 0) {
      ok = false;
      break;
    }
    const std::size_t slot = used_pivots.size();
    std::copy_n(work.begin(), w, basis.begin() + static_cast<std::ptrdiff_t>(slot * w));
    pivot_slot[static_cast<std::size_t>(lead)] = static_cast<std::int32_t>(slot);
    used_pivots.push_back(static_cast<std::size_t>(lead));
  }
  for (std::size_t p : used_pivots) pivot_slot[p] = -1;
  return ok;
}

}  // namespace mi
