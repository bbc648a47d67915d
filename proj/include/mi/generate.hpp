#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mi/instance.hpp"

namespace mi {

/// Known generator ids: uniform_pair, partition_matching, graphic_partition,
/// gf2_pair.
const std::vector<std::string>& generator_families();

/// Deterministic in (family, n, seed). Throws InputError listing the known
/// families when `family` is not one of them.
///
///   uniform_pair        U(n, k1) and U(n, k2), k drawn from [0, n].
///   partition_matching  n random edges of a bipartite graph with
///                       max(1, ceil(n/3)) vertices per side; one matroid
///                       per side, blocks = edges at a vertex, capacity 1.
///   graphic_partition   cycle matroid of a random multigraph (loops and
///                       parallel edges allowed) against a random colouring
///                       with capacities in {1, 2}.
///   gf2_pair            two random sparse 0/1 matrices with ceil(n/2) rows
///                       and n columns (1-3 flips per column, some zero).
Instance generate_instance(std::string_view family, std::size_t n, std::uint64_t seed);

}  // namespace mi
