#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mi/errors.hpp"
#include "mi/families.hpp"

namespace mi {

struct UniformDescription {
  std::size_t n = 0;
  std::size_t k = 0;
  friend bool operator==(const UniformDescription&, const UniformDescription&) = default;
};

struct PartitionDescription {
  std::vector<std::vector<Element>> blocks;
  std::vector<std::size_t> capacities;
  friend bool operator==(const PartitionDescription&, const PartitionDescription&) = default;
};

struct GraphicDescription {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  friend bool operator==(const GraphicDescription&, const GraphicDescription&) = default;
};

struct LinearGF2Description {
  std::size_t row_count = 0;
  std::vector<std::vector<std::uint8_t>> columns;
  friend bool operator==(const LinearGF2Description&, const LinearGF2Description&) = default;
};

using MatroidDescription =
    std::variant<UniformDescription, PartitionDescription, GraphicDescription, LinearGF2Description>;

/// A pair of matroids over the ground set [0, n).
struct Instance {
  std::size_t n = 0;
  MatroidDescription matroid1;
  MatroidDescription matroid2;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A matroid that declares a ground size other than the instance's n.
class GroundSizeMismatch : public InputError {
 public:
  using InputError::InputError;
};

std::size_t described_ground_size(const MatroidDescription& description);
std::unique_ptr<MatroidOracle> make_oracle(const MatroidDescription& description);

/// Parses and validates an instance document. Throws InputError naming the
/// offending field, or GroundSizeMismatch.
Instance parse_instance(std::string_view text);

/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize_instance(const Instance& instance);

}  // namespace mi
