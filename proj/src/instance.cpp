#include "mi/instance.hpp"

#include <algorithm>

#include "json.hpp"

namespace mi {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw InputError(field + ": " + message);
}

const json& require(const json& object, const std::string& key, const std::string& path) {
  const auto it = object.find(key);
  if (it == object.end()) fail(path + key, "missing field");
  return *it;
}

std::size_t as_count(const json& value, const std::string& field) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) fail(field, "expected a non-negative integer");
  return value.get<std::size_t>();
}

MatroidDescription parse_matroid(const json& doc, std::size_t n, const std::string& path) {
  if (!doc.is_object()) fail(path.substr(0, path.size() - 1), "expected an object");
  const json& type = require(doc, "type", path);
  if (!type.is_string()) fail(path + "type", "expected a string");
  const std::string kind = type.get<std::string>();
  auto mismatch = [&](std::size_t declared) {
    throw GroundSizeMismatch("ground size mismatch: " + path.substr(0, path.size() - 1) + " describes " +
                             std::to_string(declared) + " elements but n = " + std::to_string(n));
  };

  if (kind == "uniform") {
    UniformDescription d{as_count(require(doc, "n", path), path + "n"), as_count(require(doc, "k", path), path + "k")};
    if (d.n != n) mismatch(d.n);
    return d;
  }
  if (kind == "partition") {
    const json& blocks = require(doc, "blocks", path);
    const json& caps = require(doc, "capacities", path);
    if (!blocks.is_array()) fail(path + "blocks", "expected an array of arrays");
    if (!caps.is_array()) fail(path + "capacities", "expected an array");
    PartitionDescription d;
    std::vector<bool> seen(n, false);
    std::size_t listed = 0;
    for (const json& block : blocks) {
      if (!block.is_array()) fail(path + "blocks", "expected an array of arrays");
      auto& out = d.blocks.emplace_back();
      for (const json& e : block) {
        const std::size_t id = as_count(e, path + "blocks");
        if (id >= n) fail(path + "blocks", "element " + std::to_string(id) + " outside [0, " + std::to_string(n) + ")");
        if (seen[id]) fail(path + "blocks", "element " + std::to_string(id) + " appears more than once");
        seen[id] = true;
        ++listed;
        out.push_back(static_cast<Element>(id));
      }
    }
    if (listed != n) fail(path + "blocks", "blocks do not cover [0, " + std::to_string(n) + ")");
    for (const json& c : caps) d.capacities.push_back(as_count(c, path + "capacities"));
    if (d.capacities.size() != d.blocks.size()) fail(path + "capacities", "need one capacity per block");
    return d;
  }
  if (kind == "graphic") {
    GraphicDescription d;
    d.vertex_count = as_count(require(doc, "vertex_count", path), path + "vertex_count");
    const json& edges = require(doc, "edges", path);
    if (!edges.is_array()) fail(path + "edges", "expected an array of [u, v] pairs");
    for (const json& e : edges) {
      if (!e.is_array() || e.size() != 2) fail(path + "edges", "expected an array of [u, v] pairs");
      const std::size_t u = as_count(e[0], path + "edges");
      const std::size_t v = as_count(e[1], path + "edges");
      if (u >= d.vertex_count || v >= d.vertex_count) fail(path + "edges", "endpoint outside [0, vertex_count)");
      d.edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    if (d.edges.size() != n) mismatch(d.edges.size());
    return d;
  }
  if (kind == "linear_gf2") {
    LinearGF2Description d;
    d.row_count = as_count(require(doc, "row_count", path), path + "row_count");
    const json& columns = require(doc, "columns", path);
    if (!columns.is_array()) fail(path + "columns", "expected an array of 0/1 vectors");
    for (const json& column : columns) {
      if (!column.is_array() || column.size() != d.row_count) {
        fail(path + "columns", "every column needs row_count entries");
      }
      auto& out = d.columns.emplace_back();
      for (const json& bit : column) {
        const std::size_t b = as_count(bit, path + "columns");
        if (b > 1) fail(path + "columns", "entries must be 0 or 1");
        out.push_back(static_cast<std::uint8_t>(b));
      }
    }
    if (d.columns.size() != n) mismatch(d.columns.size());
    return d;
  }
  fail(path + "type", "unknown matroid type '" + kind + "' (expected uniform, partition, graphic, linear_gf2)");
}

json matroid_to_json(const MatroidDescription& description) {
  return std::visit(
      [](const auto& d) -> json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, UniformDescription>) {
          return {{"type", "uniform"}, {"n", d.n}, {"k", d.k}};
        } else if constexpr (std::is_same_v<T, PartitionDescription>) {
          return {{"type", "partition"}, {"blocks", d.blocks}, {"capacities", d.capacities}};
        } else if constexpr (std::is_same_v<T, GraphicDescription>) {
          json edges = json::array();
          for (const auto& [u, v] : d.edges) edges.push_back({u, v});
          return {{"type", "graphic"}, {"vertex_count", d.vertex_count}, {"edges", edges}};
        } else {
          json columns = json::array();
          for (const auto& column : d.columns) {
            json bits = json::array();
            for (std::uint8_t b : column) bits.push_back(static_cast<int>(b));
            columns.push_back(bits);
          }
          return {{"type", "linear_gf2"}, {"row_count", d.row_count}, {"columns", columns}};
        }
      },
      description);
}

}  // namespace

std::size_t described_ground_size(const MatroidDescription& description) {
  return std::visit(
      [](const auto& d) -> std::size_t {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, UniformDescription>) {
          return d.n;
        } else if constexpr (std::is_same_v<T, PartitionDescription>) {
          std::size_t n = 0;
          for (const auto& b : d.blocks) n += b.size();
          return n;
        } else if constexpr (std::is_same_v<T, GraphicDescription>) {
          return d.edges.size();
        } else {
          return d.columns.size();
        }
      },
      description);
}

std::unique_ptr<MatroidOracle> make_oracle(const MatroidDescription& description) {
  return std::visit(
      [](const auto& d) -> std::unique_ptr<MatroidOracle> {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, UniformDescription>) {
          return std::make_unique<UniformMatroid>(d.n, d.k);
        } else if constexpr (std::is_same_v<T, PartitionDescription>) {
          return std::make_unique<PartitionMatroid>(d.blocks, d.capacities);
        } else if constexpr (std::is_same_v<T, GraphicDescription>) {
          return std::make_unique<GraphicMatroid>(d.vertex_count, d.edges);
        } else {
          return std::make_unique<LinearMatroidGF2>(d.row_count, d.columns);
        }
      },
      description);
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document: ") + e.what());
  }
  if (!doc.is_object()) fail("document", "expected an object");
  Instance instance;
  instance.n = as_count(require(doc, "n", ""), "n");
  instance.matroid1 = parse_matroid(require(doc, "matroid1", ""), instance.n, "matroid1.");
  instance.matroid2 = parse_matroid(require(doc, "matroid2", ""), instance.n, "matroid2.");
  if (const auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    instance.name = it->get<std::string>();
  }
  if (const auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) fail("seed", "expected a non-negative integer");
    instance.seed = it->get<std::uint64_t>();
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "matroid1" && key != "matroid2" && key != "name" && key != "seed") {
      fail(key, "unknown top-level field");
    }
  }
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  json doc = {{"n", instance.n},
              {"matroid1", matroid_to_json(instance.matroid1)},
              {"matroid2", matroid_to_json(instance.matroid2)}};
  if (instance.name) doc["name"] = *instance.name;
  if (instance.seed) doc["seed"] = *instance.seed;
  return doc.dump(2) + "\n";
}

}  // namespace mi
