#include "mi/generate.hpp"

#include <algorithm>
#include <random>

namespace mi {

namespace {

// mt19937_64 output is fixed by the standard; the std distributions are
// not, so draws are taken directly from the engine.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t bound) { return bound == 0 ? 0 : static_cast<std::size_t>(engine_() % bound); }
  bool coin(std::size_t numerator, std::size_t denominator) { return below(denominator) < numerator; }

 private:
  std::mt19937_64 engine_;
};

// Groups elements by label; empty groups are dropped.
std::vector<std::vector<Element>> group_by(const std::vector<std::size_t>& label, std::size_t label_count) {
  std::vector<std::vector<Element>> groups(label_count);
  for (std::size_t e = 0; e < label.size(); ++e) groups[label[e]].push_back(static_cast<Element>(e));
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

LinearGF2Description random_gf2(Draw& draw, std::size_t n, std::size_t rows) {
  LinearGF2Description d;
  d.row_count = rows;
  for (std::size_t c = 0; c < n; ++c) {
    auto& column = d.columns.emplace_back(d.row_count, 0);
    if (draw.coin(1, 10)) continue;  // occasional loop
    // sparse columns keep both matroids far from free
    const std::size_t weight = 1 + draw.below(3);
    for (std::size_t i = 0; i < weight; ++i) column[draw.below(rows)] ^= 1;
  }
  return d;
}

}  // namespace

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> families = {"uniform_pair", "partition_matching", "graphic_partition",
                                                    "gf2_pair"};
  return families;
}

Instance generate_instance(std::string_view family, std::size_t n, std::uint64_t seed) {
  Draw draw(seed);
  Instance instance;
  instance.n = n;
  instance.seed = seed;
  instance.name = std::string(family) + "-n" + std::to_string(n) + "-s" + std::to_string(seed);

  if (family == "uniform_pair") {
    instance.matroid1 = UniformDescription{n, draw.below(n + 1)};
    instance.matroid2 = UniformDescription{n, draw.below(n + 1)};
  } else if (family == "partition_matching") {
    const std::size_t side = std::max<std::size_t>(1, (n + 2) / 3);
    std::vector<std::size_t> left(n), right(n);
    for (std::size_t e = 0; e < n; ++e) {
      left[e] = draw.below(side);
      right[e] = draw.below(side);
    }
    PartitionDescription m1{group_by(left, side), {}};
    PartitionDescription m2{group_by(right, side), {}};
    m1.capacities.assign(m1.blocks.size(), 1);
    m2.capacities.assign(m2.blocks.size(), 1);
    instance.matroid1 = std::move(m1);
    instance.matroid2 = std::move(m2);
  } else if (family == "graphic_partition") {
    GraphicDescription g;
    g.vertex_count = std::max<std::size_t>(2, n / 2 + 1);
    for (std::size_t e = 0; e < n; ++e) {
      const auto u = static_cast<std::uint32_t>(draw.below(g.vertex_count));
      const auto v = static_cast<std::uint32_t>(draw.below(g.vertex_count));
      g.edges.emplace_back(u, v);
    }
    const std::size_t colours = std::max<std::size_t>(1, n / 3);
    std::vector<std::size_t> colour(n);
    for (auto& c : colour) c = draw.below(colours);
    PartitionDescription p{group_by(colour, colours), {}};
    for (std::size_t b = 0; b < p.blocks.size(); ++b) p.capacities.push_back(1 + draw.below(2));
    instance.matroid1 = std::move(g);
    instance.matroid2 = std::move(p);
  } else if (family == "gf2_pair") {
    const std::size_t rows = std::max<std::size_t>(1, (n + 1) / 2);
    instance.matroid1 = random_gf2(draw, n, rows);
    instance.matroid2 = random_gf2(draw, n, rows);
  } else {
    std::string known;
    for (const auto& f : generator_families()) known += (known.empty() ? "" : ", ") + f;
    throw InputError("family: unknown generator '" + std::string(family) + "' (known: " + known + ")");
  }
  return instance;
}

}  // namespace mi
