#include "mi/verification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mi/errors.hpp"

namespace mi {

namespace {

using Rational = boost::multiprecision::cpp_rational;

bool common_independent(const MatroidOracle& m1, const MatroidOracle& m2, std::span<const Element> members) {
  return m1.is_independent(members) && m2.is_independent(members);
}

struct Best {
  std::vector<Element> members;
};

void extend(const MatroidOracle& m1, const MatroidOracle& m2, std::size_t n, std::vector<Element>& current,
            Best& best) {
  const Element start = current.empty() ? 0 : current.back() + 1;
  for (Element e = start; e < n; ++e) {
    current.push_back(e);
    if (common_independent(m1, m2, current)) {
      if (current.size() > best.members.size()) best.members = current;
      extend(m1, m2, n, current, best);
    }
    current.pop_back();
  }
}

// Best set inside the subtree whose smallest element is `root`.
Best search_root(const MatroidOracle& m1, const MatroidOracle& m2, std::size_t n, Element root) {
  Best best;
  std::vector<Element> current{root};
  if (!common_independent(m1, m2, current)) return best;
  best.members = current;
  extend(m1, m2, n, current, best);
  return best;
}

struct ExchangeRow {
  bool source = false;
  bool sink = false;
  std::vector<Element> in_to_out;  // y with S - y + x independent in M1
  std::vector<Element> out_to_in;  // y with S - y + x independent in M2
};

ExchangeRow exchange_row(const MatroidOracle& m1, const MatroidOracle& m2, const std::vector<Element>& members,
                         Element x) {
  ExchangeRow row;
  std::vector<Element> probe = members;
  probe.push_back(x);
  row.source = m1.is_independent(probe);
  row.sink = m2.is_independent(probe);
  probe.pop_back();
  for (std::size_t i = 0; i < members.size(); ++i) {
    probe[i] = x;
    if (m1.is_independent(probe)) row.in_to_out.push_back(members[i]);
    if (m2.is_independent(probe)) row.out_to_in.push_back(members[i]);
    probe[i] = members[i];
  }
  return row;
}

}  // namespace

BruteForceResult brute_force_max_common(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                        Execution exec) {
  if (matroid1.ground_size() != matroid2.ground_size()) throw InputError("matroids have different ground sizes");
  const std::size_t n = matroid1.ground_size();
  if (n > kMaxBruteForceGround) {
    throw InputError("brute force needs ground size <= " + std::to_string(kMaxBruteForceGround) + ", got " +
                     std::to_string(n));
  }
  std::vector<Best> per_root(n);
  const auto roots = static_cast<std::int64_t>(n);
  if (exec == Execution::serial) {
    for (std::int64_t r = 0; r < roots; ++r) {
      per_root[static_cast<std::size_t>(r)] = search_root(matroid1, matroid2, n, static_cast<Element>(r));
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t r = 0; r < roots; ++r) {
      per_root[static_cast<std::size_t>(r)] = search_root(matroid1, matroid2, n, static_cast<Element>(r));
    }
  }
  // Roots are visited in lexicographic order, so the first maximum wins ties.
  BruteForceResult result;
  result.witness = ElementSet(n);
  const Best* winner = nullptr;
  for (const Best& b : per_root) {
    if (winner == nullptr || b.members.size() > winner->members.size()) winner = &b;
  }
  if (winner != nullptr) {
    result.size = winner->members.size();
    result.witness = ElementSet(n, winner->members);
  }
  return result;
}

ExchangeGraph build_naive_exchange_graph(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                         const ElementSet& solution, Execution exec) {
  if (matroid1.ground_size() != matroid2.ground_size()) throw InputError("matroids have different ground sizes");
  const std::size_t n = matroid1.ground_size();
  const std::vector<Element> members = solution.to_vector();
  const std::vector<Element> outside = solution.complement().to_vector();
  std::vector<ExchangeRow> rows(outside.size());
  const auto count = static_cast<std::int64_t>(outside.size());
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) {
      rows[static_cast<std::size_t>(i)] = exchange_row(matroid1, matroid2, members, outside[static_cast<std::size_t>(i)]);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      rows[static_cast<std::size_t>(i)] = exchange_row(matroid1, matroid2, members, outside[static_cast<std::size_t>(i)]);
    }
  }

  ExchangeGraph graph{ElementSet(n), ElementSet(n), {}, {}};
  for (std::size_t i = 0; i < outside.size(); ++i) {
    const Element x = outside[i];
    if (rows[i].source) graph.sources.insert(x);
    if (rows[i].sink) graph.sinks.insert(x);
    for (Element y : rows[i].in_to_out) graph.arcs_in_to_out.emplace_back(y, x);
    for (Element y : rows[i].out_to_in) graph.arcs_out_to_in.emplace_back(x, y);
  }
  std::sort(graph.arcs_in_to_out.begin(), graph.arcs_in_to_out.end());
  std::sort(graph.arcs_out_to_in.begin(), graph.arcs_out_to_in.end());
  return graph;
}

std::vector<std::vector<Element>> naive_bfs_layers(const ExchangeGraph& graph, std::size_t n) {
  std::vector<std::vector<Element>> adjacency(n);
  for (const auto& [from, to] : graph.arcs_in_to_out) adjacency[from].push_back(to);
  for (const auto& [from, to] : graph.arcs_out_to_in) adjacency[from].push_back(to);

  std::vector<std::vector<Element>> layers{graph.sources.to_vector()};
  std::vector<bool> seen(n, false);
  for (Element e : layers.front()) seen[e] = true;
  for (;;) {
    const std::vector<Element>& layer = layers.back();
    if (std::any_of(layer.begin(), layer.end(), [&](Element e) { return graph.sinks.contains(e); })) break;
    std::vector<Element> next;
    for (Element from : layer) {
      for (Element to : adjacency[from]) {
        if (!seen[to]) {
          seen[to] = true;
          next.push_back(to);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

std::optional<ElementSet> brute_force_circuit(const MatroidOracle& matroid, const ElementSet& solution, Element v) {
  const std::size_t n = matroid.ground_size();
  if (solution.contains(v) || v >= n) throw ContractViolation("circuit element must lie outside the solution");
  if (!matroid.is_independent(solution)) throw ContractViolation("circuit requested for a dependent solution");
  std::vector<Element> pool = solution.to_vector();
  pool.push_back(v);
  if (pool.size() > kMaxCircuitEnumeration) throw InputError("circuit enumeration limited to 20 elements");

  const std::uint32_t subsets = 1u << pool.size();
  std::vector<std::uint8_t> dependent(subsets, 0);
  std::vector<Element> probe;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    probe.clear();
    for (std::uint32_t m = mask; m != 0; m &= m - 1) probe.push_back(pool[static_cast<std::size_t>(std::countr_zero(m))]);
    dependent[mask] = matroid.is_independent(probe) ? 0 : 1;
  }
  std::optional<ElementSet> circuit;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    if (dependent[mask] == 0) continue;
    bool minimal = true;
    for (std::uint32_t m = mask; m != 0 && minimal; m &= m - 1) {
      minimal = dependent[mask & ~(m & (~m + 1))] == 0;
    }
    if (!minimal) continue;
    if (circuit) throw InternalError("solution plus element contains more than one circuit");
    circuit = ElementSet(n);
    for (std::uint32_t m = mask; m != 0; m &= m - 1) circuit->insert(pool[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return circuit;
}

std::vector<std::pair<Element, std::vector<Element>>> exhaustive_layer_successors(
    const MatroidOracle& matroid1, const ElementSet& solution, std::span<const Element> layer,
    const ElementSet& reached_out) {
  const std::size_t n = matroid1.ground_size();
  std::vector<std::pair<Element, std::vector<Element>>> out;
  for (Element u = 0; u < n; ++u) {
    if (solution.contains(u) || reached_out.contains(u)) continue;
    std::vector<Element> parents;
    for (Element v : layer) {
      ElementSet swapped = solution;
      swapped.erase(v);
      swapped.insert(u);
      if (matroid1.is_independent(swapped)) parents.push_back(v);
    }
    std::sort(parents.begin(), parents.end());
    if (!parents.empty()) out.emplace_back(u, std::move(parents));
  }
  return out;
}

bool BoundReport::all_paths_ok() const {
  return std::all_of(per_path.begin(), per_path.end(), [](const PathBound& b) { return b.ok; });
}

double budget_scale(std::size_t n, std::size_t r) {
  const double lg = std::log2(static_cast<double>(r) + 2.0);
  return static_cast<double>(n) * (static_cast<double>(r) + 1.0) * lg * lg;
}

bool total_length_within_bound(std::size_t total_length, std::size_t p) {
  Rational bound = 0;
  for (std::size_t k = 0; k < p; ++k) bound += Rational(2 * k, p - k) + 2;
  return Rational(total_length) <= bound;
}

BoundReport check_bounds(const RunStats& stats, std::size_t n, std::size_t r, double c_budget) {
  BoundReport report;
  const std::size_t p = stats.p;
  for (std::size_t i = 0; i < stats.path_lengths.size(); ++i) {
    PathBound b;
    b.length = stats.path_lengths[i];
    b.size_before = i < stats.sizes_before.size() ? stats.sizes_before[i] : 0;
    if (b.size_before < p) {
      const std::size_t gap = p - b.size_before;
      b.bound = 2.0 * static_cast<double>(b.size_before) / static_cast<double>(gap) + 2.0;
      // length <= 2s/(p-s) + 2  <=>  length (p-s) <= 2s + 2(p-s)
      b.ok = b.length * gap <= 2 * b.size_before + 2 * gap;
    }
    report.per_path.push_back(b);
  }
  report.total_length = stats.total_path_length();
  for (std::size_t k = 0; k < p; ++k) {
    report.total_bound += 2.0 * static_cast<double>(k) / static_cast<double>(p - k) + 2.0;
  }
  report.total_ok = total_length_within_bound(report.total_length, p);
  report.measured_calls = stats.total_calls();
  const double scale = budget_scale(n, r);
  report.budget = c_budget * scale;
  report.budget_ratio = scale > 0.0 ? static_cast<double>(report.measured_calls) / scale : 0.0;
  report.budget_ok = static_cast<double>(report.measured_calls) <= report.budget;
  return report;
}

}  // namespace mi
