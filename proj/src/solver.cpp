#include "mi/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mi/errors.hpp"

namespace mi {

namespace {

// Minimum count i in [lo, hi] such that base + order[0..i) is dependent,
// given base + order[0..lo) is independent whenever lo > 0. The probe for
// count i is a prefix of one contiguous buffer, so building it is free.
// Unless `hi_known_dependent`, an answer of hi costs one confirming call.
std::optional<std::size_t> min_dependent_count(const MatroidOracle& matroid, std::span<const Element> base,
                                               std::span<const Element> order, std::size_t lo, std::size_t hi,
                                               bool hi_known_dependent = false) {
  std::vector<Element> buffer;
  buffer.reserve(base.size() + hi);
  buffer.insert(buffer.end(), base.begin(), base.end());
  buffer.insert(buffer.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(hi));
  auto dependent = [&](std::size_t count) {
    return !matroid.is_independent(std::span<const Element>(buffer.data(), base.size() + count));
  };
  const std::size_t top = hi;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (dependent(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  // The search never probes `top` itself.
  if (lo == top && !hi_known_dependent && !dependent(top)) return std::nullopt;
  return lo;
}

void require_same_ground(const MatroidOracle& m1, const MatroidOracle& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw InputError("matroids have different ground sizes: " + std::to_string(m1.ground_size()) + " vs " +
                     std::to_string(m2.ground_size()));
  }
}

void require_universe(const ElementSet& set, std::size_t n, const char* what) {
  if (set.universe() != n) {
    throw InputError(std::string(what) + ": universe " + std::to_string(set.universe()) +
                     " does not match ground size " + std::to_string(n));
  }
}

ElementSet free_additions_unchecked(const MatroidOracle& matroid, const ElementSet& solution) {
  const std::size_t n = matroid.ground_size();
  std::vector<Element> probe = solution.to_vector();
  probe.push_back(0);
  ElementSet out(n);
  for (Element x = 0; x < n; ++x) {
    if (solution.contains(x)) continue;
    probe.back() = x;
    if (matroid.is_independent(std::span<const Element>(probe))) out.insert(x);
  }
  return out;
}

AugmentingPath trace_back(Element sink, const std::vector<Element>& pred, Element none) {
  AugmentingPath path;
  for (Element at = sink; at != none; at = pred[at]) path.vertices.push_back(at);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

}  // namespace

void OrderedGround::extend_reached(std::size_t count) {
  if (reached_ + count > sequence_.size()) {
    throw ContractViolation("reached prefix cannot exceed the ordering");
  }
  reached_ += count;
}

std::uint64_t RunStats::calls_for(std::size_t matroid) const {
  return std::accumulate(calls[matroid].begin(), calls[matroid].end(), std::uint64_t{0});
}

std::size_t RunStats::total_path_length() const {
  return std::accumulate(path_lengths.begin(), path_lengths.end(), std::size_t{0});
}

ElementSet compute_free_additions(const MatroidOracle& matroid, const ElementSet& solution) {
  require_universe(solution, matroid.ground_size(), "solution");
  ElementSet out = free_additions_unchecked(matroid, solution);
  if (out.empty() && !matroid.is_independent(solution)) {
    throw ContractViolation("free additions requested for a dependent set");
  }
  return out;
}

std::optional<std::size_t> min_dependent_prefix(const MatroidOracle& matroid, const OrderedGround& order,
                                                Element extra, std::size_t hi) {
  if (hi > order.size()) throw ContractViolation("prefix bound exceeds the ordering");
  const Element base[1] = {extra};
  return min_dependent_count(matroid, base, order.sequence(), 0, hi);
}

std::vector<Element> fan_in_neighbors(const MatroidOracle& matroid2, OrderedGround& order, Element v) {
  std::vector<Element> found;
  const std::size_t k = order.size();
  const Element base[1] = {v};
  for (bool confirmed = false;; confirmed = true) {
    // S + v stays the same set across swaps, so one confirmation suffices.
    const std::optional<std::size_t> i = min_dependent_count(matroid2, base, order.sequence(), 0, k, confirmed);
    if (!i) throw ContractViolation("fan-in requested for an element whose addition stays independent");
    // Every circuit element already sits in the reached/found prefix.
    if (*i <= order.reached() + found.size()) break;
    found.push_back(order[*i - 1]);
    order.swap_positions(*i - 1, order.reached() + found.size() - 1);
  }
  order.extend_reached(found.size());
  return found;
}

std::vector<std::pair<Element, Element>> fan_out_neighbors(const MatroidOracle& matroid1, const ElementSet& solution,
                                                           std::span<const Element> layer,
                                                           const ElementSet& reached_out) {
  const std::size_t n = matroid1.ground_size();
  require_universe(solution, n, "solution");
  require_universe(reached_out, n, "reached set");
  ElementSet in_layer(n, layer);
  // probe = (S \ layer) + u, with u in the last slot.
  std::vector<Element> probe = (solution - in_layer).to_vector();
  const std::size_t base_size = probe.size();
  probe.push_back(0);

  std::vector<std::pair<Element, Element>> out;
  for (Element u = 0; u < n; ++u) {
    if (solution.contains(u) || reached_out.contains(u)) continue;
    probe[base_size] = u;
    if (!matroid1.is_independent(std::span<const Element>(probe))) continue;
    // Count 0 is known independent; S + u is dependent since u is not a source.
    const std::optional<std::size_t> i = min_dependent_count(matroid1, probe, layer, 1, layer.size());
    if (!i) throw ContractViolation("fan-out met an element whose addition stays independent");
    out.emplace_back(u, layer[*i - 1]);
  }
  return out;
}

SearchOutcome search_augmenting_path(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                     const ElementSet& solution, const ElementSet& sources,
                                     const ElementSet& sinks) {
  require_same_ground(matroid1, matroid2);
  const std::size_t n = matroid1.ground_size();
  require_universe(solution, n, "solution");
  require_universe(sources, n, "sources");
  require_universe(sinks, n, "sinks");

  const auto none = static_cast<Element>(n);
  std::vector<Element> pred(n, none);
  ElementSet reached_in(n);   // A
  ElementSet reached_out = sources;  // B
  OrderedGround order = OrderedGround::ascending(solution);

  SearchOutcome outcome;
  outcome.layers.push_back(sources.to_vector());
  for (std::size_t depth = 0;; ++depth) {
    const std::vector<Element>& layer = outcome.layers.back();
    std::vector<Element> next;
    if (depth % 2 == 0) {
      for (Element v : layer) {
        if (sinks.contains(v)) {
          outcome.result = trace_back(v, pred, none);
          return outcome;
        }
      }
      for (Element v : layer) {
        for (Element u : fan_in_neighbors(matroid2, order, v)) {
          pred[u] = v;
          reached_in.insert(u);
          next.push_back(u);
        }
      }
    } else {
      for (const auto& [t, parent] : fan_out_neighbors(matroid1, solution, layer, reached_out)) {
        pred[t] = parent;
        reached_out.insert(t);
        next.push_back(t);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    outcome.layers.push_back(std::move(next));
  }
  outcome.result = ReachableSet{reached_in | reached_out};
  return outcome;
}

SearchOutcome shortest_augmenting_path(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                       const ElementSet& solution) {
  require_same_ground(matroid1, matroid2);
  const ElementSet sources = compute_free_additions(matroid1, solution);
  const ElementSet sinks = compute_free_additions(matroid2, solution);
  return search_augmenting_path(matroid1, matroid2, solution, sources, sinks);
}

ElementSet augment(const MatroidOracle& matroid1, const MatroidOracle& matroid2, const ElementSet& solution,
                   const AugmentingPath& path) {
  require_same_ground(matroid1, matroid2);
  const std::size_t n = matroid1.ground_size();
  require_universe(solution, n, "solution");
  if (path.vertices.size() % 2 == 0) throw ContractViolation("augmenting path must have an odd vertex count");
  ElementSet on_path(n);
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const Element e = path.vertices[i];
    if (e >= n || on_path.contains(e)) throw ContractViolation("augmenting path repeats or leaves the ground set");
    if (solution.contains(e) != (i % 2 == 1)) {
      throw ContractViolation("augmenting path does not alternate between outside and inside the solution");
    }
    on_path.insert(e);
  }
  ElementSet next = solution ^ on_path;
  if (!matroid1.is_independent(next) || !matroid2.is_independent(next)) {
    throw InternalError("augmented solution is not common independent");
  }
  return next;
}

Certificate certificate_from_reachable(const MatroidOracle& matroid1, const MatroidOracle& matroid2,
                                       const ElementSet& solution, const ElementSet& reached) {
  require_same_ground(matroid1, matroid2);
  require_universe(reached, matroid1.ground_size(), "reached set");
  Certificate cert;
  cert.U = reached.complement();
  cert.r1_of_U = rank(matroid1, cert.U);
  cert.r2_of_complement = rank(matroid2, reached);
  if (cert.r1_of_U + cert.r2_of_complement != solution.size()) {
    throw InternalError("certificate mismatch: r1(U) + r2(E\\U) = " +
                        std::to_string(cert.r1_of_U + cert.r2_of_complement) + " but |S| = " +
                        std::to_string(solution.size()));
  }
  return cert;
}

SolveResult solve(const MatroidOracle& matroid1, const MatroidOracle& matroid2, const SolveOptions& options) {
  require_same_ground(matroid1, matroid2);
  const std::size_t n = matroid1.ground_size();
  CountingOracle c1(matroid1);
  CountingOracle c2(matroid2);
  auto set_phases = [&](Phase p1, Phase p2) {
    c1.set_phase(p1);
    c2.set_phase(p2);
  };

  SolveResult result;
  result.solution = ElementSet(n);
  ElementSet& solution = result.solution;
  RunStats& stats = result.stats;
  for (;;) {
    set_phases(Phase::sources_sinks, Phase::sources_sinks);
    const ElementSet sources = free_additions_unchecked(c1, solution);
    const ElementSet sinks = free_additions_unchecked(c2, solution);

    const ElementSet both = sources & sinks;
    if (!both.empty()) {
      set_phases(Phase::augment_check, Phase::augment_check);
      solution = augment(c1, c2, solution, AugmentingPath{{both.first()}});
      ++stats.shortcut_additions;
      continue;
    }

    // Case 1 only touches the second matroid and Case 2 only the first.
    set_phases(Phase::case2, Phase::case1);
    const SearchOutcome outcome = search_augmenting_path(c1, c2, solution, sources, sinks);
    if (options.on_search) options.on_search(solution, outcome);
    if (!outcome.found()) {
      set_phases(Phase::certificate, Phase::certificate);
      result.certificate = certificate_from_reachable(c1, c2, solution, outcome.reached());
      break;
    }
    stats.path_lengths.push_back(outcome.path().arc_count());
    stats.sizes_before.push_back(solution.size());
    set_phases(Phase::augment_check, Phase::augment_check);
    solution = augment(c1, c2, solution, outcome.path());
    ++stats.augmentations;
  }
  stats.calls = {c1.phase_counts(), c2.phase_counts()};
  stats.p = solution.size();
  return result;
}

}  // namespace mi
