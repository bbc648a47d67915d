#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "mi/errors.hpp"
#include "mi/solver.hpp"
#include "mi/verification.hpp"
#include "test_support.hpp"

using namespace mi;
using mi::testing::OraclePair;

namespace {

std::size_t log2_ceil(std::size_t x) { return static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(x)))); }

}  // namespace

TEST_CASE("compute_free_additions examples and exact call count") {
  const UniformMatroid u(4, 2);
  CountingOracle cu(u);
  CHECK(compute_free_additions(cu, ElementSet(4)) == ElementSet(4, {0, 1, 2, 3}));
  CHECK(cu.call_count() == 4);

  const GraphicMatroid tri = mi::testing::triangle();
  CHECK(compute_free_additions(tri, ElementSet(3, {0, 1})).empty());

  const PartitionMatroid p({{0, 1}, {2, 3}}, {1, 1});
  CountingOracle cp(p);
  CHECK(compute_free_additions(cp, ElementSet(4, {0})) == ElementSet(4, {2, 3}));
  CHECK(cp.call_count() == 3);

  CHECK_THROWS_AS(compute_free_additions(tri, ElementSet(3, {0, 1, 2})), ContractViolation);
}

TEST_CASE("min_dependent_prefix examples") {
  const GraphicMatroid tri = mi::testing::triangle();
  CountingOracle counted(tri);
  CHECK(min_dependent_prefix(counted, OrderedGround({0, 1}), 2, 2) == 2u);
  CHECK(counted.call_count() <= log2_ceil(3) + 1);

  CHECK(min_dependent_prefix(UniformMatroid(3, 1), OrderedGround({0}), 2, 1) == 1u);

  const LinearMatroidGF2 lin(2, {{1, 0}, {0, 1}, {0, 0}});
  CHECK(min_dependent_prefix(lin, OrderedGround({0, 1}), 2, 2) == 0u);

  // full prefix plus extra independent: no circuit
  CHECK_FALSE(min_dependent_prefix(tri, OrderedGround({0}), 2, 1).has_value());
}

TEST_CASE("min_dependent_prefix stays within ceil(log2(hi+1)) + 1 calls") {
  // A long path graph closed by one extra edge: the circuit is the whole path.
  for (std::size_t k : {1u, 2u, 3u, 7u, 8u, 31u, 100u}) {
    std::vector<Edge> edges;
    for (std::uint32_t i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, static_cast<std::uint32_t>(k));
    const GraphicMatroid g(k + 1, edges);
    std::vector<Element> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = static_cast<Element>(i);
    CountingOracle counted(g);
    CHECK(min_dependent_prefix(counted, OrderedGround(order), static_cast<Element>(k), k) == k);
    CHECK(counted.call_count() <= log2_ceil(k + 1) + 1);
  }
}

TEST_CASE("fan_in_neighbors examples") {
  const GraphicMatroid tri = mi::testing::triangle();
  OrderedGround order({0, 1});
  auto u = fan_in_neighbors(tri, order, 2);
  CHECK(std::set<Element>(u.begin(), u.end()) == std::set<Element>{0, 1});
  CHECK(order.reached() == 2);

  OrderedGround partial({0, 1});
  partial.extend_reached(1);  // e0 already reached
  CHECK(fan_in_neighbors(tri, partial, 2) == std::vector<Element>{1});
  CHECK(partial.reached() == 2);

  // loop element: circuit {v}, nothing to add
  const LinearMatroidGF2 lin(2, {{1, 0}, {0, 1}, {0, 0}});
  OrderedGround lin_order({0, 1});
  CHECK(fan_in_neighbors(lin, lin_order, 2).empty());
  CHECK(lin_order.reached() == 0);

  OrderedGround free_order({0});
  CHECK_THROWS_AS(fan_in_neighbors(tri, free_order, 2), ContractViolation);
}

TEST_CASE("fan_in_neighbors matches the brute-force circuit and keeps the prefix invariant") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 150 && seed < 2000; ++seed) {
    const auto& family = mi::testing::families()[seed % 4];
    const OraclePair pair = mi::testing::generated(family, 4 + seed % 9, seed);
    const std::size_t n = pair.instance.n;
    const ElementSet s = mi::testing::random_common_independent(*pair.m1, *pair.m2, rng, n);
    std::vector<Element> members = s.to_vector();
    std::shuffle(members.begin(), members.end(), rng);
    OrderedGround order(members);
    const std::size_t reached = members.empty() ? 0 : rng() % (members.size() + 1);
    order.extend_reached(reached);
    const std::set<Element> prefix(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(reached));
    for (Element v = 0; v < n; ++v) {
      if (s.contains(v)) continue;
      const auto circuit = brute_force_circuit(*pair.m2, s, v);
      if (!circuit) continue;
      OrderedGround trial = order;
      const auto found = fan_in_neighbors(*pair.m2, trial, v);
      std::set<Element> expected;
      for (Element e : circuit->to_vector()) {
        if (e != v && prefix.count(e) == 0) expected.insert(e);
      }
      REQUIRE(std::set<Element>(found.begin(), found.end()) == expected);
      // the reached prefix now holds exactly A plus the found elements
      std::set<Element> head(trial.sequence().begin(),
                             trial.sequence().begin() + static_cast<std::ptrdiff_t>(trial.reached()));
      std::set<Element> want = prefix;
      want.insert(found.begin(), found.end());
      REQUIRE(head == want);
      REQUIRE(std::multiset<Element>(trial.sequence().begin(), trial.sequence().end()) ==
              std::multiset<Element>(members.begin(), members.end()));
      ++checked;
    }
  }
  CHECK(checked >= 150);
}

TEST_CASE("fan_out_neighbors examples") {
  const GraphicMatroid tri = mi::testing::triangle();
  const std::vector<Element> layer{0};
  auto out = fan_out_neighbors(tri, ElementSet(3, {0, 1}), layer, ElementSet(3));
  CHECK(out == std::vector<std::pair<Element, Element>>{{2, 0}});

  const GraphicMatroid parallel(2, {{0, 1}, {0, 1}});
  out = fan_out_neighbors(parallel, ElementSet(2, {0}), layer, ElementSet(2));
  CHECK(out == std::vector<std::pair<Element, Element>>{{1, 0}});

  // elements already reached are skipped
  out = fan_out_neighbors(parallel, ElementSet(2, {0}), layer, ElementSet(2, {1}));
  CHECK(out.empty());
}

TEST_CASE("fan_out_neighbors matches an exhaustive pair scan") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (std::uint64_t seed = 1; checked < 150; ++seed) {
    const auto& family = mi::testing::families()[seed % 4];
    const OraclePair pair = mi::testing::generated(family, 4 + seed % 10, seed + 500);
    const std::size_t n = pair.instance.n;
    const ElementSet s = mi::testing::random_common_independent(*pair.m1, *pair.m2, rng, n);
    if (s.empty()) continue;
    const ElementSet sources = compute_free_additions(*pair.m1, s);
    std::vector<Element> layer;
    for (Element e : s.to_vector()) {
      if (rng() % 2 == 0) layer.push_back(e);
    }
    if (layer.empty()) layer.push_back(s.first());
    ElementSet reached = sources;
    for (Element e = 0; e < n; ++e) {
      if (!s.contains(e) && rng() % 4 == 0) reached.insert(e);
    }
    const auto got = fan_out_neighbors(*pair.m1, s, layer, reached);
    const auto want = exhaustive_layer_successors(*pair.m1, s, layer, reached);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      REQUIRE(got[i].first == want[i].first);
      const auto& parents = want[i].second;
      REQUIRE(std::find(parents.begin(), parents.end(), got[i].second) != parents.end());
      ElementSet swapped = s;
      swapped.erase(got[i].second);
      swapped.insert(got[i].first);
      REQUIRE(pair.m1->is_independent(swapped));
    }
    ++checked;
  }
}

TEST_CASE("shortest_augmenting_path examples") {
  const OraclePair bip = mi::testing::make_pair(mi::testing::bipartite_example());
  const SearchOutcome outcome = shortest_augmenting_path(*bip.m1, *bip.m2, ElementSet(3, {0}));
  REQUIRE(outcome.found());
  CHECK(outcome.path().vertices == std::vector<Element>{2, 0, 1});
  CHECK(outcome.path().arc_count() == 2);
  CHECK(outcome.layers == std::vector<std::vector<Element>>{{2}, {0}, {1}});

  // no sources at all
  const UniformMatroid zero(3, 0);
  const SearchOutcome none = shortest_augmenting_path(zero, zero, ElementSet(3));
  REQUIRE_FALSE(none.found());
  CHECK(none.reached().empty());

  const GraphicMatroid tri = mi::testing::triangle();
  const UniformMatroid u32(3, 2);
  const SearchOutcome done = shortest_augmenting_path(tri, u32, ElementSet(3, {0, 1}));
  CHECK_FALSE(done.found());
}

TEST_CASE("augment examples and malformed paths") {
  const OraclePair bip = mi::testing::make_pair(mi::testing::bipartite_example());
  CHECK(augment(*bip.m1, *bip.m2, ElementSet(3, {0}), AugmentingPath{{2, 0, 1}}) == ElementSet(3, {1, 2}));
  CHECK(augment(*bip.m1, *bip.m2, ElementSet(3), AugmentingPath{{1}}) == ElementSet(3, {1}));
  CHECK_THROWS_AS(augment(*bip.m1, *bip.m2, ElementSet(3, {0}), AugmentingPath{{2, 0}}), ContractViolation);
  CHECK_THROWS_AS(augment(*bip.m1, *bip.m2, ElementSet(3, {0}), AugmentingPath{{0, 2, 1}}), ContractViolation);
  // well-formed but not an exchange path: result dependent in M1
  CHECK_THROWS_AS(augment(*bip.m1, *bip.m2, ElementSet(3, {2}), AugmentingPath{{0, 2, 1}}), InternalError);
}

TEST_CASE("certificate examples") {
  const UniformMatroid u2(4, 2);
  const Certificate full = certificate_from_reachable(u2, u2, ElementSet(4, {0, 1}), ElementSet(4));
  CHECK(full.U == ElementSet::full(4));
  CHECK(full.r1_of_U == 2);
  CHECK(full.r2_of_complement == 0);

  const GraphicMatroid tri = mi::testing::triangle();
  const UniformMatroid u32(3, 2);
  const Certificate c = certificate_from_reachable(tri, u32, ElementSet(3, {0, 1}), ElementSet(3));
  CHECK(c.r1_of_U + c.r2_of_complement == 2);

  CHECK_THROWS_AS(certificate_from_reachable(u2, u2, ElementSet(4, {0}), ElementSet(4)), InternalError);
}

TEST_CASE("solve examples") {
  const UniformMatroid a(4, 2), b(4, 3);
  const SolveResult uu = solve(a, b);
  CHECK(uu.solution.size() == 2);
  CHECK(uu.stats.shortcut_additions == 2);
  CHECK(uu.stats.calls[1][static_cast<std::size_t>(Phase::case1)] == 0);
  CHECK(uu.stats.calls[0][static_cast<std::size_t>(Phase::case2)] == 0);

  const OraclePair bip = mi::testing::make_pair(mi::testing::bipartite_example());
  const SolveResult rb = solve(*bip.m1, *bip.m2);
  CHECK(rb.solution == ElementSet(3, {1, 2}));
  CHECK(rb.stats.path_lengths == std::vector<std::size_t>{2});
  CHECK(rb.stats.shortcut_additions == 1);
  CHECK(rb.certificate.r1_of_U + rb.certificate.r2_of_complement == 2);

  const OraclePair rainbow = mi::testing::make_pair(mi::testing::rainbow_triangle());
  CHECK(solve(*rainbow.m1, *rainbow.m2).solution.size() == 2);

  CHECK_THROWS_AS(solve(UniformMatroid(3, 1), UniformMatroid(4, 1)), InputError);
}

TEST_CASE("solve on all-loop matroids returns the empty set with U = E") {
  const UniformMatroid zero(5, 0);
  const UniformMatroid any(5, 5);
  const SolveResult r = solve(zero, any);
  CHECK(r.solution.empty());
  CHECK(r.certificate.U == ElementSet::full(5));
  CHECK(r.certificate.r1_of_U == 0);
  const SolveResult empty_ground = solve(UniformMatroid(0, 0), UniformMatroid(0, 3));
  CHECK(empty_ground.solution.empty());
}

TEST_CASE("search state invariants and path validity on generated instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto& family = mi::testing::families()[seed % 4];
    const OraclePair pair = mi::testing::generated(family, 3 + seed % 12, seed * 7);
    const std::size_t n = pair.instance.n;
    std::size_t previous_size = 0;
    SolveOptions options;
    options.on_search = [&](const ElementSet& s, const SearchOutcome& outcome) {
      REQUIRE(pair.m1->is_independent(s));
      REQUIRE(pair.m2->is_independent(s));
      CHECK(s.size() >= previous_size);
      previous_size = s.size();
      ElementSet seen(n);
      for (std::size_t d = 0; d < outcome.layers.size(); ++d) {
        for (Element e : outcome.layers[d]) {
          REQUIRE_FALSE(seen.contains(e));
          seen.insert(e);
          REQUIRE(s.contains(e) == (d % 2 == 1));
        }
        REQUIRE(std::is_sorted(outcome.layers[d].begin(), outcome.layers[d].end()));
      }
      if (!outcome.found()) {
        CHECK(outcome.reached() == seen);
        return;
      }
      const auto& path = outcome.path().vertices;
      const ExchangeGraph graph = build_naive_exchange_graph(*pair.m1, *pair.m2, s, Execution::serial);
      REQUIRE(graph.sources.contains(path.front()));
      REQUIRE(graph.sinks.contains(path.back()));
      REQUIRE(path.size() == outcome.layers.size());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        REQUIRE(std::find(outcome.layers[i].begin(), outcome.layers[i].end(), path[i]) != outcome.layers[i].end());
        const auto& arcs = i % 2 == 0 ? graph.arcs_out_to_in : graph.arcs_in_to_out;
        REQUIRE(std::binary_search(arcs.begin(), arcs.end(), std::make_pair(path[i], path[i + 1])));
      }
    };
    const SolveResult r = solve(*pair.m1, *pair.m2, options);
    CHECK(r.stats.augmentations + r.stats.shortcut_additions == r.stats.p);
    CHECK(r.stats.p == r.solution.size());
    CHECK(r.stats.path_lengths.size() == r.stats.augmentations);
  }
}

TEST_CASE("solve is deterministic") {
  const OraclePair pair = mi::testing::generated("graphic_partition", 40, 9);
  const SolveResult a = solve(*pair.m1, *pair.m2);
  const SolveResult b = solve(*pair.m1, *pair.m2);
  CHECK(a.solution == b.solution);
  CHECK(a.stats.calls == b.stats.calls);
  CHECK(a.stats.path_lengths == b.stats.path_lengths);
  CHECK(a.certificate.U == b.certificate.U);
}

TEST_CASE("sources and sinks cost exactly n - |S| calls per matroid per iteration") {
  const OraclePair pair = mi::testing::generated("partition_matching", 30, 4);
  const SolveResult r = solve(*pair.m1, *pair.m2);
  // iteration k runs with |S| = k, plus a final iteration at |S| = p
  std::uint64_t expected = 0;
  for (std::size_t k = 0; k <= r.stats.p; ++k) expected += 30 - k;
  CHECK(r.stats.calls[0][static_cast<std::size_t>(Phase::sources_sinks)] == expected);
  CHECK(r.stats.calls[1][static_cast<std::size_t>(Phase::sources_sinks)] == expected);
  CHECK(r.stats.calls[0][static_cast<std::size_t>(Phase::augment_check)] == r.stats.p);
  CHECK(r.stats.calls[0][static_cast<std::size_t>(Phase::case1)] == 0);
  CHECK(r.stats.calls[1][static_cast<std::size_t>(Phase::case2)] == 0);
}
