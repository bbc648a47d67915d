#include "mi/matroid.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mi/errors.hpp"

namespace mi {

namespace {

// Per-thread generation stamps used to spot repeated ids in O(|members|).
bool has_repeats(std::span<const Element> members, std::size_t universe) {
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t generation = 0;
  if (stamp.size() < universe) stamp.resize(universe, 0);
  if (++generation == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    generation = 1;
  }
  for (Element e : members) {
    if (stamp[e] == generation) return true;
    stamp[e] = generation;
  }
  return false;
}

}  // namespace

bool MatroidOracle::is_independent(std::span<const Element> members) const {
  const std::size_t n = ground_size();
  for (Element e : members) {
    if (e >= n) {
      throw InputError("element " + std::to_string(e) + " outside ground set of size " +
                       std::to_string(n));
    }
  }
  if (has_repeats(members, n)) throw InputError("repeated element in independence query");
  return independent(members);
}

bool MatroidOracle::is_independent(const ElementSet& members) const {
  if (members.universe() != ground_size()) {
    throw InputError("element set universe " + std::to_string(members.universe()) +
                     " does not match ground size " + std::to_string(ground_size()));
  }
  const std::vector<Element> list = members.to_vector();
  return independent(list);
}

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::sources_sinks:
      return "sources_sinks";
    case Phase::case1:
      return "case1";
    case Phase::case2:
      return "case2";
    case Phase::augment_check:
      return "augment_check";
    case Phase::certificate:
      return "certificate";
  }
  return "unknown";
}

std::uint64_t CountingOracle::call_count() const {
  std::uint64_t total = 0;
  for (const auto& c : counts_) total += c.load(std::memory_order_relaxed);
  return total;
}

PhaseCounts CountingOracle::phase_counts() const {
  PhaseCounts out{};
  for (std::size_t i = 0; i < kPhaseCount; ++i) out[i] = counts_[i].load(std::memory_order_relaxed);
  return out;
}

void CountingOracle::reset() {
  for (auto& c : counts_) c.store(0, std::memory_order_relaxed);
}

bool CountingOracle::independent(std::span<const Element> members) const {
  counts_[static_cast<std::size_t>(phase())].fetch_add(1, std::memory_order_relaxed);
  return inner_.independent(members);
}

std::size_t rank(const MatroidOracle& matroid, const ElementSet& members) {
  if (members.universe() != matroid.ground_size()) {
    throw InputError("element set universe does not match ground size");
  }
  std::vector<Element> basis;
  basis.reserve(members.size());
  for (Element e : members.to_vector()) {
    basis.push_back(e);
    if (!matroid.is_independent(std::span<const Element>(basis))) basis.pop_back();
  }
  return basis.size();
}

std::size_t full_rank(const MatroidOracle& matroid) {
  return rank(matroid, ElementSet::full(matroid.ground_size()));
}

}  // namespace mi
