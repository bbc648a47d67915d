#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "mi/element_set.hpp"

namespace mi {

class CountingOracle;

/// Independence oracle over the ground set [0, ground_size()).
///
/// Implementations are pure and deterministic and may be queried from
/// several threads at once.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual std::size_t ground_size() const = 0;

  /// Throws InputError when an id is out of range or repeated; that is
  /// reported separately from a "dependent" answer.
  bool is_independent(std::span<const Element> members) const;
  bool is_independent(const ElementSet& members) const;

 protected:
  /// `members` are distinct and in range.
  virtual bool independent(std::span<const Element> members) const = 0;

  friend class CountingOracle;
};

/// Cost-accounting phases of a solver run.
enum class Phase : std::uint8_t { sources_sinks, case1, case2, augment_check, certificate };

inline constexpr std::size_t kPhaseCount = 5;
inline constexpr std::array<Phase, kPhaseCount> kAllPhases = {
    Phase::sources_sinks, Phase::case1, Phase::case2, Phase::augment_check, Phase::certificate};

std::string_view phase_name(Phase phase);

using PhaseCounts = std::array<std::uint64_t, kPhaseCount>;

/// Delegates every query to `inner` and counts it under the current phase.
///
/// Counters are atomic, so concurrent queries are all counted. The current
/// phase is a single per-instance setting: a query is attributed to
/// whatever phase is set when it runs, so only one owner should switch
/// phases (the solver does this single-threaded). The initial phase is
/// sources_sinks.
class CountingOracle final : public MatroidOracle {
 public:
  explicit CountingOracle(const MatroidOracle& inner) : inner_(inner) {}

  std::size_t ground_size() const override { return inner_.ground_size(); }

  void set_phase(Phase phase) { phase_.store(phase, std::memory_order_relaxed); }
  Phase phase() const { return phase_.load(std::memory_order_relaxed); }

  std::uint64_t call_count() const;
  std::uint64_t count(Phase phase) const {
    return counts_[static_cast<std::size_t>(phase)].load(std::memory_order_relaxed);
  }
  PhaseCounts phase_counts() const;
  void reset();

  const MatroidOracle& inner() const { return inner_; }

 protected:
  bool independent(std::span<const Element> members) const override;

 private:
  const MatroidOracle& inner_;
  std::atomic<Phase> phase_{Phase::sources_sinks};
  mutable std::array<std::atomic<std::uint64_t>, kPhaseCount> counts_{};
};

/// Sets a phase for the lifetime of the scope and restores the previous one.
class PhaseScope {
 public:
  PhaseScope(CountingOracle& oracle, Phase phase) : oracle_(oracle), saved_(oracle.phase()) {
    oracle_.set_phase(phase);
  }
  ~PhaseScope() { oracle_.set_phase(saved_); }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  CountingOracle& oracle_;
  Phase saved_;
};

/// Size of a maximal independent subset of `members`, grown greedily in
/// ascending id order. At most |members| oracle calls.
std::size_t rank(const MatroidOracle& matroid, const ElementSet& members);

/// rank over the whole ground set.
std::size_t full_rank(const MatroidOracle& matroid);

}  // namespace mi
