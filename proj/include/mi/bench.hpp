#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mi/execution.hpp"

namespace mi {

struct BenchSpec {
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
};

struct BenchConfig {
  std::vector<BenchSpec> runs;
};

/// {"runs": [{"family": "...", "n": [..], "seeds": [..]}, ...]}
BenchConfig parse_bench_config(std::string_view text);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t r = 0;
  std::size_t p = 0;
  std::uint64_t calls_m1 = 0;
  std::uint64_t calls_m2 = 0;
  std::size_t sum_path_length = 0;
  double total_length_bound = 0.0;
  bool lengths_ok = false;
  std::size_t augmentations = 0;
  std::size_t shortcut_additions = 0;
  double budget_ratio = 0.0;

  std::uint64_t total_calls() const { return calls_m1 + calls_m2; }
};

/// Generates, solves (which checks the duality certificate) and measures one
/// instance.
BenchRow run_bench_row(std::string_view family, std::size_t n, std::uint64_t seed);

/// One row per (spec, n, seed) in config order. The parallel path runs rows
/// on separate threads, each with its own oracles; output order is fixed.
std::vector<BenchRow> run_bench(const BenchConfig& config, Execution exec = Execution::parallel);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mi
