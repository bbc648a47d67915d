#include "mi/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <sstream>

#include "json.hpp"
#include "mi/errors.hpp"
#include "mi/generate.hpp"
#include "mi/verification.hpp"

namespace mi {

namespace {

struct Task {
  const std::string* family;
  std::size_t n;
  std::uint64_t seed;
};

std::string fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
    throw InputError("runs: expected an array of run specs");
  }
  const auto& known = generator_families();
  BenchConfig config;
  for (const json& run : doc["runs"]) {
    if (!run.is_object()) throw InputError("runs: expected objects");
    BenchSpec spec;
    if (!run.contains("family") || !run["family"].is_string()) throw InputError("runs.family: expected a string");
    spec.family = run["family"].get<std::string>();
    if (std::find(known.begin(), known.end(), spec.family) == known.end()) {
      throw InputError("runs.family: unknown generator '" + spec.family + "'");
    }
    for (const char* key : {"n", "seeds"}) {
      if (!run.contains(key) || !run[key].is_array()) {
        throw InputError(std::string("runs.") + key + ": expected an array of non-negative integers");
      }
      for (const json& v : run[key]) {
        if (!v.is_number_unsigned()) throw InputError(std::string("runs.") + key + ": expected non-negative integers");
      }
    }
    spec.sizes = run["n"].get<std::vector<std::size_t>>();
    spec.seeds = run["seeds"].get<std::vector<std::uint64_t>>();
    config.runs.push_back(std::move(spec));
  }
  return config;
}

BenchRow run_bench_row(std::string_view family, std::size_t n, std::uint64_t seed) {
  const Instance instance = generate_instance(family, n, seed);
  const auto m1 = make_oracle(instance.matroid1);
  const auto m2 = make_oracle(instance.matroid2);
  const SolveResult result = solve(*m1, *m2);

  BenchRow row;
  row.family = std::string(family);
  row.n = n;
  row.seed = seed;
  row.r = std::max(full_rank(*m1), full_rank(*m2));
  row.p = result.stats.p;
  row.calls_m1 = result.stats.calls_for(0);
  row.calls_m2 = result.stats.calls_for(1);
  const BoundReport bounds = check_bounds(result.stats, n, row.r, 0.0);
  row.sum_path_length = bounds.total_length;
  row.total_length_bound = bounds.total_bound;
  row.lengths_ok = bounds.total_ok && bounds.all_paths_ok();
  row.augmentations = result.stats.augmentations;
  row.shortcut_additions = result.stats.shortcut_additions;
  row.budget_ratio = bounds.budget_ratio;
  return row;
}

std::vector<BenchRow> run_bench(const BenchConfig& config, Execution exec) {
  std::vector<Task> tasks;
  for (const BenchSpec& spec : config.runs) {
    for (std::size_t n : spec.sizes) {
      for (std::uint64_t seed : spec.seeds) tasks.push_back({&spec.family, n, seed});
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < count; ++i) {
      const Task& t = tasks[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = run_bench_row(*t.family, t.n, t.seed);
    }
    return rows;
  }
  // Exceptions must not escape an OpenMP region; keep the first by row order.
  std::vector<std::exception_ptr> errors(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    try {
      rows[static_cast<std::size_t>(i)] = run_bench_row(*t.family, t.n, t.seed);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "family,n,seed,r,p,calls_m1,calls_m2,total_calls,sum_path_length,total_length_bound,lengths_ok,"
         "augmentations,shortcut_additions,budget_ratio\n";
  for (const BenchRow& row : rows) {
    out << row.family << ',' << row.n << ',' << row.seed << ',' << row.r << ',' << row.p << ',' << row.calls_m1
        << ',' << row.calls_m2 << ',' << row.total_calls() << ',' << row.sum_path_length << ','
        << fixed(row.total_length_bound) << ',' << (row.lengths_ok ? 1 : 0) << ',' << row.augmentations << ','
        << row.shortcut_additions << ',' << fixed(row.budget_ratio) << '\n';
  }
  return out.str();
}

}  // namespace mi
