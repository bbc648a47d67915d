#include "mi/report.hpp"

#include "json.hpp"

namespace mi {

namespace {

using nlohmann::json;

json phase_object(const PhaseCounts& counts) {
  json out = json::object();
  std::uint64_t total = 0;
  for (Phase p : kAllPhases) {
    const std::uint64_t c = counts[static_cast<std::size_t>(p)];
    out[std::string(phase_name(p))] = c;
    total += c;
  }
  out["total"] = total;
  return out;
}

json bounds_object(const BoundReport& b, std::size_t r, double constant) {
  json per_path = json::array();
  for (const PathBound& p : b.per_path) {
    per_path.push_back({{"length", p.length}, {"size_before", p.size_before}, {"bound", p.bound}, {"ok", p.ok}});
  }
  return {{"r", r},
          {"per_path", per_path},
          {"per_path_ok", b.all_paths_ok()},
          {"total_length", b.total_length},
          {"total_bound", b.total_bound},
          {"total_ok", b.total_ok},
          {"measured_calls", b.measured_calls},
          {"budget_constant", constant},
          {"budget", b.budget},
          {"budget_ratio", b.budget_ratio},
          {"budget_ok", b.budget_ok}};
}

}  // namespace

std::string render_report(const RunReport& report) {
  const SolveResult& res = report.result;
  const RunStats& stats = res.stats;
  json doc;
  if (report.name) doc["name"] = *report.name;
  if (report.seed) doc["seed"] = *report.seed;
  doc["n"] = report.n;
  doc["solution"] = res.solution.to_vector();
  doc["size"] = res.solution.size();
  doc["certificate"] = {{"U", res.certificate.U.to_vector()},
                        {"r1_of_U", res.certificate.r1_of_U},
                        {"r2_of_complement", res.certificate.r2_of_complement}};
  doc["oracle_calls"] = {{"matroid1", phase_object(stats.calls[0])},
                         {"matroid2", phase_object(stats.calls[1])},
                         {"total", stats.total_calls()}};
  doc["path_lengths"] = stats.path_lengths;
  doc["sizes_before"] = stats.sizes_before;
  doc["augmentations"] = stats.augmentations;
  doc["shortcut_additions"] = stats.shortcut_additions;
  if (report.bounds) doc["bounds"] = bounds_object(*report.bounds, report.r, report.budget_constant);
  if (report.baseline) {
    doc["baseline"] = {{"searches_checked", report.baseline->searches_checked},
                       {"layers_equal", report.baseline->layers_equal}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace mi
