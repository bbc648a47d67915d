#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mi/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Matroid intersection solver and oracle-call benchmark"};
  app.require_subcommand(1);

  std::string path;
  mi::SolveFlags flags;
  std::string stats_path;
  auto* solve = app.add_subcommand("solve", "Solve an instance and print its run report");
  solve->add_option("file", path, "Instance file")->required();
  solve->add_flag("--baseline", flags.baseline, "Check lazy search layers against the naive exchange graph");
  solve->add_flag("--check-bounds", flags.check_bounds, "Append path-length and oracle-budget checks");
  solve->add_flag("--axiom-check", flags.axiom_check, "Exhaustively check matroid axioms first (n <= 12)");
  solve->add_option("--stats", stats_path, "Also write the report to this file");

  auto* verify = app.add_subcommand("verify", "Compare against brute force (n <= 20)");
  verify->add_option("file", path, "Instance file")->required();

  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--family", family, "uniform_pair | partition_matching | graphic_partition | gf2_pair")->required();
  gen->add_option("--n", n, "Ground set size")->required();
  gen->add_option("--seed", seed, "Generator seed")->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  std::string config_path;
  auto* bench = app.add_subcommand("bench", "Run a benchmark matrix and emit CSV");
  bench->add_option("--config", config_path, "Bench config file")->required();
  bench->add_option("--out", out_path, "Output CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mi::kExitOk : mi::kExitInputError;
  }

  auto optional_path = [](const std::string& p) { return p.empty() ? std::nullopt : std::optional<std::string>(p); };
  if (*solve) {
    flags.stats_path = optional_path(stats_path);
    return mi::cmd_solve(path, flags, std::cout, std::cerr);
  }
  if (*verify) return mi::cmd_verify(path, std::cout, std::cerr);
  if (*gen) return mi::cmd_gen(family, n, seed, optional_path(out_path), std::cout, std::cerr);
  return mi::cmd_bench(config_path, optional_path(out_path), std::cout, std::cerr);
}
