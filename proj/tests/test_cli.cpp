#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mi/bench.hpp"
#include "mi/commands.hpp"
#include "mi/generate.hpp"
#include "mi/instance.hpp"
#include "test_support.hpp"

using namespace mi;
namespace fs = std::filesystem;

namespace {

const fs::path kSource = MI_SOURCE_DIR;

std::string error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mi_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

int run_mi(const std::string& args) {
  const std::string command = std::string(MI_EXE_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("parse_instance examples") {
  const Instance uu = parse_instance(R"({"n": 4,
    "matroid1": {"type": "uniform", "n": 4, "k": 2},
    "matroid2": {"type": "uniform", "n": 4, "k": 3}})");
  CHECK(uu.n == 4);
  CHECK(std::get<UniformDescription>(uu.matroid1).k == 2);
  CHECK(std::get<UniformDescription>(uu.matroid2).k == 3);
  CHECK_FALSE(uu.name.has_value());

  const Instance rainbow = parse_instance(R"({"n": 3, "name": "rainbow",
    "matroid1": {"type": "graphic", "vertex_count": 3, "edges": [[0,1],[1,2],[2,0]]},
    "matroid2": {"type": "partition", "blocks": [[0,1],[2]], "capacities": [1,1]}})");
  CHECK(rainbow.name == "rainbow");
  const auto m1 = make_oracle(rainbow.matroid1);
  const auto m2 = make_oracle(rainbow.matroid2);
  CHECK(solve(*m1, *m2).solution.size() == 2);

  const Instance lin = parse_instance(R"({"n": 3,
    "matroid1": {"type": "linear_gf2", "row_count": 2, "columns": [[1,0],[0,1],[1,1]]},
    "matroid2": {"type": "uniform", "n": 3, "k": 3}})");
  CHECK(std::get<LinearGF2Description>(lin.matroid1).columns.size() == 3);
}

TEST_CASE("parse_instance diagnostics name the field") {
  const std::string uncovered = error_of(R"({"n": 4,
    "matroid1": {"type": "partition", "blocks": [[0,1],[2]], "capacities": [1,1]},
    "matroid2": {"type": "uniform", "n": 4, "k": 1}})");
  CHECK(uncovered.find("blocks") != std::string::npos);

  CHECK(error_of(R"({"n": 2, "matroid1": {"type": "partition", "blocks": [[0,1],[1]], "capacities": [1,1]},
    "matroid2": {"type": "uniform", "n": 2, "k": 1}})").find("blocks") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "matroid1": {"type": "uniform", "n": 2},
    "matroid2": {"type": "uniform", "n": 2, "k": 1}})").find("matroid1.k") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "matroid1": {"type": "matching"},
    "matroid2": {"type": "uniform", "n": 2, "k": 1}})").find("matroid1.type") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "matroid1": {"type": "linear_gf2", "row_count": 2, "columns": [[1,0],[1]]},
    "matroid2": {"type": "uniform", "n": 2, "k": 1}})").find("columns") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "matroid1": {"type": "graphic", "vertex_count": 2, "edges": [[0,1],[0,2]]},
    "matroid2": {"type": "uniform", "n": 2, "k": 1}})").find("edges") != std::string::npos);
  CHECK(error_of(R"({"n": -1})").find("n") != std::string::npos);
  CHECK(error_of("{not json").find("document") != std::string::npos);
  CHECK(error_of(R"({"n": 1, "matroid1": {"type": "uniform", "n": 1, "k": 1},
    "matroid2": {"type": "uniform", "n": 1, "k": 1}, "extra": 3})").find("extra") != std::string::npos);
}

TEST_CASE("ground-size mismatch has its own diagnostic") {
  CHECK_THROWS_AS(parse_instance(R"({"n": 4,
    "matroid1": {"type": "uniform", "n": 5, "k": 2},
    "matroid2": {"type": "uniform", "n": 4, "k": 3}})"),
                  GroundSizeMismatch);
  CHECK_THROWS_AS(parse_instance(R"({"n": 2,
    "matroid1": {"type": "uniform", "n": 2, "k": 2},
    "matroid2": {"type": "graphic", "vertex_count": 2, "edges": [[0,1]]}})"),
                  GroundSizeMismatch);
}

TEST_CASE("generators are deterministic and round-trip through the parser") {
  CHECK(serialize_instance(generate_instance("partition_matching", 6, 1)) ==
        serialize_instance(generate_instance("partition_matching", 6, 1)));
  CHECK(serialize_instance(generate_instance("partition_matching", 6, 1)) !=
        serialize_instance(generate_instance("partition_matching", 6, 2)));
  const Instance gf2 = generate_instance("gf2_pair", 10, 7);
  CHECK(std::holds_alternative<LinearGF2Description>(gf2.matroid1));
  CHECK(std::holds_alternative<LinearGF2Description>(gf2.matroid2));
  CHECK(described_ground_size(gf2.matroid1) == 10);

  for (const std::string& family : generator_families()) {
    for (std::size_t n : {0u, 1u, 2u, 7u, 16u, 60u}) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const Instance inst = generate_instance(family, n, seed);
        const std::string text = serialize_instance(inst);
        REQUIRE(parse_instance(text) == inst);
        REQUIRE(serialize_instance(parse_instance(text)) == text);
      }
    }
  }
  try {
    generate_instance("mystery", 4, 1);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("partition_matching") != std::string::npos);
  }
}

TEST_CASE("solve report for the bipartite example matches the golden file") {
  const fs::path in = scratch("bipartite.json");
  std::ofstream(in) << serialize_instance(mi::testing::bipartite_example());
  std::ostringstream out, err;
  REQUIRE(cmd_solve(in.string(), SolveFlags{}, out, err) == kExitOk);
  CHECK(out.str() == read_file((kSource / "tests/golden/bipartite_report.json").string()));

  std::ostringstream again, err2;
  REQUIRE(cmd_solve(in.string(), SolveFlags{}, again, err2) == kExitOk);
  CHECK(again.str() == out.str());
}

TEST_CASE("uniform pair report: every addition is a shortcut") {
  Instance inst;
  inst.n = 4;
  inst.matroid1 = UniformDescription{4, 2};
  inst.matroid2 = UniformDescription{4, 3};
  std::string failure;
  const RunReport report = solve_instance(inst, SolveFlags{}, failure);
  CHECK(failure.empty());
  CHECK(report.result.solution.size() == 2);
  CHECK(report.result.stats.shortcut_additions == 2);
  CHECK(report.result.stats.calls[0][static_cast<std::size_t>(Phase::case2)] == 0);
  CHECK(report.result.stats.calls[1][static_cast<std::size_t>(Phase::case1)] == 0);
}

TEST_CASE("solve flags: baseline, bounds, axiom gate, stats file") {
  const fs::path in = scratch("graphic.json");
  std::ofstream(in) << serialize_instance(generate_instance("graphic_partition", 12, 3));
  const fs::path stats = scratch("graphic_stats.json");
  SolveFlags flags;
  flags.baseline = true;
  flags.check_bounds = true;
  flags.axiom_check = true;
  flags.stats_path = stats.string();
  std::ostringstream out, err;
  REQUIRE(cmd_solve(in.string(), flags, out, err) == kExitOk);
  CHECK(read_file(stats.string()) == out.str());
  CHECK(out.str().find("\"layers_equal\": true") != std::string::npos);
  CHECK(out.str().find("\"total_ok\": true") != std::string::npos);

  const fs::path big = scratch("big.json");
  std::ofstream(big) << serialize_instance(generate_instance("uniform_pair", 13, 1));
  SolveFlags gate;
  gate.axiom_check = true;
  std::ostringstream o2, e2;
  CHECK(cmd_solve(big.string(), gate, o2, e2) == kExitInputError);
}

TEST_CASE("verify: bundled corpus, refusal above 20, missing file") {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kSource / "corpus")) {
    if (entry.path().extension() != ".json") continue;
    std::ostringstream out, err;
    INFO(entry.path().string() << "\n" << out.str() << err.str());
    CHECK(cmd_verify(entry.path().string(), out, err) == kExitOk);
    ++files;
  }
  CHECK(files >= 50);

  const fs::path big = scratch("n25.json");
  std::ofstream(big) << serialize_instance(generate_instance("uniform_pair", 25, 1));
  std::ostringstream out, err;
  CHECK(cmd_verify(big.string(), out, err) == kExitInputError);
  CHECK(err.str().find("20") != std::string::npos);
  CHECK(cmd_verify("/nonexistent/instance.json", out, err) == kExitInputError);
}

TEST_CASE("bench config parsing and output") {
  const BenchConfig config = parse_bench_config(R"({"runs": [{"family": "uniform_pair", "n": [4, 8], "seeds": [1]}]})");
  REQUIRE(config.runs.size() == 1);
  CHECK(config.runs[0].sizes == std::vector<std::size_t>{4, 8});
  CHECK_THROWS_AS(parse_bench_config(R"({"runs": [{"family": "nope", "n": [4], "seeds": [1]}]})"), InputError);
  CHECK_THROWS_AS(parse_bench_config(R"({"runs": [{"family": "gf2_pair", "n": [-4], "seeds": [1]}]})"), InputError);
  CHECK_THROWS_AS(parse_bench_config(R"({"rows": []})"), InputError);

  const std::string csv = bench_csv(run_bench(config));
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header.rfind("family,n,seed,r,p,calls_m1,calls_m2,total_calls,sum_path_length", 0) == 0);
  int rows = 0;
  while (std::getline(lines, row)) {
    CHECK(row.rfind("uniform_pair,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 2);
}

TEST_CASE("executable exit codes") {
  const fs::path in = scratch("exe.json");
  std::ofstream(in) << serialize_instance(mi::testing::rainbow_triangle());
  CHECK(run_mi("solve " + in.string()) == 0);
  CHECK(run_mi("solve " + in.string() + " --baseline --check-bounds --axiom-check") == 0);
  CHECK(run_mi("verify " + in.string()) == 0);
  CHECK(run_mi("solve /nonexistent.json") == 2);
  CHECK(run_mi("gen --family nope --n 3 --seed 1") == 2);
  CHECK(run_mi("frobnicate") == 2);
  const fs::path gen = scratch("gen.json");
  CHECK(run_mi("gen --family gf2_pair --n 10 --seed 7 --out " + gen.string()) == 0);
  CHECK(parse_instance(read_file(gen.string())) == generate_instance("gf2_pair", 10, 7));
}
