#include "mi/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "mi/axioms.hpp"
#include "mi/bench.hpp"
#include "mi/budget.hpp"
#include "mi/generate.hpp"
#include "mi/verification.hpp"

namespace mi {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "' for writing");
  file << contents;
  if (!file) throw InputError("failed writing '" + path + "'");
}

// Maps the error taxonomy onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "invariant failed: " << e.what() << "\n";
    return kExitInvariantFailure;
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::string axiom_gate(const Instance& instance) {
  if (instance.n > kMaxAxiomGround) {
    throw InputError("--axiom-check needs n <= " + std::to_string(kMaxAxiomGround));
  }
  for (const MatroidDescription* d : {&instance.matroid1, &instance.matroid2}) {
    const AxiomReport axioms = axiom_check(*make_oracle(*d));
    if (!axioms.ok()) return axioms.summary();
  }
  return {};
}

RunReport solve_instance(const Instance& instance, const SolveFlags& flags, std::string& failure) {
  const auto m1 = make_oracle(instance.matroid1);
  const auto m2 = make_oracle(instance.matroid2);

  RunReport report;
  report.name = instance.name;
  report.n = instance.n;
  report.seed = instance.seed;

  SolveOptions options;
  if (flags.baseline) {
    report.baseline = BaselineSummary{};
    // The naive graph queries the raw oracles so the run's counters stay clean.
    options.on_search = [&](const ElementSet& solution, const SearchOutcome& outcome) {
      const ExchangeGraph graph = build_naive_exchange_graph(*m1, *m2, solution);
      ++report.baseline->searches_checked;
      if (naive_bfs_layers(graph, instance.n) != outcome.layers) report.baseline->layers_equal = false;
    };
  }
  report.result = solve(*m1, *m2, options);
  if (report.baseline && !report.baseline->layers_equal && failure.empty()) {
    failure = "layer equivalence: lazy search layers differ from the naive exchange graph";
  }

  if (flags.check_bounds) {
    report.r = std::max(full_rank(*m1), full_rank(*m2));
    report.budget_constant = 2.0 * kBudgetConstant;
    report.bounds = check_bounds(report.result.stats, instance.n, report.r, report.budget_constant);
    if (!report.bounds->all_paths_ok() && failure.empty()) failure = "per-path length bound";
    if (!report.bounds->total_ok && failure.empty()) failure = "total path length bound";
  }
  return report;
}

int cmd_solve(const std::string& path, const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = parse_instance(read_file(path));
    if (flags.axiom_check) {
      if (const std::string gate = axiom_gate(instance); !gate.empty()) {
        err << "invariant failed: matroid axioms: " << gate << "\n";
        return kExitInvariantFailure;
      }
    }
    std::string failure;
    const RunReport report = solve_instance(instance, flags, failure);
    const std::string text = render_report(report);
    out << text;
    if (flags.stats_path) write_file(*flags.stats_path, text);
    if (!failure.empty()) {
      err << "invariant failed: " << failure << "\n";
      return kExitInvariantFailure;
    }
    return kExitOk;
  });
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance instance = parse_instance(read_file(path));
    if (instance.n > kMaxBruteForceGround) {
      throw InputError("verify needs n <= " + std::to_string(kMaxBruteForceGround) + ", got " +
                       std::to_string(instance.n));
    }
    const auto m1 = make_oracle(instance.matroid1);
    const auto m2 = make_oracle(instance.matroid2);
    const SolveResult result = solve(*m1, *m2);
    const BruteForceResult brute = brute_force_max_common(*m1, *m2);
    const Certificate& cert = result.certificate;
    const std::size_t r1 = rank(*m1, cert.U);
    const std::size_t r2 = rank(*m2, cert.U.complement());
    const bool size_ok = result.solution.size() == brute.size;
    const bool cert_ok = r1 + r2 == result.solution.size();
    out << "size: solve=" << result.solution.size() << " brute_force=" << brute.size << (size_ok ? " ok" : " MISMATCH")
        << "\n";
    out << "certificate: r1(U)+r2(E\\U)=" << r1 + r2 << " |S|=" << result.solution.size()
        << (cert_ok ? " ok" : " MISMATCH") << "\n";
    return size_ok && cert_ok ? kExitOk : kExitInvariantFailure;
  });
}

int cmd_gen(const std::string& family, std::size_t n, std::uint64_t seed, const std::optional<std::string>& out_path,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string text = serialize_instance(generate_instance(family, n, seed));
    if (out_path) {
      write_file(*out_path, text);
    } else {
      out << text;
    }
    return kExitOk;
  });
}

int cmd_bench(const std::string& config_path, const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const BenchConfig config = parse_bench_config(read_file(config_path));
    const std::vector<BenchRow> rows = run_bench(config);
    const std::string csv = bench_csv(rows);
    if (out_path) {
      write_file(*out_path, csv);
    } else {
      out << csv;
    }
    for (const BenchRow& row : rows) {
      if (!row.lengths_ok) {
        err << "invariant failed: path length bound on " << row.family << " n=" << row.n << " seed=" << row.seed
            << "\n";
        return kExitInvariantFailure;
      }
    }
    return kExitOk;
  });
}

}  // namespace mi
