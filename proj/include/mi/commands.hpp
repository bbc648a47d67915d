#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mi/instance.hpp"
#include "mi/report.hpp"

namespace mi {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitInputError = 2;

struct SolveFlags {
  bool baseline = false;
  bool check_bounds = false;
  bool axiom_check = false;  // handled by cmd_solve via axiom_gate
  std::optional<std::string> stats_path;
};

/// Exhaustive axiom check of both matroids; empty when both pass. Refuses
/// (InputError) above the axiom checker's ground-size limit.
std::string axiom_gate(const Instance& instance);

/// Solves one instance and assembles its report. `failure` receives the name
/// of the first failed invariant, if any.
RunReport solve_instance(const Instance& instance, const SolveFlags& flags, std::string& failure);

int cmd_solve(const std::string& path, const SolveFlags& flags, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_gen(const std::string& family, std::size_t n, std::uint64_t seed, const std::optional<std::string>& out_path,
            std::ostream& out, std::ostream& err);
int cmd_bench(const std::string& config_path, const std::optional<std::string>& out_path, std::ostream& out,
              std::ostream& err);

std::string read_file(const std::string& path);

}  // namespace mi
