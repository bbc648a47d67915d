#include "mi/axioms.hpp"

#include <bit>
#include <sstream>

#include "mi/errors.hpp"

namespace mi {

namespace {

void require_small(const MatroidOracle& matroid) {
  if (matroid.ground_size() > kMaxAxiomGround) {
    throw InputError("axiom check needs ground size <= " + std::to_string(kMaxAxiomGround) + ", got " +
                     std::to_string(matroid.ground_size()));
  }
}

bool subset_independent(const MatroidOracle& matroid, std::uint32_t mask) {
  Element members[32];
  std::size_t count = 0;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) members[count++] = static_cast<Element>(std::countr_zero(m));
  return matroid.is_independent(std::span<const Element>(members, count));
}

// Bitmask of y outside x with x + y independent.
std::vector<std::uint32_t> augmentable(const std::vector<std::uint8_t>& table, std::size_t n) {
  std::vector<std::uint32_t> out(table.size(), 0);
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (table[x] == 0) continue;
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t bit = 1u << y;
      if ((x & bit) == 0 && table[x | bit] != 0) out[x] |= bit;
    }
  }
  return out;
}

bool hereditary_violated(const std::vector<std::uint8_t>& table, std::uint32_t y_mask, std::uint32_t drop) {
  return table[y_mask] != 0 && (y_mask & drop) != 0 && table[y_mask & ~drop] == 0;
}

bool exchange_violated(const std::vector<std::uint8_t>& table, const std::vector<std::uint32_t>& aug,
                       std::uint32_t x, std::uint32_t y) {
  return table[x] != 0 && table[y] != 0 && std::popcount(x) < std::popcount(y) && (y & ~x & aug[x]) == 0;
}

}  // namespace

std::string AxiomReport::summary() const {
  std::ostringstream out;
  out << violation_count << " violation(s)";
  for (const auto& v : violations) {
    out << "\n  ";
    switch (v.axiom) {
      case Axiom::empty_set:
        out << "empty set is dependent";
        break;
      case Axiom::hereditary:
        out << "hereditary: subset 0x" << std::hex << v.first << " dependent, superset 0x" << v.second
            << " independent" << std::dec;
        break;
      case Axiom::exchange:
        out << "exchange: X=0x" << std::hex << v.first << " cannot grow from Y=0x" << v.second << std::dec;
        break;
    }
  }
  return out.str();
}

std::vector<std::uint8_t> tabulate_independence(const MatroidOracle& matroid, Execution exec) {
  require_small(matroid);
  const std::int64_t subsets = std::int64_t{1} << matroid.ground_size();
  std::vector<std::uint8_t> table(static_cast<std::size_t>(subsets), 0);
  if (exec == Execution::serial) {
    for (std::int64_t mask = 0; mask < subsets; ++mask) {
      table[static_cast<std::size_t>(mask)] = subset_independent(matroid, static_cast<std::uint32_t>(mask)) ? 1 : 0;
    }
    return table;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t mask = 0; mask < subsets; ++mask) {
    table[static_cast<std::size_t>(mask)] = subset_independent(matroid, static_cast<std::uint32_t>(mask)) ? 1 : 0;
  }
  return table;
}

AxiomReport axiom_check(const MatroidOracle& matroid, Execution exec) {
  const std::vector<std::uint8_t> table = tabulate_independence(matroid, exec);
  const std::size_t n = matroid.ground_size();
  const std::int64_t subsets = static_cast<std::int64_t>(table.size());
  const std::vector<std::uint32_t> aug = augmentable(table, n);

  AxiomReport report;
  if (table[0] == 0) {
    ++report.violation_count;
    report.violations.push_back({Axiom::empty_set, 0, 0});
  }

  // Counting pass per superset / per X; listing pass afterwards in mask order.
  std::vector<std::uint64_t> hereditary_count(table.size(), 0);
  std::vector<std::uint64_t> exchange_count(table.size(), 0);
  auto count_row = [&](std::int64_t row) {
    const auto m = static_cast<std::uint32_t>(row);
    for (std::uint32_t y = 0; y < n; ++y) {
      if (hereditary_violated(table, m, 1u << y)) ++hereditary_count[m];
    }
    if (table[m] == 0) return;
    for (std::uint32_t other = 0; other < table.size(); ++other) {
      if (exchange_violated(table, aug, m, other)) ++exchange_count[m];
    }
  };
  if (exec == Execution::serial) {
    for (std::int64_t row = 0; row < subsets; ++row) count_row(row);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t row = 0; row < subsets; ++row) count_row(row);
  }

  for (std::uint32_t m = 0; m < table.size(); ++m) {
    report.violation_count += hereditary_count[m];
    for (std::uint32_t y = 0; y < n && hereditary_count[m] != 0; ++y) {
      if (report.violations.size() < kMaxListedViolations && hereditary_violated(table, m, 1u << y)) {
        report.violations.push_back({Axiom::hereditary, m & ~(1u << y), m});
      }
    }
  }
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    report.violation_count += exchange_count[x];
    if (exchange_count[x] == 0) continue;
    for (std::uint32_t y = 0; y < table.size() && report.violations.size() < kMaxListedViolations; ++y) {
      if (exchange_violated(table, aug, x, y)) report.violations.push_back({Axiom::exchange, x, y});
    }
  }
  return report;
}

}  // namespace mi
