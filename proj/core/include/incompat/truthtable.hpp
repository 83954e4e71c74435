#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "incompat/logic.hpp"

namespace incompat::semantics {

struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct TableOptions {
  // Bounds the number of rows explored (surviving or erased). Exceeding it
  // raises ResourceLimitError rather than truncating.
  std::uint64_t row_cap = 1ull << 22;
  // Erase rows as soon as every participant of a condition is valued, rather
  // than after completion. Both modes compute the same table.
  bool eager = true;
  // 0 = take the THREADS environment variable (default 1). Row order and
  // countermodel choice do not depend on this.
  int threads = 0;
};

struct Table {
  LogicId logic;
  std::vector<Formula> subformulas;
  std::vector<std::vector<std::uint8_t>> rows;  // lexicographic, 0 before 1
};

struct CounterModel {
  std::vector<Formula> subformulas;
  std::vector<std::uint8_t> values;
};

struct Verdict {
  bool valid = false;
  std::optional<CounterModel> countermodel;  // present iff invalid
};

// All surviving rows over subformulas(f), ordered lexicographically by the
// subformula list with 0 before 1.
Table build_table(LogicId logic, const Formula& f, const TableOptions& opt = {});

// Tests the left-associated premise fold (or the conclusion alone when there
// are no premises). The countermodel is the first surviving falsifying row in
// canonical order.
Verdict decide(LogicId logic, const std::vector<Formula>& premises, const Formula& conclusion,
               const TableOptions& opt = {});

inline Verdict decide(const Sequent& s, const TableOptions& opt = {}) {
  return decide(s.logic, s.premises, s.conclusion, opt);
}

std::string table_csv(const Table& t);
std::string table_json(const Table& t);

// True when `values` is a legal, non-erased row of the logic over the given
// subformula list (which must be closed under subformulas and sorted in
// canonical order). Used by the tableau engine to vet open-branch
// countermodels, and by the tests.
bool row_admissible(LogicId logic, const std::vector<Formula>& subformulas,
                    const std::vector<std::uint8_t>& values);

// Bitmask of values a node may take given its children's values: bit0 = may
// be 0, bit1 = may be 1. l is the only child's value for unary connectives
// and ignored (-1) for variables.
unsigned cell_allowed(LogicId logic, Kind kind, int l, int r);

// Indices of the variables and non-deterministic nodes, i.e. the positions
// whose values determine the whole row.
std::vector<int> determining_indices(LogicId logic, const std::vector<Formula>& subformulas);

int env_threads();

}  // namespace incompat::semantics
