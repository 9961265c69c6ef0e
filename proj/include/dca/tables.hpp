#pragma once
// Machine-readable closure tables and the verification runner.
//
// Five tables, one cell per (class, operation) pair:
//   sets-coordinate   10 set classes x 5 coordinate changes
//   sets-structural   10 set classes x 6 structural operations
//   fns-coordinate    11 fn  classes x 5 coordinate changes
//   fns-value         11 fn  classes x 7 value operations
//   conjugacy         11 fn  classes x 3 properties ("-" = no claim)
//
// A Y cell is verified by seeded trials: generate members, apply the
// operation, assert membership of the result.  An N cell is witnessed by a
// registry fixture (or an explicit counterexample computation for the
// conjugacy rows).  "-" cells are encoded not-applicable and never asserted.
//
// Each trial's randomness derives from (seed, cell id, trial index), so
// reports depend only on (seed, trials).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dca/classify.hpp"

namespace dca {

struct ClosureCell {
  std::string table;    // table id, one of the five above
  bool is_set = false;  // object kind: set (true) or function (false)
  std::string cls;      // kebab-case class name (row)
  std::string op;       // operation descriptor (column)
  std::string params;   // parameter policy, e.g. "alpha=2", "random sigma"
  char expected = 'Y';  // 'Y', 'N', or '-' (not applicable)
  std::string witness;  // fixture id backing an N cell

  std::string id() const { return table + "|" + cls + "|" + op; }
};

struct CellOutcome {
  ClosureCell cell;
  std::string outcome;  // "pass" | "fail" | "not-applicable"
  long trials = 0;      // trials actually run (0 for N and "-" cells)
  std::string witness;  // fixture id (N) or first failure witness (Y fail)
};

// All 275 cells, row-major per table, in a fixed order.
const std::vector<ClosureCell>& closure_cells();

CellOutcome verify_cell(const ClosureCell& cell, long trials,
                        std::uint64_t seed);

// Every fixture, as a JSON array of per-fixture outcomes.
nlohmann::json run_registry();

// Every fixture and every cell (optionally one table); the report is
// deterministic given (trials, seed).
nlohmann::json verify_all(long trials, std::uint64_t seed,
                          const std::string& table = "");

}  // namespace dca
