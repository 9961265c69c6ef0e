#pragma once
// Exact rational linear programming: dense two-phase primal simplex with
// Bland's anti-cycling rule.  All pivoting is over mpq_class; no floating
// point is involved anywhere, so Optimal/Infeasible/Unbounded verdicts are
// exact.  Instances in this artifact are tiny (tens of variables), so a
// dense tableau is the right tool.

#include <vector>

#include "dca/value.hpp"

namespace dca {

enum class LPStatus { Optimal, Infeasible, Unbounded };

// min c.x  subject to  A x (rel) b,  x >= 0,
// where rel[i] is -1 for <=, 0 for ==, +1 for >=.
struct LP {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  std::vector<Rat> c;
  std::vector<int> rel;
};

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rat value;             // optimal objective (when Optimal)
  std::vector<Rat> x;    // optimal point (when Optimal)
};

LPResult solve_lp(const LP& lp);

// Same model but selected variables are free (split internally).
LPResult solve_lp_mixed(const LP& lp, const std::vector<bool>& is_free);

}  // namespace dca
