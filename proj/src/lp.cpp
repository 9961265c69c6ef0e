#include "dca/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace dca {
namespace {

// Dense simplex tableau.  Row 0..m-1 are constraints (basis[i] holds the
// basic column of row i), row m is the objective (reduced costs, with the
// negated objective value in the rhs cell).
struct Tableau {
  size_t m, n;                          // constraints, columns
  std::vector<std::vector<Rat>> t;      // (m+1) x (n+1), last col = rhs
  std::vector<size_t> basis;

  Tableau(size_t m_, size_t n_) : m(m_), n(n_), basis(m_) {
    t.assign(m + 1, std::vector<Rat>(n + 1, Rat(0)));
  }

  void pivot(size_t pr, size_t pc) {
    Rat piv = t[pr][pc];
    assert(sgn(piv) != 0);
    for (size_t j = 0; j <= n; ++j) t[pr][j] /= piv;
    for (size_t i = 0; i <= m; ++i) {
      if (i == pr || sgn(t[i][pc]) == 0) continue;
      Rat f = t[i][pc];
      for (size_t j = 0; j <= n; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  }

  // Bland's rule: entering = lowest-index column with negative reduced cost;
  // leaving = lowest-index basic variable among tight ratio rows.
  // Returns Optimal or Unbounded.
  LPStatus iterate() {
    while (true) {
      size_t pc = n;
      for (size_t j = 0; j < n; ++j)
        if (sgn(t[m][j]) < 0) {
          pc = j;
          break;
        }
      if (pc == n) return LPStatus::Optimal;
      size_t pr = m;
      for (size_t i = 0; i < m; ++i) {
        if (sgn(t[i][pc]) <= 0) continue;
        if (pr == m) {
          pr = i;
          continue;
        }
        Rat cur = t[i][n] / t[i][pc];
        Rat best = t[pr][n] / t[pr][pc];
        if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
      }
      if (pr == m) return LPStatus::Unbounded;
      pivot(pr, pc);
    }
  }
};

}  // namespace

LPResult solve_lp(const LP& lp) {
  size_t m = lp.A.size();
  size_t n0 = lp.c.size();
  if (lp.b.size() != m || lp.rel.size() != m)
    throw std::invalid_argument("LP shape mismatch");
  for (const auto& row : lp.A)
    if (row.size() != n0) throw std::invalid_argument("LP row size mismatch");

  // Standard form: append one slack/surplus column per inequality, then make
  // rhs nonnegative, then append one artificial per row (a full artificial
  // basis keeps the logic simple; these problems are tiny).
  size_t n_slack = 0;
  for (int r : lp.rel)
    if (r != 0) ++n_slack;
  size_t n1 = n0 + n_slack;          // structural + slack columns
  size_t n = n1 + m;                 // + artificial columns
  Tableau tab(m, n);

  {
    size_t sc = n1;  // unused; artificials appended below
    (void)sc;
  }
  size_t slack_at = n0;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n0; ++j) tab.t[i][j] = lp.A[i][j];
    if (lp.rel[i] != 0) {
      tab.t[i][slack_at] = lp.rel[i] < 0 ? Rat(1) : Rat(-1);
      ++slack_at;
    }
    tab.t[i][n] = lp.b[i];
    if (sgn(tab.t[i][n]) < 0)
      for (size_t j = 0; j <= n; ++j) tab.t[i][j] = -tab.t[i][j];
    tab.t[i][n1 + i] = 1;
    tab.basis[i] = n1 + i;
  }

  // Phase 1: minimize the sum of artificials.
  for (size_t j = 0; j <= n; ++j) {
    Rat s = 0;
    for (size_t i = 0; i < m; ++i) s += tab.t[i][j];
    tab.t[m][j] = (j >= n1 && j < n) ? Rat(Rat(1) - s) : Rat(-s);
  }
  LPStatus st = tab.iterate();
  assert(st == LPStatus::Optimal);  // phase 1 is bounded below by 0
  if (sgn(tab.t[m][n]) != 0) {      // rhs cell holds -(objective)
    LPResult r;
    r.status = LPStatus::Infeasible;
    return r;
  }
  // Drive any artificial still in the basis out (degenerate rows), or the
  // row is redundant and can be neutralized by leaving it basic at zero;
  // forbid artificials from re-entering by removing their columns.
  for (size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n1) continue;
    size_t pc = n1;
    for (size_t j = 0; j < n1; ++j)
      if (sgn(tab.t[i][j]) != 0) {
        pc = j;
        break;
      }
    if (pc < n1) tab.pivot(i, pc);
  }
  for (size_t i = 0; i <= m; ++i)
    for (size_t j = n1; j < n; ++j) tab.t[i][j] = 0;

  // Phase 2: restore the real objective, priced out over the current basis.
  for (size_t j = 0; j <= n; ++j) tab.t[m][j] = 0;
  for (size_t j = 0; j < n0; ++j) tab.t[m][j] = lp.c[j];
  for (size_t i = 0; i < m; ++i) {
    size_t bj = tab.basis[i];
    if (bj < n0 && sgn(lp.c[bj]) != 0) {
      Rat f = lp.c[bj];
      for (size_t j = 0; j <= n; ++j) tab.t[m][j] -= f * tab.t[i][j];
    }
  }
  for (size_t j = n1; j < n; ++j) tab.t[m][j] = 0;
  st = tab.iterate();

  LPResult r;
  r.status = st;
  if (st == LPStatus::Optimal) {
    r.x.assign(n0, Rat(0));
    for (size_t i = 0; i < m; ++i)
      if (tab.basis[i] < n0) r.x[tab.basis[i]] = tab.t[i][n];
    r.value = 0;
    for (size_t j = 0; j < n0; ++j) r.value += lp.c[j] * r.x[j];
  }
  return r;
}

LPResult solve_lp_mixed(const LP& lp, const std::vector<bool>& is_free) {
  size_t n0 = lp.c.size();
  if (is_free.size() != n0)
    throw std::invalid_argument("is_free size mismatch");
  // Split each free variable x into x+ - x-.
  std::vector<size_t> neg_col(n0, size_t(-1));
  LP s;
  s.b = lp.b;
  s.rel = lp.rel;
  s.c = lp.c;
  size_t extra = 0;
  for (size_t j = 0; j < n0; ++j)
    if (is_free[j]) neg_col[j] = n0 + extra++;
  s.c.resize(n0 + extra, Rat(0));
  for (size_t j = 0; j < n0; ++j)
    if (is_free[j]) s.c[neg_col[j]] = -lp.c[j];
  s.A.resize(lp.A.size());
  for (size_t i = 0; i < lp.A.size(); ++i) {
    s.A[i] = lp.A[i];
    s.A[i].resize(n0 + extra, Rat(0));
    for (size_t j = 0; j < n0; ++j)
      if (is_free[j]) s.A[i][neg_col[j]] = -lp.A[i][j];
  }
  LPResult r = solve_lp(s);
  if (r.status == LPStatus::Optimal) {
    std::vector<Rat> x(n0);
    for (size_t j = 0; j < n0; ++j)
      x[j] = is_free[j] ? r.x[j] - r.x[neg_col[j]] : r.x[j];
    r.x = std::move(x);
  }
  return r;
}

}  // namespace dca
