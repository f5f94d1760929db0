#include "mapperforge/lp.hpp"

#include <cassert>
#include <cstddef>

#include "mapperforge/errors.hpp"

namespace mapperforge {

namespace {

// Dense phase-1 tableau.  Columns 0..n-1 are the original variables,
// n..n+m-1 the artificials, and the last column holds the right-hand side.
struct Tableau {
  std::size_t m, n;
  std::vector<RatVec> row;  // m rows, each of width n + m + 1
  RatVec obj;               // reduced costs, width n + m + 1 (last = -objective)
  std::vector<std::size_t> basis;

  Rat& rhs(std::size_t i) { return row[i][n + m]; }
  const Rat& rhs(std::size_t i) const { return row[i][n + m]; }

  void pivot(std::size_t pr, std::size_t pc) {
    Rat inv = 1 / row[pr][pc];
    for (Rat& v : row[pr]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr || row[i][pc] == 0) continue;
      Rat factor = row[i][pc];
      for (std::size_t j = 0; j <= n + m; ++j) row[i][j] -= factor * row[pr][j];
    }
    if (obj[pc] != 0) {
      Rat factor = obj[pc];
      for (std::size_t j = 0; j <= n + m; ++j) obj[j] -= factor * row[pr][j];
    }
    basis[pr] = pc;
  }
};

} // namespace

bool lp_verify_feasible(const RatMat& columns, const RatVec& rhs, const RatVec& x) {
  const std::size_t n = columns.size();
  const std::size_t m = rhs.size();
  if (x.size() != n) return false;
  for (const Rat& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < m; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += columns[j][i] * x[j];
    if (acc != rhs[i]) return false;
  }
  return true;
}

bool lp_verify_farkas(const RatMat& columns, const RatVec& rhs, const RatVec& y) {
  const std::size_t m = rhs.size();
  if (y.size() != m) return false;
  for (const RatVec& col : columns) {
    Rat acc = 0;
    for (std::size_t i = 0; i < m; ++i) acc += y[i] * col[i];
    if (acc > 0) return false;
  }
  Rat val = 0;
  for (std::size_t i = 0; i < m; ++i) val += y[i] * rhs[i];
  return val > 0;
}

LpResult lp_equality_feasibility(const RatMat& columns, const RatVec& rhs) {
  const std::size_t n = columns.size();
  const std::size_t m = rhs.size();
  for (const RatVec& col : columns)
    if (col.size() != m) fail(Errc::DimensionMismatch, "lp: column height mismatch");

  // Flip rows so the right-hand side is non-negative; remember the signs to
  // map the Farkas vector back.
  std::vector<int> sign(m, 1);
  Tableau t;
  t.m = m;
  t.n = n;
  t.row.assign(m, RatVec(n + m + 1, Rat(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t.row[i][j] = sign[i] * columns[j][i];
    t.row[i][n + i] = 1;
    t.rhs(i) = sign[i] * rhs[i];
    t.basis[i] = n + i;
  }
  // Minimize the sum of artificials: reduced cost row c - z with the
  // all-artificial basis.
  t.obj.assign(n + m + 1, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t.row[i][j];
    t.obj[j] = -s;
  }
  {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t.rhs(i);
    t.obj[n + m] = -s; // negative objective value
  }

  for (;;) {
    // Bland: entering = lowest-index column with negative reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j) {
      if (t.obj[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rat best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.row[i][enter] <= 0) continue;
      Rat ratio = t.rhs(i) / t.row[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase-1 objective is bounded below by zero, so a pivot row always exists.
    assert(leave < m);
    t.pivot(leave, enter);
  }

  Rat objective = -t.obj[n + m];
  if (objective == 0) {
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis[i] < n) x[t.basis[i]] = t.rhs(i);
    if (!lp_verify_feasible(columns, rhs, x))
      throw std::logic_error("lp: feasible point failed verification");
    return LpFeasible{std::move(x)};
  }

  // Dual values sit in the reduced costs of the artificial columns:
  // obj[n+i] = 1 - y_i for the flipped system.
  RatVec y(m);
  for (std::size_t i = 0; i < m; ++i) y[i] = sign[i] * (1 - t.obj[n + i]);
  if (!lp_verify_farkas(columns, rhs, y))
    throw std::logic_error("lp: farkas certificate failed verification");
  return LpInfeasible{std::move(y)};
}

} // namespace mapperforge
