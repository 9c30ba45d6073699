#pragma once

#include <gmpxx.h>

#include <vector>

#include "toric/errors.hpp"

namespace toric::detail {

using Rational = mpq_class;
using RationalVec = std::vector<Rational>;
using RationalMat = std::vector<RationalVec>;

struct LpResult {
  bool bounded = true;
  Rational objective;     // optimal value of the minimization
  RationalVec solution;   // all variables
};

/// Dense simplex method over exact rationals with Bland's rule.
/// Minimizes c.x subject to A x = b, x >= 0, where b >= 0 and `basis`
/// names an initial feasible basis whose columns form the identity.
inline LpResult simplex_min(RationalMat a, RationalVec b, RationalVec c,
                            std::vector<int> basis) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  RationalVec cost_row(n);   // reduced costs
  Rational obj = 0;
  for (std::size_t j = 0; j < n; ++j) cost_row[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    const Rational cb = c[basis[i]];
    if (cb == 0) continue;
    obj -= cb * b[i];
    for (std::size_t j = 0; j < n; ++j) cost_row[j] -= cb * a[i][j];
  }

  while (true) {
    int enter = -1;
    for (std::size_t j = 0; j < n; ++j)
      if (cost_row[j] < 0) {
        enter = static_cast<int>(j);
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i][enter] <= 0) continue;
      const Rational ratio = b[i] / a[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave]))
      {
        leave = static_cast<int>(i);
        best_ratio = ratio;
      }
    }
    if (leave < 0) return {false, 0, {}};
    const Rational piv = a[leave][enter];
    for (std::size_t j = 0; j < n; ++j) a[leave][j] /= piv;
    b[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (static_cast<int>(i) == leave || a[i][enter] == 0) continue;
      const Rational f = a[i][enter];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[leave][j];
      b[i] -= f * b[leave];
    }
    if (cost_row[enter] != 0) {
      const Rational f = cost_row[enter];
      for (std::size_t j = 0; j < n; ++j) cost_row[j] -= f * a[leave][j];
      obj -= f * b[leave];
    }
    basis[leave] = enter;
  }

  LpResult res;
  res.objective = -obj;
  res.solution.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) res.solution[basis[i]] = b[i];
  return res;
}

/// Exact solve of a small rational linear system by Gaussian elimination.
/// Returns false when singular.
inline bool solve_rational(RationalMat a, RationalVec b, RationalVec& x) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      b[r] -= f * b[col];
      for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
    }
  }
  x.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t cc = i + 1; cc < n; ++cc) s -= a[i][cc] * x[cc];
    x[i] = s / a[i][i];
  }
  return true;
}

}  // namespace toric::detail
