#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

/// Exact Euclidean distance from p to the (possibly degenerate) simplex
/// conv(verts): enumerate faces, project onto each affine hull, keep the
/// projections with nonnegative barycentric coordinates. Covers degenerate
/// vertex sets via Caratheodory (full-rank subsets suffice).
inline double point_to_simplex(const Vec& p, const std::vector<Vec>& verts) {
  const int k = static_cast<int>(verts.size());
  double best = std::numeric_limits<double>::infinity();
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) f.push_back(i);
    const std::size_t fs = f.size();
    if (fs == 1) {
      best = std::min(best, dist2(p, verts[f[0]]));
      continue;
    }
    // Solve (D^T D) c = D^T (p - v0) on the face's affine hull.
    const Vec& v0 = verts[f[0]];
    Mat gram(fs - 1, Vec(fs - 1));
    Vec rhs(fs - 1);
    const Vec pv = sub(p, v0);
    std::vector<Vec> dirs;
    for (std::size_t i = 1; i < fs; ++i) dirs.push_back(sub(verts[f[i]], v0));
    for (std::size_t i = 0; i + 1 < fs; ++i) {
      rhs[i] = dot(dirs[i], pv);
      for (std::size_t j = 0; j + 1 < fs; ++j) gram[i][j] = dot(dirs[i], dirs[j]);
    }
    Vec c;
    if (!solve_linear(gram, rhs, c)) continue;  // rank-deficient face
    double c0 = 1.0;
    bool feasible = true;
    for (double ci : c) {
      c0 -= ci;
      if (ci < -1e-12) feasible = false;
    }
    if (!feasible || c0 < -1e-12) continue;
    Vec q = v0;
    for (std::size_t i = 0; i + 1 < fs; ++i) q = add(q, scaled(dirs[i], c[i]));
    best = std::min(best, dist2(p, q));
  }
  return best;
}

/// Distance from p to a union of simplices given by their vertex lists.
inline double point_to_simplices(const Vec& p,
                                 const std::vector<std::vector<Vec>>& simplices) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : simplices) best = std::min(best, point_to_simplex(p, s));
  return best;
}

/// Distance from p to conv(points) via Caratheodory: the nearest point
/// lies in the hull of some affinely independent subset of size <= n+1.
inline double point_to_convex_hull(const Vec& p, const std::vector<Vec>& points) {
  const int n = static_cast<int>(p.size());
  const int m = static_cast<int>(points.size());
  double best = std::numeric_limits<double>::infinity();
  const int k = std::min(m, n + 1);
  for (const auto& idx : subsets(m, k)) {
    std::vector<Vec> verts;
    for (int i : idx) verts.push_back(points[i]);
    best = std::min(best, point_to_simplex(p, verts));
  }
  return best;
}

}  // namespace toric
