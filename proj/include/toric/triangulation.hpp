#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "toric/blending.hpp"
#include "toric/detail/rational_lp.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"

namespace toric {

/// A lifting A -> R, stored by configuration index.
struct LiftingFunction {
  Vec values;
};

/// A triangulation of conv(A): a set of (d+1)-subsets of configuration
/// indices, stored in canonical (sorted) form.
struct Triangulation {
  std::vector<std::vector<int>> simplices;

  static Triangulation from_simplices(std::vector<std::vector<int>> s) {
    for (auto& simplex : s) std::sort(simplex.begin(), simplex.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return Triangulation{std::move(s)};
  }

  bool operator==(const Triangulation& other) const = default;

  std::vector<int> used_points() const {
    std::set<int> u;
    for (const auto& s : simplices) u.insert(s.begin(), s.end());
    return {u.begin(), u.end()};
  }
};

/// A control polytope or geometric realization: the simplices of a
/// triangulation embedded by a vertex map, possibly degenerately.
struct SimplicialComplexEmbedding {
  std::vector<std::vector<Vec>> simplices;
  Triangulation combinatorics;
};

namespace detail {

// Affine interpolation of lambda over the simplex S: returns coefficients
// (alpha, beta) with l(x) = alpha . x + beta, or nullopt if S is affinely
// degenerate.
inline std::optional<std::pair<Vec, double>> affine_interpolant(
    const PointConfig& config, const std::vector<int>& s, const Vec& lambda) {
  const int d = config.dim;
  Mat a(d + 1, Vec(d + 1));
  Vec b(d + 1);
  for (int r = 0; r <= d; ++r) {
    for (int c = 0; c < d; ++c) a[r][c] = config.points[s[r]][c];
    a[r][d] = 1.0;
    b[r] = lambda[s[r]];
  }
  Vec x;
  if (!solve_linear(a, b, x, 1e-12)) return std::nullopt;
  Vec alpha(x.begin(), x.begin() + d);
  return std::make_pair(alpha, x[d]);
}

}  // namespace detail

/// Regular triangulation induced by a lifting: the upper facets of
/// conv{(a, lambda(a))}, projected back to R^d. Upper facets are found
/// directly: a (d+1)-subset whose lifted hyperplane has every other
/// lifted point strictly below it.
inline Triangulation regular_triangulation(const PointConfig& config,
                                           const LiftingFunction& lambda,
                                           double tol = 1e-9) {
  const int d = config.dim;
  const int n = config.size();
  if (static_cast<int>(lambda.values.size()) != n)
    throw SizeMismatch("lifting does not index the configuration");
  if (n == d + 1) return Triangulation::from_simplices({subsets(n, d + 1)[0]});

  double spread = 0.0;
  for (double v : lambda.values)
    for (double u : lambda.values) spread = std::max(spread, std::abs(v - u));
  const double eq_tol = tol * std::max(1.0, spread);

  bool any_independent = false;
  bool nongeneric = false;
  std::vector<std::vector<int>> facets;
  for (const auto& s : subsets(n, d + 1)) {
    const auto interp = detail::affine_interpolant(config, s, lambda.values);
    if (!interp) continue;  // projects to a degenerate simplex
    any_independent = true;
    bool above = false, on_plane = false;
    for (int a = 0; a < n; ++a) {
      if (std::find(s.begin(), s.end(), a) != s.end()) continue;
      const double gap =
          dot(interp->first, config.points[a]) + interp->second - lambda.values[a];
      if (gap < -eq_tol) {
        above = true;
        break;
      }
      if (gap <= eq_tol) on_plane = true;
    }
    if (above) continue;
    if (on_plane) {
      nongeneric = true;  // a weak upper face with > d+1 coplanar points
      continue;
    }
    facets.push_back(s);
  }
  if (!any_independent)
    throw DegenerateLift("lifted points do not span R^{d+1}");
  if (nongeneric)
    throw NonGenericLifting("an upper face is not a simplex; perturb the lifting");

  // Upper facets of a generic lift must tile the hull.
  const Polytope poly = convex_hull(config);
  double vol = 0.0;
  for (const auto& s : facets) {
    std::vector<Vec> verts;
    for (int i : s) verts.push_back(config.points[i]);
    vol += simplex_volume(verts);
  }
  const double target = hull_volume(config, poly);
  if (std::abs(vol - target) > 1e-9 * std::max(1.0, target))
    throw NonGenericLifting("upper facets do not tile the hull; perturb the lifting");
  return Triangulation::from_simplices(std::move(facets));
}

/// Deterministic genericity repair: adds eps * index^2 with eps scaled by
/// the spread of lambda.
inline LiftingFunction perturb_lifting(const LiftingFunction& lambda,
                                       [[maybe_unused]] const PointConfig& config) {
  double lo = lambda.values.empty() ? 0.0 : lambda.values[0];
  double hi = lo;
  for (double v : lambda.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double spread = hi - lo;
  const double eps = 1e-7 * (spread > 0.0 ? spread : 1.0);
  LiftingFunction out = lambda;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] += eps * static_cast<double>(i) * static_cast<double>(i);
  return out;
}

namespace detail {

// Separating-axis test: do the interiors of two simplices intersect?
// Axes: facet normals (d=2: edge normals; d=3: face normals plus pairwise
// edge cross products).
inline bool interiors_intersect(const std::vector<Vec>& a,
                                const std::vector<Vec>& b, double tol) {
  const std::size_t d = a[0].size();
  auto project_sep = [&](const Vec& axis) {
    if (norm2(axis) < 1e-14) return false;
    double amin = dot(axis, a[0]), amax = amin;
    for (const auto& p : a) {
      const double v = dot(axis, p);
      amin = std::min(amin, v);
      amax = std::max(amax, v);
    }
    double bmin = dot(axis, b[0]), bmax = bmin;
    for (const auto& p : b) {
      const double v = dot(axis, p);
      bmin = std::min(bmin, v);
      bmax = std::max(bmax, v);
    }
    return amax <= bmin + tol || bmax <= amin + tol;
  };
  std::vector<Vec> axes;
  if (d == 1) {
    axes.push_back({1.0});
  } else if (d == 2) {
    auto edge_normals = [&](const std::vector<Vec>& s) {
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          const Vec e = sub(s[j], s[i]);
          axes.push_back({-e[1], e[0]});
        }
    };
    edge_normals(a);
    edge_normals(b);
  } else {
    auto cross = [](const Vec& u, const Vec& v) -> Vec {
      return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
              u[0] * v[1] - u[1] * v[0]};
    };
    auto face_normals = [&](const std::vector<Vec>& s) {
      for (const auto& f : subsets(static_cast<int>(s.size()), 3))
        axes.push_back(cross(sub(s[f[1]], s[f[0]]), sub(s[f[2]], s[f[0]])));
    };
    face_normals(a);
    face_normals(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k)
          for (std::size_t l = k + 1; l < b.size(); ++l)
            axes.push_back(cross(sub(a[j], a[i]), sub(b[l], b[k])));
  }
  for (const auto& axis : axes)
    if (project_sep(axis)) return false;
  return true;
}

}  // namespace detail

/// Checks the subdivision invariants of T at desk scale: affinely
/// independent simplices, pairwise disjoint interiors meeting along
/// common faces, and total volume equal to vol(conv(A)).
inline bool validate_triangulation(const PointConfig& config,
                                   const Triangulation& t,
                                   std::string* reason = nullptr) {
  const int d = config.dim;
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (t.simplices.empty()) return fail("empty triangulation");
  double scale = 1.0;
  for (const auto& p : config.points)
    for (double c : p) scale = std::max(scale, std::abs(c));

  double vol = 0.0;
  std::vector<std::vector<Vec>> geo;
  for (const auto& s : t.simplices) {
    if (static_cast<int>(s.size()) != d + 1) return fail("simplex arity mismatch");
    std::vector<Vec> verts;
    for (int i : s) {
      if (i < 0 || i >= config.size()) return fail("simplex index out of range");
      verts.push_back(config.points[i]);
    }
    if (orientation(verts) == 0) return fail("degenerate simplex");
    vol += simplex_volume(verts);
    geo.push_back(std::move(verts));
  }
  const Polytope poly = convex_hull(config);
  if (std::abs(vol - hull_volume(config, poly)) > 1e-9 * std::max(1.0, scale))
    return fail("simplices do not tile the hull");

  const double tol = 1e-9 * scale;
  // Barycentric membership of point p in a simplex (boundary counts).
  auto contains = [&](const std::vector<Vec>& verts, const Vec& p) {
    Mat m(d + 1, Vec(d + 1));
    Vec rhs(d + 1);
    for (int c = 0; c <= d; ++c) {
      m[0][c] = 1.0;
      for (int r = 0; r < d; ++r) m[r + 1][c] = verts[c][r];
    }
    rhs[0] = 1.0;
    for (int r = 0; r < d; ++r) rhs[r + 1] = p[r];
    Vec bary;
    if (!solve_linear(m, rhs, bary)) return false;
    return std::all_of(bary.begin(), bary.end(),
                       [&](double x) { return x >= -1e-9; });
  };
  for (std::size_t i = 0; i < geo.size(); ++i)
    for (std::size_t j = i + 1; j < geo.size(); ++j) {
      if (detail::interiors_intersect(geo[i], geo[j], tol))
        return fail("overlapping simplices");
      // A vertex of one simplex lying in the other must be shared,
      // otherwise the pair meets in something that is not a common face.
      for (std::size_t which = 0; which < 2; ++which) {
        const auto& src = which == 0 ? t.simplices[i] : t.simplices[j];
        const auto& dst = which == 0 ? t.simplices[j] : t.simplices[i];
        const auto& dst_geo = which == 0 ? geo[j] : geo[i];
        for (int v : src) {
          if (std::find(dst.begin(), dst.end(), v) != dst.end()) continue;
          if (contains(dst_geo, config.points[v]))
            return fail("vertex lies on a foreign simplex");
        }
      }
    }
  return true;
}

/// Regularity certificate. Solves, in exact rational arithmetic, the LP
///   maximize s  s.t.  lift of a lies below the lifted span of S by >= s
///                     for every simplex S of T and every a not in S,
///                     s <= 1.
/// The constraints are homogeneous in lambda, so the optimum is exactly 1
/// when T is regular and exactly 0 when it is not. Returns a witness
/// lifting in the regular case.
inline std::pair<bool, std::optional<LiftingFunction>> is_regular(
    const PointConfig& config, const Triangulation& t) {
  std::string why;
  if (!validate_triangulation(config, t, &why))
    throw InvalidTriangulation("invalid triangulation: " + why);
  const int d = config.dim;
  const int n = config.size();

  // Exact barycentric coordinates of a with respect to S (doubles are
  // dyadic rationals, so the conversion is exact).
  auto barycentric = [&](const std::vector<int>& s,
                         int a) -> detail::RationalVec {
    detail::RationalMat m(d + 1, detail::RationalVec(d + 1));
    detail::RationalVec rhs(d + 1);
    for (int c = 0; c <= d; ++c) {
      m[0][c] = 1;
      for (int r = 0; r < d; ++r) m[r + 1][c] = detail::Rational(config.points[s[c]][r]);
    }
    rhs[0] = 1;
    for (int r = 0; r < d; ++r) rhs[r + 1] = detail::Rational(config.points[a][r]);
    detail::RationalVec x;
    if (!detail::solve_rational(m, rhs, x))
      throw InvalidTriangulation("degenerate simplex in regularity LP");
    return x;
  };

  // Variables: u_a, v_a (lambda = u - v), s+, s-, then one slack per row.
  struct Row {
    detail::RationalVec lambda_coeff;
    int type;  // 0: below-constraint (rhs 0), 1: cap (rhs 1)
  };
  std::vector<Row> rows;
  for (const auto& s : t.simplices) {
    for (int a = 0; a < n; ++a) {
      if (std::find(s.begin(), s.end(), a) != s.end()) continue;
      // sum_c bary_c lambda_{s_c} - lambda_a >= s
      // as -sum bary lambda + lambda_a + s + slack = 0
      detail::RationalVec coeff(n, 0);
      const auto bary = barycentric(s, a);
      for (int c = 0; c <= d; ++c) coeff[s[c]] -= bary[c];
      coeff[a] += 1;
      rows.push_back({std::move(coeff), 0});
    }
  }
  rows.push_back({detail::RationalVec(n, 0), 1});

  const std::size_t m = rows.size();
  const std::size_t nv = 2 * static_cast<std::size_t>(n) + 2 + m;
  detail::RationalMat A(m, detail::RationalVec(nv, 0));
  detail::RationalVec b(m, 0), c(nv, 0);
  std::vector<int> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = rows[i];
    if (row.type == 0) {
      for (int a = 0; a < n; ++a) {
        A[i][2 * a] = row.lambda_coeff[a];
        A[i][2 * a + 1] = -row.lambda_coeff[a];
      }
      A[i][2 * n] = 1;       // s+
      A[i][2 * n + 1] = -1;  // s-
      b[i] = 0;
    } else {
      A[i][2 * n] = 1;
      A[i][2 * n + 1] = -1;
      b[i] = 1;
    }
    A[i][2 * n + 2 + i] = 1;  // slack
    basis[i] = static_cast<int>(2 * n + 2 + i);
  }
  c[2 * n] = -1;  // minimize -s
  c[2 * n + 1] = 1;

  const auto res = detail::simplex_min(std::move(A), std::move(b), std::move(c),
                                       std::move(basis));
  if (!res.bounded) throw Error("regularity LP unbounded");  // cannot happen: s <= 1
  const detail::Rational s_opt = -res.objective;
  if (s_opt <= 0) return {false, std::nullopt};
  LiftingFunction witness;
  witness.values.resize(n);
  for (int a = 0; a < n; ++a)
    witness.values[a] =
        detail::Rational(res.solution[2 * a] - res.solution[2 * a + 1]).get_d();
  return {true, witness};
}

/// Image of each simplex of T under a -> b_a: the control polytope B(T).
inline SimplicialComplexEmbedding control_polytope(const Triangulation& t,
                                                   const ControlPoints& b) {
  SimplicialComplexEmbedding out;
  out.combinatorics = t;
  for (const auto& s : t.simplices) {
    std::vector<Vec> verts;
    for (int i : s) {
      if (i < 0 || i >= static_cast<int>(b.b.size()))
        throw SizeMismatch("triangulation indexes outside the control points");
      verts.push_back(b.b[i]);
    }
    out.simplices.push_back(std::move(verts));
  }
  return out;
}

/// Geometric realization |T| inside the A-simplex: the control polytope
/// with indicator control points in R^A.
inline SimplicialComplexEmbedding realization_in_simplex(const Triangulation& t,
                                                         int num_points) {
  std::vector<Vec> indicators;
  for (int i = 0; i < num_points; ++i) {
    Vec e(num_points, 0.0);
    e[i] = 1.0;
    indicators.push_back(std::move(e));
  }
  return control_polytope(t, ControlPoints(num_points, std::move(indicators)));
}

}  // namespace toric
