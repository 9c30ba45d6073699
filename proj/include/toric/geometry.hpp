#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

namespace toric {

/// Sign of the orientation determined by d+1 ordered points: -1, 0 or +1.
using OrientationSign = int;

/// The exponent set: a finite list of points affinely spanning R^d,
/// used as geometrically meaningful indices.
struct PointConfig {
  int dim = 0;
  std::vector<Vec> points;

  PointConfig() = default;
  PointConfig(int d, std::vector<Vec> pts) : dim(d), points(std::move(pts)) {
    validate();
  }

  int size() const { return static_cast<int>(points.size()); }

  bool integral() const {
    return std::all_of(points.begin(), points.end(),
                       [](const Vec& p) { return is_integral(p); });
  }

 private:
  void validate() const {
    if (dim < 1) throw DimensionUnsupported("config dimension must be >= 1");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != dim)
        throw DegenerateSpan("point dimension mismatch");
    const bool exact = integral();
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        bool same = true;
        for (int c = 0; c < dim; ++c) {
          const double diff = std::abs(points[i][c] - points[j][c]);
          if (exact ? points[i][c] != points[j][c] : diff > 1e-12) {
            same = false;
            break;
          }
        }
        if (same) throw DegenerateSpan("duplicate point in configuration");
      }
    if (static_cast<int>(points.size()) < dim + 1)
      throw DegenerateSpan("too few points to span");
    Mat diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
      diffs.push_back(sub(points[i], points[0]));
    if (rank(diffs) < dim)
      throw DegenerateSpan("points do not affinely span R^d");
  }
};

/// Convex hull as facet inequalities h_i(x) = v_i . x + c_i >= 0 with
/// inward normals, plus the hull vertex indices.
struct Polytope {
  struct Facet {
    Vec normal;
    double offset = 0.0;
  };
  std::vector<Facet> facets;
  std::vector<int> vertices;

  double eval(std::size_t facet, const Vec& x) const {
    return dot(facets[facet].normal, x) + facets[facet].offset;
  }
};

/// Orientation of d+1 ordered points in R^d: the sign of
/// det[p_1 - p_0, ..., p_d - p_0]. Exact on integer input, epsilon
/// thresholded otherwise.
inline OrientationSign orientation(const std::vector<Vec>& pts, double eps = 1e-10) {
  if (pts.empty()) throw ArityMismatch("orientation: empty input");
  const std::size_t d = pts[0].size();
  if (pts.size() != d + 1)
    throw ArityMismatch("orientation: expected d+1 points");
  for (const auto& p : pts)
    if (p.size() != d) throw ArityMismatch("orientation: mixed dimensions");

  bool exact = true;
  for (const auto& p : pts) exact = exact && is_integral(p);
  if (exact) {
    std::vector<std::vector<long long>> m(d, std::vector<long long>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        m[r][c] = static_cast<long long>(std::llround(pts[r + 1][c] - pts[0][c]));
    const long long dd = det_exact(m);
    return dd > 0 ? 1 : dd < 0 ? -1 : 0;
  }
  Mat m(d, Vec(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[r][c] = pts[r + 1][c] - pts[0][c];
  const double dd = det(m);
  return dd > eps ? 1 : dd < -eps ? -1 : 0;
}

namespace detail {

// Normal to the hyperplane spanned by the d points, in R^d.
// d=1: the hyperplane is the point itself; normal is +1.
inline Vec hyperplane_normal(const std::vector<Vec>& pts) {
  const std::size_t d = pts[0].size();
  if (d == 1) return {1.0};
  if (d == 2) {
    const Vec u = sub(pts[1], pts[0]);
    return {-u[1], u[0]};
  }
  const Vec u = sub(pts[1], pts[0]);
  const Vec v = sub(pts[2], pts[0]);
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline void normalize_facet_inplace(Polytope::Facet& f, bool integral) {
  if (integral) {
    long long g = 0;
    for (double v : f.normal) g = gcd_ll(g, std::llround(v));
    if (g > 1) {
      for (double& v : f.normal) v = std::round(v) / static_cast<double>(g);
      f.offset = std::round(f.offset) / static_cast<double>(g);
    }
  } else {
    const double n = norm2(f.normal);
    if (n > 0) {
      for (double& v : f.normal) v /= n;
      f.offset /= n;
    }
  }
}

inline bool facet_less(const Polytope::Facet& a, const Polytope::Facet& b) {
  for (std::size_t i = 0; i < a.normal.size(); ++i) {
    if (a.normal[i] < b.normal[i] - 1e-12) return true;
    if (a.normal[i] > b.normal[i] + 1e-12) return false;
  }
  return a.offset < b.offset - 1e-12;
}

inline bool facet_same(const Polytope::Facet& a, const Polytope::Facet& b) {
  for (std::size_t i = 0; i < a.normal.size(); ++i)
    if (std::abs(a.normal[i] - b.normal[i]) > 1e-9) return false;
  return std::abs(a.offset - b.offset) <= 1e-9;
}

}  // namespace detail

/// Rescales facet data to the canonical representative: primitive integer
/// normals when the configuration is integral, unit normals otherwise.
inline Polytope normalize_facets(Polytope poly, const PointConfig& config) {
  const bool integral = config.integral();
  for (auto& f : poly.facets) detail::normalize_facet_inplace(f, integral);
  std::sort(poly.facets.begin(), poly.facets.end(), detail::facet_less);
  return poly;
}

/// Brute-force facet enumeration for d <= 3: every d-subset spanning a
/// hyperplane with all points on one side contributes a facet.
inline Polytope convex_hull(const PointConfig& config) {
  const int d = config.dim;
  if (d > 3) throw DimensionUnsupported("convex_hull supports d <= 3");
  const int n = config.size();
  const bool exact = config.integral();

  double scale = 1.0;
  for (const auto& p : config.points)
    for (double c : p) scale = std::max(scale, std::abs(c));
  const double side_tol = exact ? 0.5 : 1e-10 * scale;

  Polytope poly;
  for (const auto& s : subsets(n, d)) {
    std::vector<Vec> pts;
    for (int i : s) pts.push_back(config.points[i]);
    Vec v = detail::hyperplane_normal(pts);
    if (norm2(v) <= 1e-12 * std::max(1.0, scale)) continue;
    double c = -dot(v, pts[0]);
    bool pos = false, neg = false;
    for (const auto& p : config.points) {
      const double h = dot(v, p) + c;
      if (h > side_tol) pos = true;
      if (h < -side_tol) neg = true;
      if (pos && neg) break;
    }
    if (pos && neg) continue;
    if (!pos && !neg) continue;  // all points on the hyperplane
    if (neg) {
      for (double& x : v) x = -x;
      c = -c;
    }
    Polytope::Facet f{v, c};
    detail::normalize_facet_inplace(f, exact);
    bool dup = false;
    for (const auto& g : poly.facets)
      if (detail::facet_same(f, g)) {
        dup = true;
        break;
      }
    if (!dup) poly.facets.push_back(f);
  }
  if (poly.facets.empty()) throw DegenerateSpan("hull has no facets");
  std::sort(poly.facets.begin(), poly.facets.end(), detail::facet_less);

  // A point is a hull vertex when the facets through it span R^d.
  const double on_tol = exact ? 0.5 : 1e-9 * std::max(1.0, scale);
  for (int i = 0; i < n; ++i) {
    Mat normals;
    for (const auto& f : poly.facets) {
      const double h = dot(f.normal, config.points[i]) + f.offset;
      if (std::abs(h) < on_tol) normals.push_back(f.normal);
    }
    if (!normals.empty() && rank(normals) == d) poly.vertices.push_back(i);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end(), [&](int a, int b) {
    return config.points[a] < config.points[b];
  });
  return poly;
}

/// Volume (length/area/volume) of a d-simplex given by d+1 vertices.
inline double simplex_volume(const std::vector<Vec>& verts) {
  const std::size_t d = verts[0].size();
  Mat m(d, Vec(d));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[r][c] = verts[r + 1][c] - verts[0][c];
  double fact = 1.0;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<double>(i);
  return std::abs(det(m)) / fact;
}

namespace detail {

// Orders hull vertex indices of a 2-d point set counterclockwise.
inline std::vector<int> order_ccw(const std::vector<Vec>& pts,
                                  const std::vector<int>& idx) {
  Vec centroid(2, 0.0);
  for (int i : idx) centroid = add(centroid, pts[i]);
  centroid = scaled(centroid, 1.0 / static_cast<double>(idx.size()));
  std::vector<int> out = idx;
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return std::atan2(pts[a][1] - centroid[1], pts[a][0] - centroid[0]) <
           std::atan2(pts[b][1] - centroid[1], pts[b][0] - centroid[0]);
  });
  return out;
}

}  // namespace detail

/// Volume of conv(config): interval length, polygon area (shoelace), or
/// polyhedron volume by summing cones over facet fans.
inline double hull_volume(const PointConfig& config, const Polytope& poly) {
  const int d = config.dim;
  const auto& pts = config.points;
  if (d == 1) {
    double lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  if (d == 2) {
    const auto ring = detail::order_ccw(pts, poly.vertices);
    double area = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vec& a = pts[ring[i]];
      const Vec& b = pts[ring[(i + 1) % ring.size()]];
      area += a[0] * b[1] - b[0] * a[1];
    }
    return std::abs(area) / 2.0;
  }
  // d == 3: fan each facet polygon and sum tetrahedra to the centroid.
  Vec centroid(3, 0.0);
  for (int i : poly.vertices) centroid = add(centroid, pts[i]);
  centroid = scaled(centroid, 1.0 / static_cast<double>(poly.vertices.size()));
  double vol = 0.0;
  double scale = 1.0;
  for (const auto& p : pts)
    for (double c : p) scale = std::max(scale, std::abs(c));
  for (const auto& f : poly.facets) {
    std::vector<int> on;
    for (int i : poly.vertices)
      if (std::abs(dot(f.normal, pts[i]) + f.offset) < 1e-9 * scale)
        on.push_back(i);
    if (on.size() < 3) continue;
    // Order the facet polygon by angle in its own plane.
    Vec u = sub(pts[on[1]], pts[on[0]]);
    const double un = norm2(u);
    u = scaled(u, 1.0 / un);
    Vec nrm = f.normal;
    nrm = scaled(nrm, 1.0 / norm2(nrm));
    const Vec w = {nrm[1] * u[2] - nrm[2] * u[1], nrm[2] * u[0] - nrm[0] * u[2],
                   nrm[0] * u[1] - nrm[1] * u[0]};
    Vec fc(3, 0.0);
    for (int i : on) fc = add(fc, pts[i]);
    fc = scaled(fc, 1.0 / static_cast<double>(on.size()));
    std::sort(on.begin(), on.end(), [&](int a, int b) {
      const Vec pa = sub(pts[a], fc), pb = sub(pts[b], fc);
      return std::atan2(dot(pa, w), dot(pa, u)) < std::atan2(dot(pb, w), dot(pb, u));
    });
    for (std::size_t i = 1; i + 1 < on.size(); ++i)
      vol += simplex_volume({centroid, pts[on[0]], pts[on[i]], pts[on[i + 1]]});
  }
  return vol;
}

}  // namespace toric
