#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "toric/errors.hpp"
#include "toric/geometry.hpp"

namespace toric {

/// A point of the A-simplex: nonnegative coordinates, one per exponent,
/// summing to 1. Also the value type of the normalized blending map.
using SimplexPoint = Vec;
using BlendingVector = SimplexPoint;

/// Strictly positive weights, one per exponent. Stored in log space so
/// that degeneration schedules t^lambda stay representable for large t.
struct WeightVector {
  std::vector<double> log_w;

  WeightVector() = default;

  static WeightVector from_values(const Vec& w) {
    WeightVector out;
    out.log_w.reserve(w.size());
    for (double v : w) {
      if (!(v > 0.0)) throw NonPositiveInput("weights must be strictly positive");
      out.log_w.push_back(std::log(v));
    }
    return out;
  }

  static WeightVector from_logs(Vec lw) {
    WeightVector out;
    out.log_w = std::move(lw);
    return out;
  }

  static WeightVector ones(std::size_t n) {
    WeightVector out;
    out.log_w.assign(n, 0.0);
    return out;
  }

  std::size_t size() const { return log_w.size(); }
  double value(std::size_t i) const { return std::exp(log_w[i]); }
  double log(std::size_t i) const { return log_w[i]; }

  Vec values() const {
    Vec v(log_w.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = value(i);
    return v;
  }

  WeightVector inverse() const {
    WeightVector out;
    out.log_w.reserve(log_w.size());
    for (double l : log_w) out.log_w.push_back(-l);
    return out;
  }
};

/// Control points b_a in R^n, indexed like the configuration.
struct ControlPoints {
  int ambient_dim = 0;
  std::vector<Vec> b;

  ControlPoints() = default;
  ControlPoints(int n, std::vector<Vec> pts) : ambient_dim(n), b(std::move(pts)) {
    for (const auto& p : b)
      if (static_cast<int>(p.size()) != ambient_dim)
        throw SizeMismatch("control point dimension mismatch");
  }

  /// The tautological choice b_a = a.
  static ControlPoints tautological(const PointConfig& config) {
    return ControlPoints(config.dim, config.points);
  }
};

inline bool is_simplex_point(const SimplexPoint& z, double tol = 1e-12) {
  double s = 0.0;
  for (double v : z) {
    if (v < -tol) return false;
    s += v;
  }
  return std::abs(s - 1.0) <= tol;
}

/// Exponent table E[i][a] = h_i(a), clamped at zero. Config points lie in
/// the hull, so negative values can only be roundoff.
inline Mat facet_exponents(const PointConfig& config, const Polytope& poly) {
  Mat e(poly.facets.size(), Vec(config.points.size()));
  for (std::size_t i = 0; i < poly.facets.size(); ++i)
    for (std::size_t a = 0; a < config.points.size(); ++a)
      e[i][a] = std::max(0.0, poly.eval(i, config.points[a]));
  return e;
}

namespace detail {

// Facet values at x, clamped to the facet for h in [-tol, 0).
inline Vec facet_values(const Polytope& poly, const Vec& x, double tol) {
  Vec h(poly.facets.size());
  for (std::size_t i = 0; i < poly.facets.size(); ++i) {
    h[i] = poly.eval(i, x);
    if (h[i] < 0.0) {
      if (h[i] < -tol) throw OutsideDomain("evaluation point outside the domain polytope");
      h[i] = 0.0;
    }
  }
  return h;
}

inline SimplexPoint normalized(Vec z) {
  double s = 0.0;
  for (double v : z) s += v;
  for (double& v : z) v /= s;
  return z;
}

}  // namespace detail

/// Unnormalized toric Bezier basis beta_a(x) = prod_i h_i(x)^{h_i(a)},
/// with 0^0 = 1 and 0^t = 0 for t > 0.
inline Vec toric_basis(const PointConfig& config, const Polytope& poly,
                       const Vec& x, double boundary_tol = 1e-12) {
  const Vec h = detail::facet_values(poly, x, boundary_tol);
  const Mat e = facet_exponents(config, poly);
  Vec beta(config.points.size(), 1.0);
  for (std::size_t a = 0; a < beta.size(); ++a)
    for (std::size_t i = 0; i < h.size(); ++i)
      beta[a] *= std::pow(h[i], e[i][a]);
  return beta;
}

/// Normalized weighted blending vector [w_a beta_a(x)], i.e. the map
/// (w.) o beta into the A-simplex. Evaluated in log space.
inline BlendingVector blend(const PointConfig& config, const Polytope& poly,
                            const WeightVector& w, const Vec& x,
                            double boundary_tol = 1e-12) {
  const Vec h = detail::facet_values(poly, x, boundary_tol);
  const Mat e = facet_exponents(config, poly);
  const std::size_t k = config.points.size();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  Vec logs(k, 0.0);
  for (std::size_t a = 0; a < k; ++a) {
    double l = w.log(a);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (e[i][a] == 0.0) continue;
      if (h[i] == 0.0) {
        l = kNegInf;
        break;
      }
      l += e[i][a] * std::log(h[i]);
    }
    logs[a] = l;
  }
  double m = kNegInf;
  for (double l : logs) m = std::max(m, l);
  if (m == kNegInf) throw OutsideDomain("all blending functions vanish");
  Vec z(k);
  for (std::size_t a = 0; a < k; ++a)
    z[a] = logs[a] == kNegInf ? 0.0 : std::exp(logs[a] - m);
  return detail::normalized(std::move(z));
}

/// The patch map F(x) = sum_a blend_a(x) b_a.
inline Vec patch_eval(const PointConfig& config, const Polytope& poly,
                      const WeightVector& w, const ControlPoints& B,
                      const Vec& x, double boundary_tol = 1e-12) {
  if (B.b.size() != config.points.size())
    throw SizeMismatch("control points do not index the configuration");
  const BlendingVector z = blend(config, poly, w, x, boundary_tol);
  Vec f(B.ambient_dim, 0.0);
  for (std::size_t a = 0; a < z.size(); ++a)
    for (int j = 0; j < B.ambient_dim; ++j) f[j] += z[a] * B.b[a][j];
  return f;
}

inline double binomial(int m, int i) {
  double r = 1.0;
  for (int k = 1; k <= i; ++k) r = r * static_cast<double>(m - i + k) / k;
  return std::round(r);
}

/// Exponents {0,...,m} of a degree-m curve on [0, m].
inline PointConfig curve_config(int m) {
  std::vector<Vec> pts;
  for (int i = 0; i <= m; ++i) pts.push_back({static_cast<double>(i)});
  return PointConfig(1, std::move(pts));
}

/// Lattice points of the scaled triangle m * unit-triangle, ordered (i, j)
/// lexicographically.
inline PointConfig triangle_config(int m) {
  std::vector<Vec> pts;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m - i; ++j)
      pts.push_back({static_cast<double>(i), static_cast<double>(j)});
  return PointConfig(2, std::move(pts));
}

enum class BernsteinShape { Curve, Triangle };

/// Binomial / multinomial weights that specialize the toric basis to the
/// classical (bi)Bernstein basis after the domain substitution.
inline WeightVector bernstein_weights(int m, BernsteinShape shape) {
  if (m < 1) throw NonPositiveInput("degree must be >= 1");
  Vec w;
  if (shape == BernsteinShape::Curve) {
    for (int i = 0; i <= m; ++i) w.push_back(binomial(m, i));
  } else {
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m - i; ++j)
        w.push_back(binomial(m, i) * binomial(m - i, j));
  }
  return WeightVector::from_values(w);
}

}  // namespace toric
