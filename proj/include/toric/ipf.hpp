#pragma once

#include <cmath>
#include <deque>
#include <vector>

#include "toric/blending.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/variety.hpp"

namespace toric {

/// The configuration lifted into the probability simplex: translate so
/// every coordinate is >= 1, scale into the standard simplex, then append
/// the slack coordinate a+ = (1 - sum a, a).
struct HomogenizedConfig {
  std::vector<Vec> plus_points;  // in R^{d+1}, each in the open simplex
  Vec translation;               // b
  double scale = 1.0;            // t
  int source_dim = 0;
  Polytope domain;               // facets of conv(A), for interiority checks
  double domain_scale = 1.0;

  /// The affine forward map psi: y -> (1 - sum t(y+b), t(y+b)).
  Vec lift(const Vec& y) const {
    Vec out(source_dim + 1);
    double s = 0.0;
    for (int j = 0; j < source_dim; ++j) {
      out[j + 1] = scale * (y[j] + translation[j]);
      s += out[j + 1];
    }
    out[0] = 1.0 - s;
    return out;
  }

  bool strictly_interior(const Vec& y) const {
    for (std::size_t i = 0; i < domain.facets.size(); ++i)
      if (domain.eval(i, y) <= 1e-12 * domain_scale) return false;
    return true;
  }
};

inline HomogenizedConfig homogenize(const PointConfig& config) {
  HomogenizedConfig h;
  h.source_dim = config.dim;
  h.translation.assign(config.dim, 0.0);
  for (int j = 0; j < config.dim; ++j) {
    double mn = config.points[0][j];
    for (const auto& p : config.points) mn = std::min(mn, p[j]);
    h.translation[j] = 1.0 - mn;
  }
  double max_sum = 0.0;
  for (const auto& p : config.points) {
    double s = 0.0;
    for (int j = 0; j < config.dim; ++j) s += p[j] + h.translation[j];
    max_sum = std::max(max_sum, s);
  }
  h.scale = 1.0 / (2.0 * max_sum);
  for (const auto& p : config.points) h.plus_points.push_back(h.lift(p));
  h.domain = convex_hull(config);
  for (const auto& p : config.points)
    for (double c : p) h.domain_scale = std::max(h.domain_scale, std::abs(c));
  return h;
}

struct IpfResult {
  SimplexPoint p;
  long iterations = 0;
  double final_error = 0.0;       // sup norm of the moment mismatch
  bool converged = false;
  std::vector<double> trailing_errors;  // last iterations, oldest first
};

/// Darroch-Ratcliff iterative proportional fitting: the multiplicative
/// fixed-point iteration inverting the tautological projection on w.X_A.
/// Here y^a means the homogenized monomial prod_j y_j^{a+_j}.
inline IpfResult ipf_solve(const HomogenizedConfig& h, const WeightVector& w,
                           const Vec& y, double tol = 1e-9,
                           long max_iter = 100000) {
  if (!(tol > 0.0)) throw NonPositiveInput("tolerance must be positive");
  const std::size_t k = h.plus_points.size();
  if (w.size() != k) throw SizeMismatch("weights do not index the configuration");
  if (!h.strictly_interior(y))
    throw NotInterior("query point must be strictly inside the domain polytope");
  const Vec q = h.lift(y);
  const int dd = h.source_dim + 1;
  Vec lq(dd);
  for (int j = 0; j < dd; ++j) lq[j] = std::log(q[j]);

  // log p, renormalized each iteration against floating-point drift
  Vec lp = w.log_w;
  auto renorm = [&]() {
    double m = lp[0];
    for (double l : lp) m = std::max(m, l);
    double s = 0.0;
    for (double l : lp) s += std::exp(l - m);
    const double shift = m + std::log(s);
    for (double& l : lp) l -= shift;
  };
  renorm();

  IpfResult best;
  best.final_error = std::numeric_limits<double>::infinity();
  std::deque<double> trail;
  Vec p(k), pi(dd), lratio(dd);
  for (long it = 0;; ++it) {
    for (std::size_t a = 0; a < k; ++a) p[a] = std::exp(lp[a]);
    std::fill(pi.begin(), pi.end(), 0.0);
    for (std::size_t a = 0; a < k; ++a)
      for (int j = 0; j < dd; ++j) pi[j] += p[a] * h.plus_points[a][j];
    double err = 0.0;
    for (int j = 0; j < dd; ++j) err = std::max(err, std::abs(pi[j] - q[j]));
    trail.push_back(err);
    if (trail.size() > 10) trail.pop_front();
    if (err < best.final_error) {
      best.p = p;
      best.final_error = err;
      best.iterations = it;
    }
    if (err < tol) {
      best.converged = true;
      break;
    }
    if (it >= max_iter) break;  // return best iterate, converged stays false
    for (int j = 0; j < dd; ++j) lratio[j] = lq[j] - std::log(pi[j]);
    for (std::size_t a = 0; a < k; ++a) lp[a] += dot(h.plus_points[a], lratio);
    renorm();
  }
  best.trailing_errors.assign(trail.begin(), trail.end());
  return best;
}

/// The preferred (linear precision) blending functions at an interior
/// point y: the IPF inverse of the tautological projection on w.X_A.
inline BlendingVector preferred_blending(const PointConfig& config,
                                         const Polytope& poly,
                                         const WeightVector& w, const Vec& y,
                                         double tol = 1e-9,
                                         long max_iter = 100000) {
  for (std::size_t i = 0; i < poly.facets.size(); ++i)
    if (poly.eval(i, y) <= 1e-12)
      throw NotInterior("preferred blending requires an interior point");
  const HomogenizedConfig h = homogenize(config);
  return ipf_solve(h, w, y, tol, max_iter).p;
}

}  // namespace toric
