#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "toric/blending.hpp"
#include "toric/distance.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"
#include "toric/ipf.hpp"
#include "toric/triangulation.hpp"

namespace toric {

/// A toric degeneration: weights t^{lambda(a)} w_a swept along t.
struct DegenerationSchedule {
  WeightVector base_weights;
  LiftingFunction lambda;
  std::vector<double> t_values;

  DegenerationSchedule(WeightVector w, LiftingFunction l, std::vector<double> ts)
      : base_weights(std::move(w)), lambda(std::move(l)), t_values(std::move(ts)) {
    for (std::size_t i = 0; i < t_values.size(); ++i) {
      if (t_values[i] < 1.0)
        throw NonPositiveInput("schedule t-values must be >= 1");
      if (i > 0 && t_values[i] <= t_values[i - 1])
        throw NonPositiveInput("schedule t-values must be strictly increasing");
    }
  }
};

/// Curve degeneration weights w_i = t^{i(m-i)}. The halved variant
/// t^{i(m-i)/2} is the same family under t -> sqrt(t).
inline WeightVector curve_weights(int m, double t, bool halved = false) {
  if (m < 1) throw NonPositiveInput("degree must be >= 1");
  if (!(t > 0.0)) throw NonPositiveInput("t must be positive");
  Vec lw(m + 1);
  const double lt = std::log(t);
  for (int i = 0; i <= m; ++i)
    lw[i] = static_cast<double>(i) * static_cast<double>(m - i) * lt / (halved ? 2.0 : 1.0);
  return WeightVector::from_logs(std::move(lw));
}

/// Coordinatewise t^{lambda(a)} w_a, computed in log space.
inline WeightVector degenerate_weights(const WeightVector& w,
                                       const LiftingFunction& lambda, double t) {
  if (!(t > 0.0)) throw NonPositiveInput("t must be positive");
  if (lambda.values.size() != w.size())
    throw SizeMismatch("lifting does not index the weights");
  Vec lw = w.log_w;
  const double lt = std::log(t);
  for (std::size_t a = 0; a < lw.size(); ++a) lw[a] += lambda.values[a] * lt;
  return WeightVector::from_logs(std::move(lw));
}

/// Sampled two-sided distance data between a patch and a simplicial
/// complex. Both directions are finite-sample estimates of sup-distances.
struct DistanceReport {
  double t = 1.0;
  double sup_patch_to_complex = 0.0;
  double sup_complex_to_patch = 0.0;
  long samples = 0;
};

namespace detail {

// Grid over the domain polytope, per-axis resolution, boundary included.
inline std::vector<Vec> domain_grid(const PointConfig& config,
                                    const Polytope& poly, int per_axis) {
  const int d = config.dim;
  Vec lo(d, config.points[0][0]), hi(d, config.points[0][0]);
  for (int j = 0; j < d; ++j) {
    lo[j] = hi[j] = config.points[0][j];
    for (const auto& p : config.points) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }
  std::vector<Vec> pts;
  std::vector<int> idx(d, 0);
  while (true) {
    Vec x(d);
    for (int j = 0; j < d; ++j)
      x[j] = lo[j] + (hi[j] - lo[j]) * idx[j] / static_cast<double>(per_axis - 1);
    bool inside = true;
    for (std::size_t i = 0; i < poly.facets.size() && inside; ++i)
      if (poly.eval(i, x) < -1e-12) inside = false;
    if (inside) pts.push_back(std::move(x));
    int j = d - 1;
    while (j >= 0 && ++idx[j] == per_axis) idx[j--] = 0;
    if (j < 0) break;
  }
  // Hull vertices not already hit by the grid complete the boundary.
  for (int i : poly.vertices) {
    const Vec& v = config.points[i];
    bool present = false;
    for (const auto& p : pts)
      if (dist2(p, v) < 1e-12) {
        present = true;
        break;
      }
    if (!present) pts.push_back(v);
  }
  return pts;
}

// Barycentric grid samples of an embedded complex, resolution r per axis.
inline std::vector<Vec> complex_samples(const SimplicialComplexEmbedding& complex,
                                        int r) {
  std::vector<Vec> out;
  for (const auto& simplex : complex.simplices) {
    const int k = static_cast<int>(simplex.size());
    std::vector<int> comp(k - 1, 0);
    while (true) {
      int sum = 0;
      for (int c : comp) sum += c;
      if (sum <= r) {
        Vec p(simplex[0].size(), 0.0);
        double w0 = 1.0;
        for (int i = 0; i + 1 < k; ++i) {
          const double wi = comp[i] / static_cast<double>(r);
          w0 -= wi;
          p = add(p, scaled(simplex[i + 1], wi));
        }
        p = add(p, scaled(simplex[0], w0));
        out.push_back(std::move(p));
      }
      int j = k - 2;
      while (j >= 0 && ++comp[j] > r) comp[j--] = 0;
      if (j < 0) break;
    }
  }
  return out;
}

// sup over `from` of the min distance to the point cloud `to`, with an
// early exit once a candidate cannot raise the running sup.
inline double sup_min_distance(const std::vector<Vec>& from,
                               const std::vector<Vec>& to) {
  double sup = 0.0;
  for (const auto& p : from) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : to) {
      double s = 0.0;
      for (std::size_t j = 0; j < p.size(); ++j) {
        const double diff = p[j] - q[j];
        s += diff * diff;
      }
      if (s < best) {
        best = s;
        if (best <= sup * sup) break;
      }
    }
    sup = std::max(sup, std::sqrt(best));
  }
  return sup;
}

}  // namespace detail

/// Two-sided sampled distance between the patch image F(Delta) and an
/// embedded complex: patch samples to exact simplex distances one way,
/// barycentric complex samples to the patch cloud the other.
inline DistanceReport patch_complex_distance(const PointConfig& config,
                                             const Polytope& poly,
                                             const WeightVector& w,
                                             const ControlPoints& b,
                                             const SimplicialComplexEmbedding& complex,
                                             int grid) {
  if (grid < 2) throw NonPositiveInput("grid must be >= 2 per dimension");
  const auto xs = detail::domain_grid(config, poly, grid);
  std::vector<Vec> patch;
  patch.reserve(xs.size());
  for (const auto& x : xs) patch.push_back(patch_eval(config, poly, w, b, x));

  DistanceReport rep;
  rep.samples = static_cast<long>(patch.size());
  for (const auto& p : patch)
    rep.sup_patch_to_complex =
        std::max(rep.sup_patch_to_complex, point_to_simplices(p, complex.simplices));
  const auto cs = detail::complex_samples(complex, std::max(2, grid / 2));
  rep.sup_complex_to_patch = detail::sup_min_distance(cs, patch);
  return rep;
}

/// Curve bound of the degeneration theorem: t0 = kappa * m / eps with
/// kappa the largest control point norm.
inline double curve_bound_t0(const ControlPoints& b, int m, double eps) {
  if (!(eps > 0.0)) throw NonPositiveInput("eps must be positive");
  double kappa = 0.0;
  for (const auto& p : b.b) kappa = std::max(kappa, norm2(p));
  return kappa * static_cast<double>(m) / eps;
}

struct ConverseReport {
  double distance = 0.0;
  bool passes = false;
  Triangulation recovered;
};

/// Converse test: with weights t^{lambda(a)}, measures the two-sided
/// sampled distance between X_{A,w} and the realization |T| inside the
/// A-simplex. Distance below 1/(2(d+1)) forces T to be the triangulation
/// induced by lambda; the recovered triangulation is checked against T.
///
/// The variety is sampled two ways: the blend image of a domain grid, and
/// IPF preimages of the interior grid under the moment map. The second
/// family is uniform in moment coordinates, which keeps the cloud dense
/// along the near-degenerate transitions at large t (a uniform domain
/// grid alone crosses each of them in a single step). IPF iterates are
/// monomial rescales of a variety point, so even unconverged preimages
/// lie on X_{A,w}.
inline ConverseReport converse_check(const PointConfig& config,
                                     const Polytope& poly,
                                     const LiftingFunction& lambda,
                                     const Triangulation& t_expected, double t,
                                     int grid) {
  if (!(t > 1.0)) throw NonPositiveInput("converse check requires t > 1");
  const std::size_t k = config.points.size();
  const WeightVector w =
      degenerate_weights(WeightVector::ones(k), lambda, t);
  const auto xs = detail::domain_grid(config, poly, grid);
  std::vector<Vec> cloud;
  cloud.reserve(2 * xs.size());
  for (const auto& x : xs) cloud.push_back(blend(config, poly, w, x));
  const HomogenizedConfig h = homogenize(config);
  double scale = 1.0;
  for (const auto& p : config.points)
    for (double c : p) scale = std::max(scale, std::abs(c));
  for (const auto& x : xs) {
    bool interior = true;
    for (std::size_t i = 0; i < poly.facets.size() && interior; ++i)
      if (poly.eval(i, x) < 1e-6 * scale) interior = false;
    if (interior) cloud.push_back(ipf_solve(h, w, x, 1e-9, 30000).p);
  }

  const SimplicialComplexEmbedding real =
      realization_in_simplex(t_expected, static_cast<int>(k));
  double sup1 = 0.0;
  for (const auto& z : cloud)
    sup1 = std::max(sup1, point_to_simplices(z, real.simplices));
  const auto cs = detail::complex_samples(real, std::max(2, grid / 2));
  const double sup2 = detail::sup_min_distance(cs, cloud);

  ConverseReport rep;
  rep.distance = std::max(sup1, sup2);
  rep.passes = rep.distance < 1.0 / (2.0 * (config.dim + 1));
  try {
    rep.recovered = regular_triangulation(config, lambda);
  } catch (const NonGenericLifting&) {
    rep.recovered = regular_triangulation(config, perturb_lifting(lambda, config));
  }
  if (rep.passes && !(rep.recovered == t_expected))
    throw Error("converse inconsistency: distance below threshold but the "
                "lifting induces a different triangulation");
  return rep;
}

}  // namespace toric
