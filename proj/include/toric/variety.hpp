#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <optional>
#include <vector>

#include "toric/blending.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"

namespace toric {

/// A pair of nonnegative coefficient vectors with sum(mu) = sum(nu) = 1
/// and matching weighted exponent sums; each yields an analytic binomial
/// z^mu - z^nu vanishing on X_A.
struct AffineRelation {
  Vec mu;
  Vec nu;
};

/// Monomial parameterization: [x^a | a in A] normalized to the A-simplex.
inline SimplexPoint phi_A(const PointConfig& config, const Vec& x) {
  for (double c : x)
    if (!(c > 0.0)) throw NonPositiveInput("phi_A requires strictly positive input");
  Vec lx(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) lx[j] = std::log(x[j]);
  Vec logs(config.points.size());
  for (std::size_t a = 0; a < logs.size(); ++a) logs[a] = dot(config.points[a], lx);
  double m = logs[0];
  for (double l : logs) m = std::max(m, l);
  Vec z(logs.size());
  for (std::size_t a = 0; a < z.size(); ++a) z[a] = std::exp(logs[a] - m);
  return detail::normalized(std::move(z));
}

/// The weight action w.z = [w_a z_a], a bijection of the open simplex.
inline SimplexPoint weight_action(const WeightVector& w, const SimplexPoint& z) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  Vec logs(z.size(), kNegInf);
  double m = kNegInf;
  for (std::size_t a = 0; a < z.size(); ++a) {
    if (z[a] > 0.0) logs[a] = std::log(z[a]) + w.log(a);
    m = std::max(m, logs[a]);
  }
  Vec out(z.size(), 0.0);
  for (std::size_t a = 0; a < z.size(); ++a)
    if (logs[a] != kNegInf) out[a] = std::exp(logs[a] - m);
  return detail::normalized(std::move(out));
}

/// Tautological projection (moment map) z -> sum_a z_a a.
inline Vec tautological_projection(const PointConfig& config, const SimplexPoint& z) {
  Vec y(config.dim, 0.0);
  for (std::size_t a = 0; a < z.size(); ++a)
    for (int j = 0; j < config.dim; ++j) y[j] += z[a] * config.points[a][j];
  return y;
}

namespace detail {

// Spanning set of affine relations for an arbitrary point list (not
// necessarily affinely spanning): null space of the homogenized exponent
// matrix [(1, a)]_a via SVD, canonicalized for reproducibility.
inline std::vector<AffineRelation> relation_basis_points(const std::vector<Vec>& pts) {
  const int k = static_cast<int>(pts.size());
  if (k == 0) return {};
  const int d = static_cast<int>(pts[0].size());
  Eigen::MatrixXd m(d + 1, k);
  for (int a = 0; a < k; ++a) {
    m(0, a) = 1.0;
    for (int j = 0; j < d; ++j) m(j + 1, a) = pts[a][j];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10) ++r;
  std::vector<AffineRelation> rels;
  for (int col = r; col < k; ++col) {
    Vec v(k);
    for (int a = 0; a < k; ++a) v[a] = svd.matrixV()(a, col);
    for (double x : v)
      if (std::abs(x) > 1e-9) {
        if (x < 0)
          for (double& y : v) y = -y;
        break;
      }
    Vec mu(k, 0.0), nu(k, 0.0);
    double s = 0.0;
    for (int a = 0; a < k; ++a) {
      if (v[a] > 0)
        mu[a] = v[a];
      else
        nu[a] = -v[a];
      s += mu[a];
    }
    if (s <= 1e-12) continue;
    for (int a = 0; a < k; ++a) {
      mu[a] /= s;
      nu[a] /= s;
    }
    rels.push_back({std::move(mu), std::move(nu)});
  }
  return rels;
}

// Monomial prod z_a^{e_a} with nonnegative exponents; 0^0 = 1, 0^t = 0.
inline double simplex_monomial(const SimplexPoint& z, const Vec& e) {
  double l = 0.0;
  for (std::size_t a = 0; a < z.size(); ++a) {
    if (e[a] == 0.0) continue;
    if (z[a] <= 0.0) return 0.0;
    l += e[a] * std::log(z[a]);
  }
  return std::exp(l);
}

}  // namespace detail

/// Spanning set of |A|-d-1 affine relations of the configuration.
inline std::vector<AffineRelation> relation_basis(const PointConfig& config) {
  return detail::relation_basis_points(config.points);
}

/// The analytic binomial z^mu - z^nu of one relation.
inline double binomial_residual(const AffineRelation& rel, const SimplexPoint& z) {
  return detail::simplex_monomial(z, rel.mu) - detail::simplex_monomial(z, rel.nu);
}

/// Residual twisted by weights: z^mu w^nu - z^nu w^mu, which vanishes on
/// w.X_A without dividing by small weights.
inline double twisted_residual(const AffineRelation& rel, const SimplexPoint& z,
                               const WeightVector& w) {
  const auto wv = w.values();
  return detail::simplex_monomial(z, rel.mu) * detail::simplex_monomial(wv, rel.nu) -
         detail::simplex_monomial(z, rel.nu) * detail::simplex_monomial(wv, rel.mu);
}

/// Tests membership of z in w.X_A (default w = 1, i.e. X_A itself).
/// Interior points are tested against the relation basis; points with
/// zero coordinates by restriction to the face of A supporting them.
inline bool membership_test(const PointConfig& config, const SimplexPoint& z,
                            double tol, const WeightVector* w = nullptr,
                            const Polytope* poly = nullptr) {
  const std::size_t k = config.points.size();
  if (z.size() != k) throw SizeMismatch("simplex point does not index the configuration");
  std::vector<int> support;
  for (std::size_t a = 0; a < k; ++a)
    if (z[a] > 0.0) support.push_back(static_cast<int>(a));
  if (support.empty()) return false;

  std::vector<int> face = support;
  if (support.size() < k) {
    // Facets vanishing on the whole support cut out the supporting face.
    Polytope owned;
    if (!poly) {
      owned = convex_hull(config);
      poly = &owned;
    }
    const Mat e = facet_exponents(config, *poly);
    double scale = 0.0;
    for (const auto& row : e)
      for (double v : row) scale = std::max(scale, v);
    const double on_tol = 1e-9 * std::max(1.0, scale);
    std::vector<int> active;
    for (std::size_t i = 0; i < e.size(); ++i) {
      bool vanishes = true;
      for (int a : support)
        if (e[i][a] > on_tol) {
          vanishes = false;
          break;
        }
      if (vanishes) active.push_back(static_cast<int>(i));
    }
    face.clear();
    for (std::size_t a = 0; a < k; ++a) {
      bool on_face = true;
      for (int i : active)
        if (e[i][a] > on_tol) {
          on_face = false;
          break;
        }
      if (on_face) face.push_back(static_cast<int>(a));
    }
    if (face != support) return false;  // support is not a full face of A
  }

  std::vector<Vec> face_pts;
  SimplexPoint zf;
  Vec wf;
  for (int a : face) {
    face_pts.push_back(config.points[a]);
    zf.push_back(z[a]);
    wf.push_back(w ? w->value(a) : 1.0);
  }
  const auto rels = detail::relation_basis_points(face_pts);
  const WeightVector wsub = WeightVector::from_values(wf);
  for (const auto& rel : rels)
    if (std::abs(twisted_residual(rel, zf, wsub)) >= tol) return false;
  return true;
}

}  // namespace toric
