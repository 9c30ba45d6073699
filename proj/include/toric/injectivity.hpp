#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "toric/blending.hpp"
#include "toric/errors.hpp"
#include "toric/geometry.hpp"

namespace toric {

enum class CompatStatus { Compatible, Incompatible, AllDegenerate };

/// Outcome of the all-weights injectivity certificate. Compatible carries
/// the shared orientation-product sign; Incompatible carries the first
/// pair of subsets (in lexicographic order) with conflicting products.
struct CompatibilityVerdict {
  CompatStatus status = CompatStatus::AllDegenerate;
  int global_sign = 0;
  std::vector<int> witness_I;
  std::vector<int> witness_J;
};

/// Checks whether every affinely independent (d+1)-subset of A induces
/// the same orientation-sign product with the corresponding subset of B.
inline CompatibilityVerdict compatibility(const PointConfig& A,
                                          const std::vector<Vec>& B,
                                          double eps = 1e-10) {
  const int d = A.dim;
  const int n = A.size();
  if (static_cast<int>(B.size()) != n)
    throw SizeMismatch("control list must index the configuration");
  for (const auto& b : B)
    if (static_cast<int>(b.size()) != d)
      throw SizeMismatch("compatibility requires control points in R^d");

  CompatibilityVerdict v;
  std::vector<int> first_pos, first_neg;
  for (const auto& s : subsets(n, d + 1)) {
    std::vector<Vec> pa, pb;
    for (int i : s) {
      pa.push_back(A.points[i]);
      pb.push_back(B[i]);
    }
    const int sa = orientation(pa, eps);
    if (sa == 0) continue;  // only affinely independent subsets of A count
    const int sb = orientation(pb, eps);
    const int prod = sa * sb;
    if (prod > 0 && first_pos.empty()) first_pos = s;
    if (prod < 0 && first_neg.empty()) first_neg = s;
    if (!first_pos.empty() && !first_neg.empty()) break;
  }
  if (!first_pos.empty() && !first_neg.empty()) {
    v.status = CompatStatus::Incompatible;
    // Witness: lexicographically first nonzero product, then the first
    // subset of the opposite sign.
    if (first_pos < first_neg) {
      v.witness_I = first_pos;
      v.witness_J = first_neg;
    } else {
      v.witness_I = first_neg;
      v.witness_J = first_pos;
    }
    return v;
  }
  if (first_pos.empty() && first_neg.empty()) {
    v.status = CompatStatus::AllDegenerate;
    return v;
  }
  v.status = CompatStatus::Compatible;
  v.global_sign = first_pos.empty() ? -1 : 1;
  return v;
}

/// Theorem-level wrapper: Compatible certifies that the patch map is
/// injective for every positive weight vector; Incompatible means some
/// weight vector yields a non-injective patch.
inline CompatibilityVerdict certify_all_weights_injective(
    const PointConfig& A, const std::vector<Vec>& B, double eps = 1e-10) {
  return compatibility(A, B, eps);
}

/// An affine map x -> M x + offset with M of size rows x cols.
struct AffineMap {
  Mat matrix;
  Vec offset;

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }

  Vec apply(const Vec& x) const {
    Vec out(offset);
    for (int r = 0; r < rows(); ++r) out[r] += dot(matrix[r], x);
    return out;
  }

  static AffineMap identity(int n) {
    AffineMap m;
    m.matrix.assign(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) m.matrix[i][i] = 1.0;
    m.offset.assign(n, 0.0);
    return m;
  }

  /// Deletes one coordinate (a projection with center at infinity along
  /// that axis).
  static AffineMap coordinate_deletion(int n, int coord) {
    AffineMap m;
    m.offset.assign(n - 1, 0.0);
    for (int r = 0; r < n - 1; ++r) {
      Vec row(n, 0.0);
      row[r < coord ? r : r + 1] = 1.0;
      m.matrix.push_back(std::move(row));
    }
    return m;
  }

  /// Projection along a direction u: shear so the largest component of u
  /// becomes the deleted axis. Composes to one affine map per step.
  static AffineMap projection_along(const Vec& u) {
    const int n = static_cast<int>(u.size());
    int piv = 0;
    for (int j = 1; j < n; ++j)
      if (std::abs(u[j]) > std::abs(u[piv])) piv = j;
    if (u[piv] == 0.0) throw NonPositiveInput("projection direction must be nonzero");
    AffineMap shear = identity(n);
    for (int r = 0; r < n; ++r) shear.matrix[r][piv] -= u[r] / u[piv];
    const AffineMap del = coordinate_deletion(n, piv);
    return compose(del, shear);
  }

  static AffineMap compose(const AffineMap& f, const AffineMap& g) {
    AffineMap out;
    out.matrix.assign(f.rows(), Vec(g.cols(), 0.0));
    for (int r = 0; r < f.rows(); ++r)
      for (int c = 0; c < g.cols(); ++c)
        for (int k = 0; k < g.rows(); ++k)
          out.matrix[r][c] += f.matrix[r][k] * g.matrix[k][c];
    out.offset = f.apply(g.offset);
    return out;
  }
};

/// Builds the composite projection R^n -> R^d from a list of directions
/// (centers at infinity), applied in order.
inline AffineMap projection_from_directions(const std::vector<Vec>& directions) {
  AffineMap m = AffineMap::projection_along(directions[0]);
  for (std::size_t i = 1; i < directions.size(); ++i)
    m = AffineMap::compose(AffineMap::projection_along(directions[i]), m);
  return m;
}

/// Sufficient certificate for embedded patches: if A is compatible with
/// the projected control points, the patch into R^n is injective for the
/// given (indeed any) weights. The converse does not hold.
inline CompatibilityVerdict projected_injectivity(const PointConfig& A,
                                                  const ControlPoints& B,
                                                  const AffineMap& proj,
                                                  double eps = 1e-10) {
  if (proj.rows() != A.dim || proj.cols() != B.ambient_dim)
    throw SizeMismatch("projection must map control space onto exponent space");
  std::vector<Vec> projected;
  projected.reserve(B.b.size());
  for (const auto& b : B.b) projected.push_back(proj.apply(b));
  return compatibility(A, projected, eps);
}

namespace detail {

inline double minor_det(const std::vector<Vec>& cols, const std::vector<int>& idx) {
  const std::size_t n = idx.size();
  Mat m(n, Vec(n));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][c] = cols[idx[c]][r];
  bool exact = true;
  for (std::size_t c = 0; c < n && exact; ++c) exact = is_integral(cols[idx[c]]);
  if (exact) {
    std::vector<std::vector<long long>> mi(n, std::vector<long long>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        mi[r][c] = static_cast<long long>(std::llround(m[r][c]));
    return static_cast<double>(det_exact(mi));
  }
  return det(m);
}

}  // namespace detail

/// Cauchy-Binet expansion of the Jacobian determinant of
/// G_k(x) = sum_i k_i x^{y_i} z_i:
///   x^{-1} * sum_{|I|=n} (prod_{i in I} k_i x^{y_i}) Y_I Z_I.
inline double jacobian_cb(const std::vector<Vec>& Y, const std::vector<Vec>& Z,
                          const Vec& k, const Vec& x) {
  const int m = static_cast<int>(Y.size());
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(Z.size()) != m || static_cast<int>(k.size()) != m)
    throw SizeMismatch("jacobian_cb: Y, Z, k must have equal length");
  if (m < n) throw SizeMismatch("jacobian_cb: need at least n summands");
  Vec lx(n);
  for (int j = 0; j < n; ++j) {
    if (!(x[j] > 0.0)) throw NonPositiveInput("jacobian_cb requires x > 0");
    lx[j] = std::log(x[j]);
  }
  double total = 0.0;
  for (const auto& idx : subsets(m, n)) {
    const double yz = detail::minor_det(Y, idx) * detail::minor_det(Z, idx);
    if (yz == 0.0) continue;
    double coeff = 1.0;
    for (int i : idx) coeff *= k[i] * std::exp(dot(Y[i], lx));
    total += coeff * yz;
  }
  double inv = 1.0;
  for (double c : x) inv /= c;
  return inv * total;
}

/// Randomized + deterministic probe of sign constancy of the Jacobian
/// over positive (k, x). The deterministic probes drive k(K, t) with t
/// large enough that the K-term dominates the expansion, so each nonzero
/// minor product contributes its sign.
inline bool sign_constancy_check(const std::vector<Vec>& Y,
                                 const std::vector<Vec>& Z, int trials = 100,
                                 unsigned seed = 0) {
  const int m = static_cast<int>(Y.size());
  const int n = m == 0 ? 0 : static_cast<int>(Y[0].size());
  if (m < n || n == 0) return false;
  bool pos = false, neg = false;
  auto record = [&](double v, double zero_tol) {
    if (v > zero_tol) pos = true;
    if (v < -zero_tol) neg = true;
  };

  const auto combos = subsets(m, n);
  std::vector<double> yz(combos.size());
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < combos.size(); ++i) {
    yz[i] = detail::minor_det(Y, combos[i]) * detail::minor_det(Z, combos[i]);
    abs_sum += std::abs(yz[i]);
  }
  const Vec ones(n, 1.0);
  for (std::size_t i = 0; i < combos.size(); ++i) {
    if (yz[i] == 0.0) continue;
    const double t = 2.0 * (1.0 + abs_sum / std::abs(yz[i]));
    Vec k(m, 1.0);
    for (int j : combos[i]) k[j] = t;
    record(jacobian_cb(Y, Z, k, ones), 0.0);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(-1.5, 1.5);
  for (int t = 0; t < trials; ++t) {
    Vec k(m), x(n);
    for (double& v : k) v = std::exp(logu(rng));
    for (double& v : x) v = std::exp(logu(rng));
    record(jacobian_cb(Y, Z, k, x), 1e-12 * abs_sum);
  }
  return pos != neg;
}

/// Lifts exponents/controls to the homogeneous form (1, p) used when
/// reducing patch injectivity to the Jacobian condition.
inline std::vector<Vec> homogeneous_lift(const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    Vec q(p.size() + 1);
    q[0] = 1.0;
    for (std::size_t j = 0; j < p.size(); ++j) q[j + 1] = p[j];
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace toric
