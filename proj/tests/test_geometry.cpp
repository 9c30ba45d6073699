#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "toric/geometry.hpp"

using namespace toric;

namespace {

PointConfig interval05() {
  return PointConfig(1, {{0}, {1}, {2}, {3}, {4}, {5}});
}

PointConfig scaled_triangle3() {
  std::vector<Vec> pts;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3 - i; ++j)
      pts.push_back({double(i), double(j)});
  return PointConfig(2, pts);
}

PointConfig unit_cube() {
  std::vector<Vec> pts;
  for (int i = 0; i < 8; ++i)
    pts.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
  return PointConfig(3, pts);
}

bool has_facet(const Polytope& poly, const Vec& normal, double offset) {
  for (const auto& f : poly.facets) {
    bool same = std::abs(f.offset - offset) < 1e-12;
    for (std::size_t i = 0; i < normal.size() && same; ++i)
      same = std::abs(f.normal[i] - normal[i]) < 1e-12;
    if (same) return true;
  }
  return false;
}

}  // namespace

TEST(PointConfig, RejectsDuplicatesAndDegenerateSpan) {
  EXPECT_THROW(PointConfig(1, {{0}, {1}, {1}}), DegenerateSpan);
  EXPECT_THROW(PointConfig(2, {{0, 0}, {1, 1}, {2, 2}}), DegenerateSpan);
  EXPECT_NO_THROW(PointConfig(2, {{0, 0}, {1, 0}, {0, 1}}));
}

TEST(ConvexHull, IntervalFacets) {
  const auto poly = convex_hull(interval05());
  ASSERT_EQ(poly.facets.size(), 2u);
  EXPECT_TRUE(has_facet(poly, {1}, 0));   // h1 = x
  EXPECT_TRUE(has_facet(poly, {-1}, 5));  // h2 = 5 - x
  ASSERT_EQ(poly.vertices.size(), 2u);
  EXPECT_EQ(poly.vertices[0], 0);
  EXPECT_EQ(poly.vertices[1], 5);
}

TEST(ConvexHull, ScaledTriangleFacets) {
  const auto poly = convex_hull(scaled_triangle3());
  ASSERT_EQ(poly.facets.size(), 3u);
  EXPECT_TRUE(has_facet(poly, {1, 0}, 0));    // x >= 0
  EXPECT_TRUE(has_facet(poly, {0, 1}, 0));    // y >= 0
  EXPECT_TRUE(has_facet(poly, {-1, -1}, 3));  // 3 - x - y >= 0
  EXPECT_EQ(poly.vertices.size(), 3u);
}

TEST(ConvexHull, UnitCubeBruteForce) {
  const auto poly = convex_hull(unit_cube());
  ASSERT_EQ(poly.facets.size(), 6u);
  for (int j = 0; j < 3; ++j) {
    Vec plus(3, 0.0), minus(3, 0.0);
    plus[j] = 1.0;
    minus[j] = -1.0;
    EXPECT_TRUE(has_facet(poly, plus, 0));
    EXPECT_TRUE(has_facet(poly, minus, 1));
  }
  EXPECT_EQ(poly.vertices.size(), 8u);
  EXPECT_NEAR(hull_volume(unit_cube(), poly), 1.0, 1e-12);
}

TEST(ConvexHull, DimensionLimit) {
  PointConfig c(4, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0},
                    {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_THROW(convex_hull(c), DimensionUnsupported);
}

TEST(ConvexHull, OrderIndependent) {
  const auto base = convex_hull(scaled_triangle3());
  auto pts = scaled_triangle3().points;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto poly = convex_hull(PointConfig(2, pts));
    ASSERT_EQ(poly.facets.size(), base.facets.size());
    for (const auto& f : base.facets)
      EXPECT_TRUE(has_facet(poly, f.normal, f.offset));
  }
}

TEST(ConvexHull, ConfigPointsSatisfyFacets) {
  for (const auto& config : {interval05(), scaled_triangle3(), unit_cube()}) {
    const auto poly = convex_hull(config);
    for (const auto& p : config.points)
      for (std::size_t i = 0; i < poly.facets.size(); ++i)
        EXPECT_GE(poly.eval(i, p), -1e-12);
  }
}

TEST(NormalizeFacets, PrimitiveIntegerScaling) {
  Polytope poly;
  poly.facets.push_back({{2}, 0});
  const auto out = normalize_facets(poly, interval05());
  EXPECT_DOUBLE_EQ(out.facets[0].normal[0], 1);
  EXPECT_DOUBLE_EQ(out.facets[0].offset, 0);

  Polytope tri;
  tri.facets.push_back({{-1, -1}, 3});
  const auto out2 = normalize_facets(tri, scaled_triangle3());
  EXPECT_DOUBLE_EQ(out2.facets[0].normal[0], -1);
  EXPECT_DOUBLE_EQ(out2.facets[0].offset, 3);
}

TEST(NormalizeFacets, UnitNormalsOnIrrationalConfig) {
  PointConfig c(1, {{0.0}, {std::sqrt(2.0)}});
  const auto poly = convex_hull(c);
  ASSERT_EQ(poly.facets.size(), 2u);
  for (const auto& f : poly.facets)
    EXPECT_NEAR(std::abs(f.normal[0]), 1.0, 1e-12);
}

TEST(Orientation, SpecExamples) {
  EXPECT_EQ(orientation({{0, 0}, {1, 0}, {0, 1}}), 1);
  EXPECT_EQ(orientation({{0, 0}, {0, 1}, {1, 0}}), -1);
  EXPECT_EQ(orientation({{0, 0}, {1, 1}, {2, 2}}), 0);
  EXPECT_THROW(orientation({{0, 0}, {1, 0}}), ArityMismatch);
}

TEST(Orientation, AlternatingUnderSwaps) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec> pts(3, Vec(2));
    for (auto& p : pts)
      for (auto& c : p) c = coord(rng);
    const int base = orientation(pts);
    std::uniform_int_distribution<int> pick(0, 2);
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    std::swap(pts[i], pts[j]);
    EXPECT_EQ(orientation(pts), -base);
  }
}

TEST(Orientation, ExactOnIntegers) {
  // A determinant that double arithmetic would misround if done naively.
  std::vector<Vec> pts = {{0, 0, 0}, {1, 0, 1048576}, {0, 1, 1048577},
                          {1, 1, 2097153}};
  EXPECT_EQ(orientation(pts), 0);
}

TEST(HullVolume, KnownValues) {
  EXPECT_NEAR(hull_volume(interval05(), convex_hull(interval05())), 5.0, 1e-12);
  EXPECT_NEAR(hull_volume(scaled_triangle3(), convex_hull(scaled_triangle3())),
              4.5, 1e-12);
}
