#include <gtest/gtest.h>

#include <random>
#include <set>

#include "toric/triangulation.hpp"

using namespace toric;

namespace {

PointConfig unit_square() {
  return PointConfig(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

PointConfig pinwheel_config() {
  return PointConfig(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}});
}

// Outer triangle + inner triangle, each outer vertex joined to the inner
// edge rotated clockwise. The classic non-regular layout.
Triangulation pinwheel_triangulation() {
  return Triangulation::from_simplices(
      {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}, {3, 4, 5}});
}

double total_volume(const PointConfig& config, const Triangulation& t) {
  double vol = 0.0;
  for (const auto& s : t.simplices) {
    std::vector<Vec> verts;
    for (int i : s) verts.push_back(config.points[i]);
    vol += simplex_volume(verts);
  }
  return vol;
}

}  // namespace

TEST(RegularTriangulation, SquareDiagonal) {
  const auto t = regular_triangulation(unit_square(), LiftingFunction{{0, 0, 0, 1}});
  EXPECT_EQ(t, Triangulation::from_simplices({{0, 1, 3}, {0, 2, 3}}));
}

TEST(RegularTriangulation, CurveLiftedHighAndLow) {
  PointConfig c(1, {{0}, {1}, {2}});
  const auto high = regular_triangulation(c, LiftingFunction{{0, 1, 0}});
  EXPECT_EQ(high, Triangulation::from_simplices({{0, 1}, {1, 2}}));
  const auto low = regular_triangulation(c, LiftingFunction{{0, -1, 0}});
  EXPECT_EQ(low, Triangulation::from_simplices({{0, 2}}));
}

TEST(RegularTriangulation, FlatLiftIsNonGeneric) {
  EXPECT_THROW(regular_triangulation(unit_square(), LiftingFunction{{0, 0, 0, 0}}),
               NonGenericLifting);
  PointConfig c(1, {{0}, {1}, {2}});
  EXPECT_THROW(regular_triangulation(c, LiftingFunction{{0, 0, 0}}),
               NonGenericLifting);
  // Affine-but-nonconstant lifts are equally flat.
  EXPECT_THROW(regular_triangulation(c, LiftingFunction{{0, 1, 2}}),
               NonGenericLifting);
}

TEST(RegularTriangulation, SimplexConfigIsTrivial) {
  PointConfig corners(2, {{0, 0}, {1, 0}, {0, 1}});
  const auto t = regular_triangulation(corners, LiftingFunction{{5, -3, 0}});
  EXPECT_EQ(t, Triangulation::from_simplices({{0, 1, 2}}));
}

TEST(PerturbLifting, RepairsFlatSquare) {
  const auto sq = unit_square();
  const auto fixed = perturb_lifting(LiftingFunction{{0, 0, 0, 0}}, sq);
  for (std::size_t i = 1; i < fixed.values.size(); ++i)
    EXPECT_GT(fixed.values[i], fixed.values[i - 1]);
  EXPECT_NO_THROW(regular_triangulation(sq, fixed));
}

TEST(PerturbLifting, GenericLiftUnchangedTriangulation) {
  const auto sq = unit_square();
  const LiftingFunction lam{{0, 0, 0, 1}};
  const auto t = regular_triangulation(sq, lam);
  EXPECT_EQ(regular_triangulation(sq, perturb_lifting(lam, sq)), t);
}

TEST(PerturbLifting, FlatCurveGoesConvex) {
  // index^2 is convex, so the flat interval collapses to one segment.
  PointConfig c(1, {{0}, {1}, {2}});
  const auto fixed = perturb_lifting(LiftingFunction{{0, 0, 0}}, c);
  EXPECT_EQ(regular_triangulation(c, fixed),
            Triangulation::from_simplices({{0, 2}}));
}

TEST(IsRegular, RoundTripOnRandomLifts) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto sq = unit_square();
  const auto tri = triangle_config(3);
  for (int trial = 0; trial < 10; ++trial) {
    for (const auto& config : {sq, tri}) {
      Vec lam(config.points.size());
      for (auto& v : lam) v = u(rng);
      Triangulation t;
      try {
        t = regular_triangulation(config, LiftingFunction{lam});
      } catch (const NonGenericLifting&) {
        t = regular_triangulation(config,
                                  perturb_lifting(LiftingFunction{lam}, config));
      }
      const auto [regular, witness] = is_regular(config, t);
      ASSERT_TRUE(regular);
      ASSERT_TRUE(witness.has_value());
      EXPECT_EQ(regular_triangulation(config, *witness), t);
      EXPECT_NEAR(total_volume(config, t),
                  hull_volume(config, convex_hull(config)), 1e-9);
    }
  }
}

TEST(IsRegular, BothSquareDiagonals) {
  const auto sq = unit_square();
  for (const auto& t :
       {Triangulation::from_simplices({{0, 1, 3}, {0, 2, 3}}),
        Triangulation::from_simplices({{0, 1, 2}, {1, 2, 3}})}) {
    const auto [regular, witness] = is_regular(sq, t);
    EXPECT_TRUE(regular);
    ASSERT_TRUE(witness.has_value());
    EXPECT_EQ(regular_triangulation(sq, *witness), t);
  }
}

TEST(IsRegular, PinwheelIsIrregular) {
  const auto [regular, witness] = is_regular(pinwheel_config(), pinwheel_triangulation());
  EXPECT_FALSE(regular);
  EXPECT_FALSE(witness.has_value());
}

TEST(IsRegular, MirroredPinwheelIsIrregularToo) {
  const auto mirror = Triangulation::from_simplices(
      {{0, 1, 4}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {0, 2, 3}, {2, 3, 5}, {3, 4, 5}});
  const auto [regular, witness] = is_regular(pinwheel_config(), mirror);
  EXPECT_FALSE(regular);
}

// The configuration itself is fine: generic lifts on the pinwheel point
// set certify regular and round-trip.
TEST(IsRegular, PinwheelConfigAdmitsRegularTriangulations) {
  const auto pw = pinwheel_config();
  const auto t = regular_triangulation(
      pw, LiftingFunction{{0.12, 0.7, 0.41, 0.95, 0.33, 0.58}});
  const auto [regular, witness] = is_regular(pw, t);
  ASSERT_TRUE(regular);
  EXPECT_EQ(regular_triangulation(pw, *witness), t);
}

TEST(IsRegular, UnusedPointConstraint) {
  // T = {{0,2}} leaves the middle point out; a witness must lift it low.
  PointConfig c(1, {{0}, {1}, {2}});
  const auto [regular, witness] = is_regular(c, Triangulation::from_simplices({{0, 2}}));
  ASSERT_TRUE(regular);
  ASSERT_TRUE(witness.has_value());
  EXPECT_LT(witness->values[1],
            0.5 * (witness->values[0] + witness->values[2]));
}

TEST(IsRegular, RejectsInvalidTriangulations) {
  const auto sq = unit_square();
  EXPECT_THROW(is_regular(sq, Triangulation::from_simplices({{0, 1, 3}})),
               InvalidTriangulation);  // does not tile
  EXPECT_THROW(is_regular(sq, Triangulation::from_simplices({{0, 1, 3}, {0, 1, 2}})),
               InvalidTriangulation);  // overlap
  EXPECT_THROW(is_regular(sq, Triangulation::from_simplices({{0, 1}, {2, 3}})),
               InvalidTriangulation);  // arity
}

TEST(ControlPolytope, TautologicalAndPolygon) {
  PointConfig c(1, {{0}, {1}, {2}});
  const auto t = Triangulation::from_simplices({{0, 1}, {1, 2}});
  const auto taut = control_polytope(t, ControlPoints::tautological(c));
  ASSERT_EQ(taut.simplices.size(), 2u);
  EXPECT_EQ(taut.simplices[0][0][0], 0.0);
  EXPECT_EQ(taut.simplices[0][1][0], 1.0);

  const ControlPoints b(2, {{0, 0}, {1, 2}, {2, 0}});
  const auto polygon = control_polytope(t, b);
  EXPECT_EQ(polygon.simplices[0][1], (Vec{1, 2}));
  EXPECT_EQ(polygon.simplices[1][0], (Vec{1, 2}));
}

TEST(ControlPolytope, RealizationAndProjectionCompatibility) {
  const auto sq = unit_square();
  const auto t = regular_triangulation(sq, LiftingFunction{{0, 0, 0, 1}});
  const auto real = realization_in_simplex(t, sq.size());
  ASSERT_EQ(real.simplices.size(), t.simplices.size());
  // Vertices of |T| are indicator vectors.
  for (std::size_t s = 0; s < t.simplices.size(); ++s)
    for (std::size_t v = 0; v < t.simplices[s].size(); ++v) {
      const Vec& e = real.simplices[s][v];
      for (int i = 0; i < sq.size(); ++i)
        EXPECT_DOUBLE_EQ(e[i], i == t.simplices[s][v] ? 1.0 : 0.0);
    }
  // pi_B maps |T| onto B(T) simplex by simplex: indicator e_a -> b_a.
  const ControlPoints b(3, {{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  const auto ct = control_polytope(t, b);
  for (std::size_t s = 0; s < t.simplices.size(); ++s)
    for (std::size_t v = 0; v < t.simplices[s].size(); ++v) {
      Vec image(3, 0.0);
      for (int i = 0; i < sq.size(); ++i)
        for (int j = 0; j < 3; ++j) image[j] += real.simplices[s][v][i] * b.b[i][j];
      EXPECT_EQ(image, ct.simplices[s][v]);
    }
}

TEST(RegularTriangulation, FourDistinctRegularTriangulationsOf3Triangle) {
  const auto tri = triangle_config(3);
  std::set<std::vector<std::vector<int>>> seen;
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int attempts = 0;
  while (seen.size() < 4 && attempts < 50) {
    ++attempts;
    Vec lam(tri.points.size());
    for (auto& v : lam) v = u(rng);
    Triangulation t;
    try {
      t = regular_triangulation(tri, LiftingFunction{lam});
    } catch (const NonGenericLifting&) {
      continue;
    }
    const auto [regular, witness] = is_regular(tri, t);
    EXPECT_TRUE(regular);
    seen.insert(t.simplices);
  }
  EXPECT_EQ(seen.size(), 4u);
}
