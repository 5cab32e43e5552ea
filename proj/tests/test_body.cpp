#include <gtest/gtest.h>

#include <cmath>

#include "convexsym/body.hpp"

using namespace csym;

namespace {

Polytope square(double lo, double hi) {
  return Polytope::hull({make_vector({lo, lo}), make_vector({hi, lo}), make_vector({lo, hi}), make_vector({hi, hi})});
}

Polytope random_polytope(int n, int count, RngStream& rng) {
  std::vector<Vector> pts;
  for (int i = 0; i < count; ++i) pts.push_back(gaussian_vector(n, rng));
  return Polytope::hull(pts);
}

Subspace x_axis(int n) {
  int axes[] = {0};
  return Subspace::coordinate(n, axes);
}

}  // namespace

TEST(Support, AnalyticBodies) {
  EXPECT_NEAR(support(Ball(Vector::Zero(3), 1.0), make_vector({0, 0.6, 0.8})), 1.0, 1e-15);
  SphericalCylinder c(x_axis(2), 2.0, 3.0, Vector::Zero(2));
  EXPECT_NEAR(support(c, make_vector({0, 1})), 3.0, 1e-15);
  EXPECT_NEAR(support(c, make_vector({1, 0})), 2.0, 1e-15);
  SpecialForm f(Polytope::hull({make_vector({-1, 0}), make_vector({2, 0})}), x_axis(2), 0.5);
  EXPECT_NEAR(support(f, make_vector({1, 0})), 2.0, 1e-15);
  EXPECT_NEAR(support(f, make_vector({0, -1})), 0.5, 1e-15);
}

TEST(Bodies, ValidateInvariants) {
  EXPECT_THROW(Ball(Vector::Zero(2), -1.0), InvalidInput);
  EXPECT_THROW(SphericalCylinder(x_axis(2), 1.0, 1.0, make_vector({0, 1})), InvalidInput);
  EXPECT_THROW(SpecialForm(Polytope::point(make_vector({0, 1})), x_axis(2), 1.0), InvalidInput);
}

TEST(Reflect, Examples) {
  Body p = reflect(Polytope::point(make_vector({1, 2})), x_axis(2));
  EXPECT_TRUE(std::get<Polytope>(p).vertices()[0].isApprox(make_vector({1, -2})));
  Polytope sym = square(-1, 1);
  EXPECT_LE(hausdorff(reflect(sym, x_axis(2)), sym), 1e-10);
  RngStream rng(1, 0);
  Polytope k = random_polytope(3, 9, rng);
  Subspace h = haar_subspace(3, 2, rng);
  EXPECT_LE(hausdorff(reflect(reflect(k, h), h), k), 1e-10);
}

TEST(Reflect, Analytic) {
  Body b = reflect(Ball(make_vector({1, 2}), 1.0), x_axis(2));
  EXPECT_TRUE(std::get<Ball>(b).center.isApprox(make_vector({1, -2})));
}

TEST(ProjectBody, Examples) {
  std::vector<Vector> corners;
  for (int mask = 0; mask < 8; ++mask) {
    corners.push_back(make_vector({double(mask & 1), double((mask >> 1) & 1), double((mask >> 2) & 1)}));
  }
  Polytope cube = Polytope::hull(corners);
  int axes[] = {0, 1};
  Polytope p = project_body(cube, Subspace::coordinate(3, axes));
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_NEAR(p.relative_volume(), 1.0, 1e-14);
  Polytope seg = Polytope::hull({make_vector({0, 0, -1}), make_vector({0, 0, 1})});
  Polytope o = project_body(seg, Subspace::coordinate(3, axes));
  EXPECT_EQ(o.vertices().size(), 1u);
  EXPECT_LE(o.vertices()[0].norm(), 1e-15);
  EXPECT_LE(hausdorff(project_body(cube, Subspace::full(3)), cube), 1e-15);
}

TEST(ProjectBody, SupportIdentity) {
  RngStream rng(2, 0);
  for (int t = 0; t < 50; ++t) {
    Polytope k = random_polytope(4, 10, rng);
    Subspace h = haar_subspace(4, 2, rng);
    Polytope p = project_body(k, h);
    for (int i = 0; i < 20; ++i) {
      Vector u = h.project(gaussian_vector(4, rng));
      EXPECT_NEAR(p.support(u), k.support(u), 1e-9 * std::max(1.0, u.norm()));
    }
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(square(0, 2), square(0, 1), 0.0));
  EXPECT_FALSE(contains(square(0, 1), square(0, 2), 0.0));
  Polytope k = square(0, 1);
  EXPECT_TRUE(contains(k, k, 0.0));
  EXPECT_EQ(containment_gap(k, k), 0.0);
  EXPECT_NEAR(containment_gap(square(0, 1), square(0, 2)), 1.0, 1e-15);
}

TEST(Contains, BallAndInnerApproximation) {
  Ball b(Vector::Zero(2), 1.0);
  Polytope approx = approximate(b).polytope;
  EXPECT_TRUE(contains(b, approx, 0.0));
  EXPECT_FALSE(contains(approx, b, 0.0));
}

TEST(Contains, LowerDimensionalInner) {
  Polytope seg = Polytope::hull({make_vector({0.2, 0.5}), make_vector({0.8, 0.5})});
  EXPECT_TRUE(contains(square(0, 1), seg, 0.0));
  EXPECT_FALSE(contains(seg, square(0, 1), 1e-9));
}

TEST(Hausdorff, Examples) {
  Polytope k = square(0, 1);
  EXPECT_NEAR(hausdorff(k, k.translated(make_vector({1, 0}))), 1.0, 1e-15);
  EXPECT_EQ(hausdorff(k, k), 0.0);
  EXPECT_NEAR(hausdorff(Ball(Vector::Zero(3), 1.0), Ball(Vector::Zero(3), 2.0)), 1.0, 1e-15);
}

TEST(Hausdorff, IsAMetric) {
  RngStream rng(3, 0);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    Polytope a = random_polytope(n, 7, rng);
    Polytope b = random_polytope(n, 7, rng);
    Polytope c = random_polytope(n, 7, rng);
    EXPECT_EQ(hausdorff(a, b), hausdorff(b, a));
    EXPECT_LE(hausdorff(a, c), hausdorff(a, b) + hausdorff(b, c) + 1e-9);
    EXPECT_GT(hausdorff(a, b), 0.0);
  }
}

TEST(Approximate, CylinderIsExactInThePlane) {
  SphericalCylinder c(x_axis(2), 2.0, 0.5, make_vector({1, 0}));
  PolytopeApproximation a = approximate(c);
  EXPECT_EQ(a.error, 0.0);
  EXPECT_EQ(a.polytope.vertices().size(), 4u);
  EXPECT_NEAR(a.polytope.relative_volume(), 4.0, 1e-14);
  EXPECT_LE(hausdorff(a.polytope, c), 1e-12);
}

TEST(Approximate, BallErrorBound) {
  Ball b(make_vector({1, 1, 1}), 2.0);
  PolytopeApproximation a = approximate(b);
  EXPECT_GT(a.error, 0.0);
  EXPECT_LE(hausdorff(a.polytope, b), a.error + 1e-12);
}

TEST(Translate, KeepsKind) {
  Body b = translate(Ball(Vector::Zero(2), 1.0), make_vector({1, 2}));
  EXPECT_TRUE(std::holds_alternative<Ball>(b));
  Body c = translate(SphericalCylinder(x_axis(2), 1.0, 1.0, Vector::Zero(2)), make_vector({0, 1}));
  EXPECT_NEAR(support(c, make_vector({0, 1})), 2.0, 1e-12);
}
