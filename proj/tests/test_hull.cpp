#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "convexsym/hull.hpp"

using namespace csym;

namespace {

std::vector<Vector> cloud(int d, int count, RngStream& rng) {
  std::vector<Vector> pts;
  for (int i = 0; i < count; ++i) pts.push_back(gaussian_vector(d, rng));
  return pts;
}

std::vector<Vector> cube_corners(int d) {
  std::vector<Vector> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vector v(d);
    for (int k = 0; k < d; ++k) v(k) = (mask >> k) & 1;
    pts.push_back(v);
  }
  return pts;
}

}  // namespace

// The monotone chain is the oracle for quickhull in the plane.
TEST(Hull, QuickhullMatchesMonotoneChain) {
  RngStream rng(1, 0);
  for (int t = 0; t < 100; ++t) {
    auto pts = cloud(2, 5 + t % 40, rng);
    hull::Result a = hull::monotone_chain(pts);
    hull::Result b = hull::quickhull(pts, 2);
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_NEAR(a.volume, b.volume, 1e-12 * std::max(1.0, a.volume));
    EXPECT_EQ(a.facets.size(), b.facets.size());
  }
}

TEST(Hull, CubeFacetsAndVolume) {
  for (int d = 2; d <= 4; ++d) {
    auto pts = cube_corners(d);
    pts.push_back(Vector::Constant(d, 0.5));
    hull::Result r = hull::full_rank_hull(pts, d);
    EXPECT_EQ(static_cast<int>(r.vertices.size()), 1 << d);
    EXPECT_EQ(static_cast<int>(r.facets.size()), 2 * d);
    EXPECT_NEAR(r.volume, 1.0, 1e-12);
  }
}

TEST(Hull, CoplanarPointsOnFacesAreDropped) {
  auto pts = cube_corners(3);
  pts.push_back(Vector::Constant(3, 0.5));
  Vector mid(3);
  mid << 0.5, 0.5, 1.0;
  pts.push_back(mid);
  mid << 0.5, 1.0, 1.0;
  pts.push_back(mid);
  hull::Result r = hull::quickhull(pts, 3);
  EXPECT_EQ(r.vertices.size(), 8u);
  EXPECT_EQ(r.facets.size(), 6u);
}

TEST(Hull, VerticesSatisfyFacets) {
  RngStream rng(2, 0);
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 20; ++t) {
      auto pts = cloud(d, 30, rng);
      hull::Result r = hull::full_rank_hull(pts, d);
      for (const auto& f : r.facets) {
        EXPECT_NEAR(f.normal.norm(), 1.0, 1e-12);
        int touching = 0;
        for (const auto& p : pts) {
          const double slack = f.offset - f.normal.dot(p);
          EXPECT_GE(slack, -1e-9);
          if (std::abs(slack) < 1e-9) ++touching;
        }
        EXPECT_GE(touching, d);
      }
    }
  }
}

TEST(Hull, SimplexVolumes) {
  for (int d = 1; d <= 4; ++d) {
    std::vector<Vector> pts{Vector::Zero(d)};
    for (int k = 0; k < d; ++k) pts.push_back(unit_vector(d, k));
    hull::Result r = hull::full_rank_hull(pts, d);
    double fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    EXPECT_NEAR(r.volume, 1.0 / fact, 1e-14);
    EXPECT_EQ(static_cast<int>(r.facets.size()), d + 1);
  }
}

TEST(Hull, CrossPolytope4) {
  std::vector<Vector> pts;
  for (int k = 0; k < 4; ++k) {
    pts.push_back(unit_vector(4, k));
    pts.push_back(-unit_vector(4, k));
  }
  hull::Result r = hull::quickhull(pts, 4);
  EXPECT_EQ(r.facets.size(), 16u);
  EXPECT_NEAR(r.volume, 16.0 / 24.0, 1e-13);
}

TEST(Hull, CollinearInPlaneDropped) {
  std::vector<Vector> pts{make_vector({0, 0}), make_vector({2, 0}), make_vector({1, 0}), make_vector({0, 1}),
                          make_vector({1, 1}), make_vector({2, 1})};
  hull::Result r = hull::monotone_chain(pts);
  EXPECT_EQ(r.vertices.size(), 4u);
  EXPECT_NEAR(r.volume, 2.0, 1e-14);
}
