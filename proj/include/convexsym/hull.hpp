#pragma once

// Convex hulls of full-rank point sets in R^d, 1 <= d <= 4. Callers reduce to
// the affine hull first (see Polytope); these routines assume the input
// affinely spans R^d.

#include <span>
#include <vector>

#include "convexsym/core.hpp"

namespace csym::hull {

inline constexpr int kMaxHullDim = 4;
// Facets whose unit normals differ by less than this (max-norm) are one facet.
inline constexpr double kNormalMergeTol = 1e-9;

struct Facet {
  Vector normal;  // unit, outward
  double offset;  // normal . y <= offset
};

struct Result {
  std::vector<int> vertices;  // indices of extreme input points, ascending
  std::vector<Facet> facets;  // merged, one per supporting hyperplane
  double volume = 0.0;        // d-dimensional volume
};

// Dispatches on d: interval for d = 1, monotone chain for d = 2, quickhull
// for d = 3, 4.
Result full_rank_hull(std::span<const Vector> points, int d);

// Andrew's monotone chain. Collinear points are dropped.
Result monotone_chain(std::span<const Vector> points);

// Beneath-beyond quickhull with outside sets over simplicial facets; valid
// for any 2 <= d <= 4.
Result quickhull(std::span<const Vector> points, int d);

}  // namespace csym::hull
