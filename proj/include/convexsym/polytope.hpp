#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convexsym/core.hpp"

namespace csym {

struct Halfspace {
  Vector normal;  // unit
  double offset;  // normal . y <= offset
};

// A compact convex polytope stored canonically: extreme vertices sorted
// lexicographically and deduplicated at 1e-12. Facets are computed inside the
// affine hull, so segments and planar polygons embedded in R^n carry facets
// of their own dimension; the affine hull itself is described separately by
// affine_normals(). Facets and volume exist for affine dimension <= 4.
class Polytope {
 public:
  static Polytope hull(std::span<const Vector> points);
  static Polytope hull(std::initializer_list<Vector> points);
  static Polytope point(const Vector& x);
  // Intersection of the half-spaces, which must be bounded with `interior`
  // strictly inside every one of them. Computed by polar duality.
  static Polytope from_halfspaces(std::span<const Halfspace> halfspaces, const Vector& interior);

  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  bool has_facets() const { return affine_dim_ <= 4; }
  // Throws UnsupportedDimension when affine_dim > 4.
  const std::vector<Halfspace>& facets() const;

  const Vector& affine_origin() const { return affine_origin_; }
  const Matrix& affine_basis() const { return affine_basis_; }      // n x d
  const Matrix& affine_normals() const { return affine_normals_; }  // n x (n - d)

  // Volume inside the affine hull (length for segments, 1 for a point).
  double relative_volume() const;
  // Volume as a k-dimensional set: 0 if affine_dim < k.
  double volume_in_dim(int k) const;

  double support(const Vector& u) const;
  Vector centroid() const;  // of the vertex set
  double circumradius() const;  // about the vertex centroid

  bool contains_point(const Vector& y, double tol) const;

  Polytope translated(const Vector& x) const;
  Polytope scaled(double s) const;  // about the origin
  Polytope mapped(const Matrix& linear) const;  // y -> A y, A is n x n

 private:
  Polytope() = default;
  static Polytope from_points(std::vector<Vector> points, int n);

  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Vector> vertices_;
  std::vector<Halfspace> facets_;
  double volume_ = 0.0;
  Vector affine_origin_;
  Matrix affine_basis_;
  Matrix affine_normals_;
};

Polytope convex_hull(std::span<const Vector> points);

// Hull of the pairwise vertex sums.
Polytope minkowski_sum(const Polytope& k, const Polytope& l);

// {t : x + t u in K}, empty when the line misses K.
std::optional<std::pair<double, double>> chord(const Polytope& k, const Vector& x, const Vector& u);

// Deterministic, well-spread unit directions on S^{k-1}: regular polygon for
// k = 2, Fibonacci lattice for k = 3, Halton points through Hopf coordinates
// for k = 4.
std::vector<Vector> direction_set(int k, int count);

struct BallApproximation {
  Polytope polytope;
  double error;  // Hausdorff distance to the true ball, radius (1 - cos theta_max)
};

// Inner polytope approximation of radius (B_2^n cap H) from the direction set
// of the given size, expressed in the ambient coordinates of H.
BallApproximation approx_ball(const Subspace& h, double radius, int directions);
BallApproximation approx_ball(int n, double radius, int directions);

}  // namespace csym
