#pragma once

// Concrete constructions with known answers.

#include <cstdint>
#include <vector>

#include "convexsym/body.hpp"
#include "convexsym/core.hpp"
#include "convexsym/harness.hpp"
#include "convexsym/polytope.hpp"

namespace csym {

// Area of a planar polygon from its vertices in angular order.
double shoelace_area(const Polytope& p);

// Equilateral triangle of side a with barycenter o, vertex at angle pi / 2.
Polytope equilateral_triangle(double a, int n = 2);

struct HexagonRatio {
  double triangle_area;
  double hexagon_area;
  double ratio;
};
HexagonRatio hexagon_areas(double a);
double fixture_hexagon_ratio(double a);

struct CylinderConeDefects {
  // Relative defects with V_{j-1}(delta B) taken from the polytope stand-in
  // (exact identities on polytopes).
  double cylinder;
  double cone;
  // Relative defects against the true ball volume kappa_{j-1} delta^{j-1}.
  double cylinder_analytic;
  double cone_analytic;
  // 1 - cos(theta)^{j-1}: what the inscribed stand-in can lose in volume.
  double approximation_bound;
};
CylinderConeDefects fixture_cylinder_cone(int n, int j, double len_i, double delta = 1.0);

double fixture_thmvj_body(int n, double a);

struct ParallelogramRecord {
  double area;
  double expected_area;  // 2a
  bool contains_i;
  bool contains_i_prime;
};
// epsilon' is the x-axis, epsilon has direction (cos angle, sin angle) at
// distance a from o.
ParallelogramRecord fixture_parallelogram(double angle, double dist_a);

// max |h_{M_{o}K}(u) - (h_K(u) + h_K(-u)) / 2| over seeded directions.
double fixture_box_support(const Polytope& k, int directions, RngStream& rng);

PropertyReport fixture_segment_translation(const Subspace& h, int trials, std::uint64_t seed);

struct NaturalPathologicalRecord {
  double defect;     // hausdorff(result, expected ball)
  double residual;   // reported by the extension
  double expected_radius;
  double result_radius;  // max support of the result over the probes
  NaturalExtensionResult extension;
};
// Cube of the given volume at the origin corner; the expected limit is 2 B_K
// when the volume is 1 and B_K when it is below 1.
NaturalPathologicalRecord fixture_natural_pathological(int n, double volume = 1.0, int m_max = 64,
                                                       double tol = 1e-6);

// J = [-w, w] u with u spanning part of H^perp, x = 2h e with e in H.
double fixture_cone_invariance(const Subspace& h, double half_width = 1.0, double height = 1.0);

}  // namespace csym
