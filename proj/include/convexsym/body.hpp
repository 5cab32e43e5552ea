#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "convexsym/core.hpp"
#include "convexsym/polytope.hpp"

namespace csym {

struct Ball {
  Ball(Vector center, double radius);
  Vector center;
  double radius;
};

// (r (B cap H) + x) + s (B cap H^perp) with x in H.
struct SphericalCylinder {
  SphericalCylinder(Subspace h, double r, double s, Vector x);
  Subspace h;
  double r;
  double s;
  Vector x;
};

// L + s (B cap H^perp) with L a polytope inside H.
struct SpecialForm {
  SpecialForm(Polytope l, Subspace h, double s);
  Polytope l;
  Subspace h;
  double s;
};

using Body = std::variant<Polytope, Ball, SphericalCylinder, SpecialForm>;

int ambient_dim(const Body& k);
bool is_polytope(const Body& k);

double support(const Body& k, const Vector& u);
Body reflect(const Body& k, const Subspace& h);
Body translate(const Body& k, const Vector& x);
// Circumradius for polytopes, radius-like size for analytic bodies; the
// reference scale for relative tolerances.
double body_scale(const Body& k);
// A point inside the body.
Vector reference_point(const Body& k);

// Number of unit directions used for polytope stand-ins of k-dimensional
// balls when no count is given.
int default_ball_directions(int k);

struct PolytopeApproximation {
  Polytope polytope;
  double error;  // Hausdorff bound; 0 for polytopes
};

// Inner polytope approximation; polytopes pass through unchanged.
PolytopeApproximation approximate(const Body& k, int directions_per_dim = 64);

Polytope project_body(const Body& k, const Subspace& h);

// Seed of the fixed sphere sample used for containment and Hausdorff probes.
inline constexpr std::uint64_t kProbeSeed = 0x5eed'0f'd1'2ec7ULL;
inline constexpr int kProbeSamples = 1000;

const std::vector<Vector>& probe_directions(int n);

// h_inner <= h_outer + tol on facet normals (polytopes) and the fixed probe
// sample (analytic bodies).
bool contains(const Body& outer, const Body& inner, double tol);
// max(0, sup (h_inner - h_outer)) over the same directions as contains.
double containment_gap(const Body& outer, const Body& inner);

// sup |h_K - h_L| over facet normals of both plus the probe sample.
double hausdorff(const Body& k, const Body& l);

}  // namespace csym
