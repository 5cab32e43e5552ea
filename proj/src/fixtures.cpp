#include "convexsym/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "convexsym/measures.hpp"
#include "convexsym/symmetrizer.hpp"

namespace csym {

namespace {

constexpr double kSegmentTranslationTol = 1e-9;

Vector planar(int n, double x, double y) {
  Vector v = Vector::Zero(n);
  v(0) = x;
  v(1) = y;
  return v;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double shoelace_area(const Polytope& p) {
  if (p.ambient_dim() != 2) throw InvalidInput("shoelace_area: polygon must be planar");
  if (p.affine_dim() < 2) return 0.0;
  const Vector c = p.centroid();
  std::vector<Vector> ring = p.vertices();
  std::sort(ring.begin(), ring.end(), [&](const Vector& a, const Vector& b) {
    return std::atan2(a(1) - c(1), a(0) - c(0)) < std::atan2(b(1) - c(1), b(0) - c(0));
  });
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Vector& a = ring[i];
    const Vector& b = ring[(i + 1) % ring.size()];
    twice += a(0) * b(1) - a(1) * b(0);
  }
  return 0.5 * std::abs(twice);
}

Polytope equilateral_triangle(double a, int n) {
  if (!(a > 0.0)) throw InvalidInput("equilateral_triangle: side must be positive");
  if (n < 2) throw InvalidInput("equilateral_triangle: needs n >= 2");
  const double rho = a / std::sqrt(3.0);
  std::vector<Vector> v;
  for (int k = 0; k < 3; ++k) {
    const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 3;
    v.push_back(planar(n, rho * std::cos(t), rho * std::sin(t)));
  }
  return Polytope::hull(v);
}

HexagonRatio hexagon_areas(double a) {
  const Polytope t = equilateral_triangle(a);
  const double rho = std::sqrt(3.0) * a / 4.0;
  std::vector<Vector> hex;
  for (const auto& v : t.vertices()) {
    hex.push_back(rho * v / v.norm());
    hex.push_back(-rho * v / v.norm());
  }
  HexagonRatio r;
  r.triangle_area = shoelace_area(t);
  r.hexagon_area = shoelace_area(Polytope::hull(hex));
  r.ratio = r.hexagon_area / r.triangle_area;
  return r;
}

double fixture_hexagon_ratio(double a) { return hexagon_areas(a).ratio; }

CylinderConeDefects fixture_cylinder_cone(int n, int j, double len_i, double delta) {
  if (j < 2 || j > n || n > 4) throw InvalidInput("fixture_cylinder_cone: needs 2 <= j <= n <= 4");
  if (!(len_i > 0.0) || !(delta > 0.0)) throw InvalidInput("fixture_cylinder_cone: sizes must be positive");
  const Vector e = unit_vector(n, 0);
  const Polytope segment = Polytope::hull({-0.5 * len_i * e, 0.5 * len_i * e});
  std::vector<int> axes;
  for (int k = 1; k < j; ++k) axes.push_back(k);
  const Subspace base_space = Subspace::coordinate(n, axes);
  const BallApproximation ball = approx_ball(base_space, delta, default_ball_directions(j - 1));

  const Polytope cylinder = minkowski_sum(segment, ball.polytope);
  std::vector<Vector> cone_pts = segment.vertices();
  for (const auto& v : ball.polytope.vertices()) cone_pts.push_back(v + 0.5 * len_i * e);
  const Polytope cone = Polytope::hull(cone_pts);

  const double base = ball.polytope.volume_in_dim(j - 1);
  const double base_true = kappa(j - 1) * std::pow(delta, j - 1);
  const double vk = cylinder.volume_in_dim(j);
  const double vl = cone.volume_in_dim(j);
  CylinderConeDefects d;
  d.cylinder = std::abs(vk - base * len_i) / (base * len_i);
  d.cone = std::abs(vl - base * len_i / j) / (base * len_i / j);
  d.cylinder_analytic = std::abs(vk - base_true * len_i) / (base_true * len_i);
  d.cone_analytic = std::abs(vl - base_true * len_i / j) / (base_true * len_i / j);
  d.approximation_bound = 1.0 - std::pow(1.0 - ball.error / delta, j - 1);
  return d;
}

double fixture_thmvj_body(int n, double a) {
  if (n < 3 || n > 4) throw InvalidInput("fixture_thmvj_body: needs 3 <= n <= 4");
  const Polytope t = equilateral_triangle(a, n);
  std::vector<Vector> pts = t.vertices();
  for (int k = 2; k < n; ++k) {
    pts.push_back(unit_vector(n, k));
    pts.push_back(-unit_vector(n, k));
  }
  const double vk = Polytope::hull(pts).volume_in_dim(n);
  const double area = shoelace_area(equilateral_triangle(a));
  return std::abs(vk - std::pow(2.0, n - 1) / factorial(n) * area) / vk;
}

ParallelogramRecord fixture_parallelogram(double angle, double dist_a) {
  if (!std::isfinite(angle) || !std::isfinite(dist_a) || dist_a < 0.0) {
    throw InvalidInput("fixture_parallelogram: need finite angle and a >= 0");
  }
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (std::abs(s) < 1e-9) throw InvalidInput("fixture_parallelogram: the lines are parallel");
  const Vector d = make_vector({c, s});
  const Vector e = make_vector({1.0, 0.0});
  const Polytope i_prime = Polytope::hull({-0.5 * e, 0.5 * e});
  ParallelogramRecord r;
  Polytope k = Polytope::point(Vector::Zero(2));
  Polytope i = k;
  if (dist_a == 0.0) {
    i = Polytope::hull({-0.5 * d, 0.5 * d});
    k = Polytope::hull({-0.5 * d, 0.5 * d, -0.25 * e, 0.25 * e});
    r.expected_area = std::abs(s) / 4.0;
  } else {
    if (std::abs(c) < 1e-9) throw InvalidInput("fixture_parallelogram: epsilon is orthogonal to epsilon'");
    const Vector a = make_vector({0.0, dist_a / c});
    i = Polytope::hull({a - 0.5 * d, a + 0.5 * d});
    k = Polytope::hull({a - 0.5 * d, a + 0.5 * d, -a + 0.5 * d, -a - 0.5 * d});
    r.expected_area = 2.0 * dist_a;
  }
  r.area = shoelace_area(k);
  r.contains_i = contains(k, i, 1e-12);
  r.contains_i_prime = contains(k, i_prime, 1e-12);
  return r;
}

double fixture_box_support(const Polytope& k, int directions, RngStream& rng) {
  const int n = k.ambient_dim();
  const Polytope m = minkowski_symmetral(k, Subspace(n));
  double worst = 0.0;
  for (int i = 0; i < directions; ++i) {
    const Vector u = sphere_sample(n, rng);
    worst = std::max(worst, std::abs(m.support(u) - 0.5 * (k.support(u) + k.support(-u))));
  }
  return worst;
}

PropertyReport fixture_segment_translation(const Subspace& h, int trials, std::uint64_t seed) {
  const int n = h.ambient_dim();
  if (h.dim() == n) throw ConfigurationError("segment translation needs H^perp != {o}");
  if (trials < 1) throw ConfigurationError("segment translation: trials must be positive");
  const bool with_steiner = h.dim() == n - 1 && n <= 4;
  PropertyReport r;
  r.type = "fixture";
  r.property = "segment_translation";
  r.op = Symmetrizer::minkowski(h);
  r.trials = trials;
  r.seed = seed;
  r.threshold = kSegmentTranslationTol;
  for (int t = 0; t < trials; ++t) {
    RngStream rng(seed, static_cast<std::uint64_t>(t));
    Vector w = h.project_complement(gaussian_vector(n, rng));
    while (w.norm() < 1e-6) w = h.project_complement(gaussian_vector(n, rng));
    w.normalize();
    const Vector p = h.project(gaussian_vector(n, rng));
    const double half = 0.25 + rng.uniform();
    const Polytope j = Polytope::hull({p - half * w, p + half * w});
    const Vector x = 2.0 * h.project_complement(gaussian_vector(n, rng));
    const Polytope moved = j.translated(x);
    double defect = hausdorff(minkowski_symmetral(moved, h), j);
    if (with_steiner) defect = std::max(defect, hausdorff(steiner(moved, h).body, j));
    r.max_violation = std::max(r.max_violation, defect);
    if (!(defect <= kSegmentTranslationTol)) ++r.violations;
  }
  finalize(r);
  return r;
}

NaturalPathologicalRecord fixture_natural_pathological(int n, double volume, int m_max, double tol) {
  if (n < 1 || n > 3) throw InvalidInput("fixture_natural_pathological: needs n <= 3");
  if (!(volume > 0.0)) throw InvalidInput("fixture_natural_pathological: volume must be positive");
  const double side = std::pow(volume, 1.0 / n);
  std::vector<Vector> corners;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int k = 0; k < n; ++k) v(k) = (mask >> k) & 1 ? side : 0.0;
    corners.push_back(v);
  }
  const Polytope cube = Polytope::hull(corners);
  NaturalPathologicalRecord r{0.0, 0.0, 0.0, 0.0,
                              natural_extension(Symmetrizer::pathological(Subspace(n)), cube, m_max, tol)};
  r.expected_radius = equal_volume_radius(n, volume) * (volume >= 1.0 ? 2.0 : 1.0);
  r.defect = hausdorff(r.extension.body, Ball(Vector::Zero(n), r.expected_radius));
  r.residual = r.extension.residual;
  for (const auto& u : probe_directions(n)) r.result_radius = std::max(r.result_radius, r.extension.body.support(u));
  return r;
}

double fixture_cone_invariance(const Subspace& h, double half_width, double height) {
  const int n = h.ambient_dim();
  if (h.dim() < 1 || h.dim() == n || n > 3) {
    throw InvalidInput("fixture_cone_invariance: needs 1 <= dim H < n <= 3");
  }
  const Vector u = h.complement_vector(0);
  const Vector x = 2.0 * height * h.basis_vector(0);
  const Polytope p = Polytope::hull({-half_width * u, half_width * u, x});
  return std::max(hausdorff(reflect(p, h), p), hausdorff(minkowski_symmetral(p, h), p));
}

}  // namespace csym
