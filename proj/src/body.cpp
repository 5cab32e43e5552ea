#include "convexsym/body.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace csym {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Matrix reflection_matrix(const Subspace& h) {
  const int n = h.ambient_dim();
  Matrix q = h.basis();
  Matrix r = -Matrix::Identity(n, n);
  if (h.dim() > 0) r += 2.0 * q * q.transpose();
  return r;
}

Subspace mapped_subspace(const Subspace& h, const Matrix& linear) {
  std::vector<Vector> cols;
  for (int k = 0; k < h.dim(); ++k) cols.push_back(linear * h.basis_vector(k));
  return orthonormalize(cols, h.ambient_dim());
}

// Adds both signs of every facet normal and affine-hull normal.
void append_polytope_normals(const Polytope& p, std::vector<Vector>& dirs) {
  if (p.has_facets()) {
    for (const auto& f : p.facets()) dirs.push_back(f.normal);
  }
  const Matrix& an = p.affine_normals();
  for (int c = 0; c < an.cols(); ++c) {
    dirs.push_back(an.col(c));
    dirs.push_back(-an.col(c));
  }
}

}  // namespace

Ball::Ball(Vector c, double r) : center(std::move(c)), radius(r) {
  require_dim(static_cast<int>(center.size()));
  if (!all_finite(center) || !std::isfinite(radius) || radius < 0.0) {
    throw InvalidInput("ball: radius must be finite and nonnegative");
  }
}

SphericalCylinder::SphericalCylinder(Subspace hh, double rr, double ss, Vector xx)
    : h(std::move(hh)), r(rr), s(ss), x(std::move(xx)) {
  if (x.size() != h.ambient_dim()) throw InvalidInput("cylinder: dimension mismatch");
  if (!(r > 0.0) || !(s > 0.0) || !std::isfinite(r) || !std::isfinite(s)) {
    throw InvalidInput("cylinder: radii must be positive");
  }
  if (!all_finite(x) || !h.contains(x, 1e-10)) throw InvalidInput("cylinder: x must lie in H");
}

SpecialForm::SpecialForm(Polytope ll, Subspace hh, double ss)
    : l(std::move(ll)), h(std::move(hh)), s(ss) {
  if (l.ambient_dim() != h.ambient_dim()) throw InvalidInput("special form: dimension mismatch");
  if (!(s > 0.0) || !std::isfinite(s)) throw InvalidInput("special form: s must be positive");
  for (const auto& v : l.vertices()) {
    if (!h.contains(v, 1e-10)) throw InvalidInput("special form: L must lie in H");
  }
}

int ambient_dim(const Body& k) {
  return std::visit(Overloaded{
                        [](const Polytope& p) { return p.ambient_dim(); },
                        [](const Ball& b) { return static_cast<int>(b.center.size()); },
                        [](const SphericalCylinder& c) { return c.h.ambient_dim(); },
                        [](const SpecialForm& f) { return f.h.ambient_dim(); },
                    },
                    k);
}

bool is_polytope(const Body& k) { return std::holds_alternative<Polytope>(k); }

double support(const Body& k, const Vector& u) {
  if (u.size() != ambient_dim(k)) throw InvalidInput("support: dimension mismatch");
  return std::visit(Overloaded{
                        [&](const Polytope& p) { return p.support(u); },
                        [&](const Ball& b) { return b.center.dot(u) + b.radius * u.norm(); },
                        [&](const SphericalCylinder& c) {
                          return c.x.dot(u) + c.r * c.h.project(u).norm() +
                                 c.s * c.h.project_complement(u).norm();
                        },
                        [&](const SpecialForm& f) {
                          return f.l.support(u) + f.s * f.h.project_complement(u).norm();
                        },
                    },
                    k);
}

Body reflect(const Body& k, const Subspace& h) {
  if (h.ambient_dim() != ambient_dim(k)) throw InvalidInput("reflect: dimension mismatch");
  const Matrix r = reflection_matrix(h);
  return std::visit(Overloaded{
                        [&](const Polytope& p) -> Body { return p.mapped(r); },
                        [&](const Ball& b) -> Body { return Ball(r * b.center, b.radius); },
                        [&](const SphericalCylinder& c) -> Body {
                          return SphericalCylinder(mapped_subspace(c.h, r), c.r, c.s, r * c.x);
                        },
                        [&](const SpecialForm& f) -> Body {
                          return SpecialForm(f.l.mapped(r), mapped_subspace(f.h, r), f.s);
                        },
                    },
                    k);
}

Body translate(const Body& k, const Vector& x) {
  return std::visit(Overloaded{
                        [&](const Polytope& p) -> Body { return p.translated(x); },
                        [&](const Ball& b) -> Body { return Ball(b.center + x, b.radius); },
                        [&](const SphericalCylinder& c) -> Body {
                          // Only the H-component moves x; the rest becomes a
                          // translate of the symmetric cylinder.
                          if (c.h.contains(c.x + x, 1e-10)) {
                            return SphericalCylinder(c.h, c.r, c.s, c.x + x);
                          }
                          return approximate(k).polytope.translated(x);
                        },
                        [&](const SpecialForm& f) -> Body {
                          if (f.h.contains(x, 1e-10)) return SpecialForm(f.l.translated(x), f.h, f.s);
                          return approximate(k).polytope.translated(x);
                        },
                    },
                    k);
}

double body_scale(const Body& k) {
  return std::visit(Overloaded{
                        [](const Polytope& p) { return p.circumradius(); },
                        [](const Ball& b) { return b.radius; },
                        [](const SphericalCylinder& c) { return std::hypot(c.r, c.s); },
                        [](const SpecialForm& f) { return f.l.circumradius() + f.s; },
                    },
                    k);
}

Vector reference_point(const Body& k) {
  return std::visit(Overloaded{
                        [](const Polytope& p) { return p.centroid(); },
                        [](const Ball& b) { return b.center; },
                        [](const SphericalCylinder& c) { return c.x; },
                        [](const SpecialForm& f) { return f.l.centroid(); },
                    },
                    k);
}

int default_ball_directions(int k) { return 64 * std::max(1, k); }

PolytopeApproximation approximate(const Body& k, int directions_per_dim) {
  return std::visit(
      Overloaded{
          [](const Polytope& p) { return PolytopeApproximation{p, 0.0}; },
          [&](const Ball& b) {
            const int n = static_cast<int>(b.center.size());
            auto a = approx_ball(n, b.radius, directions_per_dim * n);
            return PolytopeApproximation{a.polytope.translated(b.center), a.error};
          },
          [&](const SphericalCylinder& c) {
            auto in_h = approx_ball(c.h, c.r, directions_per_dim * c.h.dim());
            Subspace perp = c.h.orthogonal_complement();
            auto in_perp = approx_ball(perp, c.s, directions_per_dim * perp.dim());
            return PolytopeApproximation{minkowski_sum(in_h.polytope, in_perp.polytope).translated(c.x),
                                         in_h.error + in_perp.error};
          },
          [&](const SpecialForm& f) {
            Subspace perp = f.h.orthogonal_complement();
            auto in_perp = approx_ball(perp, f.s, directions_per_dim * perp.dim());
            return PolytopeApproximation{minkowski_sum(f.l, in_perp.polytope), in_perp.error};
          },
      },
      k);
}

Polytope project_body(const Body& k, const Subspace& h) {
  if (h.ambient_dim() != ambient_dim(k)) throw InvalidInput("project_body: dimension mismatch");
  if (const auto* b = std::get_if<Ball>(&k)) {
    return approx_ball(h, b->radius, default_ball_directions(h.dim()) * 4)
        .polytope.translated(h.project(b->center));
  }
  const Polytope p = approximate(k).polytope;
  std::vector<Vector> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(h.project(v));
  return Polytope::hull(pts);
}

const std::vector<Vector>& probe_directions(int n) {
  require_dim(n);
  static std::mutex guard;
  static std::map<int, std::vector<Vector>> cache;
  std::lock_guard lock(guard);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  RngStream rng(kProbeSeed, static_cast<std::uint64_t>(n));
  std::vector<Vector> dirs;
  dirs.reserve(kProbeSamples);
  for (int i = 0; i < kProbeSamples; ++i) dirs.push_back(sphere_sample(n, rng));
  return cache.emplace(n, std::move(dirs)).first->second;
}

double containment_gap(const Body& outer, const Body& inner) {
  const int n = ambient_dim(outer);
  if (ambient_dim(inner) != n) throw InvalidInput("contains: dimension mismatch");
  std::vector<Vector> dirs;
  const auto* po = std::get_if<Polytope>(&outer);
  const auto* pi = std::get_if<Polytope>(&inner);
  if (po) append_polytope_normals(*po, dirs);
  if (pi) append_polytope_normals(*pi, dirs);
  if (!po || !pi || !po->has_facets()) {
    const auto& probes = probe_directions(n);
    dirs.insert(dirs.end(), probes.begin(), probes.end());
  }
  double gap = 0.0;
  for (const auto& u : dirs) gap = std::max(gap, support(inner, u) - support(outer, u));
  return gap;
}

bool contains(const Body& outer, const Body& inner, double tol) { return containment_gap(outer, inner) <= tol; }

double hausdorff(const Body& k, const Body& l) {
  const int n = ambient_dim(k);
  if (ambient_dim(l) != n) throw InvalidInput("hausdorff: dimension mismatch");
  std::vector<Vector> dirs;
  if (const auto* p = std::get_if<Polytope>(&k)) append_polytope_normals(*p, dirs);
  if (const auto* p = std::get_if<Polytope>(&l)) append_polytope_normals(*p, dirs);
  for (int i = 0; i < n; ++i) {
    dirs.push_back(unit_vector(n, i));
    dirs.push_back(-unit_vector(n, i));
  }
  const auto& probes = probe_directions(n);
  dirs.insert(dirs.end(), probes.begin(), probes.end());
  double best = 0.0;
  for (const auto& u : dirs) best = std::max(best, std::abs(support(k, u) - support(l, u)));
  return best;
}

}  // namespace csym
