#include "convexsym/symmetrizer.hpp"

#include "convexsym/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace csym {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool same_subspace(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
  for (int k = 0; k < a.dim(); ++k) {
    if (!b.contains(a.basis_vector(k), 1e-10)) return false;
  }
  return true;
}

void require_hyperplane(const Subspace& h) {
  if (h.dim() != h.ambient_dim() - 1) {
    throw InvalidInput("steiner: H must be a hyperplane (dim H = n - 1)");
  }
}

// Grid resolution (cells per axis) for Steiner chords above the plane.
int steiner_grid(int n) { return n == 3 ? 24 : 10; }

std::vector<Vector> chord_endpoints(const Polytope& k, const Vector& u, std::span<const Vector> feet) {
  std::vector<Vector> out;
  out.reserve(2 * feet.size());
  for (const auto& x : feet) {
    auto c = chord(k, x, u);
    if (!c) continue;
    double half = 0.5 * (c->second - c->first);
    out.push_back(x + half * u);
    out.push_back(x - half * u);
  }
  return out;
}

int reconstruction_directions(int n) {
  switch (n) {
    case 1: return 2;
    case 2: return 720;
    default: return 4000;
  }
}

}  // namespace

Symmetrizer Symmetrizer::natural(Symmetrizer inner, int m_max, double tol) {
  if (m_max < 1) throw InvalidInput("natural extension: m_max must be at least 1");
  if (!(tol > 0.0)) throw InvalidInput("natural extension: tol must be positive");
  return Symmetrizer(NaturalExtensionOp{std::make_shared<const Symmetrizer>(std::move(inner)), m_max, tol});
}

const Subspace& Symmetrizer::subspace() const {
  return std::visit(Overloaded{
                        [](const SteinerOp& s) -> const Subspace& { return s.h; },
                        [](const MinkowskiOp& s) -> const Subspace& { return s.h; },
                        [](const PathologicalOp& s) -> const Subspace& { return s.h; },
                        [](const NaturalExtensionOp& s) -> const Subspace& { return s.inner->subspace(); },
                    },
                    op_);
}

std::string Symmetrizer::name() const {
  return std::visit(Overloaded{
                        [](const SteinerOp&) { return std::string("steiner"); },
                        [](const MinkowskiOp&) { return std::string("minkowski"); },
                        [](const PathologicalOp&) { return std::string("pathological"); },
                        [](const NaturalExtensionOp& s) { return "natural(" + s.inner->name() + ")"; },
                    },
                    op_);
}

SteinerResult steiner(const Polytope& k, const Subspace& h) {
  const int n = k.ambient_dim();
  if (h.ambient_dim() != n) throw InvalidInput("steiner: dimension mismatch");
  require_hyperplane(h);
  if (n > 4) throw UnsupportedDimension("steiner: ambient dimension above 4");
  const Vector u = h.complement_vector(0);

  std::vector<Vector> feet;
  for (const auto& v : k.vertices()) feet.push_back(h.project(v));
  if (n == 2) return {Polytope::hull(chord_endpoints(k, u, feet)), 0.0, true};

  // Above the plane the chord length is concave but not piecewise affine on
  // a known subdivision; sample a grid over K|H in its own affine frame.
  const Polytope shadow = Polytope::hull(feet);
  const int dp = shadow.affine_dim();
  std::vector<Vector> coarse = feet;
  std::vector<Vector> fine = feet;
  if (dp > 0) {
    const int g = steiner_grid(n);
    const Matrix& basis = shadow.affine_basis();
    const Vector& origin = shadow.affine_origin();
    Vector lo = Vector::Constant(dp, std::numeric_limits<double>::infinity());
    Vector hi = -lo;
    for (const auto& v : shadow.vertices()) {
      Vector local = basis.transpose() * (v - origin);
      lo = lo.cwiseMin(local);
      hi = hi.cwiseMax(local);
    }
    const double tol = 1e-12 * std::max(1.0, shadow.circumradius());
    std::vector<int> idx(dp, 0);
    while (true) {
      Vector local(dp);
      bool even = true;
      for (int a = 0; a < dp; ++a) {
        local(a) = lo(a) + (hi(a) - lo(a)) * idx[a] / g;
        even = even && idx[a] % 2 == 0;
      }
      Vector x = origin + basis * local;
      if (shadow.contains_point(x, tol)) {
        fine.push_back(x);
        if (even) coarse.push_back(x);
      }
      int a = 0;
      while (a < dp && ++idx[a] > g) idx[a++] = 0;
      if (a == dp) break;
    }
  }
  Polytope fine_body = Polytope::hull(chord_endpoints(k, u, fine));
  Polytope coarse_body = Polytope::hull(chord_endpoints(k, u, coarse));
  double error = hausdorff(fine_body, coarse_body);
  return {std::move(fine_body), error, false};
}

Polytope minkowski_symmetral(const Polytope& k, const Subspace& h) {
  if (h.ambient_dim() != k.ambient_dim()) throw InvalidInput("minkowski_symmetral: dimension mismatch");
  const Polytope mirrored = std::get<Polytope>(reflect(k, h));
  return minkowski_sum(k.scaled(0.5), mirrored.scaled(0.5));
}

double minkowski_symmetral_support(const Body& k, const Subspace& h, const Vector& u) {
  return 0.5 * (support(k, u) + support(k, h.reflect(u)));
}

double equal_volume_radius(int n, double volume) {
  if (volume < 0.0) throw InvalidInput("equal_volume_radius: negative volume");
  return std::pow(volume / kappa(n), 1.0 / n);
}

Ball pathological(const Body& k) {
  const int n = ambient_dim(k);
  const double volume = body_volume(k);
  double radius = equal_volume_radius(n, volume);
  if (volume > 1.0) radius *= 2.0;
  return Ball(Vector::Zero(n), radius);
}

NaturalExtensionResult natural_extension(const Symmetrizer& inner, const Body& k, int m_max, double tol) {
  const int n = ambient_dim(k);
  if (n > 3) throw UnsupportedDimension("natural_extension: ambient dimension above 3");
  if (m_max < 1) throw InvalidInput("natural_extension: m_max must be at least 1");
  const BallApproximation unit = approx_ball(n, 1.0, default_ball_directions(n));
  const auto* as_ball = std::get_if<Ball>(&k);
  const Polytope base = as_ball ? Polytope::point(as_ball->center) : approximate(k).polytope;

  NaturalExtensionResult out;
  std::vector<Body> terms;
  terms.reserve(m_max);
  for (int m = 1; m <= m_max; ++m) {
    const double eps = 1.0 / m;
    Body perturbed = as_ball ? Body(Ball(as_ball->center, as_ball->radius + eps))
                             : Body(minkowski_sum(base, unit.polytope.scaled(eps)));
    terms.push_back(csym::apply(inner, perturbed));
    out.achieved_m = m;
    if (m >= 2) {
      const Body& prev = terms[m - 2];
      const Body& cur = terms[m - 1];
      double step = hausdorff(prev, cur);
      out.step_history.push_back(step);
      if (!contains(prev, cur, 1e-7 * std::max(1.0, body_scale(prev)))) out.monotone = false;
      if (step < tol) break;
    }
  }
  const int m_final = out.achieved_m;
  const Body& last = terms.back();
  if (m_final >= 2) {
    out.tail_estimate = hausdorff(terms[(m_final + 1) / 2 - 1], last);
  } else {
    out.tail_estimate = 1.0;
  }
  out.ball_error = unit.error / m_final;

  // Intersection as the polytope of the pointwise-minimum support.
  std::vector<Vector> dirs = direction_set(n, reconstruction_directions(n));
  if (const auto* p = std::get_if<Polytope>(&last)) {
    if (p->affine_dim() < n) {
      throw InternalError("natural_extension: inner operator returned a degenerate body");
    }
    for (const auto& f : p->facets()) dirs.push_back(f.normal);
  }
  auto min_support = [&](const Vector& u) {
    if (out.monotone) return support(last, u);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : terms) best = std::min(best, support(t, u));
    return best;
  };
  std::vector<Halfspace> halfspaces;
  halfspaces.reserve(dirs.size());
  for (const auto& u : dirs) halfspaces.push_back({u, min_support(u)});
  const Vector center = reference_point(last);
  try {
    out.body = Polytope::from_halfspaces(halfspaces, center);
  } catch (const InvalidInput& e) {
    throw InternalError(std::string("natural_extension: cannot reconstruct intersection: ") + e.what());
  }
  double recon = 0.0;
  for (const auto& u : probe_directions(n)) recon = std::max(recon, out.body.support(u) - min_support(u));
  out.reconstruction_error = std::max(0.0, recon);
  out.residual = out.tail_estimate + out.ball_error + out.reconstruction_error;
  return out;
}

SymmetrizeResult apply_reported(const Symmetrizer& op, const Body& k) {
  const int n = ambient_dim(k);
  if (op.subspace().ambient_dim() != n) throw InvalidInput("apply: operator and body dimensions differ");
  return std::visit(
      Overloaded{
          [&](const SteinerOp& s) -> SymmetrizeResult {
            require_hyperplane(s.h);
            if (const auto* b = std::get_if<Ball>(&k)) {
              return {Ball(s.h.project(b->center), b->radius), 0.0, std::nullopt};
            }
            PolytopeApproximation a = approximate(k);
            SteinerResult r = steiner(a.polytope, s.h);
            return {std::move(r.body), r.error + a.error, std::nullopt};
          },
          [&](const MinkowskiOp& s) -> SymmetrizeResult {
            if (const auto* p = std::get_if<Polytope>(&k)) {
              return {minkowski_symmetral(*p, s.h), 0.0, std::nullopt};
            }
            if (const auto* b = std::get_if<Ball>(&k)) {
              return {Ball(s.h.project(b->center), b->radius), 0.0, std::nullopt};
            }
            if (const auto* c = std::get_if<SphericalCylinder>(&k); c && same_subspace(c->h, s.h)) {
              return {*c, 0.0, std::nullopt};
            }
            if (const auto* f = std::get_if<SpecialForm>(&k); f && same_subspace(f->h, s.h)) {
              return {SpecialForm(minkowski_symmetral(f->l, s.h), f->h, f->s), 0.0, std::nullopt};
            }
            PolytopeApproximation a = approximate(k);
            return {minkowski_symmetral(a.polytope, s.h), a.error, std::nullopt};
          },
          [&](const PathologicalOp&) -> SymmetrizeResult { return {pathological(k), 0.0, std::nullopt}; },
          [&](const NaturalExtensionOp& s) -> SymmetrizeResult {
            NaturalExtensionResult r = natural_extension(*s.inner, k, s.m_max, s.tol);
            double err = r.residual;
            Body body = r.body;
            return {std::move(body), err, std::move(r)};
          },
      },
      op.op());
}

Body apply(const Symmetrizer& op, const Body& k) { return apply_reported(op, k).body; }

}  // namespace csym
