#include "convexsym/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convexsym/measures.hpp"

namespace csym {

namespace {

struct TrialOutcome {
  double defect = 0.0;
  double limit = 0.0;
};

const Subspace& require_subspace(const BodyGenerator& gen) {
  if (!gen.h) throw ConfigurationError("generator '" + gen.name() + "' needs a subspace");
  if (gen.h->ambient_dim() != gen.n) throw ConfigurationError("generator subspace has the wrong dimension");
  return *gen.h;
}

std::vector<Vector> gaussian_cloud(int n, int count, double scale, RngStream& rng) {
  std::vector<Vector> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) pts.push_back(scale * gaussian_vector(n, rng));
  return pts;
}

Polytope full_dimensional_hull(int n, int count, double scale, RngStream& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Polytope p = Polytope::hull(gaussian_cloud(n, count, scale, rng));
    if (p.affine_dim() == n) return p;
  }
  throw InternalError("random_hull: could not draw a full-dimensional hull");
}

double relative(double defect, double scale) { return defect / std::max(scale, 1e-12); }

// Relative defect for exact comparisons, z-score for Monte Carlo ones.
TrialOutcome compare_estimates(const MeasureEstimate& a, const MeasureEstimate& b, double tol) {
  const double se = std::hypot(a.std_error, b.std_error);
  if (se > 0.0) return {std::abs(a.value - b.value) / se, 3.0};
  return {relative(std::abs(a.value - b.value), std::abs(b.value)), tol};
}

MeasureEstimate measure(const Body& k, int j, std::int64_t samples, const RngStream& rng) {
  const int n = ambient_dim(k);
  if (j == n) return {body_volume(k), 0.0, 0, Method::exact};
  if (j == 1) return v1(k, samples, rng);
  return intrinsic_volume(k, j, samples, rng);
}

TrialOutcome run_trial(const Symmetrizer& op, const Property& prop, const BodyGenerator& gen, RngStream& rng,
                       double tol, std::int64_t samples) {
  const Subspace& h = op.subspace();
  const Instance inst = generate(gen, rng);
  const Body& k = inst.k;
  const double scale = body_scale(k);
  using K = Property::Kind;
  switch (prop.kind) {
    case K::monotonic:
    case K::strictly_monotonic: {
      if (!inst.outer) throw ConfigurationError("monotonicity needs the nested_pair generator");
      const Body a = csym::apply(op, k);
      const Body b = csym::apply(op, *inst.outer);
      double defect = relative(containment_gap(b, a), body_scale(*inst.outer));
      if (prop.kind == K::strictly_monotonic && body_volume(k) < body_volume(*inst.outer) &&
          !(body_volume(a) < body_volume(b))) {
        defect += 1.0;
      }
      return {defect, tol};
    }
    case K::idempotent: {
      const Body a = csym::apply(op, k);
      return {relative(hausdorff(csym::apply(op, a), a), scale), tol};
    }
    case K::sym_invariant:
      if (gen.kind != BodyGenerator::Kind::h_symmetric) {
        throw ConfigurationError("sym_invariant needs the h_symmetric generator");
      }
      return {relative(hausdorff(csym::apply(op, k), k), scale), tol};
    case K::cylinder_invariant: {
      const auto* c = std::get_if<SphericalCylinder>(&k);
      if (!c) throw ConfigurationError("cylinder_invariant needs the cylinder generator");
      if (std::holds_alternative<MinkowskiOp>(op.op())) {
        std::vector<Vector> dirs = probe_directions(gen.n);
        for (int i = 0; i < gen.n; ++i) dirs.push_back(unit_vector(gen.n, i));
        double worst = 0.0;
        for (const auto& u : dirs) {
          worst = std::max(worst, std::abs(minkowski_symmetral_support(k, h, u) - support(k, u)));
        }
        return {relative(worst, scale), tol};
      }
      const PolytopeApproximation p = approximate(k);
      const SymmetrizeResult r = apply_reported(op, p.polytope);
      return {relative(hausdorff(r.body, k), scale), tol + relative(p.error + r.error, scale)};
    }
    case K::projection_invariant: {
      const Body a = csym::apply(op, k);
      return {relative(hausdorff(project_body(a, h), project_body(k, h)), scale), tol};
    }
    case K::measure_preserving: {
      if (prop.j < 1 || prop.j > gen.n) throw ConfigurationError("measure_preserving: j outside [1, n]");
      const Body a = csym::apply(op, k);
      const RngStream mc = rng.split(0x6d63);
      return compare_estimates(measure(a, prop.j, samples, mc), measure(k, prop.j, samples, mc), tol);
    }
    case K::translation_invariant: {
      const Vector x = scale * h.project_complement(gaussian_vector(gen.n, rng));
      return {relative(hausdorff(csym::apply(op, translate(k, x)), csym::apply(op, k)), scale), tol};
    }
    case K::symmetric_output: {
      const Body a = csym::apply(op, k);
      return {relative(hausdorff(a, reflect(a, h)), scale), tol};
    }
    case K::segment_to_segment: {
      if (gen.kind != BodyGenerator::Kind::segment_in) {
        throw ConfigurationError("segment_to_segment needs the segment_in generator");
      }
      const Body a = csym::apply(op, k);
      const auto* p = std::get_if<Polytope>(&a);
      return {p && p->affine_dim() <= 1 ? 0.0 : 1.0, tol};
    }
  }
  throw InternalError("unknown property");
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

void finalize(PropertyReport& r) { r.verdict = r.violations == 0 ? Verdict::pass : Verdict::fail; }

std::string Property::name() const {
  switch (kind) {
    case Kind::monotonic: return "monotonic";
    case Kind::strictly_monotonic: return "strictly_monotonic";
    case Kind::idempotent: return "idempotent";
    case Kind::sym_invariant: return "sym_invariant";
    case Kind::cylinder_invariant: return "cylinder_invariant";
    case Kind::projection_invariant: return "projection_invariant";
    case Kind::measure_preserving: return "measure_preserving(" + std::to_string(j) + ")";
    case Kind::translation_invariant: return "translation_invariant";
    case Kind::symmetric_output: return "symmetric_output";
    case Kind::segment_to_segment: return "segment_to_segment";
  }
  return "unknown";
}

Property Property::parse(const std::string& s) {
  static const std::pair<const char*, Kind> plain[] = {
      {"monotonic", Kind::monotonic},
      {"strictly_monotonic", Kind::strictly_monotonic},
      {"idempotent", Kind::idempotent},
      {"sym_invariant", Kind::sym_invariant},
      {"cylinder_invariant", Kind::cylinder_invariant},
      {"projection_invariant", Kind::projection_invariant},
      {"translation_invariant", Kind::translation_invariant},
      {"symmetric_output", Kind::symmetric_output},
      {"segment_to_segment", Kind::segment_to_segment},
  };
  for (const auto& [name, kind] : plain) {
    if (s == name) return {kind, 0};
  }
  const std::string prefix = "measure_preserving(";
  if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size() + 1 && s.back() == ')') {
    const std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return {Kind::measure_preserving, std::stoi(digits)};
    }
  }
  throw ConfigurationError("unknown property '" + s + "'");
}

std::string BodyGenerator::name() const {
  switch (kind) {
    case Kind::random_hull: return "random_hull";
    case Kind::nested_pair: return "nested_pair";
    case Kind::h_symmetric: return "h_symmetric";
    case Kind::segment_in: return "segment_in";
    case Kind::cylinder: return "cylinder";
  }
  return "unknown";
}

Instance generate(const BodyGenerator& gen, RngStream& rng) {
  require_dim(gen.n);
  if (gen.points < 1) throw ConfigurationError("generator needs at least one point");
  const int n = gen.n;
  using K = BodyGenerator::Kind;
  switch (gen.kind) {
    case K::random_hull:
      return {full_dimensional_hull(n, gen.points, gen.scale, rng), std::nullopt};
    case K::nested_pair: {
      std::vector<Vector> pts;
      Polytope inner = Polytope::point(Vector::Zero(n));
      for (int attempt = 0;; ++attempt) {
        pts = gaussian_cloud(n, gen.points, gen.scale, rng);
        inner = Polytope::hull(pts);
        if (inner.affine_dim() == n) break;
        if (attempt == 15) throw InternalError("nested_pair: could not draw a full-dimensional hull");
      }
      auto extra = gaussian_cloud(n, std::max(1, gen.points / 2), 1.5 * gen.scale, rng);
      pts.insert(pts.end(), extra.begin(), extra.end());
      return {std::move(inner), Body(Polytope::hull(pts))};
    }
    case K::h_symmetric: {
      const Subspace& h = require_subspace(gen);
      int half = std::max(1, gen.points / 2);
      for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Vector> pts = gaussian_cloud(n, half, gen.scale, rng);
        for (int i = 0; i < half; ++i) pts.push_back(h.reflect(pts[i]));
        Polytope p = Polytope::hull(pts);
        if (p.affine_dim() == n) return {std::move(p), std::nullopt};
      }
      throw InternalError("h_symmetric: could not draw a full-dimensional hull");
    }
    case K::segment_in: {
      const Subspace& h = require_subspace(gen);
      if (h.dim() == n) throw ConfigurationError("segment_in needs H^perp != {o}");
      Vector w = h.project_complement(gaussian_vector(n, rng));
      while (w.norm() < 1e-6) w = h.project_complement(gaussian_vector(n, rng));
      w.normalize();
      const Vector c = gen.scale * gaussian_vector(n, rng);
      const double half = gen.scale * (0.25 + rng.uniform());
      return {Polytope::hull({c - half * w, c + half * w}), std::nullopt};
    }
    case K::cylinder: {
      const Subspace& h = require_subspace(gen);
      if (h.dim() == 0 || h.dim() == n) throw ConfigurationError("cylinder needs 0 < dim H < n");
      const Vector x = gen.scale * h.project(gaussian_vector(n, rng));
      const double r = gen.scale * (0.5 + rng.uniform());
      const double s = gen.scale * (0.5 + rng.uniform());
      return {SphericalCylinder(h, r, s, x), std::nullopt};
    }
  }
  throw InternalError("unknown generator");
}

PropertyReport check_property(const Symmetrizer& op, const Property& property, const BodyGenerator& gen,
                              int trials, double tol, std::int64_t samples) {
  if (trials < 1) throw ConfigurationError("check_property: trials must be positive");
  if (!(tol > 0.0)) throw ConfigurationError("check_property: tol must be positive");
  if (op.subspace().ambient_dim() != gen.n) {
    throw ConfigurationError("check_property: operator and generator dimensions differ");
  }
  if (std::holds_alternative<SteinerOp>(op.op()) && gen.n > 2 &&
      (property.kind == Property::Kind::measure_preserving || property.kind == Property::Kind::idempotent)) {
    // Above the plane the Steiner symmetral is approximate; these checks
    // would only measure the grid.
    throw ConfigurationError("check_property: " + property.name() + " for Steiner needs n = 2");
  }
  PropertyReport report;
  report.property = property.name();
  report.op = op;
  report.trials = trials;
  report.seed = gen.seed;
  for (int t = 0; t < trials; ++t) {
    RngStream rng(gen.seed, static_cast<std::uint64_t>(t));
    const TrialOutcome o = run_trial(op, property, gen, rng, tol, samples);
    report.threshold = std::max(report.threshold, o.limit);
    report.max_violation = std::max(report.max_violation, o.defect);
    if (!(o.defect <= o.limit)) ++report.violations;
  }
  finalize(report);
  return report;
}

}  // namespace csym
