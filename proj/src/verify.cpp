#include "convexsym/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "convexsym/fixtures.hpp"
#include "convexsym/measures.hpp"
#include "convexsym/symmetrizer.hpp"

namespace csym {

namespace {

constexpr double kExactMeasureTol = 1e-9;

Subspace axes(int n, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return Subspace::coordinate(n, v);
}

BodyGenerator make_gen(BodyGenerator::Kind kind, int n, std::uint64_t seed, std::optional<Subspace> h = std::nullopt,
                       double scale = 1.0) {
  BodyGenerator g;
  g.kind = kind;
  g.n = n;
  g.seed = seed;
  g.h = std::move(h);
  g.scale = scale;
  return g;
}

PropertyReport fixture(const std::string& name, double defect, double threshold, std::uint64_t seed = 0,
                       std::optional<double> value = std::nullopt) {
  PropertyReport r;
  r.type = "fixture";
  r.property = name;
  r.trials = 1;
  r.max_violation = std::max(0.0, defect);
  r.threshold = threshold;
  r.seed = seed;
  r.value = value;
  r.violations = defect <= threshold ? 0 : 1;
  finalize(r);
  return r;
}

// Steiner and Minkowski share the property list; only the measure differs.
void operator_suite(std::vector<PropertyReport>& out, const Symmetrizer& op, int n, int measure_j, bool exact_measure,
                    bool with_cylinder, const RunConfig& cfg) {
  using K = BodyGenerator::Kind;
  using P = Property::Kind;
  const Subspace& h = op.subspace();
  out.push_back(check_property(op, {P::monotonic}, make_gen(K::nested_pair, n, cfg.seed), cfg.trials, cfg.tol));
  out.push_back(check_property(op, {P::idempotent}, make_gen(K::random_hull, n, cfg.seed), cfg.trials, cfg.tol));
  out.push_back(
      check_property(op, {P::projection_invariant}, make_gen(K::random_hull, n, cfg.seed), cfg.trials, cfg.tol));
  out.push_back(check_property(op, {P::sym_invariant}, make_gen(K::h_symmetric, n, cfg.seed, h), cfg.trials, cfg.tol));
  if (with_cylinder) {
    out.push_back(
        check_property(op, {P::cylinder_invariant}, make_gen(K::cylinder, n, cfg.seed, h), cfg.trials, cfg.tol));
  }
  out.push_back(check_property(op, {P::measure_preserving, measure_j}, make_gen(K::random_hull, n, cfg.seed),
                               cfg.trials, exact_measure ? kExactMeasureTol : cfg.tol, cfg.samples));
  out.push_back(
      check_property(op, {P::translation_invariant}, make_gen(K::random_hull, n, cfg.seed), cfg.trials, cfg.tol));
  out.push_back(check_property(op, {P::symmetric_output}, make_gen(K::random_hull, n, cfg.seed), cfg.trials, cfg.tol));
  out.push_back(
      check_property(op, {P::segment_to_segment}, make_gen(K::segment_in, n, cfg.seed, h), cfg.trials, cfg.tol));
}

double pathological_radius(int n, double volume) {
  return equal_volume_radius(n, volume) * (volume > 1.0 ? 2.0 : 1.0);
}

PropertyReport series(const std::string& name, const std::string& x, const std::string& y,
                      std::vector<std::array<double, 2>> pts, double value, bool ok, std::uint64_t seed) {
  PropertyReport r;
  r.type = "series";
  r.property = name;
  r.trials = 1;
  r.seed = seed;
  r.x_label = x;
  r.y_label = y;
  r.series = std::move(pts);
  r.value = value;
  r.violations = ok ? 0 : 1;
  r.max_violation = ok ? 0.0 : 1.0;
  finalize(r);
  return r;
}

// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<std::array<double, 2>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pts.size());
  for (const auto& p : pts) {
    const double lx = std::log(p[0]);
    const double ly = std::log(p[1]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Polytope box(std::span<const double> sides) {
  const int n = static_cast<int>(sides.size());
  std::vector<Vector> corners;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int k = 0; k < n; ++k) v(k) = (mask >> k) & 1 ? sides[k] : 0.0;
    corners.push_back(v);
  }
  return Polytope::hull(corners);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.samples < 100) throw ConfigurationError("samples must be at least 100");
  if (!(cfg.tol > 0.0)) throw ConfigurationError("tol must be positive");
  if (cfg.m_max < 1) throw ConfigurationError("m_max must be at least 1");
  if (cfg.trials < 1) throw ConfigurationError("trials must be positive");
}

Suite parse_suite(const std::string& s) {
  if (s == "core") return Suite::core;
  if (s == "fixtures") return Suite::fixtures;
  if (s == "all") return Suite::all;
  throw ConfigurationError("unknown suite '" + s + "' (core, fixtures, all)");
}

BodyGenerator pathological_large_generator(std::uint64_t seed) {
  BodyGenerator g = make_gen(BodyGenerator::Kind::random_hull, 2, seed, std::nullopt, 3.0);
  g.points = 12;
  return g;
}

BodyGenerator pathological_projection_generator(std::uint64_t seed) {
  return make_gen(BodyGenerator::Kind::random_hull, 2, seed);
}

double predicted_pathological_idempotence_defect(const BodyGenerator& gen, int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    RngStream rng(gen.seed, static_cast<std::uint64_t>(t));
    const Instance inst = generate(gen, rng);
    const int n = gen.n;
    const double once = pathological_radius(n, body_volume(inst.k));
    const double twice = pathological_radius(n, kappa(n) * std::pow(once, n));
    worst = std::max(worst, std::abs(twice - once) / body_scale(inst.k));
  }
  return worst;
}

double predicted_pathological_projection_defect(const BodyGenerator& gen, int trials) {
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    RngStream rng(gen.seed, static_cast<std::uint64_t>(t));
    const Instance inst = generate(gen, rng);
    const auto& p = std::get<Polytope>(inst.k);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v(0));
      hi = std::max(hi, v(0));
    }
    const double radius = pathological_radius(gen.n, body_volume(inst.k));
    worst = std::max(worst, std::max(std::abs(hi - radius), std::abs(lo + radius)) / body_scale(inst.k));
  }
  return worst;
}

std::vector<PropertyReport> core_suite(const RunConfig& cfg) {
  validate(cfg);
  std::vector<PropertyReport> out;
  operator_suite(out, Symmetrizer::steiner(axes(2, {0})), 2, 2, true, true, cfg);
  operator_suite(out, Symmetrizer::minkowski(axes(2, {0})), 2, 1, true, true, cfg);
  operator_suite(out, Symmetrizer::minkowski(Subspace(2)), 2, 1, true, false, cfg);
  operator_suite(out, Symmetrizer::minkowski(axes(3, {0})), 3, 1, false, true, cfg);
  operator_suite(out, Symmetrizer::minkowski(axes(3, {0, 1})), 3, 1, false, true, cfg);

  using K = BodyGenerator::Kind;
  using P = Property::Kind;
  const Symmetrizer path = Symmetrizer::pathological(axes(2, {0}));
  const int spot = std::min(cfg.trials, 50);
  PropertyReport idem = check_property(path, {P::idempotent}, pathological_large_generator(cfg.seed), spot, cfg.tol);
  idem.expected = Verdict::fail;
  out.push_back(idem);
  PropertyReport proj =
      check_property(path, {P::projection_invariant}, pathological_projection_generator(cfg.seed), spot, cfg.tol);
  proj.expected = Verdict::fail;
  out.push_back(proj);
  out.push_back(check_property(path, {P::strictly_monotonic}, make_gen(K::nested_pair, 2, cfg.seed), spot, cfg.tol));
  out.push_back(check_property(path, {P::symmetric_output}, make_gen(K::random_hull, 2, cfg.seed), spot, cfg.tol));

  out.push_back(kubota_box_check(3, cfg.seed, cfg.samples));
  out.push_back(segment_v1_check(1.5, cfg.seed, cfg.samples));
  return out;
}

std::vector<PropertyReport> fixture_suite(const RunConfig& cfg) {
  validate(cfg);
  std::vector<PropertyReport> out;
  for (double a : {1.0, 2.0}) {
    const HexagonRatio h = hexagon_areas(a);
    double defect = std::abs(h.ratio - 9.0 / 8.0);
    if (!(h.hexagon_area > h.triangle_area)) defect = 1.0;
    out.push_back(fixture("hexagon_ratio(a=" + std::to_string(static_cast<int>(a)) + ")", defect, 1e-12, 0, h.ratio));
  }
  {
    const CylinderConeDefects d = fixture_cylinder_cone(3, 2, 2.0);
    out.push_back(fixture("cylinder_identity(n=3,j=2)", d.cylinder, 1e-9));
    out.push_back(fixture("cone_identity(n=3,j=2)", d.cone, 1e-9));
    const CylinderConeDefects e = fixture_cylinder_cone(4, 3, 2.0);
    out.push_back(fixture("cylinder_identity(n=4,j=3)", std::max(e.cylinder, e.cone), 1e-9));
    out.push_back(
        fixture("cylinder_cone_ball(n=4,j=3)", std::max(e.cylinder_analytic, e.cone_analytic), e.approximation_bound));
  }
  out.push_back(fixture("thmvj_body(n=3)", fixture_thmvj_body(3, 1.0), 1e-9));
  out.push_back(fixture("thmvj_body(n=4)", fixture_thmvj_body(4, 1.0), 1e-9));
  out.push_back(fixture("thmvj_body(n=3,a=2)", fixture_thmvj_body(3, 2.0), 1e-9));
  out.push_back(parallelogram_check(20, cfg.seed));
  {
    RngStream rng(cfg.seed, 1);
    const Polytope tri = Polytope::hull({gaussian_vector(2, rng), gaussian_vector(2, rng), gaussian_vector(2, rng)});
    out.push_back(fixture("box_support(triangle)", fixture_box_support(tri, 100, rng), 1e-9, cfg.seed));
    const std::array<double, 3> sides{1.0, 2.0, 0.5};
    const Polytope centered = box(sides).translated(make_vector({-0.5, -1.0, -0.25}));
    out.push_back(fixture("box_support(o-symmetric)", fixture_box_support(centered, 100, rng), 1e-10, cfg.seed));
  }
  out.push_back(fixture_segment_translation(Subspace(2), cfg.trials, cfg.seed));
  out.push_back(fixture_segment_translation(axes(2, {0}), cfg.trials, cfg.seed));
  out.push_back(fixture_segment_translation(axes(3, {0, 1}), cfg.trials, cfg.seed));

  const NaturalPathologicalRecord ne2 = fixture_natural_pathological(2, 1.0, cfg.m_max);
  for (const auto& [n, volume] : std::vector<std::pair<int, double>>{{2, 1.0}, {3, 1.0}, {2, 0.5}}) {
    const NaturalPathologicalRecord r = n == 2 && volume == 1.0 ? ne2 : fixture_natural_pathological(n, volume, cfg.m_max);
    PropertyReport rec = fixture("natural_pathological(n=" + std::to_string(n) + ",V=" +
                                     (volume == 1.0 ? std::string("1") : std::string("0.5")) + ")",
                                 r.defect, r.residual + 1e-3, 0, r.result_radius);
    rec.op = Symmetrizer::natural(Symmetrizer::pathological(Subspace(n)), cfg.m_max);
    out.push_back(rec);
  }
  out.push_back(fixture("cone_invariance(n=2)", fixture_cone_invariance(axes(2, {0}), 1.0, 1.0), 1e-10));
  out.push_back(fixture("cone_invariance(n=3)", fixture_cone_invariance(axes(3, {0}), 1.0, 1.0), 1e-10));

  {
    std::vector<std::array<double, 2>> pts;
    const auto& h = ne2.extension.step_history;
    bool decreasing = !h.empty();
    for (std::size_t i = 0; i < h.size(); ++i) {
      pts.push_back({static_cast<double>(i + 2), h[i]});
      if (i > 0 && !(h[i] <= h[i - 1])) decreasing = false;
    }
    out.push_back(series("ne-convergence", "m", "hausdorff(A_{m-1}, A_m)", std::move(pts), ne2.residual, decreasing, 0));
  }
  {
    const std::array<double, 3> unit{1.0, 1.0, 1.0};
    const Polytope cube = box(unit);
    std::vector<std::array<double, 2>> pts;
    for (std::int64_t s = 1000; s <= 128000; s *= 2) {
      const MeasureEstimate e = mean_width_mc(cube, s, RngStream(cfg.seed, 0x3c));
      pts.push_back({static_cast<double>(s), e.std_error});
    }
    const double slope = log_log_slope(pts);
    out.push_back(series("mc-error", "samples", "std_error", std::move(pts), slope, std::abs(slope + 0.5) < 0.1,
                         cfg.seed));
  }
  return out;
}

std::vector<PropertyReport> run_suite(Suite suite, const RunConfig& cfg) {
  std::vector<PropertyReport> out;
  if (suite != Suite::fixtures) out = core_suite(cfg);
  if (suite != Suite::core) {
    auto f = fixture_suite(cfg);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

bool all_as_expected(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const PropertyReport& r) { return r.as_expected(); });
}

PropertyReport kubota_box_check(int boxes, std::uint64_t seed, std::int64_t samples) {
  PropertyReport r;
  r.type = "fixture";
  r.property = "kubota_box";
  r.seed = seed;
  r.threshold = 3.0;
  for (int b = 0; b < boxes; ++b) {
    RngStream rng(seed, 0x4b00 + static_cast<std::uint64_t>(b));
    const int n = 2 + b % 3;
    std::vector<double> sides;
    for (int k = 0; k < n; ++k) sides.push_back(0.5 + 1.5 * rng.uniform());
    const Polytope p = box(sides);
    for (int j = 1; j <= n; ++j) {
      const MeasureEstimate e = intrinsic_volume(p, j, samples, rng.split(static_cast<std::uint64_t>(j)));
      const double oracle = box_intrinsic_oracle(sides, j);
      double score = 0.0;
      bool bad = false;
      if (e.std_error > 0.0) {
        score = std::abs(e.value - oracle) / e.std_error;
        bad = score > 3.0;
      } else {
        bad = std::abs(e.value - oracle) > kExactMeasureTol * oracle;
      }
      ++r.trials;
      r.max_violation = std::max(r.max_violation, score);
      if (bad) ++r.violations;
    }
  }
  finalize(r);
  return r;
}

PropertyReport segment_v1_check(double length, std::uint64_t seed, std::int64_t samples) {
  PropertyReport r;
  r.type = "fixture";
  r.property = "segment_v1_dimension_free";
  r.seed = seed;
  r.threshold = 3.0;
  std::vector<MeasureEstimate> est;
  for (int n = 2; n <= 4; ++n) {
    Vector d = Vector::Ones(n).normalized();
    const Polytope seg = Polytope::hull({Vector::Zero(n), length * d});
    est.push_back(intrinsic_volume(seg, 1, samples, RngStream(seed, 0x5e60 + static_cast<std::uint64_t>(n))));
  }
  auto score = [&](double a, double b, double se) {
    ++r.trials;
    const double z = se > 0.0 ? std::abs(a - b) / se : (std::abs(a - b) > 1e-12 ? 1e9 : 0.0);
    r.max_violation = std::max(r.max_violation, z);
    if (z > 3.0) ++r.violations;
  };
  for (std::size_t a = 0; a < est.size(); ++a) {
    score(est[a].value, length, est[a].std_error);
    for (std::size_t b = a + 1; b < est.size(); ++b) {
      score(est[a].value, est[b].value, std::hypot(est[a].std_error, est[b].std_error));
    }
  }
  r.value = est.front().value;
  finalize(r);
  return r;
}

PropertyReport parallelogram_check(int pairs, std::uint64_t seed) {
  PropertyReport r;
  r.type = "fixture";
  r.property = "parallelogram";
  r.seed = seed;
  r.trials = pairs;
  r.threshold = 1e-12;
  for (int t = 0; t < pairs; ++t) {
    RngStream rng(seed, 0x9a00 + static_cast<std::uint64_t>(t));
    double angle = 0.1 + (std::numbers::pi / 2 - 0.2) * rng.uniform();
    if (rng.uniform() < 0.5) angle = std::numbers::pi - angle;
    const double a = 0.05 + 0.95 * rng.uniform();
    const ParallelogramRecord p = fixture_parallelogram(angle, a);
    const double defect = std::abs(p.area - p.expected_area);
    r.max_violation = std::max(r.max_violation, defect);
    if (defect > r.threshold || !p.contains_i || p.contains_i_prime) ++r.violations;
  }
  finalize(r);
  return r;
}

}  // namespace csym
