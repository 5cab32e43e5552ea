// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "convexsym/fixtures.hpp"
#include "convexsym/io.hpp"
#include "convexsym/verify.hpp"

using namespace csym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Subspace axes(int n, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return Subspace::coordinate(n, v);
}

BodyGenerator random_hull(int n) {
  BodyGenerator g;
  g.n = n;
  return g;
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

void hexagon() {
  const auto t0 = Clock::now();
  const double r = fixture_hexagon_ratio(1.0);
  const double dt = seconds_since(t0);
  report(1, std::abs(r - 1.125) <= 1e-12 && dt < 1e-3,
         fmt("hexagon ratio %.15f (target 1.125, tol 1e-12), %.3g ms (limit 1 ms)", r, dt * 1e3));
}

void steiner_volume() {
  const PropertyReport r = check_property(Symmetrizer::steiner(axes(2, {0})), {Property::Kind::measure_preserving, 2},
                                          random_hull(2), 200, 1e-9);
  report(2, r.trials == 200 && r.violations == 0 && r.max_violation <= 1e-9,
         fmt("Steiner V_2 over %g polygons: %g violations, max relative defect %.3g (limit 1e-9)", r.trials,
             r.violations, r.max_violation));
}

void minkowski_width() {
  const auto t0 = Clock::now();
  const PropertyReport r2 = check_property(Symmetrizer::minkowski(axes(2, {0})),
                                           {Property::Kind::measure_preserving, 1}, random_hull(2), 200, 1e-9);
  const PropertyReport r3 = check_property(Symmetrizer::minkowski(axes(3, {0})),
                                           {Property::Kind::measure_preserving, 1}, random_hull(3), 200, 1e-7,
                                           kMeasureSamples);
  const double dt = seconds_since(t0);
  const bool ok = r2.violations == 0 && r2.max_violation <= 1e-9 && r3.violations == 0 && r3.max_violation <= 3.0 &&
                  r2.trials == 200 && r3.trials == 200 && dt < 20.0;
  report(3, ok,
         fmt("Minkowski V_1: dim 2 max relative defect %.3g (limit 1e-9); dim 3 max z-score %.3f (limit 3) at 1e5 "
             "samples; %.2f s (limit 20 s); violations %g",
             r2.max_violation, r3.max_violation, dt, r2.violations + r3.violations));
}

void kubota() {
  const PropertyReport boxes = kubota_box_check(20, 42, kMeasureSamples);
  const PropertyReport seg = segment_v1_check(1.5, 42, kMeasureSamples);
  report(4, boxes.violations == 0 && seg.violations == 0,
         fmt("Kubota vs box oracle: %g estimates, max z %.3f; segment V_1 across dims 2-4: max z %.3f (limit 3)",
             boxes.trials, boxes.max_violation, seg.max_violation));
}

void cylinder_cone() {
  const CylinderConeDefects a = fixture_cylinder_cone(3, 2, 2.0);
  const CylinderConeDefects b = fixture_cylinder_cone(4, 3, 2.0);
  const bool exact = a.cylinder <= 1e-9 && a.cone <= 1e-9;
  const bool approx = b.cylinder <= 1e-9 && b.cone <= 1e-9 && b.cylinder_analytic <= b.approximation_bound &&
                      b.cone_analytic <= b.approximation_bound;
  report(5, exact && approx,
         fmt("n=3 j=2 defects %.3g / %.3g (limit 1e-9); n=4 j=3 analytic defects %.3g / %.3g within approximation "
             "error ",
             a.cylinder, a.cone, b.cylinder_analytic, b.cone_analytic) +
             fmt("%.3g", b.approximation_bound));
}

void thm_body() {
  const double d3 = fixture_thmvj_body(3, 1.0);
  const double d4 = fixture_thmvj_body(4, 1.0);
  report(6, d3 <= 1e-9 && d4 <= 1e-9, fmt("relative defect n=3 %.3g, n=4 %.3g (limit 1e-9)", d3, d4));
}

void parallelogram() {
  const PropertyReport r = parallelogram_check(20, 42);
  const ParallelogramRecord ex = fixture_parallelogram(std::acos(-1.0) / 4, 0.3);
  const bool example = std::abs(ex.area - 0.6) <= 1e-12 && ex.contains_i && !ex.contains_i_prime;
  report(7, r.trials == 20 && r.violations == 0 && example,
         fmt("%g pairs: %g violations, max |area - 2a| %.3g (limit 1e-12)", r.trials, r.violations, r.max_violation));
}

void natural_boundary() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 3; ++n) {
    const NaturalPathologicalRecord r = fixture_natural_pathological(n);
    const auto& h = r.extension.step_history;
    bool decreasing = !h.empty();
    for (std::size_t i = 1; i < h.size(); ++i) decreasing = decreasing && h[i] <= h[i - 1];
    ok = ok && r.defect < r.residual + 1e-3 && decreasing;
    detail += fmt("n=%g defect %.4g < residual %.4g + 1e-3, curve decreasing=%g; ", n, r.defect, r.residual,
                  decreasing ? 1 : 0);
  }
  report(8, ok, detail);
}

void property_suites(const std::vector<PropertyReport>& core) {
  int applicable = 0;
  int bad = 0;
  bool idem_ok = false;
  bool proj_ok = false;
  double idem_gap = INFINITY;
  double proj_gap = INFINITY;
  for (const auto& r : core) {
    if (!r.op) continue;
    const std::string name = r.op->name();
    if (name == "steiner" || name == "minkowski") {
      ++applicable;
      if (r.trials != 200 || r.violations != 0) ++bad;
    } else if (name == "pathological" && r.property == "idempotent") {
      idem_gap = std::abs(r.max_violation - predicted_pathological_idempotence_defect(pathological_large_generator(42),
                                                                                      r.trials));
      idem_ok = r.verdict == Verdict::fail && r.violations == r.trials && idem_gap <= 1e-9;
    } else if (name == "pathological" && r.property == "projection_invariant") {
      proj_gap = std::abs(r.max_violation -
                          predicted_pathological_projection_defect(pathological_projection_generator(42), r.trials));
      proj_ok = r.verdict == Verdict::fail && r.violations == r.trials && proj_gap <= 1e-9;
    }
  }
  report(9, applicable > 0 && bad == 0 && idem_ok && proj_ok,
         fmt("%g Steiner/Minkowski records, %g with violations; pathological idempotence and projection failures "
             "match prediction to %.3g / %.3g (limit 1e-9)",
             applicable, bad, idem_gap, proj_gap));
}

void full_run() {
  const auto t0 = Clock::now();
  const RunConfig cfg;
  const std::vector<PropertyReport> first = run_suite(Suite::all, cfg);
  const double dt = seconds_since(t0);
  const std::string a = dump(reports_to_json(first));
  const std::string b = dump(reports_to_json(run_suite(Suite::all, cfg)));
  report(10, a == b && dt < 60.0 && all_as_expected(first),
         fmt("%g records, byte-identical rerun=%g, all as expected=%g, %.2f s (limit 60 s)",
             static_cast<double>(first.size()), a == b ? 1 : 0, all_as_expected(first) ? 1 : 0, dt));
}

}  // namespace

int main() {
  hexagon();
  steiner_volume();
  minkowski_width();
  kubota();
  cylinder_cone();
  thm_body();
  parallelogram();
  natural_boundary();
  property_suites(core_suite(RunConfig{}));
  full_run();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
