#pragma once

// Seeded property checks for symmetrization operators.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexsym/body.hpp"
#include "convexsym/core.hpp"
#include "convexsym/symmetrizer.hpp"

namespace csym {

enum class Verdict { pass, fail };

const char* to_string(Verdict v);

struct PropertyReport {
  // "property" for check_property, "fixture" for constructions, "series" for
  // curves consumed by the plotter.
  std::string type = "property";
  std::string property;
  std::optional<Symmetrizer> op;
  int trials = 0;
  int violations = 0;
  double max_violation = 0.0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::pass;
  Verdict expected = Verdict::pass;
  std::optional<double> value;  // fixture output, e.g. the hexagon ratio
  double threshold = 0.0;
  std::string x_label;
  std::string y_label;
  std::vector<std::array<double, 2>> series;

  bool as_expected() const { return verdict == expected; }
};

// Sets verdict from the violation count.
void finalize(PropertyReport& r);

struct Property {
  enum class Kind {
    monotonic,
    strictly_monotonic,
    idempotent,
    sym_invariant,
    cylinder_invariant,
    projection_invariant,
    measure_preserving,
    translation_invariant,
    symmetric_output,
    segment_to_segment,
  };
  Kind kind;
  int j = 0;  // measure_preserving only

  std::string name() const;
  static Property parse(const std::string& s);
};

struct BodyGenerator {
  enum class Kind { random_hull, nested_pair, h_symmetric, segment_in, cylinder };
  Kind kind = Kind::random_hull;
  int n = 2;
  int points = 8;
  double scale = 1.0;
  // Subspace for h_symmetric, segment_in and cylinder.
  std::optional<Subspace> h;
  std::uint64_t seed = 42;

  std::string name() const;
};

struct Instance {
  Body k;
  std::optional<Body> outer;  // nested_pair: k is contained in outer
};

Instance generate(const BodyGenerator& gen, RngStream& rng);

inline constexpr int kMeasureSamples = 100000;

// Runs `trials` instances, instance t drawn from RngStream(gen.seed, t).
// Hausdorff-type defects are divided by the instance circumradius and
// compared with tol; Monte Carlo measure comparisons are reported as a
// z-score and compared with 3.
PropertyReport check_property(const Symmetrizer& op, const Property& property, const BodyGenerator& gen,
                              int trials, double tol, std::int64_t samples = kMeasureSamples);

}  // namespace csym
