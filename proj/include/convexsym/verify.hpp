#pragma once

// The verification suites: operator property checks, measure checks and
// fixtures, as one ordered list of reports.

#include <cstdint>
#include <string>
#include <vector>

#include "convexsym/harness.hpp"

namespace csym {

struct RunConfig {
  std::uint64_t seed = 42;
  std::int64_t samples = kMeasureSamples;
  double tol = 1e-7;
  int m_max = 64;
  int trials = 200;
};

// Throws ConfigurationError when an invariant of the config fails.
void validate(const RunConfig& cfg);

enum class Suite { core, fixtures, all };
Suite parse_suite(const std::string& s);

// Property suites for the Steiner, Minkowski and pathological operators.
std::vector<PropertyReport> core_suite(const RunConfig& cfg);
std::vector<PropertyReport> fixture_suite(const RunConfig& cfg);
std::vector<PropertyReport> run_suite(Suite suite, const RunConfig& cfg);

bool all_as_expected(const std::vector<PropertyReport>& reports);

// Kubota estimates of seeded boxes (dims 2..4 in turn, every j) against the
// elementary symmetric polynomial of the sides; max_violation is the
// largest z-score.
PropertyReport kubota_box_check(int boxes, std::uint64_t seed, std::int64_t samples);

// V_1 of one segment embedded in R^2, R^3, R^4: pairwise z-scores and the
// z-score against the length.
PropertyReport segment_v1_check(double length, std::uint64_t seed, std::int64_t samples);

// Seeded (angle, a) pairs for the parallelogram construction.
PropertyReport parallelogram_check(int pairs, std::uint64_t seed);

// Predicted defects of the pathological operator, computed from the radii
// directly: idempotence and projection invariance for the generator used in
// the core suite.
double predicted_pathological_idempotence_defect(const BodyGenerator& gen, int trials);
double predicted_pathological_projection_defect(const BodyGenerator& gen, int trials);

// Generators used by the pathological records of the core suite.
BodyGenerator pathological_large_generator(std::uint64_t seed);
BodyGenerator pathological_projection_generator(std::uint64_t seed);

}  // namespace csym
