#pragma once

// Volume, intrinsic volumes (Kubota's formula) and mean width. Exact where
// the geometry allows it, Monte Carlo with a standard error otherwise.

#include <cstdint>
#include <span>

#include "convexsym/body.hpp"
#include "convexsym/core.hpp"
#include "convexsym/polytope.hpp"

namespace csym {

enum class Method { exact, monte_carlo };

struct MeasureEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  Method method = Method::exact;
};

// Monte Carlo loops split into this many shards; shard s draws from
// rng.split(s) and shard accumulators are merged in shard order, so a
// (seed, stream, samples) triple gives bit-identical results on any machine.
inline constexpr int kShards = 8;
inline constexpr std::int64_t kDefaultSamples = 100000;

// Volume inside the affine hull.
MeasureEstimate volume_exact(const Polytope& k);

// n-dimensional volume of any body; analytic for balls, cylinders and sets
// of special form.
double body_volume(const Body& k);

// C(n, j) kappa_n / (kappa_j kappa_{n-j}); normalizes V_1 of a segment to its
// length and V_j independently of the ambient dimension.
double kubota_constant(int n, int j);

MeasureEstimate intrinsic_volume(const Body& k, int j, std::int64_t samples, const RngStream& rng);

// Elementary symmetric polynomial e_j of the side lengths, the exact V_j of
// a box.
double box_intrinsic_oracle(std::span<const double> sides, int j);

// Exact for balls and for polytopes in the plane (perimeter / pi); Monte
// Carlo otherwise.
MeasureEstimate mean_width(const Body& k, std::int64_t samples, const RngStream& rng);
MeasureEstimate mean_width_mc(const Body& k, std::int64_t samples, const RngStream& rng);

// n kappa_n / (2 kappa_{n-1}): V_1 = v1_constant(n) * W.
double v1_constant(int n);
MeasureEstimate v1(const Body& k, std::int64_t samples, const RngStream& rng);

// Perimeter of a planar polytope (twice the length for a segment).
double perimeter_2d(const Polytope& k);

}  // namespace csym
