#include "convexsym/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

namespace csym {

namespace {

struct Accumulator {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

// Runs `integrand` over kShards independent streams and merges the shard
// statistics in order.
Accumulator sharded_mean(std::int64_t samples, const RngStream& rng,
                         const std::function<double(RngStream&)>& integrand) {
  if (samples < 1) throw InvalidInput("Monte Carlo estimate needs at least one sample");
  std::vector<Accumulator> shards(kShards);
  auto run = [&](int s) {
    RngStream local = rng.split(static_cast<std::uint64_t>(s));
    std::int64_t share = samples / kShards + (s < samples % kShards ? 1 : 0);
    for (std::int64_t i = 0; i < share; ++i) shards[s].add(integrand(local));
  };
  if (std::thread::hardware_concurrency() > 1) {
    std::vector<std::jthread> workers;
    for (int s = 0; s < kShards; ++s) workers.emplace_back(run, s);
  } else {
    for (int s = 0; s < kShards; ++s) run(s);
  }
  Accumulator total;
  for (const auto& a : shards) total.merge(a);
  return total;
}

MeasureEstimate scaled_estimate(const Accumulator& acc, double factor) {
  MeasureEstimate e;
  e.method = Method::monte_carlo;
  e.samples = acc.count;
  e.value = factor * acc.mean;
  double var = acc.count > 1 ? acc.m2 / static_cast<double>(acc.count - 1) : 0.0;
  e.std_error = std::abs(factor) * std::sqrt(var / static_cast<double>(acc.count));
  return e;
}

MeasureEstimate exact(double v) {
  MeasureEstimate e;
  e.value = v;
  return e;
}

// j-volume of the projection of a point cloud onto H, in local coordinates.
double projected_volume(const std::vector<Vector>& pts, const Subspace& h) {
  const int j = h.dim();
  const Matrix& q = h.basis();
  if (j == 1) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : pts) {
      double t = q.col(0).dot(p);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
    return hi - lo;
  }
  std::vector<Vector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(q.transpose() * p);
  return Polytope::hull(local).volume_in_dim(j);
}

}  // namespace

MeasureEstimate volume_exact(const Polytope& k) { return exact(k.relative_volume()); }

double body_volume(const Body& k) {
  const int n = ambient_dim(k);
  if (const auto* p = std::get_if<Polytope>(&k)) return p->volume_in_dim(n);
  if (const auto* b = std::get_if<Ball>(&k)) return kappa(n) * std::pow(b->radius, n);
  if (const auto* c = std::get_if<SphericalCylinder>(&k)) {
    const int i = c->h.dim();
    return kappa(i) * std::pow(c->r, i) * kappa(n - i) * std::pow(c->s, n - i);
  }
  const auto& f = std::get<SpecialForm>(k);
  const int i = f.h.dim();
  return f.l.volume_in_dim(i) * kappa(n - i) * std::pow(f.s, n - i);
}

double kubota_constant(int n, int j) {
  if (j < 0 || j > n) throw InvalidInput("kubota_constant: j outside [0, n]");
  return binomial(n, j) * kappa(n) / (kappa(j) * kappa(n - j));
}

MeasureEstimate intrinsic_volume(const Body& k, int j, std::int64_t samples, const RngStream& rng) {
  const int n = ambient_dim(k);
  if (j < 1 || j > n) throw InvalidInput("intrinsic_volume: j outside [1, n]");
  if (j > 4) throw UnsupportedDimension("intrinsic_volume: projected volume above dimension 4");
  if (j == n) return exact(body_volume(k));
  const double c = kubota_constant(n, j);
  if (const auto* b = std::get_if<Ball>(&k)) {
    MeasureEstimate e = exact(c * kappa(j) * std::pow(b->radius, j));
    e.method = Method::monte_carlo;
    e.samples = samples;
    return e;
  }
  const Polytope p = approximate(k).polytope;
  const std::vector<Vector>& verts = p.vertices();
  Accumulator acc = sharded_mean(samples, rng, [&](RngStream& local) {
    return projected_volume(verts, haar_subspace(n, j, local));
  });
  return scaled_estimate(acc, c);
}

double box_intrinsic_oracle(std::span<const double> sides, int j) {
  const int n = static_cast<int>(sides.size());
  if (j < 0 || j > n) throw InvalidInput("box_intrinsic_oracle: j outside [0, n]");
  // e[k] after processing a prefix of the sides.
  std::vector<double> e(n + 1, 0.0);
  e[0] = 1.0;
  for (double a : sides) {
    for (int k = n; k >= 1; --k) e[k] += a * e[k - 1];
  }
  return e[j];
}

double perimeter_2d(const Polytope& k) {
  if (k.ambient_dim() != 2) throw InvalidInput("perimeter_2d: polytope is not planar");
  const auto& v = k.vertices();
  if (k.affine_dim() == 0) return 0.0;
  if (k.affine_dim() == 1) return 2.0 * (v.front() - v.back()).norm();
  const Vector c = k.centroid();
  std::vector<Vector> ring = v;
  std::sort(ring.begin(), ring.end(), [&](const Vector& a, const Vector& b) {
    return std::atan2(a(1) - c(1), a(0) - c(0)) < std::atan2(b(1) - c(1), b(0) - c(0));
  });
  double per = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) per += (ring[(i + 1) % ring.size()] - ring[i]).norm();
  return per;
}

MeasureEstimate mean_width_mc(const Body& k, std::int64_t samples, const RngStream& rng) {
  const int n = ambient_dim(k);
  Accumulator acc = sharded_mean(samples, rng, [&](RngStream& local) {
    return support(k, sphere_sample(n, local));
  });
  return scaled_estimate(acc, 2.0);
}

MeasureEstimate mean_width(const Body& k, std::int64_t samples, const RngStream& rng) {
  if (const auto* b = std::get_if<Ball>(&k)) return exact(2.0 * b->radius);
  if (const auto* p = std::get_if<Polytope>(&k); p && p->ambient_dim() == 2) {
    return exact(perimeter_2d(*p) / std::numbers::pi);
  }
  return mean_width_mc(k, samples, rng);
}

double v1_constant(int n) {
  require_dim(n);
  return n * kappa(n) / (2.0 * kappa(n - 1));
}

MeasureEstimate v1(const Body& k, std::int64_t samples, const RngStream& rng) {
  MeasureEstimate w = mean_width(k, samples, rng);
  const double c = v1_constant(ambient_dim(k));
  w.value *= c;
  w.std_error *= c;
  return w;
}

}  // namespace csym
