#include "convexsym/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "convexsym/hull.hpp"

namespace csym {

namespace {

constexpr double kDedupTol = 1e-12;
constexpr double kAffineRankTol = 1e-10;

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::vector<Vector> dedup_sorted(std::vector<Vector> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  std::vector<Vector> kept;
  kept.reserve(pts.size());
  for (auto& p : pts) {
    bool dup = false;
    for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
      if ((*it)(0) < p(0) - kDedupTol) break;
      if ((*it - p).cwiseAbs().maxCoeff() <= kDedupTol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(std::move(p));
  }
  return kept;
}

// Lawson-Hanson non-negative least squares: min |A x - b|, x >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const int cols = static_cast<int>(a.cols());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(cols);
  std::vector<char> passive(cols, 0);
  for (int outer = 0; outer < 3 * cols + 10; ++outer) {
    Eigen::VectorXd w = a.transpose() * (b - a * x);
    int best = -1;
    double best_w = 1e-12;
    for (int j = 0; j < cols; ++j) {
      if (!passive[j] && w(j) > best_w) {
        best_w = w(j);
        best = j;
      }
    }
    if (best < 0) break;
    passive[best] = 1;
    while (true) {
      std::vector<int> p;
      for (int j = 0; j < cols; ++j) {
        if (passive[j]) p.push_back(j);
      }
      Eigen::MatrixXd ap(a.rows(), static_cast<int>(p.size()));
      for (int k = 0; k < static_cast<int>(p.size()); ++k) ap.col(k) = a.col(p[k]);
      Eigen::VectorXd zp = ap.colPivHouseholderQr().solve(b);
      Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
      for (int k = 0; k < static_cast<int>(p.size()); ++k) z(p[k]) = zp(k);
      bool feasible = true;
      for (int j : p) {
        if (z(j) <= 0.0) feasible = false;
      }
      if (feasible) {
        x = z;
        break;
      }
      double alpha = 1.0;
      for (int j : p) {
        if (z(j) <= 0.0) alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      }
      x += alpha * (z - x);
      for (int j : p) {
        if (x(j) <= 1e-15) {
          x(j) = 0.0;
          passive[j] = 0;
        }
      }
    }
  }
  return x;
}

// Extreme-point filter for affine dimension above the hull range: a point is
// redundant iff it is a convex combination of the others.
std::vector<Vector> extreme_by_nnls(const std::vector<Vector>& pts, double scale) {
  const int n = static_cast<int>(pts.front().size());
  const int count = static_cast<int>(pts.size());
  const double weight = std::max(scale, 1.0) * 10.0;
  std::vector<Vector> keep;
  for (int i = 0; i < count; ++i) {
    Eigen::MatrixXd a(n + 1, count - 1);
    int c = 0;
    for (int j = 0; j < count; ++j) {
      if (j == i) continue;
      a.block(0, c, n, 1) = pts[j];
      a(n, c) = weight;
      ++c;
    }
    Eigen::VectorXd b(n + 1);
    b.head(n) = pts[i];
    b(n) = weight;
    Eigen::VectorXd x = nnls(a, b);
    double residual = (a * x - b).norm();
    if (residual > 1e-9 * std::max(scale, 1e-300)) keep.push_back(pts[i]);
  }
  return keep;
}

}  // namespace

Polytope Polytope::from_points(std::vector<Vector> points, int n) {
  if (points.empty()) throw InvalidInput("convex hull of an empty point set");
  require_dim(n);
  for (const auto& p : points) {
    if (p.size() != n) throw InvalidInput("convex hull: points differ in dimension");
    if (!all_finite(p)) throw InvalidInput("convex hull: non-finite coordinate");
  }
  std::vector<Vector> pts = dedup_sorted(std::move(points));

  Polytope out;
  out.ambient_dim_ = n;
  Vector center = Vector::Zero(n);
  for (const auto& p : pts) center += p;
  center /= static_cast<double>(pts.size());
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, (p - center).norm());

  // Affine hull by greedy farthest residual.
  std::vector<Vector> dirs;
  while (static_cast<int>(dirs.size()) < n) {
    double best = 0.0;
    Vector best_w;
    for (const auto& p : pts) {
      Vector w = p - center;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : dirs) w -= q.dot(w) * q;
      }
      double nw = w.norm();
      if (nw > best) {
        best = nw;
        best_w = w;
      }
    }
    if (best <= kAffineRankTol * std::max(scale, 1e-300)) break;
    dirs.push_back(best_w / best);
  }
  const int d = static_cast<int>(dirs.size());
  out.affine_dim_ = d;
  out.affine_origin_ = center;
  Subspace flat = orthonormalize(dirs, n);
  out.affine_basis_ = flat.basis();
  out.affine_normals_ = flat.complement_basis();

  if (d == 0) {
    out.vertices_ = {pts.front()};
    out.affine_origin_ = pts.front();
    out.volume_ = 1.0;
    return out;
  }
  if (d > hull::kMaxHullDim) {
    out.vertices_ = extreme_by_nnls(pts, scale);
    return out;
  }

  std::vector<Vector> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(out.affine_basis_.transpose() * (p - center));
  hull::Result h = hull::full_rank_hull(local, d);
  out.volume_ = h.volume;
  out.vertices_.reserve(h.vertices.size());
  for (int i : h.vertices) out.vertices_.push_back(pts[i]);
  out.facets_.reserve(h.facets.size());
  for (const auto& f : h.facets) {
    Vector normal = out.affine_basis_ * f.normal;
    normal /= normal.norm();
    double b = -std::numeric_limits<double>::infinity();
    for (const auto& v : out.vertices_) b = std::max(b, normal.dot(v));
    out.facets_.push_back({normal, b});
  }
  return out;
}

Polytope Polytope::hull(std::span<const Vector> points) {
  if (points.empty()) throw InvalidInput("convex hull of an empty point set");
  return from_points(std::vector<Vector>(points.begin(), points.end()),
                     static_cast<int>(points.front().size()));
}

Polytope Polytope::hull(std::initializer_list<Vector> points) {
  std::vector<Vector> pts(points);
  return hull(std::span<const Vector>(pts));
}

Polytope Polytope::point(const Vector& x) { return from_points({x}, static_cast<int>(x.size())); }

Polytope Polytope::from_halfspaces(std::span<const Halfspace> halfspaces, const Vector& interior) {
  const int n = static_cast<int>(interior.size());
  if (n > hull::kMaxHullDim) throw UnsupportedDimension("from_halfspaces: dimension above 4");
  std::vector<Vector> dual;
  dual.reserve(halfspaces.size());
  for (const auto& h : halfspaces) {
    double slack = h.offset - h.normal.dot(interior);
    if (!(slack > 0.0)) throw InvalidInput("from_halfspaces: interior point violates a half-space");
    dual.push_back(h.normal / slack);
  }
  if (dual.empty()) throw InvalidInput("from_halfspaces: no half-spaces");
  Polytope polar = hull(dual);
  if (polar.affine_dim() != n) throw InvalidInput("from_halfspaces: intersection is unbounded");
  std::vector<Vector> verts;
  verts.reserve(polar.facets().size());
  for (const auto& f : polar.facets()) {
    if (!(f.offset > 0.0)) throw InvalidInput("from_halfspaces: intersection is unbounded");
    verts.push_back(interior + f.normal / f.offset);
  }
  return hull(verts);
}

const std::vector<Halfspace>& Polytope::facets() const {
  if (!has_facets()) throw UnsupportedDimension("facets unavailable above affine dimension 4");
  return facets_;
}

double Polytope::relative_volume() const {
  if (!has_facets()) throw UnsupportedDimension("volume unavailable above affine dimension 4");
  return volume_;
}

double Polytope::volume_in_dim(int k) const {
  if (affine_dim_ < k) return 0.0;
  if (affine_dim_ > k) throw InvalidInput("volume_in_dim: polytope has larger dimension");
  return relative_volume();
}

double Polytope::support(const Vector& u) const {
  if (u.size() != ambient_dim_) throw InvalidInput("support: dimension mismatch");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) best = std::max(best, u.dot(v));
  return best;
}

Vector Polytope::centroid() const {
  Vector c = Vector::Zero(ambient_dim_);
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double Polytope::circumradius() const {
  Vector c = centroid();
  double r = 0.0;
  for (const auto& v : vertices_) r = std::max(r, (v - c).norm());
  return r;
}

bool Polytope::contains_point(const Vector& y, double tol) const {
  if (y.size() != ambient_dim_) throw InvalidInput("contains_point: dimension mismatch");
  if (affine_normals_.cols() > 0) {
    Vector off = affine_normals_.transpose() * (y - affine_origin_);
    if (off.cwiseAbs().maxCoeff() > tol) return false;
  }
  for (const auto& f : facets()) {
    if (f.normal.dot(y) > f.offset + tol) return false;
  }
  return true;
}

Polytope Polytope::translated(const Vector& x) const {
  if (x.size() != ambient_dim_) throw InvalidInput("translated: dimension mismatch");
  Polytope out = *this;
  for (auto& v : out.vertices_) v += x;
  out.affine_origin_ += x;
  for (auto& f : out.facets_) {
    double b = -std::numeric_limits<double>::infinity();
    for (const auto& v : out.vertices_) b = std::max(b, f.normal.dot(v));
    f.offset = b;
  }
  return out;
}

Polytope Polytope::scaled(double s) const {
  if (!std::isfinite(s)) throw InvalidInput("scaled: non-finite factor");
  if (s == 0.0) return point(Vector::Zero(ambient_dim_));
  if (s < 0.0) {
    std::vector<Vector> pts;
    for (const auto& v : vertices_) pts.push_back(s * v);
    return hull(pts);
  }
  Polytope out = *this;
  for (auto& v : out.vertices_) v *= s;
  out.affine_origin_ *= s;
  for (auto& f : out.facets_) {
    double b = -std::numeric_limits<double>::infinity();
    for (const auto& v : out.vertices_) b = std::max(b, f.normal.dot(v));
    f.offset = b;
  }
  out.volume_ = affine_dim_ == 0 ? 1.0 : volume_ * std::pow(s, affine_dim_);
  return out;
}

Polytope Polytope::mapped(const Matrix& linear) const {
  if (linear.rows() != ambient_dim_ || linear.cols() != ambient_dim_) {
    throw InvalidInput("mapped: matrix shape mismatch");
  }
  std::vector<Vector> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(linear * v);
  return hull(pts);
}

Polytope convex_hull(std::span<const Vector> points) { return Polytope::hull(points); }

namespace {

// Counter-clockwise vertex ring starting at the lowest (then leftmost) vertex.
std::vector<Vector> ccw_ring(const Polytope& p) {
  const Vector c = p.centroid();
  std::vector<Vector> ring = p.vertices();
  std::sort(ring.begin(), ring.end(), [&](const Vector& a, const Vector& b) {
    return std::atan2(a(1) - c(1), a(0) - c(0)) < std::atan2(b(1) - c(1), b(0) - c(0));
  });
  auto lowest = std::min_element(ring.begin(), ring.end(), [](const Vector& a, const Vector& b) {
    return a(1) < b(1) || (a(1) == b(1) && a(0) < b(0));
  });
  std::rotate(ring.begin(), lowest, ring.end());
  return ring;
}

double cross2(const Vector& a, const Vector& b) { return a(0) * b(1) - a(1) * b(0); }

// Edge merge of two convex polygons, linear in the number of vertices.
Polytope polygon_sum(const Polytope& k, const Polytope& l) {
  std::vector<Vector> p = ccw_ring(k);
  std::vector<Vector> q = ccw_ring(l);
  const std::size_t n = p.size();
  const std::size_t m = q.size();
  p.push_back(p[0]);
  p.push_back(p[1]);
  q.push_back(q[0]);
  q.push_back(q[1]);
  std::vector<Vector> out;
  out.reserve(n + m);
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    out.push_back(p[i] + q[j]);
    const double c = cross2(p[i + 1] - p[i], q[j + 1] - q[j]);
    if (c >= 0 && i < n) ++i;
    if (c <= 0 && j < m) ++j;
  }
  return Polytope::hull(out);
}

}  // namespace

Polytope minkowski_sum(const Polytope& k, const Polytope& l) {
  if (k.ambient_dim() != l.ambient_dim()) throw InvalidInput("minkowski_sum: dimension mismatch");
  if (k.ambient_dim() == 2 && k.affine_dim() == 2 && l.affine_dim() == 2) return polygon_sum(k, l);
  std::vector<Vector> pts;
  pts.reserve(k.vertices().size() * l.vertices().size());
  for (const auto& a : k.vertices()) {
    for (const auto& b : l.vertices()) pts.push_back(a + b);
  }
  return Polytope::hull(pts);
}

std::optional<std::pair<double, double>> chord(const Polytope& k, const Vector& x, const Vector& u) {
  if (x.size() != k.ambient_dim() || u.size() != k.ambient_dim()) {
    throw InvalidInput("chord: dimension mismatch");
  }
  const double tol = 1e-10 * std::max(1.0, k.circumradius());
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const Matrix& normals = k.affine_normals();
  if (normals.cols() > 0) {
    Vector r = normals.transpose() * (x - k.affine_origin());
    Vector w = normals.transpose() * u;
    double ww = w.squaredNorm();
    if (ww <= 1e-24) {
      if (r.cwiseAbs().maxCoeff() > tol) return std::nullopt;
    } else {
      double t = -r.dot(w) / ww;
      if ((r + t * w).cwiseAbs().maxCoeff() > tol) return std::nullopt;
      lo = hi = t;
    }
  }
  for (const auto& f : k.facets()) {
    double a = f.normal.dot(u);
    double b = f.offset - f.normal.dot(x);
    // Parallel to the facet, or running along it: the neighbours clip.
    if (std::abs(a) < 1e-14 || (std::abs(a) < 1e-9 && std::abs(b) <= tol)) {
      if (b < -tol) return std::nullopt;
      continue;
    }
    if (a > 0.0) {
      hi = std::min(hi, b / a);
    } else {
      lo = std::max(lo, b / a);
    }
  }
  if (lo > hi) {
    if (lo - hi > tol) return std::nullopt;
    double mid = 0.5 * (lo + hi);
    lo = hi = mid;
  }
  return std::make_pair(lo, hi);
}

std::vector<Vector> direction_set(int k, int count) {
  std::vector<Vector> dirs;
  if (k == 1) {
    dirs = {make_vector({-1.0}), make_vector({1.0})};
    return dirs;
  }
  if (count < 1) throw InvalidInput("direction_set: count must be positive");
  dirs.reserve(count);
  if (k == 2) {
    for (int i = 0; i < count; ++i) {
      double t = 2.0 * std::numbers::pi * i / count;
      dirs.push_back(make_vector({std::cos(t), std::sin(t)}));
    }
  } else if (k == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      double z = 1.0 - (2.0 * i + 1.0) / count;
      double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      double phi = golden * i;
      dirs.push_back(make_vector({r * std::cos(phi), r * std::sin(phi), z}));
    }
  } else if (k == 4) {
    auto halton = [](int index, int base) {
      double f = 1.0;
      double r = 0.0;
      while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
      }
      return r;
    };
    for (int i = 1; i <= count; ++i) {
      double eta = std::asin(std::sqrt(halton(i, 2)));
      double xi1 = 2.0 * std::numbers::pi * halton(i, 3);
      double xi2 = 2.0 * std::numbers::pi * halton(i, 5);
      dirs.push_back(make_vector({std::cos(xi1) * std::sin(eta), std::sin(xi1) * std::sin(eta),
                                  std::cos(xi2) * std::cos(eta), std::sin(xi2) * std::cos(eta)}));
    }
  } else {
    throw UnsupportedDimension("direction_set: sphere dimension above 3");
  }
  return dirs;
}

BallApproximation approx_ball(const Subspace& h, double radius, int directions) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw InvalidInput("approx_ball: bad radius");
  const int n = h.ambient_dim();
  const int k = h.dim();
  if (k == 0 || radius == 0.0) return {Polytope::point(Vector::Zero(n)), 0.0};
  if (k > hull::kMaxHullDim) throw UnsupportedDimension("approx_ball: ball dimension above 4");
  std::vector<Vector> pts;
  for (const auto& d : direction_set(k, directions)) pts.push_back(h.from_local(radius * d));
  Polytope p = Polytope::hull(pts);
  if (p.affine_dim() != k) throw InvalidInput("approx_ball: too few directions");
  double error = 0.0;
  if (k >= 2) {
    double inner = std::numeric_limits<double>::infinity();
    for (const auto& f : p.facets()) inner = std::min(inner, f.offset);
    error = std::max(0.0, radius - inner);
  }
  return {std::move(p), error};
}

BallApproximation approx_ball(int n, double radius, int directions) {
  return approx_ball(Subspace::full(n), radius, directions);
}

}  // namespace csym
