#include "convexsym/core.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace csym {

namespace {

constexpr double kRankTol = 1e-10;

// One Gram-Schmidt sweep of w against the columns of q, repeated twice.
Vector residual_against(const std::vector<Vector>& q, Vector w) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : q) w -= b.dot(w) * b;
  }
  return w;
}

Matrix to_columns(const std::vector<Vector>& cols, int n) {
  Matrix m(n, static_cast<int>(cols.size()));
  for (int k = 0; k < static_cast<int>(cols.size()); ++k) m.col(k) = cols[k];
  return m;
}

}  // namespace

Vector make_vector(std::initializer_list<double> coords) {
  Vector v(static_cast<int>(coords.size()));
  int i = 0;
  for (double c : coords) v(i++) = c;
  return v;
}

Vector unit_vector(int n, int axis) {
  Vector v = Vector::Zero(n);
  v(axis) = 1.0;
  return v;
}

bool all_finite(const Vector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i))) return false;
  }
  return true;
}

void require_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw InvalidInput("ambient dimension " + std::to_string(n) + " outside [1, " +
                       std::to_string(kMaxDim) + "]");
  }
}

Subspace::Subspace(int ambient_dim) {
  require_dim(ambient_dim);
  basis_.resize(ambient_dim, 0);
  complement_ = Matrix::Identity(ambient_dim, ambient_dim);
}

Subspace Subspace::full(int n) {
  require_dim(n);
  return Subspace(Matrix::Identity(n, n), Matrix(n, 0));
}

Subspace Subspace::coordinate(int n, std::span<const int> axes) {
  require_dim(n);
  std::vector<Vector> vs;
  for (int a : axes) {
    if (a < 0 || a >= n) throw InvalidInput("axis index out of range");
    vs.push_back(unit_vector(n, a));
  }
  return orthonormalize(vs, n);
}

Subspace Subspace::orthogonal_complement() const { return Subspace(complement_, basis_); }

Vector Subspace::project(const Vector& x) const {
  if (x.size() != ambient_dim()) throw InvalidInput("project: dimension mismatch");
  if (dim() == 0) return Vector::Zero(ambient_dim());
  return basis_ * (basis_.transpose() * x);
}

Vector Subspace::project_complement(const Vector& x) const {
  if (x.size() != ambient_dim()) throw InvalidInput("project: dimension mismatch");
  if (dim() == ambient_dim()) return Vector::Zero(ambient_dim());
  return complement_ * (complement_.transpose() * x);
}

Vector Subspace::reflect(const Vector& x) const { return 2.0 * project(x) - x; }

Vector Subspace::to_local(const Vector& x) const {
  if (x.size() != ambient_dim()) throw InvalidInput("to_local: dimension mismatch");
  return basis_.transpose() * x;
}

Vector Subspace::from_local(const Vector& local) const {
  if (local.size() != dim()) throw InvalidInput("from_local: dimension mismatch");
  if (dim() == 0) return Vector::Zero(ambient_dim());
  return basis_ * local;
}

bool Subspace::contains(const Vector& x, double tol) const {
  return (project(x) - x).norm() <= tol;
}

Subspace orthonormalize(std::span<const Vector> vectors, int ambient_dim) {
  int n = ambient_dim;
  if (!vectors.empty()) {
    n = static_cast<int>(vectors.front().size());
    if (ambient_dim >= 0 && ambient_dim != n) throw InvalidInput("orthonormalize: dimension mismatch");
  }
  require_dim(n);
  std::vector<Vector> basis;
  for (const auto& v : vectors) {
    if (v.size() != n) throw InvalidInput("orthonormalize: vectors differ in dimension");
    if (!all_finite(v)) throw InvalidInput("orthonormalize: non-finite coordinate");
    Vector w = residual_against(basis, v);
    double norm = w.norm();
    if (norm > kRankTol) basis.push_back(w / norm);
    if (static_cast<int>(basis.size()) == n) break;
  }
  std::vector<Vector> all = basis;
  std::vector<Vector> complement;
  for (int axis = 0; axis < n && static_cast<int>(all.size()) < n; ++axis) {
    Vector w = residual_against(all, unit_vector(n, axis));
    double norm = w.norm();
    // Unit axes against an orthonormal set: a residual this small means the
    // axis is already spanned.
    if (norm > 1e-6) {
      all.push_back(w / norm);
      complement.push_back(all.back());
    }
  }
  return Subspace(to_columns(basis, n), to_columns(complement, n));
}

Subspace orthonormalize(std::initializer_list<Vector> vectors, int ambient_dim) {
  std::vector<Vector> vs(vectors);
  return orthonormalize(std::span<const Vector>(vs), ambient_dim);
}

Vector project(const Vector& x, const Subspace& h) { return h.project(x); }

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : master_seed_(master_seed),
      stream_id_(stream_id),
      key_(mix64(master_seed ^ mix64(stream_id + 0x632be59bd9b4e019ULL))) {}

std::uint64_t RngStream::next() {
  ++counter_;
  return mix64(key_ + counter_ * 0xd1b54a32d192ed03ULL);
}

double RngStream::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1]
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

RngStream RngStream::split(std::uint64_t child) const {
  return RngStream(master_seed_, mix64(stream_id_ * 0x9e3779b97f4a7c15ULL + child + 1));
}

Vector gaussian_vector(int n, RngStream& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

Vector sphere_sample(int n, RngStream& rng) {
  require_dim(n);
  while (true) {
    Vector g = gaussian_vector(n, rng);
    double norm = g.norm();
    if (norm > 1e-300) return g / norm;
  }
}

Subspace haar_subspace(int n, int j, RngStream& rng) {
  require_dim(n);
  if (j < 1 || j > n) throw InvalidInput("haar_subspace: j outside [1, n]");
  if (j == n) return Subspace::full(n);
  while (true) {
    std::vector<Vector> cols;
    cols.reserve(j);
    for (int k = 0; k < j; ++k) cols.push_back(gaussian_vector(n, rng));
    Subspace h = orthonormalize(cols, n);
    if (h.dim() == j) return h;
  }
}

double kappa(int n) {
  if (n < 0 || n > kMaxDim) throw InvalidInput("kappa: dimension out of range");
  if (n == 0) return 1.0;
  if (n == 1) return 2.0;
  return kappa(n - 2) * 2.0 * std::numbers::pi / n;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace csym
