#pragma once

// Scalars, vectors, linear subspaces and reproducible random streams used by
// every other part of the library.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "convexsym/errors.hpp"

namespace csym {

inline constexpr int kMaxDim = 8;

// Column vector with inline storage for up to kMaxDim coordinates.
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                             kMaxDim, kMaxDim>;

Vector make_vector(std::initializer_list<double> coords);
Vector unit_vector(int n, int axis);
bool all_finite(const Vector& v);
void require_dim(int n);  // 1 <= n <= kMaxDim

// A linear subspace H of R^n carried by an orthonormal basis of H together
// with an orthonormal basis of its complement. Dimension 0 is {o}.
class Subspace {
 public:
  explicit Subspace(int ambient_dim);  // {o}

  static Subspace full(int n);
  // span{e_i : i in axes}, axes are zero-based.
  static Subspace coordinate(int n, std::span<const int> axes);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }

  const Matrix& basis() const { return basis_; }
  const Matrix& complement_basis() const { return complement_; }
  Vector basis_vector(int k) const { return basis_.col(k); }
  Vector complement_vector(int k) const { return complement_.col(k); }

  Subspace orthogonal_complement() const;

  Vector project(const Vector& x) const;
  Vector project_complement(const Vector& x) const;
  // y -> 2 (y|H) - y
  Vector reflect(const Vector& x) const;
  // Coordinates of x|H in the stored basis, and back.
  Vector to_local(const Vector& x) const;
  Vector from_local(const Vector& local) const;

  bool contains(const Vector& x, double tol = 1e-10) const;

 private:
  friend Subspace orthonormalize(std::span<const Vector> vectors, int ambient_dim);
  Subspace(Matrix basis, Matrix complement)
      : basis_(std::move(basis)), complement_(std::move(complement)) {}

  Matrix basis_;       // n x i
  Matrix complement_;  // n x (n - i)
};

// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
// residual norm falls below 1e-10 are treated as dependent. ambient_dim is
// required only when `vectors` is empty.
Subspace orthonormalize(std::span<const Vector> vectors, int ambient_dim = -1);
Subspace orthonormalize(std::initializer_list<Vector> vectors, int ambient_dim = -1);

Vector project(const Vector& x, const Subspace& h);

// Counter-based stream: the k-th output is a fixed mix of (master_seed,
// stream_id, k), so a (seed, stream) pair fully determines the sequence.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

  std::uint64_t next();
  double uniform();  // [0, 1)
  double normal();   // standard Gaussian, Box-Muller

  // Independent child stream; children of equal streams are equal.
  RngStream split(std::uint64_t child) const;

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix64(std::uint64_t z);

Vector gaussian_vector(int n, RngStream& rng);

// Uniform point on S^{n-1}.
Vector sphere_sample(int n, RngStream& rng);

// Span of the first j columns of an orthonormalized n x n Gaussian matrix,
// which is distributed by the rotation-invariant measure on G(n, j).
Subspace haar_subspace(int n, int j, RngStream& rng);

// Volume of the unit Euclidean ball in R^n, 0 <= n <= kMaxDim.
double kappa(int n);
double binomial(int n, int k);

}  // namespace csym
