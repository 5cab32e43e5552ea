#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "convexsym/body.hpp"
#include "convexsym/core.hpp"
#include "convexsym/polytope.hpp"

namespace csym {

class Symmetrizer;

// Steiner symmetral about a hyperplane H.
struct SteinerOp {
  Subspace h;
};

// (K + K^H) / 2 for a subspace H of any dimension.
struct MinkowskiOp {
  Subspace h;
};

// K -> B_K if V_n(K) <= 1, 2 B_K otherwise, where B_K is the o-symmetric ball
// of volume V_n(K). The output is o-symmetric, hence H-symmetric for every H;
// `h` only names the subspace used when checking projection invariance.
struct PathologicalOp {
  Subspace h;
};

// K -> intersection over m of inner(K + B / m), truncated at m_max.
struct NaturalExtensionOp {
  std::shared_ptr<const Symmetrizer> inner;
  int m_max = 64;
  double tol = 1e-6;
};

class Symmetrizer {
 public:
  using Variant = std::variant<SteinerOp, MinkowskiOp, PathologicalOp, NaturalExtensionOp>;

  Symmetrizer(Variant op) : op_(std::move(op)) {}  // NOLINT: implicit by design of the variant

  static Symmetrizer steiner(Subspace h) { return Symmetrizer(SteinerOp{std::move(h)}); }
  static Symmetrizer minkowski(Subspace h) { return Symmetrizer(MinkowskiOp{std::move(h)}); }
  static Symmetrizer pathological(Subspace h) { return Symmetrizer(PathologicalOp{std::move(h)}); }
  static Symmetrizer natural(Symmetrizer inner, int m_max = 64, double tol = 1e-6);

  const Variant& op() const { return op_; }
  // The subspace the output is symmetric about ({o} for the pathological
  // operator's symmetry, see PathologicalOp).
  const Subspace& subspace() const;
  std::string name() const;

 private:
  Variant op_;
};

struct SteinerResult {
  Polytope body;
  double error = 0.0;  // 0 in the plane, where the construction is exact
  bool exact = true;
};

// Exact in dimension 2. In dimensions 3 and 4 an inner approximation built
// from chords at the projected vertices and a grid over K|H; the reported
// error is the Hausdorff gap between the grid and its half-resolution
// subgrid.
SteinerResult steiner(const Polytope& k, const Subspace& h);

Polytope minkowski_symmetral(const Polytope& k, const Subspace& h);

// Support of M_H(K) for any body: (h_K(u) + h_K(u^H)) / 2.
double minkowski_symmetral_support(const Body& k, const Subspace& h, const Vector& u);

// Radius of B_K for a given volume, before the doubling branch.
double equal_volume_radius(int n, double volume);
Ball pathological(const Body& k);

struct NaturalExtensionResult {
  Polytope body = Polytope::point(Vector::Zero(1));
  int achieved_m = 0;
  // Estimated distance to the untruncated intersection plus the substitution
  // and reconstruction errors.
  double residual = 0.0;
  // First-order tail estimate hausdorff(A_{m/2}, A_m) for a sequence
  // converging like 1/m.
  double tail_estimate = 0.0;
  double ball_error = 0.0;
  double reconstruction_error = 0.0;
  // hausdorff(A_{m-1}, A_m) for m = 2 .. achieved_m.
  std::vector<double> step_history;
  // contains(A_m, A_{m+1}) held at every step.
  bool monotone = true;
};

NaturalExtensionResult natural_extension(const Symmetrizer& inner, const Body& k, int m_max = 64,
                                         double tol = 1e-6);

struct SymmetrizeResult {
  Body body;
  double error = 0.0;
  std::optional<NaturalExtensionResult> extension;
};

SymmetrizeResult apply_reported(const Symmetrizer& op, const Body& k);
Body apply(const Symmetrizer& op, const Body& k);

}  // namespace csym
