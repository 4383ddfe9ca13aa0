#pragma once

// Connections, curvature and gauge transformations in a fixed local
// trivialization. A gauge transformation is a group-valued field f acting by
//
//   A -> Ad_{f^-1} A + f^-1 df,   F -> Ad_{f^-1} F,   phi -> rho(f^-1) phi.
//
// Curvature components are F_ij = d_i A_j - d_j A_i + [A_i, A_j], i.e. the
// coordinate form of dA + (1/2)[A ^ A].

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "dfm/lattice.hpp"
#include "dfm/liegroup.hpp"

namespace dfm {

// ---------------------------------------------------------------------------
// Exact one-point samples

// A group-valued map evaluated at one point together with its differential
// along each base axis.
struct GroupJet {
  GroupElement value;
  std::vector<MatrixC> d;

  static GroupJet identity(const GroupSpec& spec, int dim);
  // value = g, d_i = g * X_i: a tangent vector for any algebra X_i.
  static GroupJet from_left_velocities(const GroupElement& g, const std::vector<AlgebraVector>& velocity);
};

// Product rule d(fg) = (df) g + f (dg).
GroupJet operator*(const GroupJet& f, const GroupJet& g);
// d(f^-1) = -f^-1 (df) f^-1.
GroupJet inverse(const GroupJet& f);

struct DoubletJet {
  Eigen::Vector2cd value;
  std::vector<Eigen::Vector2cd> d;
};

// PointFrame: connection coefficients A_i at one point, an optional gauge
// transformation f, an optional dressing u and an optional scalar phi, each
// with an independently supplied differential.
struct PointFrame {
  std::vector<AlgebraVector> A;
  std::optional<GroupJet> f;
  std::optional<GroupJet> u;
  std::optional<DoubletJet> phi;

  int dim() const { return static_cast<int>(A.size()); }
  const GroupSpec& spec() const { return A.front().spec(); }
};

// f^-1 df_i projected on the algebra. Throws ConsistencyError when the
// projection residual exceeds 1e-10 (df_i not tangent at f).
AlgebraVector maurer_cartan_at(const GroupJet& f, int axis);

// Ad_{f^-1} A_i + f^-1 df_i.
std::vector<AlgebraVector> transform_connection_at(const std::vector<AlgebraVector>& A, const GroupJet& f);

// Throws ConsistencyError if any jet is not tangent or shapes disagree.
void validate(const PointFrame& frame);

// Applies frame.f to every other entry: A -> A^f, u -> f^-1 u,
// phi -> rho(f^-1) phi, differentials by the product rule. The result has no
// gauge entry. Throws ConsistencyError when frame.f is absent or invalid.
PointFrame pointframe_transform(const PointFrame& frame);

// D_i phi = d_i phi + rho'(A_i) phi at the point (su2xu1 only).
std::vector<Eigen::Vector2cd> covariant_derivative_at(const PointFrame& frame);

// ---------------------------------------------------------------------------
// Representation on C^2 for SU(2) x U(1): rho(b, a) v = a b v.

Eigen::Matrix2cd rho(const GroupElement& g);
// Induced algebra map: (X_h, c) -> X_h + i c I.
Eigen::Matrix2cd rho_prime(const AlgebraVector& x);

// ---------------------------------------------------------------------------
// Lattice operations

// Discrete f^-1 d_i f. Uses the symmetric logarithmic difference
//   [log(f(x)^-1 f(x + h e_i)) - log(f(x)^-1 f(x - h e_i))] / 2h,
// which is algebra-valued by construction and second-order accurate. Throws
// AlgebraProjectionError when a site is off the group by more than 1e-6 or
// neighbouring values are too far apart for the principal log.
LatticeField maurer_cartan(const LatticeField& f, int axis);

LatticeField curvature(const LatticeField& A);

LatticeField gauge_transform_connection(const LatticeField& A, const LatticeField& f);
LatticeField gauge_transform_curvature(const LatticeField& F, const LatticeField& f);
// rho(f^-1) phi sitewise.
LatticeField gauge_transform_doublet(const LatticeField& phi, const LatticeField& f);

// One ScalarDoublet field per axis.
std::vector<LatticeField> covariant_derivative(const LatticeField& phi, const LatticeField& A);

// Sitewise products and inverses of group-valued fields.
LatticeField multiply(const LatticeField& f, const LatticeField& g);
LatticeField inverse(const LatticeField& f);

}  // namespace dfm
