#pragma once

// Dressing fields for G = SU(2) x U(1) with H = SU(2), J = U(1).
//
// A dressing u is an H-valued field with u -> gamma^-1 u under H-valued gauge
// transformations gamma. The dressed connection
//
//   A^u = Ad_{u^-1} A + u^-1 du
//
// has the same algebraic form as a gauge transformation but is H-invariant:
// dressing (A^gamma) with gamma^-1 u reproduces A^u.

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "dfm/gauge.hpp"
#include "dfm/lattice.hpp"
#include "dfm/report.hpp"

namespace dfm {

inline constexpr double kVacuumCutoff = 1e-8;

// SU(2)-valued field stored in the H block of su2xu1 (U(1) entry 1).
class DressingField {
 public:
  // Accepts a group-valued su2 field (embedded) or su2xu1 field with trivial
  // U(1) entry. Throws SpecMismatch otherwise, ConsistencyError if a site is
  // off SU(2) by more than 1e-10.
  explicit DressingField(LatticeField u);

  const LatticeField& field() const { return u_; }
  const Lattice& lattice() const { return u_.lattice(); }
  GroupElement at(std::size_t site) const { return u_.group_element(site); }

 private:
  LatticeField u_;
};

// The unique u in SU(2) with u (0, |phi|)^T = phi, embedded in su2xu1:
//   u = [[conj(phi_2), phi_1], [-conj(phi_1), phi_2]] / |phi|.
// Throws VacuumZeroError when |phi| <= 1e-8.
GroupElement dressing_from_doublet(const Eigen::Vector2cd& phi);
// Same, with the differential induced by dphi.
GroupJet dressing_jet_from_doublet(const DoubletJet& phi);

DressingField dressing_from_scalar(const LatticeField& phi);

// u -> gamma^-1 u sitewise; gamma must be H-valued (su2, or su2xu1 with
// trivial U(1) entry).
DressingField dressing_transform(const DressingField& u, const LatticeField& gamma);

LatticeField dress_connection(const LatticeField& A, const DressingField& u);
std::vector<AlgebraVector> dress_connection_at(const std::vector<AlgebraVector>& A, const GroupJet& u);

// How u responds to a J-valued transformation eta.
struct AdjointRule {};  // u -> eta^-1 u eta
struct ScalarInducedRule {
  LatticeField phi;  // u -> dressing_from_scalar(rho(eta^-1) phi)
};
using ResidualRule = std::variant<AdjointRule, ScalarInducedRule>;

struct ScalarInducedPointRule {
  DoubletJet phi;
};
using PointResidualRule = std::variant<AdjointRule, ScalarInducedPointRule>;

DressingField transformed_dressing(const DressingField& u, const LatticeField& eta, const ResidualRule& rule);
GroupJet transformed_dressing_at(const GroupJet& u, const GroupJet& eta, const PointResidualRule& rule);

// J-gauge-field law of the dressed connection:
//   dress(A^eta, u^eta) - [Ad_{eta^-1} A^u + eta^-1 d eta].
// Returns the sup norm of the difference. eta must be J-valued.
double residual_transform_residual(const LatticeField& A, const DressingField& u, const LatticeField& eta,
                                   const ResidualRule& rule);
double residual_transform_residual_at(const std::vector<AlgebraVector>& A, const GroupJet& u, const GroupJet& eta,
                                      const PointResidualRule& rule);

// PointFrame mode: frame carries A and u.
CheckResult residual_transform_check(const PointFrame& frame, const GroupJet& eta, const PointResidualRule& rule,
                                     double tolerance);
// Lattice mode on one grid.
CheckResult residual_transform_check(const LatticeField& A, const DressingField& u, const LatticeField& eta,
                                     const ResidualRule& rule, double tolerance);

struct ResidualInputs {
  LatticeField A;
  DressingField u;
  LatticeField eta;
  ResidualRule rule;
};
// Lattice mode under refinement: builds the inputs on each cubic lattice of
// the given sizes and fits the convergence order of the residual.
CheckResult residual_transform_convergence(const std::function<ResidualInputs(const Lattice&)>& make,
                                           int dim, const std::vector<int>& sizes, double target_order,
                                           double band, double exact_floor);

// sup |dress(A^gamma, gamma^-1 u) - dress(A, u)|.
double h_invariance_residual(const LatticeField& A, const DressingField& u, const LatticeField& gamma);

}  // namespace dfm
