#include "dfm/dressing.hpp"

#include <cmath>
#include <string>

#include "dfm/errors.hpp"

namespace dfm {

namespace {

constexpr double kMemberTol = 1e-10;

double h_defect(const MatrixC& m) { return std::abs(m(2, 2) - 1.0); }

double j_defect(const MatrixC& m) {
  return (m.topLeftCorner(2, 2) - MatrixC::Identity(2, 2)).cwiseAbs().maxCoeff();
}

LatticeField as_h_field(const LatticeField& gamma, const char* what) {
  if (gamma.kind() != FieldKind::GroupValued) {
    throw SpecMismatch(std::string(what) + ": expected a group-valued field");
  }
  if (gamma.group() == GroupId::SU2) return embed_field(gamma);
  if (gamma.group() != GroupId::SU2xU1) {
    throw SpecMismatch(std::string(what) + ": H-valued field must be su2 or su2xu1");
  }
  for (std::size_t s = 0; s < gamma.site_count(); ++s) {
    if (!(h_defect(gamma.matrix(s)) <= kMemberTol)) {
      throw SpecMismatch(std::string(what) + ": field leaves H = SU(2) at site " + std::to_string(s));
    }
  }
  return gamma;
}

void require_j_field(const LatticeField& eta, const char* what) {
  if (eta.kind() != FieldKind::GroupValued || eta.group() != GroupId::SU2xU1) {
    throw SpecMismatch(std::string(what) + ": J-valued field must be a group-valued su2xu1 field");
  }
  for (std::size_t s = 0; s < eta.site_count(); ++s) {
    if (!(j_defect(eta.matrix(s)) <= kMemberTol)) {
      throw SpecMismatch(std::string(what) + ": field leaves J = U(1) at site " + std::to_string(s));
    }
  }
}

double sup_difference(const LatticeField& a, const LatticeField& b) { return sup_norm(a - b); }

double sup_difference(const std::vector<AlgebraVector>& a, const std::vector<AlgebraVector>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, (a[i] - b[i]).norm_inf());
  return r;
}

}  // namespace

DressingField::DressingField(LatticeField u) : u_(as_h_field(u, "DressingField")) {
  for (std::size_t s = 0; s < u_.site_count(); ++s) {
    const double r = u_.group_element(s).membership_residual();
    if (!(r <= kMemberTol)) {
      throw ConsistencyError("dressing field is off SU(2) by " + std::to_string(r) + " at site " +
                             std::to_string(s));
    }
  }
}

GroupElement dressing_from_doublet(const Eigen::Vector2cd& phi) {
  const double n = std::sqrt(std::norm(phi[0]) + std::norm(phi[1]));
  if (!(n > kVacuumCutoff)) {
    throw VacuumZeroError("scalar doublet vanishes (|phi| = " + std::to_string(n) + "); dressing undefined");
  }
  MatrixC u = MatrixC::Identity(3, 3);
  u(0, 0) = std::conj(phi[1]) / n;
  u(0, 1) = phi[0] / n;
  u(1, 0) = -std::conj(phi[0]) / n;
  u(1, 1) = phi[1] / n;
  return GroupElement(GroupSpec::get(GroupId::SU2xU1), u);
}

GroupJet dressing_jet_from_doublet(const DoubletJet& phi) {
  GroupJet jet{dressing_from_doublet(phi.value), {}};
  const Eigen::Vector2cd& p = phi.value;
  const double n = std::sqrt(std::norm(p[0]) + std::norm(p[1]));
  Eigen::Matrix2cd M;
  M << std::conj(p[1]), p[0], -std::conj(p[0]), p[1];
  for (const auto& dp : phi.d) {
    const double dn = (std::conj(p[0]) * dp[0] + std::conj(p[1]) * dp[1]).real() / n;
    Eigen::Matrix2cd dM;
    dM << std::conj(dp[1]), dp[0], -std::conj(dp[0]), dp[1];
    MatrixC du = MatrixC::Zero(3, 3);
    du.topLeftCorner(2, 2) = dM / n - M * (dn / (n * n));
    jet.d.push_back(du);
  }
  return jet;
}

DressingField dressing_from_scalar(const LatticeField& phi) {
  if (phi.kind() != FieldKind::ScalarDoublet || phi.group() != GroupId::SU2xU1) {
    throw SpecMismatch("dressing_from_scalar: expected an su2xu1 scalar doublet field");
  }
  LatticeField u(phi.lattice(), GroupId::SU2xU1, FieldKind::GroupValued);
  for (std::size_t s = 0; s < phi.site_count(); ++s) {
    try {
      u.set_group_element(s, dressing_from_doublet(phi.doublet(s)));
    } catch (const VacuumZeroError& e) {
      throw VacuumZeroError(std::string(e.what()) + " at site " + std::to_string(s));
    }
  }
  return DressingField(std::move(u));
}

DressingField dressing_transform(const DressingField& u, const LatticeField& gamma) {
  const LatticeField g = as_h_field(gamma, "dressing_transform");
  if (!(g.lattice() == u.lattice())) throw SpecMismatch("dressing_transform: lattices differ");
  return DressingField(multiply(inverse(g), u.field()));
}

LatticeField dress_connection(const LatticeField& A, const DressingField& u) {
  return gauge_transform_connection(A, u.field());
}

std::vector<AlgebraVector> dress_connection_at(const std::vector<AlgebraVector>& A, const GroupJet& u) {
  return transform_connection_at(A, u);
}

DressingField transformed_dressing(const DressingField& u, const LatticeField& eta, const ResidualRule& rule) {
  require_j_field(eta, "transformed_dressing");
  if (std::holds_alternative<AdjointRule>(rule)) {
    return DressingField(multiply(multiply(inverse(eta), u.field()), eta));
  }
  const auto& phi = std::get<ScalarInducedRule>(rule).phi;
  return dressing_from_scalar(gauge_transform_doublet(phi, eta));
}

GroupJet transformed_dressing_at(const GroupJet& u, const GroupJet& eta, const PointResidualRule& rule) {
  if (std::holds_alternative<AdjointRule>(rule)) return inverse(eta) * u * eta;
  PointFrame frame;
  const int m = static_cast<int>(eta.d.size());
  frame.A.assign(m, AlgebraVector(eta.value.spec()));
  frame.f = eta;
  frame.phi = std::get<ScalarInducedPointRule>(rule).phi;
  return dressing_jet_from_doublet(*pointframe_transform(frame).phi);
}

double residual_transform_residual(const LatticeField& A, const DressingField& u, const LatticeField& eta,
                                   const ResidualRule& rule) {
  require_j_field(eta, "residual_transform_residual");
  const LatticeField lhs = dress_connection(gauge_transform_connection(A, eta), transformed_dressing(u, eta, rule));
  const LatticeField rhs = gauge_transform_connection(dress_connection(A, u), eta);
  return sup_difference(lhs, rhs);
}

double residual_transform_residual_at(const std::vector<AlgebraVector>& A, const GroupJet& u, const GroupJet& eta,
                                      const PointResidualRule& rule) {
  if (eta.value.spec().id() != GroupId::SU2xU1 || !(j_defect(eta.value.matrix()) <= kMemberTol)) {
    throw SpecMismatch("residual_transform_residual_at: eta must be J-valued in su2xu1");
  }
  const auto lhs = dress_connection_at(transform_connection_at(A, eta), transformed_dressing_at(u, eta, rule));
  const auto rhs = transform_connection_at(dress_connection_at(A, u), eta);
  return sup_difference(lhs, rhs);
}

CheckResult residual_transform_check(const PointFrame& frame, const GroupJet& eta, const PointResidualRule& rule,
                                     double tolerance) {
  if (!frame.u) throw ConsistencyError("residual_transform_check: frame carries no dressing");
  validate(frame);
  return bound_check("residual_transform_pointframe", residual_transform_residual_at(frame.A, *frame.u, eta, rule),
                     tolerance);
}

CheckResult residual_transform_check(const LatticeField& A, const DressingField& u, const LatticeField& eta,
                                     const ResidualRule& rule, double tolerance) {
  return bound_check("residual_transform_lattice", residual_transform_residual(A, u, eta, rule), tolerance);
}

CheckResult residual_transform_convergence(const std::function<ResidualInputs(const Lattice&)>& make, int dim,
                                           const std::vector<int>& sizes, double target_order, double band,
                                           double exact_floor) {
  std::vector<double> spacings;
  std::vector<double> residuals;
  for (int n : sizes) {
    const Lattice lat = Lattice::cubic(dim, n);
    const ResidualInputs in = make(lat);
    spacings.push_back(lat.spacing(0));
    residuals.push_back(residual_transform_residual(in.A, in.u, in.eta, in.rule));
  }
  return order_check("residual_transform_order", spacings, residuals, target_order, band, exact_floor);
}

double h_invariance_residual(const LatticeField& A, const DressingField& u, const LatticeField& gamma) {
  const LatticeField g = as_h_field(gamma, "h_invariance_residual");
  const LatticeField lhs = dress_connection(gauge_transform_connection(A, g), dressing_transform(u, g));
  return sup_difference(lhs, dress_connection(A, u));
}

}  // namespace dfm
