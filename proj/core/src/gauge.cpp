#include "dfm/gauge.hpp"

#include <string>

#include "dfm/errors.hpp"

namespace dfm {

namespace {

constexpr double kTangentTol = 1e-10;
constexpr double kMembershipTol = 1e-6;

void require_kind(const LatticeField& field, FieldKind kind, const char* what) {
  if (field.kind() != kind) {
    throw SpecMismatch(std::string(what) + ": expected a " + kind_name(kind) + " field, got " +
                       kind_name(field.kind()));
  }
}

void require_same_base(const LatticeField& a, const LatticeField& b, const char* what) {
  if (!(a.lattice() == b.lattice())) throw SpecMismatch(std::string(what) + ": lattices differ");
  if (a.group() != b.group()) {
    throw SpecMismatch(std::string(what) + ": groups differ (" + std::string(a.spec().name()) +
                       " vs " + std::string(b.spec().name()) + ")");
  }
}

void require_su2xu1(const GroupSpec& spec, const char* what) {
  if (spec.id() != GroupId::SU2xU1) {
    throw SpecMismatch(std::string(what) + ": the C^2 representation needs su2xu1, got " +
                       std::string(spec.name()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Jets

GroupJet GroupJet::identity(const GroupSpec& spec, int dim) {
  const int r = spec.rep_dim();
  return {GroupElement::identity(spec), std::vector<MatrixC>(dim, MatrixC::Zero(r, r))};
}

GroupJet GroupJet::from_left_velocities(const GroupElement& g, const std::vector<AlgebraVector>& velocity) {
  GroupJet jet{g, {}};
  for (const auto& x : velocity) jet.d.push_back(g.matrix() * x.matrix());
  return jet;
}

GroupJet operator*(const GroupJet& f, const GroupJet& g) {
  if (f.d.size() != g.d.size()) throw ConsistencyError("jet product: differing base dimensions");
  GroupJet out{f.value * g.value, {}};
  for (std::size_t i = 0; i < f.d.size(); ++i) {
    out.d.push_back(f.d[i] * g.value.matrix() + f.value.matrix() * g.d[i]);
  }
  return out;
}

GroupJet inverse(const GroupJet& f) {
  GroupJet out{f.value.inverse(), {}};
  const MatrixC& inv = out.value.matrix();
  for (const auto& d : f.d) out.d.push_back(-(inv * d * inv));
  return out;
}

AlgebraVector maurer_cartan_at(const GroupJet& f, int axis) {
  const MatrixC m = f.value.inverse().matrix() * f.d.at(axis);
  auto [x, residual] = project_to_algebra(f.value.spec(), m);
  if (!(residual <= kTangentTol)) {
    throw ConsistencyError("f^-1 df_" + std::to_string(axis) + " is off the algebra by " +
                           std::to_string(residual));
  }
  return x;
}

std::vector<AlgebraVector> transform_connection_at(const std::vector<AlgebraVector>& A, const GroupJet& f) {
  if (A.size() != f.d.size()) throw ConsistencyError("gauge jet and connection differ in dimension");
  const GroupElement finv = f.value.inverse();
  std::vector<AlgebraVector> out;
  out.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    out.push_back(adjoint_algebra(finv, A[i]) + maurer_cartan_at(f, static_cast<int>(i)));
  }
  return out;
}

void validate(const PointFrame& frame) {
  if (frame.A.empty()) throw ConsistencyError("PointFrame has no connection components");
  const GroupSpec& spec = frame.spec();
  for (const auto& a : frame.A) {
    if (!(a.spec() == spec)) throw ConsistencyError("PointFrame mixes algebras");
  }
  for (const auto* jet : {frame.f ? &*frame.f : nullptr, frame.u ? &*frame.u : nullptr}) {
    if (!jet) continue;
    if (!(jet->value.spec() == spec)) throw ConsistencyError("PointFrame jet belongs to another group");
    if (static_cast<int>(jet->d.size()) != frame.dim()) throw ConsistencyError("PointFrame jet has wrong dimension");
    if (!(jet->value.membership_residual() <= kTangentTol)) throw ConsistencyError("PointFrame jet value is off the group");
    for (int i = 0; i < frame.dim(); ++i) maurer_cartan_at(*jet, i);
  }
  if (frame.phi && static_cast<int>(frame.phi->d.size()) != frame.dim()) {
    throw ConsistencyError("PointFrame scalar has wrong dimension");
  }
}

PointFrame pointframe_transform(const PointFrame& frame) {
  if (!frame.f) throw ConsistencyError("pointframe_transform: frame carries no gauge transformation");
  validate(frame);
  const GroupJet& f = *frame.f;
  PointFrame out;
  out.A = transform_connection_at(frame.A, f);
  if (frame.u) out.u = inverse(f) * *frame.u;
  if (frame.phi) {
    require_su2xu1(frame.spec(), "pointframe_transform");
    const Eigen::Matrix2cd r = rho(f.value.inverse());
    DoubletJet phi{r * frame.phi->value, {}};
    for (int i = 0; i < frame.dim(); ++i) {
      const Eigen::Matrix2cd dr = -rho_prime(maurer_cartan_at(f, i)) * r;
      phi.d.push_back(dr * frame.phi->value + r * frame.phi->d[i]);
    }
    out.phi = std::move(phi);
  }
  return out;
}

std::vector<Eigen::Vector2cd> covariant_derivative_at(const PointFrame& frame) {
  if (!frame.phi) throw ConsistencyError("covariant_derivative_at: frame carries no scalar");
  require_su2xu1(frame.spec(), "covariant_derivative_at");
  std::vector<Eigen::Vector2cd> out;
  for (int i = 0; i < frame.dim(); ++i) {
    out.push_back(frame.phi->d.at(i) + rho_prime(frame.A[i]) * frame.phi->value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representation

Eigen::Matrix2cd rho(const GroupElement& g) {
  require_su2xu1(g.spec(), "rho");
  const MatrixC& m = g.matrix();
  return Eigen::Matrix2cd(m.topLeftCorner(2, 2)) * m(2, 2);
}

Eigen::Matrix2cd rho_prime(const AlgebraVector& x) {
  require_su2xu1(x.spec(), "rho_prime");
  const MatrixC m = x.matrix();
  return Eigen::Matrix2cd(m.topLeftCorner(2, 2)) + m(2, 2) * Eigen::Matrix2cd::Identity();
}

// ---------------------------------------------------------------------------
// Lattice

LatticeField maurer_cartan(const LatticeField& f, int axis) {
  require_kind(f, FieldKind::GroupValued, "maurer_cartan");
  const Lattice& lat = f.lattice();
  const double inv2h = 1.0 / (2.0 * lat.spacing(axis));
  LatticeField out(lat, f.group(), FieldKind::AlgebraValued);
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    const GroupElement g = f.group_element(s);
    const double r = g.membership_residual();
    if (!(r <= kMembershipTol)) {
      throw AlgebraProjectionError("gauge field is off the group by " + std::to_string(r) + " at site " +
                                   std::to_string(s));
    }
    const GroupElement ginv = g.inverse();
    try {
      const AlgebraVector up = log_map(ginv * f.group_element(lat.shift(s, axis, +1)));
      const AlgebraVector down = log_map(ginv * f.group_element(lat.shift(s, axis, -1)));
      out.set_algebra(s, inv2h * (up - down));
    } catch (const BranchCutError&) {
      throw AlgebraProjectionError("gauge field is not resolved by the lattice at site " + std::to_string(s) +
                                   " (neighbour ratio at the log branch cut)");
    }
  }
  return out;
}

LatticeField curvature(const LatticeField& A) {
  require_kind(A, FieldKind::AlgebraOneForm, "curvature");
  const Lattice& lat = A.lattice();
  const int m = lat.dim();
  const GroupSpec& spec = A.spec();
  const int d = spec.algebra_dim();
  const StructureConstants c(spec);

  std::vector<LatticeField> dA;
  for (int k = 0; k < m; ++k) dA.push_back(partial_derivative(A, k));

  LatticeField F(lat, A.group(), FieldKind::AlgebraTwoForm);
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    for (int i = 0; i < m; ++i) {
      const AlgebraVector Ai = A.form(s, i);
      for (int j = i + 1; j < m; ++j) {
        const AlgebraVector Aj = A.form(s, j);
        const AlgebraVector diAj = dA[i].form(s, j);
        const AlgebraVector djAi = dA[j].form(s, i);
        AlgebraVector Fij(spec);
        for (int a = 0; a < d; ++a) {
          double quad = 0.0;
          for (int p = 0; p < d; ++p) {
            for (int q = 0; q < d; ++q) quad += c(a, p, q) * Ai[p] * Aj[q];
          }
          Fij[a] = diAj[a] - djAi[a] + quad;
        }
        F.set_two_form(s, i, j, Fij);
      }
    }
  }
  return F;
}

LatticeField gauge_transform_connection(const LatticeField& A, const LatticeField& f) {
  require_kind(A, FieldKind::AlgebraOneForm, "gauge_transform_connection");
  require_kind(f, FieldKind::GroupValued, "gauge_transform_connection");
  require_same_base(A, f, "gauge_transform_connection");
  const Lattice& lat = A.lattice();
  const int m = lat.dim();
  std::vector<LatticeField> mc;
  for (int i = 0; i < m; ++i) mc.push_back(maurer_cartan(f, i));

  LatticeField out(lat, A.group(), FieldKind::AlgebraOneForm);
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    const GroupElement finv = f.group_element(s).inverse();
    for (int i = 0; i < m; ++i) {
      out.set_form(s, i, adjoint_algebra(finv, A.form(s, i)) + mc[i].algebra(s));
    }
  }
  return out;
}

LatticeField gauge_transform_curvature(const LatticeField& F, const LatticeField& f) {
  require_kind(F, FieldKind::AlgebraTwoForm, "gauge_transform_curvature");
  require_kind(f, FieldKind::GroupValued, "gauge_transform_curvature");
  require_same_base(F, f, "gauge_transform_curvature");
  const Lattice& lat = F.lattice();
  const int m = lat.dim();
  LatticeField out(lat, F.group(), FieldKind::AlgebraTwoForm);
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    const GroupElement finv = f.group_element(s).inverse();
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) out.set_two_form(s, i, j, adjoint_algebra(finv, F.two_form(s, i, j)));
    }
  }
  return out;
}

LatticeField gauge_transform_doublet(const LatticeField& phi, const LatticeField& f) {
  require_kind(phi, FieldKind::ScalarDoublet, "gauge_transform_doublet");
  require_kind(f, FieldKind::GroupValued, "gauge_transform_doublet");
  require_same_base(phi, f, "gauge_transform_doublet");
  require_su2xu1(f.spec(), "gauge_transform_doublet");
  LatticeField out(phi.lattice(), phi.group(), FieldKind::ScalarDoublet);
  for (std::size_t s = 0; s < phi.site_count(); ++s) {
    out.set_doublet(s, rho(f.group_element(s).inverse()) * phi.doublet(s));
  }
  return out;
}

std::vector<LatticeField> covariant_derivative(const LatticeField& phi, const LatticeField& A) {
  require_kind(phi, FieldKind::ScalarDoublet, "covariant_derivative");
  require_kind(A, FieldKind::AlgebraOneForm, "covariant_derivative");
  require_same_base(phi, A, "covariant_derivative");
  require_su2xu1(A.spec(), "covariant_derivative");
  const Lattice& lat = phi.lattice();
  std::vector<LatticeField> out;
  for (int i = 0; i < lat.dim(); ++i) {
    LatticeField D = partial_derivative(phi, i);
    for (std::size_t s = 0; s < lat.site_count(); ++s) {
      D.set_doublet(s, D.doublet(s) + rho_prime(A.form(s, i)) * phi.doublet(s));
    }
    out.push_back(std::move(D));
  }
  return out;
}

LatticeField multiply(const LatticeField& f, const LatticeField& g) {
  require_kind(f, FieldKind::GroupValued, "multiply");
  require_kind(g, FieldKind::GroupValued, "multiply");
  require_same_base(f, g, "multiply");
  LatticeField out(f.lattice(), f.group(), FieldKind::GroupValued);
  for (std::size_t s = 0; s < f.site_count(); ++s) {
    out.set_group_element(s, f.group_element(s) * g.group_element(s));
  }
  return out;
}

LatticeField inverse(const LatticeField& f) {
  require_kind(f, FieldKind::GroupValued, "inverse");
  LatticeField out(f.lattice(), f.group(), FieldKind::GroupValued);
  for (std::size_t s = 0; s < f.site_count(); ++s) out.set_group_element(s, f.group_element(s).inverse());
  return out;
}

}  // namespace dfm
