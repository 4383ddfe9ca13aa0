#include "dfm/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dfm/errors.hpp"

namespace dfm {

namespace {

const ProductSplit& require_split(const GroupSpec& spec, const char* what) {
  if (!spec.split()) throw NoSplitError(std::string(what) + ": " + std::string(spec.name()) + " has no H x J split");
  return *spec.split();
}

std::vector<bool> j_mask(const GroupSpec& spec, const char* what) {
  const ProductSplit& split = require_split(spec, what);
  std::vector<bool> mask(spec.algebra_dim(), false);
  for (int a : split.j_indices) mask[a] = true;
  return mask;
}

double two_form_density(const LatticeField& F, std::size_t s, const std::vector<bool>* mask) {
  const int m = F.lattice().dim();
  const int d = F.spec().algebra_dim();
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const AlgebraVector x = F.two_form(s, i, j);
      for (int a = 0; a < d; ++a) {
        if (mask && !(*mask)[a]) continue;
        sum += x[a] * x[a];
      }
    }
  }
  return -0.25 * sum;
}

}  // namespace

LatticeField delta_ad(const LatticeField& field) {
  switch (field.kind()) {
    case FieldKind::AlgebraValued:
    case FieldKind::AlgebraOneForm:
    case FieldKind::AlgebraTwoForm:
    case FieldKind::MomentumField:
      break;
    default:
      throw SpecMismatch(std::string("delta_ad: expected an algebra-valued field, got ") + kind_name(field.kind()));
  }
  const std::vector<bool> mask = j_mask(field.spec(), "delta_ad");
  const int d = field.spec().algebra_dim();
  LatticeField out = field;
  for (std::size_t s = 0; s < out.site_count(); ++s) {
    auto v = out.site(s);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!mask[c % d]) v[c] = 0.0;
    }
  }
  return out;
}

double delta_equivariance_residual(const GroupElement& g, const AlgebraVector& x) {
  const GroupSplit split = group_split(g);
  const AlgebraVector lhs = project_subalgebra(adjoint_algebra(g.inverse(), x), Subalgebra::J);
  const AlgebraVector rhs = adjoint_algebra(split.j.inverse(), project_subalgebra(x, Subalgebra::J));
  return (lhs - rhs).norm_inf();
}

ConfigPair ConfigPair::from_connection(LatticeField A) {
  LatticeField F = curvature(A);
  return ConfigPair{std::move(A), std::move(F), true};
}

LatticeField delta_connection(const LatticeField& A, const DressingField& u) {
  return delta_ad(dress_connection(A, u));
}

std::vector<AlgebraVector> delta_connection_at(const std::vector<AlgebraVector>& A, const GroupJet& u) {
  std::vector<AlgebraVector> out = dress_connection_at(A, u);
  for (auto& x : out) x = project_subalgebra(x, Subalgebra::J);
  return out;
}

ConfigPair zeta(const ConfigPair& pair, const DressingField& u) {
  return ConfigPair::from_connection(delta_connection(pair.A, u));
}

double zeta_consistency_residual(const LatticeField& A, const DressingField& u) {
  const LatticeField dressed = dress_connection(A, u);
  return sup_norm(delta_ad(curvature(dressed)) - curvature(delta_ad(dressed)));
}

MomentumSample::MomentumSample(const GroupSpec& spec, int dim)
    : spec_(&spec), dim_(dim), p_(static_cast<std::size_t>(dim * dim * spec.algebra_dim()), 0.0) {
  x.assign(dim, 0.0);
}

void MomentumSample::set(int i, int j, int a, double value) {
  if (i == j) return;
  p_[index(i, j, a)] = value;
  p_[index(j, i, a)] = -value;
}

MomentumSample random_momentum(const GroupSpec& spec, int dim, Rng& rng, double scale) {
  MomentumSample p(spec, dim);
  for (int i = 0; i < dim; ++i) p.x[i] = rng.uniform(0.0, 2.0 * M_PI);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (int a = 0; a < spec.algebra_dim(); ++a) p.set(i, j, a, rng.uniform(-scale, scale));
    }
  }
  return p;
}

MomentumSample delta_momentum(const MomentumSample& p) {
  const std::vector<bool> mask = j_mask(p.spec(), "delta_momentum");
  MomentumSample out(p.spec(), p.dim());
  out.x = p.x;
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = i + 1; j < p.dim(); ++j) {
      for (int a = 0; a < p.spec().algebra_dim(); ++a) {
        if (mask[a]) out.set(i, j, a, p(i, j, a));
      }
    }
  }
  return out;
}

Eigen::MatrixXd pairing(const MomentumSample& p, const AlgebraVector& x) {
  if (!(x.spec() == p.spec())) throw SpecMismatch("pairing: algebra of a different group");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(p.dim(), p.dim());
  for (int i = 0; i < p.dim(); ++i) {
    for (int j = 0; j < p.dim(); ++j) {
      double sum = 0.0;
      for (int a = 0; a < x.size(); ++a) sum += p(i, j, a) * x[a];
      out(i, j) = sum;
    }
  }
  return out;
}

std::vector<double> yang_mills_density(const ConfigPair& pair) {
  if (pair.F.kind() != FieldKind::AlgebraTwoForm) throw SpecMismatch("yang_mills_density: F must be a curvature field");
  std::vector<double> out(pair.F.site_count());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = two_form_density(pair.F, s, nullptr);
  return out;
}

double yang_mills_density_at(const PairTensor& F) {
  double sum = 0.0;
  for (int i = 0; i < F.dim(); ++i) {
    for (int j = i + 1; j < F.dim(); ++j) {
      for (int a = 0; a < F.spec().algebra_dim(); ++a) sum += F(i, j, a) * F(i, j, a);
    }
  }
  return -0.25 * sum;
}

std::vector<double> j_density(const LatticeField& F) {
  if (F.kind() != FieldKind::AlgebraTwoForm) throw SpecMismatch("j_density: F must be a curvature field");
  const std::vector<bool> mask = j_mask(F.spec(), "j_density");
  std::vector<double> out(F.site_count());
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = two_form_density(F, s, &mask);
  return out;
}

CheckResult reduced_lagrangian_check(const ConfigPair& pair, const DressingField& u, double tolerance) {
  const LatticeField dressed_F = gauge_transform_curvature(pair.F, u.field());
  const std::vector<double> lhs = j_density(dressed_F);
  const std::vector<double> rhs = yang_mills_density(zeta(pair, u));
  double r = 0.0;
  std::size_t worst = 0;
  for (std::size_t s = 0; s < lhs.size(); ++s) {
    const double e = std::abs(lhs[s] - rhs[s]);
    if (!(e <= r)) {
      r = e;
      worst = s;
    }
  }
  CheckResult c = bound_check("reduced_lagrangian_factorization", r, tolerance);
  c.details = {{"worst_site", worst}, {"sites", lhs.size()}};
  return c;
}

double reduced_density_at(const PairTensor& F, const GroupElement& u) {
  const std::vector<bool> mask = j_mask(F.spec(), "reduced_density_at");
  const GroupElement ui = u.inverse();
  double sum = 0.0;
  for (int i = 0; i < F.dim(); ++i) {
    for (int j = i + 1; j < F.dim(); ++j) {
      const AlgebraVector x = adjoint_algebra(ui, F.at(i, j));
      for (int a = 0; a < x.size(); ++a) {
        if (mask[a]) sum += x[a] * x[a];
      }
    }
  }
  return -0.25 * sum;
}

}  // namespace dfm
