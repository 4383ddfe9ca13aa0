#include "dfm/liegroup.hpp"

#include <cmath>
#include <numbers>

#include "dfm/errors.hpp"

namespace dfm {

namespace {

constexpr double kBranchTol = 1e-12;
const cd I{0.0, 1.0};

MatrixC pauli(int a) {
  MatrixC s = MatrixC::Zero(2, 2);
  switch (a) {
    case 0:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 1:
      s(0, 1) = -I;
      s(1, 0) = I;
      break;
    default:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

// exp(-(i/2) x.sigma) = cos(t/2) - i sin(t/2) xhat.sigma, t = |x|.
MatrixC su2_exp(double x1, double x2, double x3) {
  const double t = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
  const double c = std::cos(0.5 * t);
  const double s = t < 1e-8 ? 0.5 - t * t / 48.0 : std::sin(0.5 * t) / t;
  MatrixC g(2, 2);
  g(0, 0) = cd(c, -s * x3);
  g(0, 1) = cd(-s * x2, -s * x1);
  g(1, 0) = cd(s * x2, -s * x1);
  g(1, 1) = cd(c, s * x3);
  return g;
}

Eigen::Vector3d su2_log(const MatrixC& g) {
  const double a0 = 0.5 * (g(0, 0) + g(1, 1)).real();
  const Eigen::Vector3d s(-0.5 * (g(0, 1) + g(1, 0)).imag(), 0.5 * (g(1, 0) - g(0, 1)).real(),
                          0.5 * (g(1, 1) - g(0, 0)).imag());
  const double sn = s.norm();
  const double half = std::atan2(sn, a0);
  if (std::numbers::pi - half <= kBranchTol) {
    throw BranchCutError("log_map: SU(2) element at the -1 branch point (trace -2)");
  }
  if (sn == 0.0) return Eigen::Vector3d::Zero();
  return (2.0 * half / sn) * s;
}

double u1_log(cd z) {
  const double theta = std::atan2(z.imag(), z.real());
  if (std::numbers::pi - std::abs(theta) <= kBranchTol) {
    throw BranchCutError("log_map: U(1) phase at the -1 branch point");
  }
  return theta;
}

double max_abs(const MatrixC& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::string_view group_name(GroupId id) {
  switch (id) {
    case GroupId::U1:
      return "u1";
    case GroupId::SU2:
      return "su2";
    case GroupId::SU2xU1:
      return "su2xu1";
    case GroupId::AffinePlus:
      return "affine";
  }
  return "?";
}

std::optional<GroupId> parse_group_name(std::string_view name) {
  for (GroupId id : {GroupId::U1, GroupId::SU2, GroupId::SU2xU1, GroupId::AffinePlus}) {
    if (group_name(id) == name) return id;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(GroupId id) : id_(id) {
  switch (id) {
    case GroupId::U1:
      rep_dim_ = 1;
      basis_.push_back(MatrixC::Constant(1, 1, I));
      break;
    case GroupId::SU2:
      rep_dim_ = 2;
      for (int a = 0; a < 3; ++a) basis_.push_back(cd(0.0, -0.5) * pauli(a));
      break;
    case GroupId::SU2xU1:
      rep_dim_ = 3;
      for (int a = 0; a < 3; ++a) {
        MatrixC e = MatrixC::Zero(3, 3);
        e.topLeftCorner(2, 2) = cd(0.0, -0.5) * pauli(a);
        basis_.push_back(e);
      }
      {
        MatrixC e = MatrixC::Zero(3, 3);
        e(2, 2) = I;
        basis_.push_back(e);
      }
      split_ = ProductSplit{{0, 1, 2}, {3}, true};
      break;
    case GroupId::AffinePlus:
      rep_dim_ = 2;
      basis_.push_back(MatrixC::Zero(2, 2));
      basis_.back()(0, 0) = 1.0;
      basis_.push_back(MatrixC::Zero(2, 2));
      basis_.back()(0, 1) = 1.0;
      split_ = ProductSplit{{0}, {1}, false};
      break;
  }
  algebra_dim_ = static_cast<int>(basis_.size());

  // Real embedding of the basis: columns are (Re, Im) of each matrix.
  const int n = rep_dim_ * rep_dim_;
  Eigen::MatrixXd b(2 * n, algebra_dim_);
  for (int a = 0; a < algebra_dim_; ++a) {
    for (int k = 0; k < n; ++k) {
      const cd v = basis_[a](k / rep_dim_, k % rep_dim_);
      b(k, a) = v.real();
      b(n + k, a) = v.imag();
    }
  }
  const Eigen::MatrixXd gram = b.transpose() * b;
  pinv_ = gram.ldlt().solve(b.transpose());
}

const GroupSpec& GroupSpec::get(GroupId id) {
  static const GroupSpec u1(GroupId::U1);
  static const GroupSpec su2(GroupId::SU2);
  static const GroupSpec su2xu1(GroupId::SU2xU1);
  static const GroupSpec affine(GroupId::AffinePlus);
  switch (id) {
    case GroupId::U1:
      return u1;
    case GroupId::SU2:
      return su2;
    case GroupId::SU2xU1:
      return su2xu1;
    case GroupId::AffinePlus:
      return affine;
  }
  return u1;
}

std::pair<Eigen::VectorXd, double> GroupSpec::coefficients(const MatrixC& m) const {
  if (m.rows() != rep_dim_ || m.cols() != rep_dim_) {
    throw SpecMismatch("matrix shape does not match the representation of " +
                       std::string(name()));
  }
  const int n = rep_dim_ * rep_dim_;
  Eigen::VectorXd v(2 * n);
  for (int k = 0; k < n; ++k) {
    const cd z = m(k / rep_dim_, k % rep_dim_);
    v(k) = z.real();
    v(n + k) = z.imag();
  }
  Eigen::VectorXd c = pinv_ * v;
  MatrixC rec = MatrixC::Zero(rep_dim_, rep_dim_);
  for (int a = 0; a < algebra_dim_; ++a) rec += c(a) * basis_[a];
  return {std::move(c), max_abs(m - rec)};
}

// ---------------------------------------------------------------------------
// AlgebraVector

AlgebraVector::AlgebraVector(const GroupSpec& spec)
    : spec_(&spec), coeffs_(Eigen::VectorXd::Zero(spec.algebra_dim())) {}

AlgebraVector::AlgebraVector(const GroupSpec& spec, Eigen::VectorXd coeffs)
    : spec_(&spec), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spec.algebra_dim()) {
    throw SpecMismatch("coefficient count does not match algebra dimension");
  }
}

AlgebraVector AlgebraVector::basis(const GroupSpec& spec, int a) {
  AlgebraVector v(spec);
  v[a] = 1.0;
  return v;
}

MatrixC AlgebraVector::matrix() const {
  MatrixC m = MatrixC::Zero(spec_->rep_dim(), spec_->rep_dim());
  for (int a = 0; a < size(); ++a) {
    if (coeffs_[a] != 0.0) m += coeffs_[a] * spec_->basis()[a];
  }
  return m;
}

AlgebraVector& AlgebraVector::operator+=(const AlgebraVector& o) {
  if (!(*spec_ == o.spec())) throw SpecMismatch("adding algebra vectors of different groups");
  coeffs_ += o.coeffs_;
  return *this;
}

AlgebraVector& AlgebraVector::operator-=(const AlgebraVector& o) {
  if (!(*spec_ == o.spec())) throw SpecMismatch("subtracting algebra vectors of different groups");
  coeffs_ -= o.coeffs_;
  return *this;
}

AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
AlgebraVector operator*(double s, AlgebraVector a) { return a *= s; }

std::pair<AlgebraVector, double> project_to_algebra(const GroupSpec& spec, const MatrixC& m) {
  auto [c, residual] = spec.coefficients(m);
  return {AlgebraVector(spec, std::move(c)), residual};
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(const GroupSpec& spec, MatrixC matrix)
    : spec_(&spec), matrix_(std::move(matrix)) {
  if (matrix_.rows() != spec.rep_dim() || matrix_.cols() != spec.rep_dim()) {
    throw SpecMismatch("matrix shape does not match the representation of " +
                       std::string(spec.name()));
  }
}

GroupElement GroupElement::identity(const GroupSpec& spec) {
  return GroupElement(spec, MatrixC::Identity(spec.rep_dim(), spec.rep_dim()));
}

GroupElement GroupElement::inverse() const {
  if (spec_->unitary()) return GroupElement(*spec_, matrix_.adjoint());
  // [[a, b], [0, 1]]^-1 = [[1/a, -b/a], [0, 1]]
  const cd a = matrix_(0, 0);
  const cd b = matrix_(0, 1);
  MatrixC inv = MatrixC::Identity(2, 2);
  inv(0, 0) = 1.0 / a;
  inv(0, 1) = -b / a;
  return GroupElement(*spec_, inv);
}

double GroupElement::membership_residual() const {
  const int n = spec_->rep_dim();
  if (spec_->unitary()) {
    double r = max_abs(matrix_.adjoint() * matrix_ - MatrixC::Identity(n, n));
    if (spec_->id() == GroupId::SU2 || spec_->id() == GroupId::SU2xU1) {
      r = std::max(r, std::abs(matrix_.topLeftCorner(2, 2).determinant() - 1.0));
    }
    if (spec_->id() == GroupId::SU2xU1) {
      r = std::max({r, max_abs(matrix_.topRightCorner(2, 1)), max_abs(matrix_.bottomLeftCorner(1, 2))});
    }
    return r;
  }
  const cd a = matrix_(0, 0);
  double r = std::max({std::abs(matrix_(1, 0)), std::abs(matrix_(1, 1) - 1.0), std::abs(a.imag()),
                       std::abs(matrix_(0, 1).imag())});
  if (!(a.real() > 0.0)) r = std::max(r, 1.0);
  return r;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.spec() == b.spec())) throw SpecMismatch("multiplying elements of different groups");
  return GroupElement(a.spec(), a.matrix() * b.matrix());
}

// ---------------------------------------------------------------------------
// exp / log

GroupElement exp_map(const AlgebraVector& x) {
  const GroupSpec& spec = x.spec();
  switch (spec.id()) {
    case GroupId::U1:
      return GroupElement(spec, MatrixC::Constant(1, 1, std::exp(cd(0.0, x[0]))));
    case GroupId::SU2:
      return GroupElement(spec, su2_exp(x[0], x[1], x[2]));
    case GroupId::SU2xU1: {
      MatrixC g = MatrixC::Zero(3, 3);
      g.topLeftCorner(2, 2) = su2_exp(x[0], x[1], x[2]);
      g(2, 2) = std::exp(cd(0.0, x[3]));
      return GroupElement(spec, g);
    }
    case GroupId::AffinePlus: {
      const double alpha = x[0];
      const double phi = alpha == 0.0 ? 1.0 : std::expm1(alpha) / alpha;
      MatrixC g = MatrixC::Identity(2, 2);
      g(0, 0) = std::exp(alpha);
      g(0, 1) = x[1] * phi;
      return GroupElement(spec, g);
    }
  }
  return GroupElement::identity(spec);
}

AlgebraVector log_map(const GroupElement& g) {
  const GroupSpec& spec = g.spec();
  const MatrixC& m = g.matrix();
  AlgebraVector x(spec);
  switch (spec.id()) {
    case GroupId::U1:
      x[0] = u1_log(m(0, 0));
      break;
    case GroupId::SU2:
      x.coeffs() = su2_log(m);
      break;
    case GroupId::SU2xU1:
      x.coeffs().head<3>() = su2_log(m.topLeftCorner(2, 2));
      x[3] = u1_log(m(2, 2));
      break;
    case GroupId::AffinePlus: {
      const double a = m(0, 0).real();
      if (!(a > 0.0)) throw BranchCutError("log_map: affine scale must be positive");
      const double alpha = std::log(a);
      x[0] = alpha;
      x[1] = alpha == 0.0 ? m(0, 1).real() : m(0, 1).real() * alpha / std::expm1(alpha);
      break;
    }
  }
  return x;
}

// ---------------------------------------------------------------------------
// Adjoint actions and bracket

AlgebraVector adjoint_algebra(const GroupElement& g, const AlgebraVector& x) {
  if (!(g.spec() == x.spec())) throw SpecMismatch("adjoint_algebra: group and algebra differ");
  const MatrixC m = g.matrix() * x.matrix() * g.inverse().matrix();
  return project_to_algebra(g.spec(), m).first;
}

GroupElement adjoint_group(const GroupElement& g, const GroupElement& h) {
  if (!(g.spec() == h.spec())) throw SpecMismatch("adjoint_group: elements of different groups");
  return GroupElement(g.spec(), g.matrix() * h.matrix() * g.inverse().matrix());
}

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y) {
  if (!(x.spec() == y.spec())) throw SpecMismatch("bracket: vectors of different algebras");
  const MatrixC a = x.matrix();
  const MatrixC b = y.matrix();
  return project_to_algebra(x.spec(), a * b - b * a).first;
}

StructureConstants::StructureConstants(const GroupSpec& spec)
    : dim_(spec.algebra_dim()), data_(static_cast<std::size_t>(dim_ * dim_ * dim_), 0.0) {
  for (int b = 0; b < dim_; ++b) {
    for (int c = 0; c < dim_; ++c) {
      const AlgebraVector v =
          bracket(AlgebraVector::basis(spec, b), AlgebraVector::basis(spec, c));
      for (int a = 0; a < dim_; ++a) data_[(a * dim_ + b) * dim_ + c] = v[a];
    }
  }
}

StructureConstants structure_constants(const GroupSpec& spec) { return StructureConstants(spec); }

// ---------------------------------------------------------------------------
// Splits

AlgebraVector project_subalgebra(const AlgebraVector& x, Subalgebra part) {
  const auto& split = x.spec().split();
  if (!split) {
    throw NoSplitError("project_subalgebra: " + std::string(x.spec().name()) +
                       " has no H x J split");
  }
  AlgebraVector out(x.spec());
  const auto& keep = part == Subalgebra::H ? split->h_indices : split->j_indices;
  for (int a : keep) out[a] = x[a];
  return out;
}

GroupSplit group_split(const GroupElement& g) {
  const GroupSpec& spec = g.spec();
  const MatrixC& m = g.matrix();
  switch (spec.id()) {
    case GroupId::SU2xU1: {
      MatrixC h = MatrixC::Identity(3, 3);
      h.topLeftCorner(2, 2) = m.topLeftCorner(2, 2);
      MatrixC j = MatrixC::Identity(3, 3);
      j(2, 2) = m(2, 2);
      return {GroupElement(spec, h), GroupElement(spec, j)};
    }
    case GroupId::AffinePlus: {
      // [[a, b], [0, 1]] = [[1, b], [0, 1]] [[a, 0], [0, 1]]
      MatrixC h = MatrixC::Identity(2, 2);
      h(0, 0) = m(0, 0);
      MatrixC j = MatrixC::Identity(2, 2);
      j(0, 1) = m(0, 1);
      return {GroupElement(spec, h), GroupElement(spec, j)};
    }
    default:
      throw NoSplitError("group_split: " + std::string(spec.name()) + " has no H x J split");
  }
}

GroupElement embed_factor(const GroupElement& g) {
  const GroupSpec& product = GroupSpec::get(GroupId::SU2xU1);
  MatrixC m = MatrixC::Identity(3, 3);
  switch (g.spec().id()) {
    case GroupId::SU2:
      m.topLeftCorner(2, 2) = g.matrix();
      break;
    case GroupId::U1:
      m(2, 2) = g.matrix()(0, 0);
      break;
    default:
      throw SpecMismatch("embed_factor: only su2 and u1 embed into su2xu1");
  }
  return GroupElement(product, m);
}

AlgebraVector embed_factor(const AlgebraVector& x) {
  AlgebraVector out(GroupSpec::get(GroupId::SU2xU1));
  switch (x.spec().id()) {
    case GroupId::SU2:
      out.coeffs().head<3>() = x.coeffs();
      break;
    case GroupId::U1:
      out[3] = x[0];
      break;
    default:
      throw SpecMismatch("embed_factor: only su2 and u1 embed into su2xu1");
  }
  return out;
}

AlgebraVector restrict_factor(const AlgebraVector& x, Subalgebra part) {
  if (x.spec().id() != GroupId::SU2xU1) {
    if (!x.spec().split()) throw NoSplitError("restrict_factor: group has no split");
    throw SpecMismatch("restrict_factor: the factors of this group have no standalone spec");
  }
  if (part == Subalgebra::H) {
    return AlgebraVector(GroupSpec::get(GroupId::SU2), x.coeffs().head<3>());
  }
  AlgebraVector out(GroupSpec::get(GroupId::U1));
  out[0] = x[3];
  return out;
}

// ---------------------------------------------------------------------------
// Generators

AlgebraVector random_algebra(const GroupSpec& spec, Rng& rng, double scale) {
  AlgebraVector x(spec);
  for (int a = 0; a < spec.algebra_dim(); ++a) x[a] = scale * rng.uniform(-1.0, 1.0);
  return x;
}

AlgebraVector random_algebra(const GroupSpec& spec, std::uint64_t seed, double scale) {
  Rng rng(seed);
  return random_algebra(spec, rng, scale);
}

GroupElement random_group_element(const GroupSpec& spec, Rng& rng, double scale) {
  return exp_map(random_algebra(spec, rng, scale));
}

GroupElement random_group_element(const GroupSpec& spec, std::uint64_t seed, double scale) {
  Rng rng(seed);
  return random_group_element(spec, rng, scale);
}

}  // namespace dfm
