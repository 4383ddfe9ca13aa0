#include "dfm/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dfm/errors.hpp"

namespace dfm {

// ---------------------------------------------------------------------------
// Lattice

Lattice::Lattice(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2 || sizes_.size() > 4) {
    throw std::invalid_argument("lattice dimension must be between 2 and 4");
  }
  strides_.assign(sizes_.size(), 1);
  site_count_ = 1;
  for (int axis = dim() - 1; axis >= 0; --axis) {
    if (sizes_[axis] < 4) throw std::invalid_argument("lattice needs at least 4 sites per axis");
    strides_[axis] = site_count_;
    site_count_ *= static_cast<std::size_t>(sizes_[axis]);
  }
}

double Lattice::spacing(int axis) const {
  return 2.0 * std::numbers::pi / static_cast<double>(sizes_[axis]);
}

std::vector<int> Lattice::multi_index(std::size_t site) const {
  std::vector<int> index(sizes_.size());
  for (int axis = 0; axis < dim(); ++axis) {
    index[axis] = static_cast<int>(site / strides_[axis]);
    site %= strides_[axis];
  }
  return index;
}

std::size_t Lattice::site_index(std::span<const int> index) const {
  std::size_t site = 0;
  for (int axis = 0; axis < dim(); ++axis) {
    const int n = sizes_[axis];
    const int k = ((index[axis] % n) + n) % n;
    site += static_cast<std::size_t>(k) * strides_[axis];
  }
  return site;
}

std::size_t Lattice::shift(std::size_t site, int axis, int step) const {
  const int n = sizes_[axis];
  const int k = static_cast<int>((site / strides_[axis]) % n);
  const int moved = ((k + step) % n + n) % n;
  return site + (static_cast<std::ptrdiff_t>(moved) - k) * static_cast<std::ptrdiff_t>(strides_[axis]);
}

double Lattice::coordinate(std::size_t site, int axis) const {
  const int k = static_cast<int>((site / strides_[axis]) % sizes_[axis]);
  return k * spacing(axis);
}

std::vector<double> Lattice::coordinates(std::size_t site) const {
  std::vector<double> x(sizes_.size());
  for (int axis = 0; axis < dim(); ++axis) x[axis] = coordinate(site, axis);
  return x;
}

// ---------------------------------------------------------------------------
// LatticeField

const char* kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::GroupValued:
      return "group";
    case FieldKind::AlgebraValued:
      return "algebra";
    case FieldKind::AlgebraOneForm:
      return "connection";
    case FieldKind::AlgebraTwoForm:
      return "curvature";
    case FieldKind::ScalarDoublet:
      return "scalar";
    case FieldKind::MomentumField:
      return "momentum";
    case FieldKind::MatrixValued:
      return "matrix";
  }
  return "?";
}

namespace {

int width_of(const Lattice& lattice, const GroupSpec& spec, FieldKind kind) {
  const int m = lattice.dim();
  const int d = spec.algebra_dim();
  const int r = spec.rep_dim();
  switch (kind) {
    case FieldKind::GroupValued:
    case FieldKind::MatrixValued:
      return r * r;
    case FieldKind::AlgebraValued:
      return d;
    case FieldKind::AlgebraOneForm:
      return m * d;
    case FieldKind::AlgebraTwoForm:
    case FieldKind::MomentumField:
      return m * m * d;
    case FieldKind::ScalarDoublet:
      return 2;
  }
  return 0;
}

}  // namespace

LatticeField::LatticeField(Lattice lattice, GroupId group, FieldKind kind)
    : lattice_(std::move(lattice)),
      group_(group),
      kind_(kind),
      width_(width_of(lattice_, GroupSpec::get(group), kind)),
      data_(lattice_.site_count() * static_cast<std::size_t>(width_), cd(0.0, 0.0)) {
  if (kind == FieldKind::GroupValued) {
    const int r = spec().rep_dim();
    for (std::size_t s = 0; s < site_count(); ++s) {
      for (int k = 0; k < r; ++k) data_[s * width_ + k * r + k] = 1.0;
    }
  }
}

void LatticeField::require(FieldKind k, const char* what) const {
  if (kind_ != k) {
    throw SpecMismatch(std::string(what) + ": field kind is " + kind_name(kind_) + ", expected " +
                       kind_name(k));
  }
}

void LatticeField::require_compatible(const LatticeField& o) const {
  if (!(lattice_ == o.lattice_) || group_ != o.group_ || kind_ != o.kind_) {
    throw SpecMismatch("fields differ in lattice, group or kind");
  }
}

AlgebraVector LatticeField::algebra(std::size_t s) const {
  require(FieldKind::AlgebraValued, "algebra");
  AlgebraVector x(spec());
  const cd* p = data_.data() + s * width_;
  for (int a = 0; a < x.size(); ++a) x[a] = p[a].real();
  return x;
}

void LatticeField::set_algebra(std::size_t s, const AlgebraVector& x) {
  require(FieldKind::AlgebraValued, "set_algebra");
  cd* p = data_.data() + s * width_;
  for (int a = 0; a < x.size(); ++a) p[a] = x[a];
}

AlgebraVector LatticeField::form(std::size_t s, int i) const {
  require(FieldKind::AlgebraOneForm, "form");
  const int d = spec().algebra_dim();
  AlgebraVector x(spec());
  const cd* p = data_.data() + s * width_ + i * d;
  for (int a = 0; a < d; ++a) x[a] = p[a].real();
  return x;
}

void LatticeField::set_form(std::size_t s, int i, const AlgebraVector& x) {
  require(FieldKind::AlgebraOneForm, "set_form");
  if (!(x.spec() == spec())) throw SpecMismatch("set_form: algebra of a different group");
  const int d = spec().algebra_dim();
  cd* p = data_.data() + s * width_ + i * d;
  for (int a = 0; a < d; ++a) p[a] = x[a];
}

AlgebraVector LatticeField::two_form(std::size_t s, int i, int j) const {
  if (kind_ != FieldKind::MomentumField) require(FieldKind::AlgebraTwoForm, "two_form");
  const int d = spec().algebra_dim();
  const int m = lattice_.dim();
  AlgebraVector x(spec());
  const cd* p = data_.data() + s * width_ + (i * m + j) * d;
  for (int a = 0; a < d; ++a) x[a] = p[a].real();
  return x;
}

void LatticeField::set_two_form(std::size_t s, int i, int j, const AlgebraVector& x) {
  if (kind_ != FieldKind::MomentumField) require(FieldKind::AlgebraTwoForm, "set_two_form");
  if (!(x.spec() == spec())) throw SpecMismatch("set_two_form: algebra of a different group");
  if (i == j) return;
  const int d = spec().algebra_dim();
  const int m = lattice_.dim();
  cd* p = data_.data() + s * width_ + (i * m + j) * d;
  cd* q = data_.data() + s * width_ + (j * m + i) * d;
  for (int a = 0; a < d; ++a) {
    p[a] = x[a];
    q[a] = -x[a];
  }
}

GroupElement LatticeField::group_element(std::size_t s) const {
  require(FieldKind::GroupValued, "group_element");
  return GroupElement(spec(), matrix(s));
}

void LatticeField::set_group_element(std::size_t s, const GroupElement& g) {
  require(FieldKind::GroupValued, "set_group_element");
  if (!(g.spec() == spec())) throw SpecMismatch("set_group_element: element of a different group");
  const int r = spec().rep_dim();
  cd* p = data_.data() + s * width_;
  for (int k = 0; k < r * r; ++k) p[k] = g.matrix()(k / r, k % r);
}

MatrixC LatticeField::matrix(std::size_t s) const {
  if (kind_ != FieldKind::GroupValued && kind_ != FieldKind::MatrixValued) {
    throw SpecMismatch(std::string("matrix: field kind is ") + kind_name(kind_));
  }
  const int r = spec().rep_dim();
  MatrixC m(r, r);
  const cd* p = data_.data() + s * width_;
  for (int k = 0; k < r * r; ++k) m(k / r, k % r) = p[k];
  return m;
}

void LatticeField::set_matrix(std::size_t s, const MatrixC& m) {
  require(FieldKind::MatrixValued, "set_matrix");
  const int r = spec().rep_dim();
  cd* p = data_.data() + s * width_;
  for (int k = 0; k < r * r; ++k) p[k] = m(k / r, k % r);
}

Eigen::Vector2cd LatticeField::doublet(std::size_t s) const {
  require(FieldKind::ScalarDoublet, "doublet");
  const cd* p = data_.data() + s * width_;
  return {p[0], p[1]};
}

void LatticeField::set_doublet(std::size_t s, const Eigen::Vector2cd& v) {
  require(FieldKind::ScalarDoublet, "set_doublet");
  cd* p = data_.data() + s * width_;
  p[0] = v[0];
  p[1] = v[1];
}

LatticeField& LatticeField::operator-=(const LatticeField& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  if (kind_ == FieldKind::GroupValued) kind_ = FieldKind::MatrixValued;
  return *this;
}

LatticeField& LatticeField::operator+=(const LatticeField& o) {
  require_compatible(o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  if (kind_ == FieldKind::GroupValued) kind_ = FieldKind::MatrixValued;
  return *this;
}

LatticeField& LatticeField::operator*=(double s) {
  for (cd& z : data_) z *= s;
  if (kind_ == FieldKind::GroupValued) kind_ = FieldKind::MatrixValued;
  return *this;
}

bool LatticeField::operator==(const LatticeField& o) const {
  return lattice_ == o.lattice_ && group_ == o.group_ && kind_ == o.kind_ && data_ == o.data_;
}

LatticeField operator-(LatticeField a, const LatticeField& b) { return a -= b; }
LatticeField operator+(LatticeField a, const LatticeField& b) { return a += b; }
LatticeField operator*(double s, LatticeField a) { return a *= s; }

int component_count(const Lattice& lattice, const GroupSpec& spec, FieldKind kind) {
  return width_of(lattice, spec, kind);
}

// ---------------------------------------------------------------------------
// Differences

cd central_difference(const LatticeField& field, std::size_t site, int axis, int component) {
  const Lattice& lat = field.lattice();
  const std::size_t fwd = lat.shift(site, axis, +1);
  const std::size_t bwd = lat.shift(site, axis, -1);
  const double inv = 1.0 / (2.0 * lat.spacing(axis));
  return (field.site(fwd)[component] - field.site(bwd)[component]) * inv;
}

LatticeField partial_derivative(const LatticeField& field, int axis) {
  const Lattice& lat = field.lattice();
  if (axis < 0 || axis >= lat.dim()) throw std::out_of_range("partial_derivative: axis out of range");
  const FieldKind kind =
      field.kind() == FieldKind::GroupValued ? FieldKind::MatrixValued : field.kind();
  LatticeField out(lat, field.group(), kind);
  const double inv = 1.0 / (2.0 * lat.spacing(axis));
  const int w = field.width();
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    auto fwd = field.site(lat.shift(s, axis, +1));
    auto bwd = field.site(lat.shift(s, axis, -1));
    auto dst = out.site(s);
    for (int c = 0; c < w; ++c) dst[c] = (fwd[c] - bwd[c]) * inv;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Band-limited generator

namespace {

int real_component_count(int m, const GroupSpec& spec, FieldKind kind) {
  const int d = spec.algebra_dim();
  switch (kind) {
    case FieldKind::GroupValued:
    case FieldKind::AlgebraValued:
      return d;
    case FieldKind::AlgebraOneForm:
      return m * d;
    case FieldKind::AlgebraTwoForm:
    case FieldKind::MomentumField:
      return m * (m - 1) / 2 * d;
    case FieldKind::ScalarDoublet:
      return 4;
    case FieldKind::MatrixValued:
      break;
  }
  throw SpecMismatch("random_smooth_field: matrix-valued fields are not generated");
}

}  // namespace

LatticeField random_smooth_field(const Lattice& lattice, const GroupSpec& spec, FieldKind kind,
                                 std::uint64_t seed, int max_mode, double amplitude) {
  const int m = lattice.dim();
  const int min_n = *std::min_element(lattice.sizes().begin(), lattice.sizes().end());
  if (max_mode < 0 || 4 * max_mode > min_n) {
    throw BandLimitError("random_smooth_field: max mode " + std::to_string(max_mode) +
                         " exceeds n/4 for n = " + std::to_string(min_n));
  }
  const int ncomp = real_component_count(m, spec, kind);
  const int side = 2 * max_mode + 1;
  int nmodes = 1;
  for (int axis = 0; axis < m; ++axis) nmodes *= side;

  // Mode wave vectors, lexicographic over [-K, K]^m.
  std::vector<int> wave(static_cast<std::size_t>(nmodes * m));
  for (int q = 0; q < nmodes; ++q) {
    int rest = q;
    for (int axis = m - 1; axis >= 0; --axis) {
      wave[q * m + axis] = rest % side - max_mode;
      rest /= side;
    }
  }

  // Complex coefficient a - i b per (component, mode) so that
  // Re(c e^{i k.x}) = a cos(k.x) + b sin(k.x).
  Rng rng(seed);
  std::vector<cd> coeff(static_cast<std::size_t>(ncomp * nmodes));
  for (int c = 0; c < ncomp; ++c) {
    double total = 0.0;
    for (int q = 0; q < nmodes; ++q) {
      int k2 = 0;
      for (int axis = 0; axis < m; ++axis) k2 += wave[q * m + axis] * wave[q * m + axis];
      const double weight = 1.0 / (1.0 + k2);
      const double a = weight * rng.uniform(-1.0, 1.0);
      const double b = weight * rng.uniform(-1.0, 1.0);
      total += std::abs(a) + std::abs(b);
      coeff[c * nmodes + q] = cd(a, -b);
    }
    const double norm = total > 0.0 ? amplitude / total : 0.0;
    for (int q = 0; q < nmodes; ++q) coeff[c * nmodes + q] *= norm;
  }

  // e^{i k x} tables per axis.
  std::vector<std::vector<cd>> table(m);
  for (int axis = 0; axis < m; ++axis) {
    const int n = lattice.size(axis);
    table[axis].resize(static_cast<std::size_t>(side * n));
    for (int k = -max_mode; k <= max_mode; ++k) {
      for (int i = 0; i < n; ++i) {
        const double x = i * lattice.spacing(axis);
        table[axis][(k + max_mode) * n + i] = std::exp(cd(0.0, k * x));
      }
    }
  }

  LatticeField out(lattice, spec.id(), kind);
  std::vector<double> values(static_cast<std::size_t>(ncomp));
  std::vector<cd> phase(static_cast<std::size_t>(nmodes));
  for (std::size_t s = 0; s < lattice.site_count(); ++s) {
    const std::vector<int> idx = lattice.multi_index(s);
    for (int q = 0; q < nmodes; ++q) {
      cd p(1.0, 0.0);
      for (int axis = 0; axis < m; ++axis) {
        p *= table[axis][(wave[q * m + axis] + max_mode) * lattice.size(axis) + idx[axis]];
      }
      phase[q] = p;
    }
    for (int c = 0; c < ncomp; ++c) {
      double v = 0.0;
      const cd* cc = coeff.data() + c * nmodes;
      for (int q = 0; q < nmodes; ++q) v += (cc[q] * phase[q]).real();
      values[c] = v;
    }

    const int d = spec.algebra_dim();
    switch (kind) {
      case FieldKind::AlgebraValued:
      case FieldKind::GroupValued: {
        AlgebraVector x(spec);
        for (int a = 0; a < d; ++a) x[a] = values[a];
        if (kind == FieldKind::AlgebraValued) {
          out.set_algebra(s, x);
        } else {
          out.set_group_element(s, exp_map(x));
        }
        break;
      }
      case FieldKind::AlgebraOneForm:
        for (int i = 0; i < m; ++i) {
          AlgebraVector x(spec);
          for (int a = 0; a < d; ++a) x[a] = values[i * d + a];
          out.set_form(s, i, x);
        }
        break;
      case FieldKind::AlgebraTwoForm:
      case FieldKind::MomentumField: {
        int pair = 0;
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j < m; ++j, ++pair) {
            AlgebraVector x(spec);
            for (int a = 0; a < d; ++a) x[a] = values[pair * d + a];
            out.set_two_form(s, i, j, x);
          }
        }
        break;
      }
      case FieldKind::ScalarDoublet:
        out.set_doublet(s, Eigen::Vector2cd(cd(values[0], values[1]), cd(values[2], values[3])));
        break;
      case FieldKind::MatrixValued:
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Norms and fits

double sup_norm(const LatticeField& field) {
  double r = 0.0;
  for (const cd& z : field.data()) r = std::max(r, std::abs(z));
  return r;
}

double l2_norm(const LatticeField& field) {
  if (field.data().empty()) return 0.0;
  double sum = 0.0;
  for (const cd& z : field.data()) sum += std::norm(z);
  return std::sqrt(sum / static_cast<double>(field.data().size()));
}

double convergence_order(std::span<const std::pair<double, double>> errors) {
  if (errors.size() < 2) throw DegenerateFit("convergence_order: need at least two samples");
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [h, e] : errors) {
    if (!(h > 0.0) || !(e > 0.0) || !std::isfinite(h) || !std::isfinite(e)) {
      throw DegenerateFit("convergence_order: h and e must be positive and finite");
    }
    mx += std::log(h);
    my += std::log(e);
  }
  mx /= static_cast<double>(errors.size());
  my /= static_cast<double>(errors.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [h, e] : errors) {
    const double dx = std::log(h) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e) - my);
  }
  if (sxx == 0.0) throw DegenerateFit("convergence_order: all spacings coincide");
  return sxy / sxx;
}

// ---------------------------------------------------------------------------
// Factor embedding

LatticeField embed_field(const LatticeField& field) {
  const GroupId from = field.group();
  if (from != GroupId::SU2 && from != GroupId::U1) {
    throw SpecMismatch("embed_field: only su2 and u1 fields embed into su2xu1");
  }
  const Lattice& lat = field.lattice();
  const int m = lat.dim();
  LatticeField out(lat, GroupId::SU2xU1, field.kind());
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    switch (field.kind()) {
      case FieldKind::GroupValued:
        out.set_group_element(s, embed_factor(field.group_element(s)));
        break;
      case FieldKind::AlgebraValued:
        out.set_algebra(s, embed_factor(field.algebra(s)));
        break;
      case FieldKind::AlgebraOneForm:
        for (int i = 0; i < m; ++i) out.set_form(s, i, embed_factor(field.form(s, i)));
        break;
      case FieldKind::AlgebraTwoForm:
      case FieldKind::MomentumField:
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j < m; ++j) out.set_two_form(s, i, j, embed_factor(field.two_form(s, i, j)));
        }
        break;
      default:
        throw SpecMismatch(std::string("embed_field: cannot embed ") + kind_name(field.kind()));
    }
  }
  return out;
}

LatticeField restrict_to_j(const LatticeField& field) {
  if (field.group() != GroupId::SU2xU1) {
    if (!field.spec().split()) throw NoSplitError("restrict_to_j: group has no split");
    throw SpecMismatch("restrict_to_j: only su2xu1 has a standalone J factor");
  }
  const Lattice& lat = field.lattice();
  const int m = lat.dim();
  LatticeField out(lat, GroupId::U1, field.kind());
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    switch (field.kind()) {
      case FieldKind::AlgebraValued:
        out.set_algebra(s, restrict_factor(field.algebra(s), Subalgebra::J));
        break;
      case FieldKind::AlgebraOneForm:
        for (int i = 0; i < m; ++i) out.set_form(s, i, restrict_factor(field.form(s, i), Subalgebra::J));
        break;
      case FieldKind::AlgebraTwoForm:
      case FieldKind::MomentumField:
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j < m; ++j) {
            out.set_two_form(s, i, j, restrict_factor(field.two_form(s, i, j), Subalgebra::J));
          }
        }
        break;
      default:
        throw SpecMismatch(std::string("restrict_to_j: cannot restrict ") + kind_name(field.kind()));
    }
  }
  return out;
}

}  // namespace dfm
