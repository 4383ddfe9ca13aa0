#pragma once

// Periodic grids over the flat torus [0, 2pi)^m and the fields that live on
// them. Every field stores a fixed number of complex components per site;
// algebra-valued kinds keep their real coefficients in the real part.

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dfm/liegroup.hpp"

namespace dfm {

class Lattice {
 public:
  // 2 <= m <= 4 axes, every n_i >= 4.
  explicit Lattice(std::vector<int> sizes);

  // Square lattice with n sites per axis.
  static Lattice cubic(int dim, int n) { return Lattice(std::vector<int>(dim, n)); }

  int dim() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  int size(int axis) const { return sizes_[axis]; }
  double spacing(int axis) const;
  std::size_t site_count() const { return site_count_; }

  // Lexicographic order, axis 0 slowest.
  std::vector<int> multi_index(std::size_t site) const;
  std::size_t site_index(std::span<const int> index) const;
  std::size_t shift(std::size_t site, int axis, int step) const;
  double coordinate(std::size_t site, int axis) const;
  std::vector<double> coordinates(std::size_t site) const;

  bool operator==(const Lattice& other) const { return sizes_ == other.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t site_count_ = 0;
};

enum class FieldKind {
  GroupValued,
  AlgebraValued,
  AlgebraOneForm,
  AlgebraTwoForm,
  ScalarDoublet,
  MomentumField,
  // rep_dim x rep_dim matrices off the group, e.g. derivatives of a
  // group-valued field. Not serializable.
  MatrixValued,
};

const char* kind_name(FieldKind kind);

class LatticeField {
 public:
  // Zero field; group-valued fields start at the identity.
  LatticeField(Lattice lattice, GroupId group, FieldKind kind);

  const Lattice& lattice() const { return lattice_; }
  const GroupSpec& spec() const { return GroupSpec::get(group_); }
  GroupId group() const { return group_; }
  FieldKind kind() const { return kind_; }
  int width() const { return width_; }
  std::size_t site_count() const { return lattice_.site_count(); }

  std::span<const cd> site(std::size_t s) const { return {data_.data() + s * width_, static_cast<std::size_t>(width_)}; }
  std::span<cd> site(std::size_t s) { return {data_.data() + s * width_, static_cast<std::size_t>(width_)}; }
  const std::vector<cd>& data() const { return data_; }

  AlgebraVector algebra(std::size_t s) const;
  void set_algebra(std::size_t s, const AlgebraVector& x);

  // One-form component i.
  AlgebraVector form(std::size_t s, int i) const;
  void set_form(std::size_t s, int i, const AlgebraVector& x);

  // Two-form (or momentum) component (i, j). Setting (i, j) also sets
  // (j, i) to the negative; the diagonal stays zero.
  AlgebraVector two_form(std::size_t s, int i, int j) const;
  void set_two_form(std::size_t s, int i, int j, const AlgebraVector& x);

  GroupElement group_element(std::size_t s) const;
  void set_group_element(std::size_t s, const GroupElement& g);

  MatrixC matrix(std::size_t s) const;
  void set_matrix(std::size_t s, const MatrixC& m);

  Eigen::Vector2cd doublet(std::size_t s) const;
  void set_doublet(std::size_t s, const Eigen::Vector2cd& v);

  LatticeField& operator-=(const LatticeField& o);
  LatticeField& operator+=(const LatticeField& o);
  LatticeField& operator*=(double s);

  bool operator==(const LatticeField& o) const;

 private:
  void require(FieldKind k, const char* what) const;
  void require_compatible(const LatticeField& o) const;

  Lattice lattice_;
  GroupId group_;
  FieldKind kind_;
  int width_;
  std::vector<cd> data_;
};

LatticeField operator-(LatticeField a, const LatticeField& b);
LatticeField operator+(LatticeField a, const LatticeField& b);
LatticeField operator*(double s, LatticeField a);

int component_count(const Lattice& lattice, const GroupSpec& spec, FieldKind kind);

// Central difference (f(x + h e_i) - f(x - h e_i)) / 2h with periodic
// wraparound, applied to every stored component. Group-valued input yields a
// MatrixValued field.
LatticeField partial_derivative(const LatticeField& field, int axis);

// Central difference of a single stored component at one site.
cd central_difference(const LatticeField& field, std::size_t site, int axis, int component);

// Band-limited trigonometric polynomial per real component, modes |k_i| <= K.
// The coefficients depend only on (seed, spec, kind, dim, K, amplitude), so
// the same continuum field is sampled on every refinement. Every real
// component is bounded by amplitude. Group-valued kinds are exp of a smooth
// algebra field. Throws BandLimitError unless 4K <= min n_i.
LatticeField random_smooth_field(const Lattice& lattice, const GroupSpec& spec, FieldKind kind,
                                 std::uint64_t seed, int max_mode, double amplitude);

double sup_norm(const LatticeField& field);
double l2_norm(const LatticeField& field);

// Least-squares slope of log e against log h. Throws DegenerateFit.
double convergence_order(std::span<const std::pair<double, double>> errors);

// Pointwise maps between the product group and its factors.
// su2 / u1 field -> su2xu1 field (group, algebra and form kinds).
LatticeField embed_field(const LatticeField& field);
// su2xu1 algebra-kind field -> the J (u1) factor.
LatticeField restrict_to_j(const LatticeField& field);

}  // namespace dfm
