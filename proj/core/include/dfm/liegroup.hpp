#pragma once

// Matrix Lie groups used by the dressing-field toolkit.
//
//   U1          1x1 unitary matrices, basis e = i
//   SU2         2x2 special unitary, basis e_a = -(i/2) sigma_a, so that
//               [e_a, e_b] = eps_abc e_c
//   SU2xU1      3x3 block diagonal (SU(2) block, U(1) entry); H = SU(2),
//               J = U(1), coefficients ordered (h1, h2, h3 | j)
//   AffinePlus  2x2 real [[a, b], [0, 1]], a > 0; basis e_1 = scaling,
//               e_2 = translation. Split with J = translations (normal),
//               H = scalings, g = j h. Not a direct product.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dfm/random.hpp"

namespace dfm {

using cd = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;

enum class GroupId { U1, SU2, SU2xU1, AffinePlus };
enum class Subalgebra { H, J };

std::string_view group_name(GroupId id);
std::optional<GroupId> parse_group_name(std::string_view name);

struct ProductSplit {
  std::vector<int> h_indices;
  std::vector<int> j_indices;
  bool direct = false;  // H and J commute
};

class GroupSpec {
 public:
  static const GroupSpec& get(GroupId id);

  GroupId id() const { return id_; }
  std::string_view name() const { return group_name(id_); }
  int rep_dim() const { return rep_dim_; }
  int algebra_dim() const { return algebra_dim_; }
  const std::vector<MatrixC>& basis() const { return basis_; }
  const std::optional<ProductSplit>& split() const { return split_; }
  bool unitary() const { return id_ != GroupId::AffinePlus; }

  // Least-squares coefficients of m in the basis, and the max-abs residual
  // of m minus its reconstruction.
  std::pair<Eigen::VectorXd, double> coefficients(const MatrixC& m) const;

  bool operator==(const GroupSpec& other) const { return id_ == other.id_; }

 private:
  explicit GroupSpec(GroupId id);

  GroupId id_;
  int rep_dim_ = 0;
  int algebra_dim_ = 0;
  std::vector<MatrixC> basis_;
  std::optional<ProductSplit> split_;
  Eigen::MatrixXd pinv_;  // algebra_dim x 2*rep_dim^2
};

class AlgebraVector {
 public:
  explicit AlgebraVector(const GroupSpec& spec);
  AlgebraVector(const GroupSpec& spec, Eigen::VectorXd coeffs);

  static AlgebraVector zero(const GroupSpec& spec) { return AlgebraVector(spec); }
  static AlgebraVector basis(const GroupSpec& spec, int a);

  const GroupSpec& spec() const { return *spec_; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }
  Eigen::VectorXd& coeffs() { return coeffs_; }
  double operator[](int a) const { return coeffs_[a]; }
  double& operator[](int a) { return coeffs_[a]; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  MatrixC matrix() const;
  double norm_inf() const { return coeffs_.size() ? coeffs_.cwiseAbs().maxCoeff() : 0.0; }

  AlgebraVector& operator+=(const AlgebraVector& o);
  AlgebraVector& operator-=(const AlgebraVector& o);
  AlgebraVector& operator*=(double s) {
    coeffs_ *= s;
    return *this;
  }

 private:
  const GroupSpec* spec_;
  Eigen::VectorXd coeffs_;
};

AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b);
AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b);
AlgebraVector operator*(double s, AlgebraVector a);

// Expands a matrix in the basis. Returns the vector and the projection
// residual (zero for exact members of the algebra).
std::pair<AlgebraVector, double> project_to_algebra(const GroupSpec& spec, const MatrixC& m);

class GroupElement {
 public:
  GroupElement(const GroupSpec& spec, MatrixC matrix);

  static GroupElement identity(const GroupSpec& spec);

  const GroupSpec& spec() const { return *spec_; }
  const MatrixC& matrix() const { return matrix_; }

  GroupElement inverse() const;

  // Distance from the matrix form of the group: unitarity (and det = 1 for
  // the SU(2) block) or the affine shape [[a, b], [0, 1]] with a > 0.
  double membership_residual() const;

 private:
  const GroupSpec* spec_;
  MatrixC matrix_;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);

GroupElement exp_map(const AlgebraVector& x);
// Throws BranchCutError at the branch boundary of the principal log.
AlgebraVector log_map(const GroupElement& g);

// g X g^-1 re-expanded in the basis.
AlgebraVector adjoint_algebra(const GroupElement& g, const AlgebraVector& x);
// g h g^-1.
GroupElement adjoint_group(const GroupElement& g, const GroupElement& h);
AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y);

// c^a_bc with [e_b, e_c] = sum_a c^a_bc e_a.
class StructureConstants {
 public:
  explicit StructureConstants(const GroupSpec& spec);

  int dim() const { return dim_; }
  double operator()(int a, int b, int c) const { return data_[(a * dim_ + b) * dim_ + c]; }

 private:
  int dim_;
  std::vector<double> data_;
};

StructureConstants structure_constants(const GroupSpec& spec);

// Zeroes the complementary coefficients. Throws NoSplitError.
AlgebraVector project_subalgebra(const AlgebraVector& x, Subalgebra part);

struct GroupSplit {
  GroupElement h;
  GroupElement j;
};

// g = j h. For the direct product also g = h j. Throws NoSplitError.
GroupSplit group_split(const GroupElement& g);

// SU2 or U1 element placed into its SU2xU1 block.
GroupElement embed_factor(const GroupElement& g);
AlgebraVector embed_factor(const AlgebraVector& x);
// SU2xU1 algebra vector restricted to one factor (SU2 for H, U1 for J).
AlgebraVector restrict_factor(const AlgebraVector& x, Subalgebra part);

AlgebraVector random_algebra(const GroupSpec& spec, std::uint64_t seed, double scale = 1.0);
AlgebraVector random_algebra(const GroupSpec& spec, Rng& rng, double scale = 1.0);
GroupElement random_group_element(const GroupSpec& spec, std::uint64_t seed, double scale = 1.0);
GroupElement random_group_element(const GroupSpec& spec, Rng& rng, double scale = 1.0);

}  // namespace dfm
