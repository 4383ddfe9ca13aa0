#pragma once

// Reduction onto the residual J-structure of a split group G = J H:
//
//   Delta  on ad-valued forms: componentwise pr_j
//   delta  on connections:     pr_j o dress_connection(., u)
//   zeta   on (A, F) pairs:    (delta(A), curvature(delta(A)))
//
// plus the momentum restriction and the Yang-Mills demonstrator Lagrangian
// used to check L = L~ o zeta.

#include <vector>

#include <Eigen/Dense>

#include "dfm/dressing.hpp"
#include "dfm/jets.hpp"
#include "dfm/lattice.hpp"
#include "dfm/report.hpp"

namespace dfm {

// pr_j on every site and form component. Accepts algebra, connection,
// curvature and momentum fields. Throws NoSplitError.
LatticeField delta_ad(const LatticeField& field);

// pr_j(Ad_{g^-1} X) - Ad_{j^-1}(pr_j X) in sup norm, j from group_split(g).
// Zero for direct products; generically nonzero otherwise.
double delta_equivariance_residual(const GroupElement& g, const AlgebraVector& x);

struct ConfigPair {
  LatticeField A;
  LatticeField F;
  bool curvature_from_connection = false;

  // F = curvature(A).
  static ConfigPair from_connection(LatticeField A);
};

LatticeField delta_connection(const LatticeField& A, const DressingField& u);
std::vector<AlgebraVector> delta_connection_at(const std::vector<AlgebraVector>& A, const GroupJet& u);

ConfigPair zeta(const ConfigPair& pair, const DressingField& u);

// sup | pr_j(curvature(A^u)) - curvature(pr_j(A^u)) |.
double zeta_consistency_residual(const LatticeField& A, const DressingField& u);

// Dual coefficients p_a^{ij}, antisymmetric in (i, j).
class MomentumSample {
 public:
  MomentumSample(const GroupSpec& spec, int dim);

  const GroupSpec& spec() const { return *spec_; }
  int dim() const { return dim_; }
  std::vector<double> x;

  double operator()(int i, int j, int a) const { return p_[index(i, j, a)]; }
  // Sets (i, j) and (j, i) = -value.
  void set(int i, int j, int a, double value);

 private:
  std::size_t index(int i, int j, int a) const {
    return static_cast<std::size_t>((i * dim_ + j) * spec_->algebra_dim() + a);
  }

  const GroupSpec* spec_;
  int dim_;
  std::vector<double> p_;
};

MomentumSample random_momentum(const GroupSpec& spec, int dim, Rng& rng, double scale = 1.0);

// Keeps p_a for J indices, zeroes H indices. Throws NoSplitError.
MomentumSample delta_momentum(const MomentumSample& p);

// <p, X>^{ij} = sum_a p_a^{ij} X^a.
Eigen::MatrixXd pairing(const MomentumSample& p, const AlgebraVector& x);

// L = -1/4 sum_{a, i<j} (F^a_ij)^2 per site.
std::vector<double> yang_mills_density(const ConfigPair& pair);
double yang_mills_density_at(const PairTensor& F);

// Same density restricted to the J components of F.
std::vector<double> j_density(const LatticeField& F);

// Checks L_J(dressed pair) = L(zeta(pair, u)) sitewise.
CheckResult reduced_lagrangian_check(const ConfigPair& pair, const DressingField& u, double tolerance);

// Reduced density of the dressed curvature at a point: L_J(Ad_{u^-1} F).
double reduced_density_at(const PairTensor& F, const GroupElement& u);

}  // namespace dfm
