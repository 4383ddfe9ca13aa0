#pragma once

// First-jet coordinates (x^i, A^a_j, A^a_jk) of a connection and the
// splitting of J^1 C into a symmetric part and the curvature part:
//
//   pr1: (1/2)(A^l_jk + A^l_kj - c^l_ab A^a_j A^b_k)
//   pr2: (1/2)(A^l_jk - A^l_kj + c^l_ab A^a_j A^b_k)
//
// with A^a_jk = d_j A^a_k, so that 2 pr2 is the curvature F_jk.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "dfm/lattice.hpp"
#include "dfm/liegroup.hpp"

namespace dfm {

// m x m array of algebra vectors, row-major [j][k][a].
class PairTensor {
 public:
  PairTensor(const GroupSpec& spec, int dim);

  const GroupSpec& spec() const { return *spec_; }
  int dim() const { return dim_; }
  double operator()(int j, int k, int a) const { return data_[index(j, k, a)]; }
  double& operator()(int j, int k, int a) { return data_[index(j, k, a)]; }
  AlgebraVector at(int j, int k) const;
  void set(int j, int k, const AlgebraVector& x);
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(int j, int k, int a) const {
    return static_cast<std::size_t>((j * dim_ + k) * spec_->algebra_dim() + a);
  }

  const GroupSpec* spec_;
  int dim_;
  std::vector<double> data_;
};

double max_abs_difference(const PairTensor& a, const PairTensor& b);

struct JetSample {
  std::vector<double> x;
  std::vector<AlgebraVector> A;  // A_j
  PairTensor dA;                 // dA(j, k, a) = d_j A^a_k

  const GroupSpec& spec() const { return dA.spec(); }
  int dim() const { return dA.dim(); }
};

// Central differences at one site (same stencil as partial_derivative).
JetSample jet_of_connection(const LatticeField& A, std::size_t site);

PairTensor pr1(const JetSample& jet);
PairTensor pr2(const JetSample& jet);

// pr_j applied to A and dA. Throws NoSplitError.
JetSample jet_delta(const JetSample& jet);

// Uniform random jet coordinates in [-scale, scale].
JetSample random_jet(const GroupSpec& spec, int dim, Rng& rng, double scale = 1.0);

nlohmann::json to_json(const JetSample& jet);

}  // namespace dfm
