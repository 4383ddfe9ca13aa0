#include "dfm/jets.hpp"

#include <cmath>

#include "dfm/errors.hpp"

namespace dfm {

PairTensor::PairTensor(const GroupSpec& spec, int dim)
    : spec_(&spec), dim_(dim), data_(static_cast<std::size_t>(dim * dim * spec.algebra_dim()), 0.0) {}

AlgebraVector PairTensor::at(int j, int k) const {
  AlgebraVector x(*spec_);
  for (int a = 0; a < x.size(); ++a) x[a] = (*this)(j, k, a);
  return x;
}

void PairTensor::set(int j, int k, const AlgebraVector& x) {
  if (!(x.spec() == *spec_)) throw SpecMismatch("PairTensor::set: algebra of a different group");
  for (int a = 0; a < x.size(); ++a) (*this)(j, k, a) = x[a];
}

double max_abs_difference(const PairTensor& a, const PairTensor& b) {
  if (!(a.spec() == b.spec()) || a.dim() != b.dim()) throw SpecMismatch("PairTensor shapes differ");
  double r = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) r = std::max(r, std::abs(a.data()[k] - b.data()[k]));
  return r;
}

JetSample jet_of_connection(const LatticeField& A, std::size_t site) {
  if (A.kind() != FieldKind::AlgebraOneForm) throw SpecMismatch("jet_of_connection: expected a connection field");
  const Lattice& lat = A.lattice();
  const int m = lat.dim();
  const int d = A.spec().algebra_dim();
  JetSample jet{lat.coordinates(site), {}, PairTensor(A.spec(), m)};
  for (int k = 0; k < m; ++k) jet.A.push_back(A.form(site, k));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      for (int a = 0; a < d; ++a) jet.dA(j, k, a) = central_difference(A, site, j, k * d + a).real();
    }
  }
  return jet;
}

namespace {

// sign = +1 for pr2, -1 for pr1 (the sign of the A^l_kj and quadratic terms).
PairTensor split_part(const JetSample& jet, double sign) {
  const GroupSpec& spec = jet.spec();
  const int m = jet.dim();
  const int d = spec.algebra_dim();
  const StructureConstants c(spec);
  PairTensor out(spec, m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      for (int l = 0; l < d; ++l) {
        double quad = 0.0;
        for (int a = 0; a < d; ++a) {
          for (int b = 0; b < d; ++b) quad += c(l, a, b) * jet.A[j][a] * jet.A[k][b];
        }
        if (sign > 0) {
          out(j, k, l) = 0.5 * (jet.dA(j, k, l) - jet.dA(k, j, l) + quad);
        } else {
          out(j, k, l) = 0.5 * (jet.dA(j, k, l) + jet.dA(k, j, l) - quad);
        }
      }
    }
  }
  return out;
}

}  // namespace

PairTensor pr1(const JetSample& jet) { return split_part(jet, -1.0); }
PairTensor pr2(const JetSample& jet) { return split_part(jet, +1.0); }

JetSample jet_delta(const JetSample& jet) {
  JetSample out{jet.x, {}, PairTensor(jet.spec(), jet.dim())};
  for (const auto& a : jet.A) out.A.push_back(project_subalgebra(a, Subalgebra::J));
  for (int j = 0; j < jet.dim(); ++j) {
    for (int k = 0; k < jet.dim(); ++k) out.dA.set(j, k, project_subalgebra(jet.dA.at(j, k), Subalgebra::J));
  }
  return out;
}

JetSample random_jet(const GroupSpec& spec, int dim, Rng& rng, double scale) {
  JetSample jet{std::vector<double>(dim, 0.0), {}, PairTensor(spec, dim)};
  for (int i = 0; i < dim; ++i) jet.x[i] = rng.uniform(0.0, 6.283185307179586);
  for (int j = 0; j < dim; ++j) jet.A.push_back(random_algebra(spec, rng, scale));
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) jet.dA.set(j, k, random_algebra(spec, rng, scale));
  }
  return jet;
}

nlohmann::json to_json(const JetSample& jet) {
  nlohmann::json j;
  j["group"] = std::string(jet.spec().name());
  j["x"] = jet.x;
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : jet.A) a.push_back(std::vector<double>(v.coeffs().data(), v.coeffs().data() + v.size()));
  j["A"] = std::move(a);
  nlohmann::json da = nlohmann::json::array();
  for (int r = 0; r < jet.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < jet.dim(); ++k) {
      const AlgebraVector v = jet.dA.at(r, k);
      row.push_back(std::vector<double>(v.coeffs().data(), v.coeffs().data() + v.size()));
    }
    da.push_back(std::move(row));
  }
  j["dA"] = std::move(da);
  return j;
}

}  // namespace dfm
