#include <gtest/gtest.h>

#include "dfm/errors.hpp"
#include "dfm/reduction.hpp"
#include "test_util.hpp"

using namespace dfm;
using namespace dfm::test;

namespace {

GroupJet su2_jet(Rng& rng, int dim = 3) {
  std::vector<AlgebraVector> v;
  for (int i = 0; i < dim; ++i) v.push_back(embed_factor(random_algebra(SU2(), rng)));
  return GroupJet::from_left_velocities(embed_factor(random_group_element(SU2(), rng)), v);
}

AlgebraVector ew(double h1, double h2, double h3, double j) {
  AlgebraVector x(EW());
  x.coeffs() << h1, h2, h3, j;
  return x;
}

GroupElement affine(double a, double b) {
  MatrixC m(2, 2);
  m << a, b, 0.0, 1.0;
  return GroupElement(AFF(), m);
}

struct Config {
  Lattice lat;
  LatticeField A;
  DressingField u;
};

Config make_config(int n, std::uint64_t seed = 1) {
  const Lattice lat = Lattice::cubic(2, n);
  return Config{lat, smooth_connection(lat, EW(), seed), dressing_from_scalar(smooth_doublet(lat, seed + 1))};
}

}  // namespace

TEST(Reduction, DeltaAdOnElements) {
  const Lattice lat = Lattice::cubic(2, 4);
  LatticeField x(lat, GroupId::SU2xU1, FieldKind::AlgebraValued);
  x.set_algebra(0, ew(1, 2, 3, 4));
  x.set_algebra(1, ew(1, 2, 3, 0));
  x.set_algebra(2, ew(0, 0, 0, 5));
  const LatticeField d = delta_ad(x);
  EXPECT_EQ((d.algebra(0) - ew(0, 0, 0, 4)).norm_inf(), 0.0);
  EXPECT_EQ(d.algebra(1).norm_inf(), 0.0);
  EXPECT_EQ((d.algebra(2) - ew(0, 0, 0, 5)).norm_inf(), 0.0);
}

TEST(Reduction, DeltaAdIsIdempotentOnEveryKind) {
  const Lattice lat = Lattice::cubic(3, 4);
  for (FieldKind kind :
       {FieldKind::AlgebraValued, FieldKind::AlgebraOneForm, FieldKind::AlgebraTwoForm, FieldKind::MomentumField}) {
    const LatticeField f = random_smooth_field(lat, EW(), kind, 3, 1, 1.0);
    const LatticeField once = delta_ad(f);
    EXPECT_TRUE(delta_ad(once) == once);
    // Only the J component survives.
    for (std::size_t s = 0; s < f.site_count(); ++s) {
      const auto a = f.site(s);
      const auto b = once.site(s);
      for (std::size_t c = 0; c < a.size(); ++c) EXPECT_EQ(b[c], c % 4 == 3 ? a[c] : cd(0.0));
    }
  }
}

TEST(Reduction, DeltaAdErrors) {
  const Lattice lat = Lattice::cubic(2, 4);
  EXPECT_THROW(delta_ad(LatticeField(lat, GroupId::SU2, FieldKind::AlgebraOneForm)), NoSplitError);
  EXPECT_THROW(delta_ad(LatticeField(lat, GroupId::SU2xU1, FieldKind::GroupValued)), SpecMismatch);
  EXPECT_THROW(delta_ad(LatticeField(lat, GroupId::SU2xU1, FieldKind::ScalarDoublet)), SpecMismatch);
}

TEST(Reduction, DeltaEquivarianceDirectProduct) {
  Rng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const GroupElement g = random_group_element(EW(), rng);
    const AlgebraVector x = random_algebra(EW(), rng);
    ASSERT_LE(delta_equivariance_residual(g, x), 1e-12);
  }
}

TEST(Reduction, DeltaEquivarianceFailsForAffine) {
  // g^-1 [[s, t], [0, 0]] g = [[s, (s b + t) / a], [0, 0]], while translations
  // are fixed by the translation part j of g = j h. The residual is
  // |(s b + t) / a - t|.
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const double a = std::exp(rng.uniform(-1, 1));
    const double b = rng.uniform(-1, 1);
    const double s = rng.uniform(-1, 1);
    const double t = rng.uniform(-1, 1);
    AlgebraVector x(AFF());
    x.coeffs() << s, t;
    EXPECT_NEAR(delta_equivariance_residual(affine(a, b), x), std::abs((s * b + t) / a - t), 1e-13);
  }
  AlgebraVector x(AFF());
  x.coeffs() << 1.0, 0.0;
  EXPECT_NEAR(delta_equivariance_residual(affine(2.0, 1.0), x), 0.5, 1e-15);
  EXPECT_THROW(delta_equivariance_residual(random_group_element(SU2(), 1), random_algebra(SU2(), 1)), NoSplitError);
}

TEST(Reduction, DeltaConnection) {
  const Config su = make_config(16);
  const LatticeField red = delta_connection(su.A, su.u);
  EXPECT_TRUE(delta_ad(red) == red);
  // J part of A passes through untouched: u is H-valued and H commutes with J.
  for (std::size_t s = 0; s < red.site_count(); ++s) {
    for (int i = 0; i < 2; ++i) EXPECT_NEAR(red.form(s, i)[3], su.A.form(s, i)[3], 1e-15);
  }
  // A purely U(1) connection is reproduced exactly.
  const LatticeField a1 = embed_field(smooth_connection(su.lat, U1(), 4));
  EXPECT_LE(sup_norm(delta_connection(a1, su.u) - a1), 1e-15);

  // H-invariance: delta(A^gamma, gamma^-1 u) = delta(A, u).
  const LatticeField gamma = embed_field(smooth_group(su.lat, SU2(), 5));
  const LatticeField moved =
      delta_connection(gauge_transform_connection(su.A, gamma), dressing_transform(su.u, gamma));
  EXPECT_LE(sup_norm(moved - red), 1e-12);
}

TEST(Reduction, DeltaConnectionPointFrameInvariance) {
  Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    std::vector<AlgebraVector> A;
    for (int i = 0; i < 3; ++i) A.push_back(random_algebra(EW(), rng));
    const GroupJet u = su2_jet(rng);
    const GroupJet gamma = su2_jet(rng);
    const auto lhs = delta_connection_at(transform_connection_at(A, gamma), inverse(gamma) * u);
    const auto rhs = delta_connection_at(A, u);
    for (int i = 0; i < 3; ++i) {
      ASSERT_LE((lhs[i] - rhs[i]).norm_inf(), 1e-12);
      EXPECT_EQ(rhs[i][0], 0.0);
    }
  }
}

TEST(Reduction, Zeta) {
  const Config su = make_config(16);
  const ConfigPair pair = ConfigPair::from_connection(su.A);
  EXPECT_TRUE(pair.curvature_from_connection);
  const ConfigPair z = zeta(pair, su.u);
  EXPECT_TRUE(z.curvature_from_connection);
  EXPECT_TRUE(z.A == delta_connection(su.A, su.u));
  EXPECT_LE(sup_norm(z.F - curvature(z.A)), 0.0);
  // Abelian J: the bracket term has no J component.
  EXPECT_LE(zeta_consistency_residual(su.A, su.u), 1e-12);

  // Vacuum direction everywhere: u = 1, zeta projects A directly.
  const DressingField one = dressing_from_scalar(constant_doublet(su.lat, Eigen::Vector2cd(0.0, 1.0)));
  EXPECT_LE(sup_norm(zeta(pair, one).A - delta_ad(su.A)), 0.0);
}

TEST(Reduction, Momentum) {
  Rng rng(7);
  const MomentumSample p = random_momentum(EW(), 3, rng);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int a = 0; a < 4; ++a) EXPECT_EQ(p(i, j, a), -p(j, i, a));
    }
  }
  const MomentumSample q = delta_momentum(p);
  EXPECT_EQ(q.x, p.x);
  for (int k = 0; k < 100; ++k) {
    const AlgebraVector x = random_algebra(EW(), rng);
    const AlgebraVector xj = project_subalgebra(x, Subalgebra::J);
    // <delta p, X> = <p, pr_j X> = <delta p, pr_j X>.
    const Eigen::MatrixXd a = pairing(q, x);
    EXPECT_LE((a - pairing(p, xj)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((a - pairing(q, xj)).cwiseAbs().maxCoeff(), 1e-15);
    // Oracle: only the u(1) coefficient pairs.
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(a(i, j), p(i, j, 3) * x[3], 1e-15);
    }
  }
  EXPECT_THROW(delta_momentum(random_momentum(SU2(), 2, rng)), NoSplitError);
  EXPECT_THROW(pairing(p, random_algebra(SU2(), rng)), SpecMismatch);
}

TEST(Reduction, YangMillsDensity) {
  const Lattice lat = Lattice::cubic(2, 8);
  const LatticeField zero(lat, GroupId::SU2xU1, FieldKind::AlgebraOneForm);
  for (double v : yang_mills_density(ConfigPair::from_connection(zero))) EXPECT_EQ(v, 0.0);

  // Single component F_01 = (1, 0, 0, 2): L = -(1 + 4) / 4.
  LatticeField F(lat, GroupId::SU2xU1, FieldKind::AlgebraTwoForm);
  F.set_two_form(0, 0, 1, ew(1, 0, 0, 2));
  const ConfigPair pair{zero, F, false};
  EXPECT_DOUBLE_EQ(yang_mills_density(pair)[0], -1.25);
  EXPECT_DOUBLE_EQ(j_density(F)[0], -1.0);
  EXPECT_EQ(yang_mills_density(pair)[1], 0.0);

  const LatticeField G = random_smooth_field(lat, EW(), FieldKind::AlgebraTwoForm, 2, 1, 1.0);
  const auto l1 = yang_mills_density(ConfigPair{zero, G, false});
  const auto l2 = yang_mills_density(ConfigPair{zero, 2.0 * G, false});
  for (std::size_t s = 0; s < l1.size(); ++s) EXPECT_NEAR(l2[s], 4.0 * l1[s], 1e-14);

  // Gauge invariance of the density under Ad.
  const LatticeField g = smooth_group(lat, EW(), 3);
  const auto lg = yang_mills_density(ConfigPair{zero, gauge_transform_curvature(G, g), false});
  for (std::size_t s = 0; s < l1.size(); ++s) EXPECT_NEAR(lg[s], l1[s], 1e-14);

  EXPECT_THROW(yang_mills_density(ConfigPair{zero, zero, false}), SpecMismatch);
  EXPECT_THROW(j_density(random_smooth_field(lat, SU2(), FieldKind::AlgebraTwoForm, 1, 1, 1.0)), NoSplitError);
}

TEST(Reduction, YangMillsDensityAtPoint) {
  PairTensor F(SU2(), 3);
  F(0, 1, 2) = 2.0;
  F(1, 0, 2) = -2.0;
  EXPECT_DOUBLE_EQ(yang_mills_density_at(F), -1.0);
}

TEST(Reduction, ReducedLagrangianFactorizes) {
  for (std::uint64_t seed : {1u, 5u, 9u}) {
    const Config su = make_config(16, seed);
    const CheckResult c = reduced_lagrangian_check(ConfigPair::from_connection(su.A), su.u, 1e-12);
    EXPECT_TRUE(c.pass) << c.residual;
    EXPECT_EQ(c.name, "reduced_lagrangian_factorization");
    EXPECT_EQ(c.details["sites"], 256);
  }
}

TEST(Reduction, ReducedDensityIsHInvariant) {
  Rng rng(10);
  for (int k = 0; k < 100; ++k) {
    PairTensor F(EW(), 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const AlgebraVector x = random_algebra(EW(), rng);
        F.set(i, j, x);
        F.set(j, i, -1.0 * x);
      }
    }
    const GroupElement u = embed_factor(random_group_element(SU2(), rng));
    const GroupElement gamma = embed_factor(random_group_element(SU2(), rng));
    PairTensor Fg(EW(), 3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) Fg.set(i, j, adjoint_algebra(gamma.inverse(), F.at(i, j)));
    }
    EXPECT_NEAR(reduced_density_at(Fg, gamma.inverse() * u), reduced_density_at(F, u), 1e-14);
    // With H acting trivially on J, only the U(1) coefficients contribute.
    double expect = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) expect += F(i, j, 3) * F(i, j, 3);
    }
    EXPECT_NEAR(reduced_density_at(F, u), -0.25 * expect, 1e-14);
  }
}
