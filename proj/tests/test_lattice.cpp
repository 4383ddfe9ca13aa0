#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dfm/errors.hpp"
#include "dfm/lattice.hpp"
#include "test_util.hpp"

using namespace dfm;
using namespace dfm::test;

TEST(Lattice, Geometry) {
  const Lattice lat({8, 6, 4});
  EXPECT_EQ(lat.site_count(), 192u);
  EXPECT_DOUBLE_EQ(lat.spacing(1), 2.0 * std::numbers::pi / 6.0);
  for (std::size_t s = 0; s < lat.site_count(); ++s) {
    const std::vector<int> idx = lat.multi_index(s);
    EXPECT_EQ(lat.site_index(idx), s);
  }
  // Axis 0 is slowest.
  EXPECT_EQ(lat.multi_index(1), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(lat.shift(0, 2, -1), 3u);
  EXPECT_EQ(lat.shift(lat.shift(5, 0, 3), 0, -3), 5u);

  EXPECT_THROW(Lattice({8}), std::invalid_argument);
  EXPECT_THROW(Lattice({8, 8, 8, 8, 8}), std::invalid_argument);
  EXPECT_THROW(Lattice({8, 3}), std::invalid_argument);
}

TEST(Lattice, ConstantFieldHasZeroDerivative) {
  const Lattice lat = Lattice::cubic(2, 8);
  LatticeField f(lat, GroupId::SU2, FieldKind::AlgebraOneForm);
  for (std::size_t s = 0; s < f.site_count(); ++s) {
    for (auto& v : f.site(s)) v = 0.7;
  }
  for (int axis = 0; axis < 2; ++axis) EXPECT_EQ(sup_norm(partial_derivative(f, axis)), 0.0);
}

TEST(Lattice, SineDerivative) {
  std::vector<double> hs;
  std::vector<double> es;
  for (int n : {16, 32, 64}) {
    const Lattice lat = Lattice::cubic(2, n);
    LatticeField f(lat, GroupId::U1, FieldKind::AlgebraValued);
    for (std::size_t s = 0; s < f.site_count(); ++s) f.site(s)[0] = std::sin(lat.coordinate(s, 0));
    const LatticeField d = partial_derivative(f, 0);
    double e = 0.0;
    for (std::size_t s = 0; s < f.site_count(); ++s) {
      e = std::max(e, std::abs(d.site(s)[0].real() - std::cos(lat.coordinate(s, 0))));
    }
    const double h = lat.spacing(0);
    // |sin(h)/h - 1| <= h^2 / 6.
    EXPECT_LE(e, h * h / 6.0 + 1e-15);
    hs.push_back(h);
    es.push_back(e);
  }
  EXPECT_NEAR(order_of(hs, es), 2.0, 0.2);
}

TEST(Lattice, GeneratedFieldDerivativeConverges) {
  // Reference derivative on a 4x finer grid of the same continuum field.
  const Lattice fine = Lattice::cubic(2, 256);
  const LatticeField ref = partial_derivative(random_smooth_field(fine, SU2(), FieldKind::AlgebraValued, 5, 2, 1.0), 0);
  std::vector<double> hs;
  std::vector<double> es;
  for (int n : {16, 32, 64}) {
    const Lattice lat = Lattice::cubic(2, n);
    const LatticeField d = partial_derivative(random_smooth_field(lat, SU2(), FieldKind::AlgebraValued, 5, 2, 1.0), 0);
    const int ratio = 256 / n;
    double e = 0.0;
    for (std::size_t s = 0; s < d.site_count(); ++s) {
      std::vector<int> idx = lat.multi_index(s);
      for (int& i : idx) i *= ratio;
      for (int c = 0; c < d.width(); ++c) e = std::max(e, std::abs(d.site(s)[c] - ref.site(fine.site_index(idx))[c]));
    }
    hs.push_back(lat.spacing(0));
    es.push_back(e);
  }
  EXPECT_NEAR(order_of(hs, es), 2.0, 0.2);
}

TEST(Lattice, MixedPartialsCommute) {
  const Lattice lat({12, 16, 8});
  const LatticeField f = random_smooth_field(lat, EW(), FieldKind::AlgebraOneForm, 3, 2, 1.0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_LE(sup_norm(partial_derivative(partial_derivative(f, i), j) - partial_derivative(partial_derivative(f, j), i)),
                1e-13);
    }
  }
}

TEST(Lattice, RandomSmoothField) {
  const Lattice lat = Lattice::cubic(3, 8);
  EXPECT_EQ(sup_norm(random_smooth_field(lat, SU2(), FieldKind::AlgebraOneForm, 1, 2, 0.0)), 0.0);
  const LatticeField g = random_smooth_field(lat, SU2(), FieldKind::GroupValued, 1, 2, 0.0);
  for (std::size_t s = 0; s < g.site_count(); ++s) EXPECT_EQ(max_abs(g.matrix(s) - MatrixC::Identity(2, 2)), 0.0);

  const LatticeField a = random_smooth_field(lat, EW(), FieldKind::AlgebraTwoForm, 9, 2, 0.5);
  const LatticeField b = random_smooth_field(lat, EW(), FieldKind::AlgebraTwoForm, 9, 2, 0.5);
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(a == random_smooth_field(lat, EW(), FieldKind::AlgebraTwoForm, 10, 2, 0.5));
  EXPECT_LE(sup_norm(a), 0.5 + 1e-15);

  const LatticeField gv = random_smooth_field(lat, SU2(), FieldKind::GroupValued, 4, 2, 1.0);
  for (std::size_t s = 0; s < gv.site_count(); ++s) EXPECT_LE(gv.group_element(s).membership_residual(), 1e-10);

  EXPECT_THROW(random_smooth_field(lat, SU2(), FieldKind::AlgebraValued, 1, 3, 1.0), BandLimitError);
}

TEST(Lattice, SameContinuumFieldOnEveryGrid) {
  const LatticeField coarse = random_smooth_field(Lattice::cubic(2, 8), U1(), FieldKind::AlgebraValued, 21, 2, 1.0);
  const LatticeField fine = random_smooth_field(Lattice::cubic(2, 16), U1(), FieldKind::AlgebraValued, 21, 2, 1.0);
  for (std::size_t s = 0; s < coarse.site_count(); ++s) {
    std::vector<int> idx = coarse.lattice().multi_index(s);
    for (int& i : idx) i *= 2;
    EXPECT_NEAR(coarse.site(s)[0].real(), fine.site(fine.lattice().site_index(idx))[0].real(), 1e-14);
  }
}

TEST(Lattice, Norms) {
  const Lattice lat = Lattice::cubic(2, 4);
  LatticeField f(lat, GroupId::SU2, FieldKind::AlgebraValued);
  EXPECT_EQ(sup_norm(f), 0.0);
  EXPECT_EQ(l2_norm(f), 0.0);
  for (std::size_t s = 0; s < f.site_count(); ++s) {
    for (auto& v : f.site(s)) v = 1.0;
  }
  EXPECT_EQ(sup_norm(f), 1.0);
  EXPECT_DOUBLE_EQ(l2_norm(f), 1.0);

  const LatticeField g = random_smooth_field(lat, SU2(), FieldKind::AlgebraOneForm, 2, 1, 1.0);
  EXPECT_NEAR(sup_norm(3.0 * g), 3.0 * sup_norm(g), 1e-15);
  EXPECT_NEAR(l2_norm(3.0 * g), 3.0 * l2_norm(g), 1e-15);
}

TEST(Lattice, ConvergenceOrder) {
  std::vector<std::pair<double, double>> sq;
  std::vector<std::pair<double, double>> lin;
  std::vector<std::pair<double, double>> cube;
  for (double h : {0.4, 0.2, 0.1}) {
    sq.emplace_back(h, h * h);
    lin.emplace_back(h, h);
    cube.emplace_back(h, 5.0 * h * h * h);
  }
  EXPECT_NEAR(convergence_order(sq), 2.0, 1e-12);
  EXPECT_NEAR(convergence_order(lin), 1.0, 1e-12);
  EXPECT_NEAR(convergence_order(cube), 3.0, 1e-9);

  const std::vector<std::pair<double, double>> one{{0.1, 0.01}};
  EXPECT_THROW(convergence_order(one), DegenerateFit);
  const std::vector<std::pair<double, double>> same{{0.1, 0.01}, {0.1, 0.02}};
  EXPECT_THROW(convergence_order(same), DegenerateFit);
  const std::vector<std::pair<double, double>> zero{{0.2, 0.0}, {0.1, 0.0}};
  EXPECT_THROW(convergence_order(zero), DegenerateFit);
}

TEST(Lattice, TwoFormAntisymmetry) {
  const Lattice lat = Lattice::cubic(3, 4);
  LatticeField F(lat, GroupId::SU2, FieldKind::AlgebraTwoForm);
  AlgebraVector x(SU2());
  x.coeffs() << 1.0, -2.0, 0.5;
  F.set_two_form(3, 0, 2, x);
  EXPECT_EQ((F.two_form(3, 2, 0) + x).norm_inf(), 0.0);
  F.set_two_form(3, 1, 1, x);
  EXPECT_EQ(F.two_form(3, 1, 1).norm_inf(), 0.0);

  const LatticeField R = random_smooth_field(lat, EW(), FieldKind::MomentumField, 6, 1, 1.0);
  for (std::size_t s = 0; s < R.site_count(); ++s) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) EXPECT_EQ((R.two_form(s, i, j) + R.two_form(s, j, i)).norm_inf(), 0.0);
    }
  }
}

TEST(Lattice, KindChecks) {
  const Lattice lat = Lattice::cubic(2, 4);
  LatticeField A(lat, GroupId::SU2, FieldKind::AlgebraOneForm);
  EXPECT_THROW(A.algebra(0), SpecMismatch);
  EXPECT_THROW(A.set_form(0, 0, AlgebraVector(U1())), SpecMismatch);
  LatticeField B(lat, GroupId::U1, FieldKind::AlgebraOneForm);
  EXPECT_THROW(A -= B, SpecMismatch);
  // Derivative of a group field is a plain matrix field.
  const LatticeField g = random_smooth_field(lat, SU2(), FieldKind::GroupValued, 1, 1, 0.5);
  EXPECT_EQ(partial_derivative(g, 0).kind(), FieldKind::MatrixValued);
}

TEST(Lattice, EmbedAndRestrict) {
  const Lattice lat = Lattice::cubic(2, 8);
  const LatticeField a = random_smooth_field(lat, U1(), FieldKind::AlgebraOneForm, 2, 1, 1.0);
  const LatticeField e = embed_field(a);
  EXPECT_EQ(e.group(), GroupId::SU2xU1);
  for (std::size_t s = 0; s < e.site_count(); ++s) {
    for (int i = 0; i < 2; ++i) {
      EXPECT_EQ(e.form(s, i)[3], a.form(s, i)[0]);
      EXPECT_EQ(e.form(s, i)[0], 0.0);
    }
  }
  EXPECT_TRUE(restrict_to_j(e) == a);

  const LatticeField g = random_smooth_field(lat, SU2(), FieldKind::GroupValued, 2, 1, 1.0);
  const LatticeField eg = embed_field(g);
  for (std::size_t s = 0; s < g.site_count(); ++s) {
    EXPECT_EQ(max_abs(eg.matrix(s).topLeftCorner(2, 2) - g.matrix(s)), 0.0);
    EXPECT_EQ(eg.matrix(s)(2, 2), cd(1.0));
  }
  EXPECT_THROW(restrict_to_j(random_smooth_field(lat, SU2(), FieldKind::AlgebraOneForm, 2, 1, 1.0)), NoSplitError);
}
