#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dfm/errors.hpp"
#include "dfm/gauge.hpp"
#include "dfm/jets.hpp"
#include "test_util.hpp"

using namespace dfm;
using namespace dfm::test;

namespace {

JetSample zero_jet(const GroupSpec& spec, int dim) {
  JetSample jet{std::vector<double>(dim, 0.0), std::vector<AlgebraVector>(dim, AlgebraVector(spec)), PairTensor(spec, dim)};
  return jet;
}

}  // namespace

TEST(Jets, ConstantConnectionHasZeroDerivative) {
  const Lattice lat = Lattice::cubic(2, 8);
  LatticeField A(lat, GroupId::SU2, FieldKind::AlgebraOneForm);
  for (std::size_t s = 0; s < A.site_count(); ++s) {
    for (auto& v : A.site(s)) v = -0.4;
  }
  const JetSample jet = jet_of_connection(A, 9);
  for (double v : jet.dA.data()) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(jet.A[1][2], -0.4);
}

TEST(Jets, AnalyticDerivative) {
  // A_1 = sin(x^0) e, so dA(0, 1) = cos(x^0) and everything else vanishes.
  for (int n : {16, 32}) {
    const Lattice lat = Lattice::cubic(2, n);
    LatticeField A(lat, GroupId::U1, FieldKind::AlgebraOneForm);
    for (std::size_t s = 0; s < A.site_count(); ++s) A.site(s)[1] = std::sin(lat.coordinate(s, 0));
    const double h = lat.spacing(0);
    for (std::size_t s = 0; s < A.site_count(); ++s) {
      const JetSample jet = jet_of_connection(A, s);
      EXPECT_LE(std::abs(jet.dA(0, 1, 0) - std::cos(lat.coordinate(s, 0))), h * h / 6.0 + 1e-15);
      EXPECT_EQ(jet.dA(1, 0, 0), 0.0);
      EXPECT_EQ(jet.dA(1, 1, 0), 0.0);
    }
  }
}

TEST(Jets, CentralDifferenceExactWhereThirdDerivativeVanishes) {
  // d^3 sin = -cos vanishes at x = pi/2, where the symmetric stencil is exact.
  const Lattice lat = Lattice::cubic(2, 16);
  LatticeField A(lat, GroupId::U1, FieldKind::AlgebraOneForm);
  for (std::size_t s = 0; s < A.site_count(); ++s) A.site(s)[0] = std::sin(lat.coordinate(s, 1));
  const std::vector<int> idx{3, 4};  // x^1 = 4 h = pi / 2
  const JetSample jet = jet_of_connection(A, lat.site_index(idx));
  EXPECT_LE(std::abs(jet.dA(1, 0, 0) - std::cos(std::numbers::pi / 2)), 1e-12);
}

TEST(Jets, Pr2KillsSymmetricPart) {
  Rng rng(1);
  JetSample jet = zero_jet(SU2(), 3);
  for (int j = 0; j < 3; ++j) {
    for (int k = j; k < 3; ++k) {
      for (int a = 0; a < 3; ++a) {
        const double v = rng.uniform(-1, 1);
        jet.dA(j, k, a) = v;
        jet.dA(k, j, a) = v;
      }
    }
  }
  const PairTensor p2 = pr2(jet);
  for (double v : p2.data()) EXPECT_EQ(v, 0.0);
  const PairTensor p1 = pr1(jet);
  EXPECT_EQ(max_abs_difference(p1, jet.dA), 0.0);
}

TEST(Jets, AbelianSplitting) {
  Rng rng(2);
  const JetSample jet = random_jet(U1(), 3, rng);
  const PairTensor p1 = pr1(jet);
  const PairTensor p2 = pr2(jet);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(p2(j, k, 0), 0.5 * (jet.dA(j, k, 0) - jet.dA(k, j, 0)), 1e-16);
      EXPECT_NEAR(p1(j, k, 0), 0.5 * (jet.dA(j, k, 0) + jet.dA(k, j, 0)), 1e-16);
    }
  }
}

TEST(Jets, SplittingFormulas) {
  // pr1/pr2 against the coordinate formulas with c = eps for su2.
  Rng rng(3);
  const JetSample jet = random_jet(SU2(), 3, rng);
  const PairTensor p1 = pr1(jet);
  const PairTensor p2 = pr2(jet);
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        double quad = 0.0;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) quad += 0.5 * (l - a) * (a - b) * (b - l) * jet.A[j][a] * jet.A[k][b];
        }
        EXPECT_NEAR(p2(j, k, l), 0.5 * (jet.dA(j, k, l) - jet.dA(k, j, l) + quad), 1e-15);
        EXPECT_NEAR(p1(j, k, l), 0.5 * (jet.dA(j, k, l) + jet.dA(k, j, l) - quad), 1e-15);
        EXPECT_EQ(p2(j, k, l), -p2(k, j, l));
      }
    }
  }
}

TEST(Jets, SplittingReconstructs) {
  Rng rng(4);
  for (const GroupSpec* spec : {&U1(), &SU2(), &EW(), &AFF()}) {
    for (int k = 0; k < 1000; ++k) {
      const JetSample jet = random_jet(*spec, 3, rng);
      const PairTensor p1 = pr1(jet);
      const PairTensor p2 = pr2(jet);
      for (std::size_t i = 0; i < p1.data().size(); ++i) {
        ASSERT_LE(std::abs(p1.data()[i] + p2.data()[i] - jet.dA.data()[i]), 1e-14);
      }
    }
  }
}

TEST(Jets, Pr2MatchesCurvature) {
  const Lattice lat({8, 12, 16});
  const LatticeField A = random_smooth_field(lat, EW(), FieldKind::AlgebraOneForm, 5, 2, 0.8);
  const LatticeField F = curvature(A);
  for (std::size_t s = 0; s < A.site_count(); s += 7) {
    const PairTensor p2 = pr2(jet_of_connection(A, s));
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) EXPECT_LE((2.0 * p2.at(j, k) - F.two_form(s, j, k)).norm_inf(), 1e-12);
    }
  }
}

TEST(Jets, JetDelta) {
  Rng rng(6);
  JetSample jet = random_jet(EW(), 2, rng);
  const JetSample red = jet_delta(jet);
  for (int j = 0; j < 2; ++j) {
    EXPECT_EQ(red.A[j][0], 0.0);
    EXPECT_EQ(red.A[j][3], jet.A[j][3]);
    for (int k = 0; k < 2; ++k) {
      EXPECT_EQ(red.dA(j, k, 1), 0.0);
      EXPECT_EQ(red.dA(j, k, 3), jet.dA(j, k, 3));
    }
  }
  // A j-valued jet is fixed; an h-valued one is killed.
  EXPECT_EQ(max_abs_difference(jet_delta(red).dA, red.dA), 0.0);
  JetSample h = jet;
  for (auto& a : h.A) a = project_subalgebra(a, Subalgebra::H);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) h.dA(j, k, 3) = 0.0;
  }
  const JetSample hred = jet_delta(h);
  for (double v : hred.dA.data()) EXPECT_EQ(v, 0.0);
  for (const auto& a : hred.A) EXPECT_EQ(a.norm_inf(), 0.0);

  EXPECT_THROW(jet_delta(random_jet(SU2(), 2, rng)), NoSplitError);
}

TEST(Jets, JetDeltaCommutesWithSplitting) {
  Rng rng(7);
  for (int n = 0; n < 1000; ++n) {
    const JetSample jet = random_jet(EW(), 3, rng);
    const JetSample red = jet_delta(jet);
    const PairTensor a1 = pr1(red);
    const PairTensor b1 = pr1(jet);
    const PairTensor a2 = pr2(red);
    const PairTensor b2 = pr2(jet);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        ASSERT_LE((a1.at(j, k) - project_subalgebra(b1.at(j, k), Subalgebra::J)).norm_inf(), 1e-12);
        ASSERT_LE((a2.at(j, k) - project_subalgebra(b2.at(j, k), Subalgebra::J)).norm_inf(), 1e-12);
      }
    }
  }
}

TEST(Jets, JsonLayout) {
  JetSample jet = zero_jet(SU2(), 2);
  jet.x = {0.5, 1.5};
  jet.dA(0, 1, 2) = 7.0;
  jet.A[1][0] = -1.0;
  const nlohmann::json j = to_json(jet);
  EXPECT_EQ(j["x"][1], 1.5);
  EXPECT_EQ(j["dA"][0][1][2], 7.0);
  EXPECT_EQ(j["A"][1][0], -1.0);
}
