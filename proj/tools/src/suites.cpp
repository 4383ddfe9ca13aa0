#include "dfm/cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>

#include "dfm/dressing.hpp"
#include "dfm/errors.hpp"
#include "dfm/field_io.hpp"
#include "dfm/gauge.hpp"
#include "dfm/jets.hpp"
#include "dfm/lattice.hpp"
#include "dfm/liegroup.hpp"
#include "dfm/reduction.hpp"

namespace dfm::cli {

namespace {

constexpr int kDim = 2;
constexpr int kSamples = 1000;
constexpr int kFrames = 100;
constexpr double kOrder = 2.0;
constexpr double kBand = 0.2;
constexpr double kExactFloor = 1e-12;

// Seed streams, one per generated object.
enum Stream : std::uint64_t {
  kConnection = 1,
  kGauge,
  kGauge2,
  kDressing,
  kScalar,
  kResidual,
  kSamplesStream,
};

const GroupSpec& U1() { return GroupSpec::get(GroupId::U1); }
const GroupSpec& SU2() { return GroupSpec::get(GroupId::SU2); }
const GroupSpec& EW() { return GroupSpec::get(GroupId::SU2xU1); }
const GroupSpec& AFF() { return GroupSpec::get(GroupId::AffinePlus); }

std::uint64_t stream(const SuiteOptions& o, std::uint64_t k) { return Rng::derive(o.seed, k); }

int band_limit(const std::vector<int>& sizes) {
  const int n = sizes.empty() ? 16 : *std::min_element(sizes.begin(), sizes.end());
  return std::clamp(n / 16, 1, 2);
}

int coarse(const SuiteOptions& o) { return o.sizes.empty() ? 16 : o.sizes.front(); }

template <class F>
void guarded(Report& report, const std::string& name, double tolerance, F&& check) {
  try {
    report.add(check());
  } catch (const std::exception& e) {
    CheckResult c;
    c.name = name;
    c.residual = std::numeric_limits<double>::max();
    c.tolerance = tolerance;
    c.pass = false;
    c.details = {{"error", e.what()}};
    report.add(std::move(c));
  }
}

// Passes when the measured violation reaches the threshold.
CheckResult witness_check(std::string name, double violation, double threshold, nlohmann::json details = {}) {
  const double shortfall =
      std::isfinite(violation) ? std::max(0.0, threshold - violation) : std::numeric_limits<double>::infinity();
  CheckResult c = bound_check(std::move(name), shortfall, 0.0);
  if (details.is_null()) details = nlohmann::json::object();
  details["violation"] = violation;
  details["threshold"] = threshold;
  c.details = std::move(details);
  return c;
}

CheckResult refine(std::string name, const std::vector<int>& sizes, const std::function<double(const Lattice&)>& at,
                   double exact_floor = 0.0) {
  std::vector<double> h;
  std::vector<double> e;
  for (int n : sizes) {
    const Lattice lat = Lattice::cubic(kDim, n);
    h.push_back(lat.spacing(0));
    e.push_back(at(lat));
  }
  return order_check(std::move(name), h, e, kOrder, kBand, exact_floor);
}

// ---------------------------------------------------------------------------
// Generators

LatticeField smooth_connection(const Lattice& lat, const GroupSpec& spec, std::uint64_t seed, int K) {
  return random_smooth_field(lat, spec, FieldKind::AlgebraOneForm, seed, K, 0.6);
}

LatticeField smooth_group(const Lattice& lat, const GroupSpec& spec, std::uint64_t seed, int K) {
  return random_smooth_field(lat, spec, FieldKind::GroupValued, seed, K, 0.8);
}

LatticeField h_field(const Lattice& lat, std::uint64_t seed, int K) { return embed_field(smooth_group(lat, SU2(), seed, K)); }
LatticeField j_field(const Lattice& lat, std::uint64_t seed, int K) { return embed_field(smooth_group(lat, U1(), seed, K)); }

// (0, 1) plus a smooth perturbation; |phi| >= 0.6 everywhere.
LatticeField smooth_doublet(const Lattice& lat, std::uint64_t seed, int K) {
  LatticeField phi = random_smooth_field(lat, EW(), FieldKind::ScalarDoublet, seed, K, 0.4);
  for (std::size_t s = 0; s < phi.site_count(); ++s) phi.site(s)[1] += 1.0;
  return phi;
}

GroupJet random_group_jet(const GroupSpec& spec, Rng& rng, int dim = kDim) {
  std::vector<AlgebraVector> v;
  for (int i = 0; i < dim; ++i) v.push_back(random_algebra(spec, rng));
  return GroupJet::from_left_velocities(random_group_element(spec, rng), v);
}

GroupJet random_factor_jet(const GroupSpec& factor, Rng& rng, int dim = kDim) {
  std::vector<AlgebraVector> v;
  for (int i = 0; i < dim; ++i) v.push_back(embed_factor(random_algebra(factor, rng)));
  return GroupJet::from_left_velocities(embed_factor(random_group_element(factor, rng)), v);
}

std::vector<AlgebraVector> random_forms(const GroupSpec& spec, Rng& rng, int dim = kDim) {
  std::vector<AlgebraVector> A;
  for (int i = 0; i < dim; ++i) A.push_back(random_algebra(spec, rng));
  return A;
}

Eigen::Vector2cd random_doublet(Rng& rng) {
  Eigen::Vector2cd v;
  do {
    v << cd(rng.uniform(-1, 1), rng.uniform(-1, 1)), cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  } while (v.norm() < 0.1);
  return v;
}

DoubletJet random_doublet_jet(Rng& rng, int dim = kDim) {
  DoubletJet j{random_doublet(rng), {}};
  for (int i = 0; i < dim; ++i) j.d.push_back(random_doublet(rng));
  return j;
}

double sup_diff(const std::vector<AlgebraVector>& a, const std::vector<AlgebraVector>& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, (a[i] - b[i]).norm_inf());
  return r;
}

double levi_civita(int a, int b, int c) { return 0.5 * (a - b) * (b - c) * (c - a); }

// ---------------------------------------------------------------------------
// Electroweak sitewise diagnostics

struct ElectroweakResiduals {
  double defining = 0.0;
  double unitarity = 0.0;
  double det = 0.0;
};

ElectroweakResiduals electroweak_residuals(const LatticeField& phi, const DressingField& u) {
  ElectroweakResiduals r;
  for (std::size_t s = 0; s < phi.site_count(); ++s) {
    const Eigen::Vector2cd p = phi.doublet(s);
    const Eigen::Matrix2cd U = u.at(s).matrix().topLeftCorner(2, 2);
    const Eigen::Vector2cd eta(0.0, p.norm());
    r.defining = std::max(r.defining, (U * eta - p).cwiseAbs().maxCoeff());
    r.unitarity = std::max(r.unitarity, (U.adjoint() * U - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
    r.det = std::max(r.det, std::abs(U.determinant() - 1.0));
  }
  return r;
}

double equivariance_chain_residual(const LatticeField& phi, const LatticeField& gamma) {
  const DressingField u = dressing_from_scalar(phi);
  const DressingField lhs = dressing_from_scalar(gauge_transform_doublet(phi, gamma));
  const DressingField rhs = dressing_transform(u, gamma);
  return sup_norm(lhs.field() - rhs.field());
}

}  // namespace

// ---------------------------------------------------------------------------

Report liegroup_suite(const SuiteOptions& o) {
  Report r("verify", o.seed, "all", o.sizes);
  const double ts = o.tol_scale;
  const GroupSpec* groups[] = {&U1(), &SU2(), &EW(), &AFF()};

  for (const GroupSpec* spec : groups) {
    const std::string g(spec->name());
    guarded(r, "exp_log_roundtrip_" + g, 1e-10 * ts, [&] {
      Rng rng(stream(o, kSamplesStream));
      double worst = 0.0;
      for (int k = 0; k < kSamples; ++k) {
        const AlgebraVector x = random_algebra(*spec, rng);
        worst = std::max(worst, (log_map(exp_map(x)) - x).norm_inf());
      }
      return bound_check("exp_log_roundtrip_" + g, worst, 1e-10 * ts);
    });
    guarded(r, "ad_homomorphism_" + g, 1e-12 * ts, [&] {
      Rng rng(stream(o, kSamplesStream));
      double worst = 0.0;
      for (int k = 0; k < kSamples; ++k) {
        const GroupElement a = random_group_element(*spec, rng);
        const GroupElement b = random_group_element(*spec, rng);
        const AlgebraVector x = random_algebra(*spec, rng);
        worst = std::max(worst, (adjoint_algebra(a * b, x) - adjoint_algebra(a, adjoint_algebra(b, x))).norm_inf());
      }
      return bound_check("ad_homomorphism_" + g, worst, 1e-12 * ts);
    });
    guarded(r, "jacobi_" + g, 1e-12 * ts, [&] {
      Rng rng(stream(o, kSamplesStream));
      double worst = 0.0;
      for (int k = 0; k < kSamples; ++k) {
        const AlgebraVector x = random_algebra(*spec, rng);
        const AlgebraVector y = random_algebra(*spec, rng);
        const AlgebraVector z = random_algebra(*spec, rng);
        const AlgebraVector j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        worst = std::max(worst, j.norm_inf());
      }
      return bound_check("jacobi_" + g, worst, 1e-12 * ts);
    });
    guarded(r, "structure_constants_bracket_" + g, 1e-12 * ts, [&] {
      Rng rng(stream(o, kSamplesStream));
      const StructureConstants c(*spec);
      const int d = spec->algebra_dim();
      double worst = 0.0;
      for (int k = 0; k < kSamples; ++k) {
        const AlgebraVector x = random_algebra(*spec, rng);
        const AlgebraVector y = random_algebra(*spec, rng);
        const AlgebraVector b = bracket(x, y);
        for (int a = 0; a < d; ++a) {
          double sum = 0.0;
          for (int p = 0; p < d; ++p) {
            for (int q = 0; q < d; ++q) sum += c(a, p, q) * x[p] * y[q];
          }
          worst = std::max(worst, std::abs(sum - b[a]));
        }
      }
      return bound_check("structure_constants_bracket_" + g, worst, 1e-12 * ts);
    });
  }

  // Commutator oracle: [e_b, e_c] computed from the matrices, compared with
  // eps_abc e_a, and the tabulated constants compared with eps_abc.
  guarded(r, "su2_structure_constants_levi_civita", 0.0, [&] {
    const StructureConstants c(SU2());
    const auto& e = SU2().basis();
    double table = 0.0;
    double oracle = 0.0;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int cc = 0; cc < 3; ++cc) table = std::max(table, std::abs(c(a, b, cc) - levi_civita(a, b, cc)));
      }
    }
    for (int b = 0; b < 3; ++b) {
      for (int cc = 0; cc < 3; ++cc) {
        MatrixC expect = MatrixC::Zero(2, 2);
        for (int a = 0; a < 3; ++a) expect += levi_civita(a, b, cc) * e[a];
        oracle = std::max(oracle, (e[b] * e[cc] - e[cc] * e[b] - expect).cwiseAbs().maxCoeff());
      }
    }
    CheckResult res = bound_check("su2_structure_constants_levi_civita", std::max(table, oracle), 0.0);
    res.details = {{"table_deviation", table}, {"commutator_deviation", oracle}};
    return res;
  });

  guarded(r, "delta_equivariance_su2xu1", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double worst = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const GroupElement g = random_group_element(EW(), rng);
      worst = std::max(worst, delta_equivariance_residual(g, random_algebra(EW(), rng)));
    }
    return bound_check("delta_equivariance_su2xu1", worst, 1e-12 * ts);
  });

  guarded(r, "delta_equivariance_affine_witness", 0.0, [&] {
    Rng rng(stream(o, kSamplesStream));
    double worst = 0.0;
    nlohmann::json sample;
    for (int k = 0; k < kSamples; ++k) {
      const GroupElement g = random_group_element(AFF(), rng);
      const AlgebraVector x = random_algebra(AFF(), rng);
      const double v = delta_equivariance_residual(g, x);
      if (v > worst) {
        worst = v;
        sample = {{"a", g.matrix()(0, 0).real()},
                  {"b", g.matrix()(0, 1).real()},
                  {"X", {x[0], x[1]}},
                  {"sample", k}};
      }
    }
    return witness_check("delta_equivariance_affine_witness", worst, 0.1, {{"witness", sample}});
  });
  return r;
}

Report lattice_suite(const SuiteOptions& o) {
  Report r("verify", o.seed, "all", o.sizes);
  const double ts = o.tol_scale;
  const int K = band_limit(o.sizes);

  guarded(r, "derivative_order_sin", kBand, [&] {
    return refine("derivative_order_sin", o.sizes, [](const Lattice& lat) {
      LatticeField f(lat, GroupId::U1, FieldKind::AlgebraValued);
      for (std::size_t s = 0; s < f.site_count(); ++s) f.site(s)[0] = std::sin(lat.coordinate(s, 0));
      const LatticeField d = partial_derivative(f, 0);
      double e = 0.0;
      for (std::size_t s = 0; s < f.site_count(); ++s) {
        e = std::max(e, std::abs(d.site(s)[0].real() - std::cos(lat.coordinate(s, 0))));
      }
      return e;
    });
  });

  guarded(r, "derivative_order_generated", kBand, [&] {
    const int finest = *std::max_element(o.sizes.begin(), o.sizes.end());
    const Lattice ref_lat = Lattice::cubic(kDim, 4 * finest);
    const LatticeField ref =
        partial_derivative(random_smooth_field(ref_lat, SU2(), FieldKind::AlgebraValued, stream(o, kConnection), K, 1.0), 1);
    return refine("derivative_order_generated", o.sizes, [&](const Lattice& lat) {
      const LatticeField d = partial_derivative(
          random_smooth_field(lat, SU2(), FieldKind::AlgebraValued, stream(o, kConnection), K, 1.0), 1);
      const int ratio = ref_lat.size(0) / lat.size(0);
      double e = 0.0;
      for (std::size_t s = 0; s < d.site_count(); ++s) {
        std::vector<int> idx = lat.multi_index(s);
        for (int& i : idx) i *= ratio;
        const std::size_t t = ref_lat.site_index(idx);
        for (int c = 0; c < d.width(); ++c) e = std::max(e, std::abs(d.site(s)[c] - ref.site(t)[c]));
      }
      return e;
    });
  });

  guarded(r, "mixed_partials_commute", 1e-13 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const LatticeField f = random_smooth_field(lat, EW(), FieldKind::AlgebraOneForm, stream(o, kConnection), K, 1.0);
    const double e = sup_norm(partial_derivative(partial_derivative(f, 0), 1) - partial_derivative(partial_derivative(f, 1), 0));
    return bound_check("mixed_partials_commute", e, 1e-13 * ts);
  });

  guarded(r, "generator_determinism", 0.0, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const LatticeField a = random_smooth_field(lat, EW(), FieldKind::AlgebraOneForm, stream(o, kConnection), K, 1.0);
    const LatticeField b = random_smooth_field(lat, EW(), FieldKind::AlgebraOneForm, stream(o, kConnection), K, 1.0);
    return bound_check("generator_determinism", a == b ? 0.0 : sup_norm(a - b) + 1.0, 0.0);
  });

  guarded(r, "two_form_antisymmetry", 0.0, [&] {
    const Lattice lat({coarse(o), coarse(o), coarse(o)});
    const LatticeField f = random_smooth_field(lat, SU2(), FieldKind::AlgebraTwoForm, stream(o, kConnection), K, 1.0);
    double e = 0.0;
    for (std::size_t s = 0; s < f.site_count(); ++s) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) e = std::max(e, (f.two_form(s, i, j) + f.two_form(s, j, i)).norm_inf());
      }
    }
    return bound_check("two_form_antisymmetry", e, 0.0);
  });
  return r;
}

Report gauge_suite(const SuiteOptions& o) {
  Report r("verify", o.seed, "all", o.sizes);
  const double ts = o.tol_scale;
  const int K = band_limit(o.sizes);

  guarded(r, "curvature_u1_analytic_order", kBand, [&] {
    return refine("curvature_u1_analytic_order", o.sizes, [](const Lattice& lat) {
      LatticeField A(lat, GroupId::U1, FieldKind::AlgebraOneForm);
      for (std::size_t s = 0; s < A.site_count(); ++s) A.site(s)[0] = std::sin(lat.coordinate(s, 1));
      const LatticeField F = curvature(A);
      double e = 0.0;
      for (std::size_t s = 0; s < F.site_count(); ++s) {
        e = std::max(e, std::abs(F.two_form(s, 0, 1)[0] + std::cos(lat.coordinate(s, 1))));
      }
      return e;
    });
  });

  for (const GroupSpec* spec : {&SU2(), &EW()}) {
    const std::string g(spec->name());
    guarded(r, "curvature_covariance_order_" + g, kBand, [&] {
      return refine("curvature_covariance_order_" + g, o.sizes, [&](const Lattice& lat) {
        const LatticeField A = smooth_connection(lat, *spec, stream(o, kConnection), K);
        const LatticeField f = smooth_group(lat, *spec, stream(o, kGauge), K);
        return sup_norm(curvature(gauge_transform_connection(A, f)) - gauge_transform_curvature(curvature(A), f));
      });
    });
  }

  guarded(r, "curvature_u1_invariance", 1e-12 * ts, [&] {
    double e = 0.0;
    for (int n : o.sizes) {
      const Lattice lat = Lattice::cubic(kDim, n);
      const LatticeField A = smooth_connection(lat, U1(), stream(o, kConnection), K);
      const LatticeField f = smooth_group(lat, U1(), stream(o, kGauge), K);
      e = std::max(e, sup_norm(curvature(gauge_transform_connection(A, f)) - curvature(A)));
    }
    return bound_check("curvature_u1_invariance", e, 1e-12 * ts);
  });

  guarded(r, "pure_gauge_flatness_order", kBand, [&] {
    return refine("pure_gauge_flatness_order", o.sizes, [&](const Lattice& lat) {
      const LatticeField f = smooth_group(lat, SU2(), stream(o, kGauge), K);
      return sup_norm(curvature(gauge_transform_connection(LatticeField(lat, GroupId::SU2, FieldKind::AlgebraOneForm), f)));
    });
  });

  guarded(r, "gauge_composition_order", kBand, [&] {
    return refine("gauge_composition_order", o.sizes, [&](const Lattice& lat) {
      const LatticeField A = smooth_connection(lat, SU2(), stream(o, kConnection), K);
      const LatticeField f = smooth_group(lat, SU2(), stream(o, kGauge), K);
      const LatticeField g = smooth_group(lat, SU2(), stream(o, kGauge2), K);
      return sup_norm(gauge_transform_connection(gauge_transform_connection(A, f), g) -
                      gauge_transform_connection(A, multiply(f, g)));
    });
  });

  guarded(r, "pointframe_composition", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (const GroupSpec* spec : {&U1(), &SU2(), &EW()}) {
      for (int k = 0; k < kFrames; ++k) {
        const auto A = random_forms(*spec, rng);
        const GroupJet f = random_group_jet(*spec, rng);
        const GroupJet g = random_group_jet(*spec, rng);
        e = std::max(e, sup_diff(transform_connection_at(transform_connection_at(A, f), g), transform_connection_at(A, f * g)));
      }
    }
    return bound_check("pointframe_composition", e, 1e-12 * ts);
  });

  guarded(r, "covariant_derivative_covariance_order", kBand, [&] {
    return refine("covariant_derivative_covariance_order", o.sizes, [&](const Lattice& lat) {
      const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
      const LatticeField f = smooth_group(lat, EW(), stream(o, kGauge), K);
      const LatticeField phi = smooth_doublet(lat, stream(o, kScalar), K);
      const auto lhs = covariant_derivative(gauge_transform_doublet(phi, f), gauge_transform_connection(A, f));
      const auto rhs = covariant_derivative(phi, A);
      double e = 0.0;
      for (std::size_t i = 0; i < lhs.size(); ++i) e = std::max(e, sup_norm(lhs[i] - gauge_transform_doublet(rhs[i], f)));
      return e;
    });
  });

  guarded(r, "pointframe_covariant_derivative", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kFrames; ++k) {
      PointFrame frame;
      frame.A = random_forms(EW(), rng);
      frame.phi = random_doublet_jet(rng);
      frame.f = random_group_jet(EW(), rng);
      const GroupJet f = *frame.f;
      const PointFrame moved = pointframe_transform(frame);
      frame.f.reset();
      const auto before = covariant_derivative_at(frame);
      const auto after = covariant_derivative_at(moved);
      const Eigen::Matrix2cd rinv = rho(f.value.inverse());
      for (std::size_t i = 0; i < before.size(); ++i) e = std::max(e, (after[i] - rinv * before[i]).cwiseAbs().maxCoeff());
    }
    return bound_check("pointframe_covariant_derivative", e, 1e-12 * ts);
  });
  return r;
}

Report dressing_suite(const SuiteOptions& o) {
  Report r("verify", o.seed, "all", o.sizes);
  const double ts = o.tol_scale;
  const int K = band_limit(o.sizes);

  guarded(r, "electroweak_defining_equation", 1e-12 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const LatticeField phi = smooth_doublet(lat, stream(o, kScalar), K);
    const ElectroweakResiduals e = electroweak_residuals(phi, dressing_from_scalar(phi));
    const double worst = std::max({e.defining, e.unitarity, e.det});
    CheckResult c = bound_check("electroweak_defining_equation", worst, 1e-12 * ts);
    c.details = {{"u_eta_minus_phi", e.defining}, {"unitarity", e.unitarity}, {"det_minus_one", e.det}};
    return c;
  });

  guarded(r, "electroweak_equivariance_chain", 1e-12 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const LatticeField phi = smooth_doublet(lat, stream(o, kScalar), K);
    const LatticeField gamma = h_field(lat, stream(o, kGauge), K);
    return bound_check("electroweak_equivariance_chain", equivariance_chain_residual(phi, gamma), 1e-12 * ts);
  });

  guarded(r, "dressing_transform_composition", 1e-13 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const DressingField u(h_field(lat, stream(o, kDressing), K));
    const LatticeField g1 = h_field(lat, stream(o, kGauge), K);
    const LatticeField g2 = h_field(lat, stream(o, kGauge2), K);
    const DressingField once = dressing_transform(u, multiply(g1, g2));
    const DressingField twice = dressing_transform(dressing_transform(u, g1), g2);
    return bound_check("dressing_transform_composition", sup_norm(once.field() - twice.field()), 1e-13 * ts);
  });

  guarded(r, "h_invariance_pointframe", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kFrames; ++k) {
      const auto A = random_forms(EW(), rng);
      const GroupJet u = random_factor_jet(SU2(), rng);
      const GroupJet gamma = random_factor_jet(SU2(), rng);
      e = std::max(e, sup_diff(dress_connection_at(transform_connection_at(A, gamma), inverse(gamma) * u),
                               dress_connection_at(A, u)));
    }
    return bound_check("h_invariance_pointframe", e, 1e-12 * ts);
  });

  guarded(r, "h_invariance_lattice_order", kBand, [&] {
    return refine("h_invariance_lattice_order", o.sizes, [&](const Lattice& lat) {
      const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
      const DressingField u = dressing_from_scalar(smooth_doublet(lat, stream(o, kScalar), K));
      return h_invariance_residual(A, u, h_field(lat, stream(o, kGauge), K));
    });
  });

  guarded(r, "residual_transform_pointframe_adjoint", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kFrames; ++k) {
      PointFrame frame;
      frame.A = random_forms(EW(), rng);
      frame.u = random_factor_jet(SU2(), rng);
      const GroupJet eta = random_factor_jet(U1(), rng);
      e = std::max(e, residual_transform_check(frame, eta, AdjointRule{}, 1e-12 * ts).residual);
    }
    return bound_check("residual_transform_pointframe_adjoint", e, 1e-12 * ts);
  });

  guarded(r, "residual_transform_lattice_adjoint", kBand, [&] {
    auto make = [&](const Lattice& lat) {
      return ResidualInputs{smooth_connection(lat, EW(), stream(o, kConnection), K),
                            dressing_from_scalar(smooth_doublet(lat, stream(o, kScalar), K)),
                            j_field(lat, stream(o, kResidual), K), AdjointRule{}};
    };
    return residual_transform_convergence(make, kDim, o.sizes, kOrder, kBand, kExactFloor * ts);
  });

  guarded(r, "residual_transform_scalar_induced_witness", 0.0, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
    const LatticeField phi = smooth_doublet(lat, stream(o, kScalar), K);
    const LatticeField eta = j_field(lat, stream(o, kResidual), K);
    const double lattice = residual_transform_residual(A, dressing_from_scalar(phi), eta, ScalarInducedRule{phi});

    Rng rng(stream(o, kSamplesStream));
    PointFrame frame;
    frame.A = random_forms(EW(), rng);
    const DoubletJet pj = random_doublet_jet(rng);
    const double point = residual_transform_residual_at(frame.A, dressing_jet_from_doublet(pj),
                                                        random_factor_jet(U1(), rng), ScalarInducedPointRule{pj});
    return witness_check("residual_transform_scalar_induced_witness", std::min(lattice, point), 1e-3,
                         {{"lattice_residual", lattice}, {"pointframe_residual", point}});
  });
  return r;
}

Report jets_suite(const SuiteOptions& o) {
  Report r("verify", o.seed, "all", o.sizes);
  const double ts = o.tol_scale;
  const int K = band_limit(o.sizes);

  guarded(r, "jet_splitting_reconstruction", 1e-14 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const JetSample jet = random_jet(EW(), 3, rng);
      const PairTensor p1 = pr1(jet);
      const PairTensor p2 = pr2(jet);
      for (std::size_t i = 0; i < p1.data().size(); ++i) {
        e = std::max(e, std::abs(p1.data()[i] + p2.data()[i] - jet.dA.data()[i]));
      }
    }
    return bound_check("jet_splitting_reconstruction", e, 1e-14 * ts);
  });

  guarded(r, "pr2_matches_curvature", 1e-12 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, coarse(o));
    const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
    const LatticeField F = curvature(A);
    double e = 0.0;
    for (std::size_t s = 0; s < A.site_count(); ++s) {
      const PairTensor p2 = pr2(jet_of_connection(A, s));
      for (int j = 0; j < kDim; ++j) {
        for (int k = 0; k < kDim; ++k) e = std::max(e, (2.0 * p2.at(j, k) - F.two_form(s, j, k)).norm_inf());
      }
    }
    return bound_check("pr2_matches_curvature", e, 1e-12 * ts);
  });

  guarded(r, "jet_delta_commutes_with_splitting", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const JetSample jet = random_jet(EW(), 3, rng);
      const JetSample red = jet_delta(jet);
      for (auto op : {&pr1, &pr2}) {
        const PairTensor a = op(red);
        const PairTensor b = op(jet);
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) e = std::max(e, (a.at(i, j) - project_subalgebra(b.at(i, j), Subalgebra::J)).norm_inf());
        }
      }
    }
    return bound_check("jet_delta_commutes_with_splitting", e, 1e-12 * ts);
  });
  return r;
}

Report reduction_suite(const SuiteOptions& o) {
  Report r("verify", o.seed, "all", o.sizes);
  const double ts = o.tol_scale;
  const int K = band_limit(o.sizes);
  const int n0 = coarse(o);

  guarded(r, "delta_idempotence", 0.0, [&] {
    const Lattice lat = Lattice::cubic(kDim, n0);
    const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
    const LatticeField once = delta_ad(A);
    return bound_check("delta_idempotence", delta_ad(once) == once ? 0.0 : sup_norm(delta_ad(once) - once) + 1.0, 0.0);
  });

  guarded(r, "delta_equivariance_su2xu1", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double worst = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const GroupElement g = random_group_element(EW(), rng);
      worst = std::max(worst, delta_equivariance_residual(g, random_algebra(EW(), rng)));
    }
    return bound_check("delta_equivariance_su2xu1", worst, 1e-12 * ts);
  });

  guarded(r, "delta_equivariance_affine_witness", 0.0, [&] {
    Rng rng(stream(o, kSamplesStream));
    double worst = 0.0;
    nlohmann::json sample;
    for (int k = 0; k < kSamples; ++k) {
      const GroupElement g = random_group_element(AFF(), rng);
      const AlgebraVector x = random_algebra(AFF(), rng);
      const double v = delta_equivariance_residual(g, x);
      if (v > worst) {
        worst = v;
        sample = {{"a", g.matrix()(0, 0).real()},
                  {"b", g.matrix()(0, 1).real()},
                  {"X", {x[0], x[1]}},
                  {"sample", k}};
      }
    }
    return witness_check("delta_equivariance_affine_witness", worst, 0.1, {{"witness", sample}});
  });

  guarded(r, "delta_factorization", 1e-15 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, n0);
    const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
    const DressingField u = dressing_from_scalar(smooth_doublet(lat, stream(o, kScalar), K));
    const LatticeField dressed = dress_connection(A, u);
    double e = 0.0;
    const LatticeField red = delta_connection(A, u);
    for (std::size_t s = 0; s < A.site_count(); ++s) {
      for (int i = 0; i < kDim; ++i) {
        e = std::max(e, (red.form(s, i) - project_subalgebra(dressed.form(s, i), Subalgebra::J)).norm_inf());
      }
    }
    return bound_check("delta_factorization", e, 1e-15 * ts);
  });

  guarded(r, "zeta_curvature_projection", 1e-12 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, n0);
    const LatticeField A = smooth_connection(lat, EW(), stream(o, kConnection), K);
    const DressingField u = dressing_from_scalar(smooth_doublet(lat, stream(o, kScalar), K));
    return bound_check("zeta_curvature_projection", zeta_consistency_residual(A, u), 1e-12 * ts);
  });

  guarded(r, "momentum_pairing", 1e-14 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const MomentumSample p = random_momentum(EW(), 3, rng);
      const MomentumSample dp = delta_momentum(p);
      const AlgebraVector x = random_algebra(EW(), rng);
      const AlgebraVector xj = project_subalgebra(x, Subalgebra::J);
      const AlgebraVector xh = project_subalgebra(x, Subalgebra::H);
      e = std::max(e, (pairing(dp, xj) - pairing(p, xj)).cwiseAbs().maxCoeff());
      e = std::max(e, (pairing(dp, xj) - (pairing(p, x) - pairing(p, xh))).cwiseAbs().maxCoeff());
    }
    return bound_check("momentum_pairing", e, 1e-14 * ts);
  });

  guarded(r, "yang_mills_gauge_invariance", 1e-10 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, n0);
    const ConfigPair pair = ConfigPair::from_connection(smooth_connection(lat, EW(), stream(o, kConnection), K));
    const LatticeField f = smooth_group(lat, EW(), stream(o, kGauge), K);
    const ConfigPair moved{gauge_transform_connection(pair.A, f), gauge_transform_curvature(pair.F, f), false};
    const auto a = yang_mills_density(pair);
    const auto b = yang_mills_density(moved);
    double e = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) e = std::max(e, std::abs(a[s] - b[s]));
    return bound_check("yang_mills_gauge_invariance", e, 1e-10 * ts);
  });

  guarded(r, "reduced_lagrangian_factorization", 1e-10 * ts, [&] {
    const Lattice lat = Lattice::cubic(kDim, n0);
    const ConfigPair pair = ConfigPair::from_connection(smooth_connection(lat, EW(), stream(o, kConnection), K));
    const DressingField u = dressing_from_scalar(smooth_doublet(lat, stream(o, kScalar), K));
    return reduced_lagrangian_check(pair, u, 1e-10 * ts);
  });

  guarded(r, "reduced_connection_h_invariance_pointframe", 1e-12 * ts, [&] {
    Rng rng(stream(o, kSamplesStream));
    double e = 0.0;
    for (int k = 0; k < kFrames; ++k) {
      const auto A = random_forms(EW(), rng);
      const GroupJet u = random_factor_jet(SU2(), rng);
      const GroupJet gamma = random_factor_jet(SU2(), rng);
      e = std::max(e, sup_diff(delta_connection_at(transform_connection_at(A, gamma), inverse(gamma) * u),
                               delta_connection_at(A, u)));
    }
    return bound_check("reduced_connection_h_invariance_pointframe", e, 1e-12 * ts);
  });

  guarded(r, "reduced_lagrangian_h_invariance_lattice", kBand, [&] {
    return refine(
        "reduced_lagrangian_h_invariance_lattice", o.sizes,
        [&](const Lattice& lat) {
          const ConfigPair pair = ConfigPair::from_connection(smooth_connection(lat, EW(), stream(o, kConnection), K));
          const DressingField u = dressing_from_scalar(smooth_doublet(lat, stream(o, kScalar), K));
          const LatticeField gamma = h_field(lat, stream(o, kGauge), K);
          const ConfigPair moved{gauge_transform_connection(pair.A, gamma), gauge_transform_curvature(pair.F, gamma), false};
          const auto a = yang_mills_density(zeta(pair, u));
          const auto b = yang_mills_density(zeta(moved, dressing_transform(u, gamma)));
          double e = 0.0;
          for (std::size_t s = 0; s < a.size(); ++s) e = std::max(e, std::abs(a[s] - b[s]));
          return e;
        },
        kExactFloor * ts);
  });
  return r;
}

std::optional<Report> run_suite(std::string_view name, const SuiteOptions& options) {
  using Fn = Report (*)(const SuiteOptions&);
  const std::pair<std::string_view, Fn> table[] = {
      {"liegroup", &liegroup_suite}, {"lattice", &lattice_suite}, {"gauge", &gauge_suite},
      {"dressing", &dressing_suite}, {"jets", &jets_suite},       {"reduction", &reduction_suite},
  };
  Report out("verify", options.seed, "all", options.sizes);
  bool found = false;
  for (const auto& [suite, fn] : table) {
    if (name == "all" || name == suite) {
      out.append(fn(options));
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------

Report demo_electroweak(const DemoOptions& o) {
  const int n = o.size;
  Report r("demo-electroweak", o.seed, "su2xu1", {kDim, n, n});
  const double ts = o.tol_scale;
  SuiteOptions so;
  so.seed = o.seed;
  so.sizes = {n, 2 * n, 4 * n};
  so.tol_scale = ts;
  const int K = band_limit(so.sizes);

  const Lattice lat = Lattice::cubic(kDim, n);
  const LatticeField A = smooth_connection(lat, EW(), stream(so, kConnection), K);
  const LatticeField phi = smooth_doublet(lat, stream(so, kScalar), K);
  const DressingField u = dressing_from_scalar(phi);
  const LatticeField dressed = dress_connection(A, u);
  const ConfigPair pair = ConfigPair::from_connection(A);
  const ConfigPair reduced = zeta(pair, u);

  guarded(r, "dressing_defining_equation", 1e-12 * ts, [&] {
    return bound_check("dressing_defining_equation", electroweak_residuals(phi, u).defining, 1e-12 * ts);
  });
  guarded(r, "dressing_unitarity", 1e-12 * ts, [&] {
    return bound_check("dressing_unitarity", electroweak_residuals(phi, u).unitarity, 1e-12 * ts);
  });
  guarded(r, "dressing_det_one", 1e-12 * ts, [&] {
    return bound_check("dressing_det_one", electroweak_residuals(phi, u).det, 1e-12 * ts);
  });
  guarded(r, "dressing_equivariance_chain", 1e-12 * ts, [&] {
    return bound_check("dressing_equivariance_chain",
                       equivariance_chain_residual(phi, h_field(lat, stream(so, kGauge), K)), 1e-12 * ts);
  });
  guarded(r, "dressed_connection_h_invariance_order", kBand, [&] {
    return refine("dressed_connection_h_invariance_order", so.sizes, [&](const Lattice& l) {
      const LatticeField Al = smooth_connection(l, EW(), stream(so, kConnection), K);
      const DressingField ul = dressing_from_scalar(smooth_doublet(l, stream(so, kScalar), K));
      return h_invariance_residual(Al, ul, h_field(l, stream(so, kGauge), K));
    });
  });
  guarded(r, "zeta_curvature_projection", 1e-12 * ts, [&] {
    return bound_check("zeta_curvature_projection", zeta_consistency_residual(A, u), 1e-12 * ts);
  });
  guarded(r, "reduced_lagrangian_factorization", 1e-10 * ts,
          [&] { return reduced_lagrangian_check(pair, u, 1e-10 * ts); });

  if (o.output_dir) {
    namespace fs = std::filesystem;
    const fs::path dir(*o.output_dir);
    fs::create_directories(dir);
    save_field((dir / "A.gfld").string(), A);
    save_field((dir / "phi.gfld").string(), phi);
    save_field((dir / "u.gfld").string(), u.field());
    save_field((dir / "A_dressed.gfld").string(), dressed);
    save_field((dir / "A_reduced.gfld").string(), restrict_to_j(reduced.A));
    save_field((dir / "F_reduced.gfld").string(), restrict_to_j(reduced.F));
  }
  return r;
}

}  // namespace dfm::cli
