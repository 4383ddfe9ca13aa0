#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dfm/cli/commands.hpp"
#include "dfm/field_io.hpp"
#include "dfm/gauge.hpp"
#include "test_util.hpp"

using namespace dfm;
using namespace dfm::test;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dfm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dfm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv("GFLD_TOL_SCALE");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("GFLD_TOL_SCALE");
  }

  std::string save(const std::string& name, const LatticeField& f) {
    const std::string p = (dir_ / name).string();
    save_field(p, f);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, MalformedHeaderIsInputError) {
  const std::string p = path("bad.gfld");
  std::ofstream(p) << "gfld 1\ngroup so3\nkind connection\n";
  const CliRun r = run_cli({"curvature", "--input", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(Cli, ParseErrorsAreInputErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"curvature"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--tol-scale", "-1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--sizes", "16"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--sizes", "4,8"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"demo-electroweak", "--size", "4"}).code, 2);
  EXPECT_EQ(run_cli({"curvature", "--input", path("missing.gfld")}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(Cli, CurvatureOfZeroConnectionIsZero) {
  const LatticeField A(Lattice::cubic(3, 8), GroupId::SU2, FieldKind::AlgebraOneForm);
  const CliRun r = run_cli({"curvature", "--input", save("a.gfld", A)});
  ASSERT_EQ(r.code, 0) << r.err;
  const LatticeField F = parse_field(r.out);
  EXPECT_EQ(F.kind(), FieldKind::AlgebraTwoForm);
  EXPECT_EQ(sup_norm(F), 0.0);
}

TEST_F(Cli, CurvatureMatchesLibraryAndWritesFile) {
  const LatticeField A = smooth_connection(Lattice::cubic(2, 16), EW(), 3);
  const std::string out = path("f.gfld");
  ASSERT_EQ(run_cli({"curvature", "--input", save("a.gfld", A), "--output", out}).code, 0);
  EXPECT_EQ(serialize_field(load_field(out)), serialize_field(curvature(A)));
}

TEST_F(Cli, IdentityTransformReturnsInput) {
  const Lattice lat = Lattice::cubic(2, 8);
  const LatticeField A = smooth_connection(lat, SU2(), 1);
  const CliRun r = run_cli({"transform", "--input", save("a.gfld", A), "--gauge",
                         save("g.gfld", LatticeField(lat, GroupId::SU2, FieldKind::GroupValued))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(sup_norm(parse_field(r.out) - A), 1e-15);
}

TEST_F(Cli, TransformRejectsNonGroupGauge) {
  const LatticeField A = smooth_connection(Lattice::cubic(2, 8), SU2(), 1);
  const std::string a = save("a.gfld", A);
  EXPECT_EQ(run_cli({"transform", "--input", a, "--gauge", a}).code, 2);
}

TEST_F(Cli, DressWithVacuumScalarIsIdentity) {
  const Lattice lat = Lattice::cubic(2, 8);
  const LatticeField A = smooth_connection(lat, EW(), 1);
  const CliRun r = run_cli({"dress", "--input", save("a.gfld", A), "--scalar",
                         save("phi.gfld", constant_doublet(lat, Eigen::Vector2cd(0.0, 1.3)))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(sup_norm(parse_field(r.out) - A), 1e-15);
}

TEST_F(Cli, DressIgnoresScalarNormalization) {
  const Lattice lat = Lattice::cubic(2, 8);
  const std::string a = save("a.gfld", smooth_connection(lat, EW(), 1));
  const LatticeField phi = smooth_doublet(lat, 2);
  const CliRun r1 = run_cli({"dress", "--input", a, "--scalar", save("p1.gfld", phi)});
  const CliRun r2 = run_cli({"dress", "--input", a, "--scalar", save("p2.gfld", 2.0 * phi)});
  ASSERT_EQ(r1.code, 0);
  ASSERT_EQ(r2.code, 0);
  EXPECT_LE(sup_norm(parse_field(r1.out) - parse_field(r2.out)), 1e-15);
}

TEST_F(Cli, DressVanishingScalarIsInputError) {
  const Lattice lat = Lattice::cubic(2, 8);
  const CliRun r = run_cli({"dress", "--input", save("a.gfld", smooth_connection(lat, EW(), 1)), "--scalar",
                         save("phi.gfld", constant_doublet(lat, Eigen::Vector2cd::Zero()))});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, ReduceEmitsU1Connection) {
  const Lattice lat = Lattice::cubic(2, 8);
  const LatticeField A = smooth_connection(lat, EW(), 1);
  const CliRun r = run_cli({"reduce", "--input", save("a.gfld", A), "--scalar", save("phi.gfld", smooth_doublet(lat, 2))});
  ASSERT_EQ(r.code, 0) << r.err;
  const LatticeField red = parse_field(r.out);
  EXPECT_EQ(red.group(), GroupId::U1);
  EXPECT_EQ(red.kind(), FieldKind::AlgebraOneForm);
  for (std::size_t s = 0; s < red.site_count(); ++s) {
    for (int i = 0; i < 2; ++i) EXPECT_NEAR(red.form(s, i)[0], A.form(s, i)[3], 1e-15);
  }
  EXPECT_EQ(run_cli({"reduce", "--input", save("s.gfld", smooth_connection(lat, SU2(), 1)), "--scalar",
                     path("phi.gfld")})
                .code,
            2);
}

TEST_F(Cli, VerifyLiegroupPasses) {
  const CliRun r = run_cli({"verify", "--suite", "liegroup", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["overall_pass"].get<bool>());
  EXPECT_FALSE(j["checks"].empty());
}

TEST_F(Cli, ReductionSuiteRecordsAffineWitness) {
  const CliRun r = run_cli({"verify", "--suite", "reduction"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["checks"]) {
    if (c["check_name"] == "delta_equivariance_affine_witness") {
      found = true;
      EXPECT_TRUE(c["pass"].get<bool>());
      EXPECT_GE(c["details"]["violation"].get<double>(), c["details"]["threshold"].get<double>());
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(Cli, VerifyIsDeterministic) {
  const CliRun a = run_cli({"verify", "--suite", "gauge", "--seed", "11", "--sizes", "16,32"});
  const CliRun b = run_cli({"verify", "--suite", "gauge", "--seed", "11", "--sizes", "16,32"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, TinyToleranceScaleFails) {
  const CliRun r = run_cli({"verify", "--suite", "gauge", "--tol-scale", "1e-12"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["overall_pass"].get<bool>());
}

TEST_F(Cli, EnvironmentToleranceScale) {
  setenv("GFLD_TOL_SCALE", "1e-12", 1);
  EXPECT_EQ(run_cli({"verify", "--suite", "gauge"}).code, 1);
  // The flag wins over the environment.
  EXPECT_EQ(run_cli({"verify", "--suite", "gauge", "--tol-scale", "1"}).code, 0);
  setenv("GFLD_TOL_SCALE", "abc", 1);
  EXPECT_EQ(run_cli({"verify", "--suite", "gauge"}).code, 2);
}

TEST_F(Cli, DemoElectroweak) {
  const auto t0 = std::chrono::steady_clock::now();
  const CliRun r = run_cli({"demo-electroweak", "--seed", "1", "--size", "16", "--output-dir", dir_.string()});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_LT(secs, 10.0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "demo-electroweak");
  EXPECT_TRUE(j["overall_pass"].get<bool>());
  EXPECT_EQ(load_field(path("A_reduced.gfld")).group(), GroupId::U1);
  EXPECT_EQ(load_field(path("u.gfld")).kind(), FieldKind::GroupValued);
}
