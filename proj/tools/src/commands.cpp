#include "dfm/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dfm/cli/suites.hpp"
#include "dfm/dressing.hpp"
#include "dfm/errors.hpp"
#include "dfm/field_io.hpp"
#include "dfm/gauge.hpp"
#include "dfm/reduction.hpp"

namespace dfm::cli {

namespace {

struct Options {
  std::string input;
  std::string gauge;
  std::string scalar;
  std::optional<std::string> output;
  std::optional<std::string> output_dir;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::vector<int> sizes{16, 32, 64};
  std::optional<double> tol_scale;
  int size = 16;
};

double default_tol_scale() {
  const char* env = std::getenv("GFLD_TOL_SCALE");
  if (!env || !*env) return 1.0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw SpecMismatch(std::string("GFLD_TOL_SCALE must be a positive number, got '") + env + "'");
  }
  return v;
}

void emit(const LatticeField& field, const Options& o, std::ostream& out) {
  if (o.output) {
    save_field(*o.output, field);
  } else {
    write_field(out, field);
  }
}

void require_connection(const LatticeField& A, const std::string& path) {
  if (A.kind() != FieldKind::AlgebraOneForm) {
    throw SpecMismatch(path + ": expected a connection field, got " + kind_name(A.kind()));
  }
}

void require_electroweak(const LatticeField& f, const std::string& path) {
  if (f.group() != GroupId::SU2xU1) {
    throw SpecMismatch(path + ": expected group su2xu1, got " + std::string(group_name(f.group())));
  }
}

LatticeField load_scalar(const std::string& path) {
  LatticeField phi = load_field(path);
  if (phi.kind() != FieldKind::ScalarDoublet) throw SpecMismatch(path + ": expected a scalar field");
  require_electroweak(phi, path);
  return phi;
}

LatticeField load_connection(const std::string& path) {
  LatticeField A = load_field(path);
  require_connection(A, path);
  return A;
}

int cmd_curvature(const Options& o, std::ostream& out) {
  emit(curvature(load_connection(o.input)), o, out);
  return kExitPass;
}

int cmd_transform(const Options& o, std::ostream& out) {
  const LatticeField A = load_connection(o.input);
  const LatticeField f = load_field(o.gauge);
  if (f.kind() != FieldKind::GroupValued) throw SpecMismatch(o.gauge + ": expected a group field");
  emit(gauge_transform_connection(A, f), o, out);
  return kExitPass;
}

int cmd_dress(const Options& o, std::ostream& out) {
  const LatticeField A = load_connection(o.input);
  require_electroweak(A, o.input);
  emit(dress_connection(A, dressing_from_scalar(load_scalar(o.scalar))), o, out);
  return kExitPass;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const LatticeField A = load_connection(o.input);
  require_electroweak(A, o.input);
  emit(restrict_to_j(delta_connection(A, dressing_from_scalar(load_scalar(o.scalar)))), o, out);
  return kExitPass;
}

int finish(const Report& report, std::ostream& out) {
  out << report.dump() << '\n';
  return report.overall_pass() ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.seed = o.seed;
  so.sizes = o.sizes;
  so.tol_scale = o.tol_scale ? *o.tol_scale : default_tol_scale();
  if (so.sizes.size() < 2) throw SpecMismatch("--sizes needs at least two grid sizes");
  for (int n : so.sizes) {
    if (n < 8) throw SpecMismatch("--sizes entries must be at least 8, got " + std::to_string(n));
  }
  auto report = run_suite(o.suite, so);
  if (!report) throw SpecMismatch("unknown suite '" + o.suite + "'");
  return finish(*report, out);
}

int cmd_demo(const Options& o, std::ostream& out) {
  DemoOptions d;
  d.seed = o.seed;
  d.size = o.size;
  d.tol_scale = o.tol_scale ? *o.tol_scale : default_tol_scale();
  d.output_dir = o.output_dir;
  if (d.size < 8) throw SpecMismatch("--size must be at least 8");
  return finish(demo_electroweak(d), out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dressing-field gauge reduction toolkit", "dfm"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", o.output, "Output field file (default: stdout)"); };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol-scale", o.tol_scale, "Tolerance multiplier (default: $GFLD_TOL_SCALE or 1)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* curv = app.add_subcommand("curvature", "Curvature of a connection field");
  curv->add_option("--input", o.input, "Connection field")->required();
  add_output(curv);

  CLI::App* trans = app.add_subcommand("transform", "Gauge-transform a connection");
  trans->add_option("--input", o.input, "Connection field")->required();
  trans->add_option("--gauge", o.gauge, "Group-valued field")->required();
  add_output(trans);

  CLI::App* dress = app.add_subcommand("dress", "Dress an su2xu1 connection with the dressing built from a scalar");
  dress->add_option("--input", o.input, "Connection field")->required();
  dress->add_option("--scalar", o.scalar, "Scalar doublet field")->required();
  add_output(dress);

  CLI::App* reduce = app.add_subcommand("reduce", "Reduced u1 connection of an su2xu1 configuration");
  reduce->add_option("--input", o.input, "Connection field")->required();
  reduce->add_option("--scalar", o.scalar, "Scalar doublet field")->required();
  add_output(reduce);

  CLI::App* verify = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  verify->add_option("--suite", o.suite, "liegroup|lattice|gauge|dressing|jets|reduction|all")->capture_default_str();
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--sizes", o.sizes, "Refinement grid sizes")->delimiter(',')->capture_default_str();
  add_tol(verify);

  CLI::App* demo = app.add_subcommand("demo-electroweak", "End-to-end SU(2) x U(1) dressing and reduction");
  demo->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  demo->add_option("--size", o.size, "Grid size per axis")->capture_default_str();
  demo->add_option("--output-dir", o.output_dir, "Directory for emitted field files");
  add_tol(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "dfm: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (curv->parsed()) return cmd_curvature(o, out);
    if (trans->parsed()) return cmd_transform(o, out);
    if (dress->parsed()) return cmd_dress(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (demo->parsed()) return cmd_demo(o, out);
  } catch (const std::exception& e) {
    err << "dfm: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace dfm::cli
