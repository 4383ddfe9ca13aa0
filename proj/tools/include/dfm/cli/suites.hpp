#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfm/report.hpp"

namespace dfm::cli {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::vector<int> sizes{16, 32, 64};
  // Multiplies every absolute tolerance. Order bands and witness thresholds
  // are not scaled.
  double tol_scale = 1.0;
};

inline constexpr std::string_view kSuiteNames[] = {"liegroup", "lattice", "gauge", "dressing", "jets", "reduction"};

Report liegroup_suite(const SuiteOptions& options);
Report lattice_suite(const SuiteOptions& options);
Report gauge_suite(const SuiteOptions& options);
Report dressing_suite(const SuiteOptions& options);
Report jets_suite(const SuiteOptions& options);
Report reduction_suite(const SuiteOptions& options);

// name is one of kSuiteNames or "all". Returns nullopt for unknown names.
std::optional<Report> run_suite(std::string_view name, const SuiteOptions& options);

struct DemoOptions {
  std::uint64_t seed = 1;
  int size = 16;
  double tol_scale = 1.0;
  // Files A, phi, u, A_dressed, A_reduced, F_reduced (.gfld) are written
  // here when set.
  std::optional<std::string> output_dir;
};

Report demo_electroweak(const DemoOptions& options);

}  // namespace dfm::cli
