#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dfm {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> order;
  bool pass = false;
  nlohmann::json details;  // null when there is nothing extra to log
};

// pass iff residual is finite and <= tolerance.
CheckResult bound_check(std::string name, double residual, double tolerance);

// Refinement study: fits the order of residuals[k] against spacings[k] and
// passes iff |order - target| <= band. When every residual is already at or
// below exact_floor the identity holds exactly on each grid; the fit is then
// meaningless, no order is reported and the check passes on the floor.
CheckResult order_check(std::string name, const std::vector<double>& spacings,
                        const std::vector<double>& residuals, double target, double band,
                        double exact_floor = 0.0);

class Report {
 public:
  Report() = default;
  Report(std::string command, std::uint64_t seed, std::string group, std::vector<int> dims)
      : command_(std::move(command)), seed_(seed), group_(std::move(group)), dims_(std::move(dims)) {}

  void add(CheckResult check) { checks_.push_back(std::move(check)); }
  void append(const Report& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool overall_pass() const;

  const std::string& command() const { return command_; }
  std::uint64_t seed() const { return seed_; }

  nlohmann::json to_json() const;
  std::string dump() const { return to_json().dump(2); }

 private:
  std::string command_;
  std::uint64_t seed_ = 0;
  std::string group_;
  std::vector<int> dims_;
  std::vector<CheckResult> checks_;
};

}  // namespace dfm
