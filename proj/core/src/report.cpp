#include "dfm/report.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "dfm/lattice.hpp"

namespace dfm {

namespace {

double finite_or_max(double v) {
  return std::isfinite(v) ? std::abs(v) : std::numeric_limits<double>::max();
}

}  // namespace

CheckResult bound_check(std::string name, double residual, double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.residual = finite_or_max(residual);
  c.tolerance = tolerance;
  return c;
}

CheckResult order_check(std::string name, const std::vector<double>& spacings,
                        const std::vector<double>& residuals, double target, double band,
                        double exact_floor) {
  CheckResult c;
  c.name = std::move(name);
  c.details = nlohmann::json::object();
  c.details["spacings"] = spacings;
  c.details["residuals"] = residuals;
  c.details["target_order"] = target;

  bool all_exact = !residuals.empty();
  for (double r : residuals) all_exact = all_exact && std::isfinite(r) && r <= exact_floor;
  if (all_exact) {
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    c.residual = worst;
    c.tolerance = exact_floor;
    c.pass = true;
    c.details["exact_at_every_size"] = true;
    return c;
  }

  std::vector<std::pair<double, double>> samples;
  for (std::size_t k = 0; k < spacings.size() && k < residuals.size(); ++k) {
    samples.emplace_back(spacings[k], residuals[k]);
  }
  try {
    const double order = convergence_order(samples);
    c.order = order;
    c.residual = finite_or_max(order - target);
    c.tolerance = band;
    c.pass = std::abs(order - target) <= band;
  } catch (const std::exception& e) {
    c.residual = std::numeric_limits<double>::max();
    c.tolerance = band;
    c.pass = false;
    c.details["error"] = e.what();
  }
  return c;
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

bool Report::overall_pass() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command_;
  j["seed"] = seed_;
  j["group"] = group_;
  j["dims"] = dims_;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e;
    e["check_name"] = c.name;
    e["residual"] = c.residual;
    e["tolerance"] = c.tolerance;
    if (c.order) e["order_estimate"] = *c.order;
    e["pass"] = c.pass;
    if (!c.details.is_null()) e["details"] = c.details;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  j["overall_pass"] = overall_pass();
  return j;
}

}  // namespace dfm
