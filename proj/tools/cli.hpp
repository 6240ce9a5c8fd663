#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wcs/chern_simons.hpp"
#include "wcs/metric.hpp"

namespace wcs::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kParseError = 2, kNumericalError = 3, kInvariantFailure = 4 };

struct RunConfig {
  enum class Command { Compute, Sweep, Verify };
  Command command = Command::Compute;
  std::string family;                 ///< "paper" or "custom"; empty until resolved
  std::vector<int> a_values;          ///< one value for compute, any number for sweep
  std::optional<std::string> lambda, mu, nu;
  double s = 1.0;
  int samples = 4096;
  double tol = 1e-8;
  double int_tol = 1e-3;
  std::string density_out;
  std::string report_out;

  /// Throws std::invalid_argument when the configuration is inconsistent.
  void validate() const;
  CSConfig cs_config() const;
};

/// Parse three grammar strings into a metric. Propagates ParseError and
/// PositivityError.
BergerMetric parse_metric_exprs(const std::string& lambda, const std::string& mu, const std::string& nu, int a = 0);

/// Overlay a JSON config object onto cfg (keys mirror the long flag names,
/// with '-' spelled '_').
void apply_config_json(const nlohmann::json& j, RunConfig& cfg);

void write_density_csv(std::ostream& os, const CSReport& rep);
nlohmann::ordered_json report_json(const CSReport& rep, const std::string& lambda, const std::string& mu,
                                   const std::string& nu);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point; returns the process exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wcs::cli
