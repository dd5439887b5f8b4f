#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "sliceq/quadrature.hpp"

namespace sliceq {

/// Default tolerance of identity checks (absolute).
inline constexpr double kIdentityTolerance = 1e-10;
/// Default relative slack on the right-hand side of inequality checks.
inline constexpr double kInequalitySlack = 1e-8;

struct CheckResult {
  std::string check_id;
  std::string paper_ref;  // statement under test, or "plumbing"
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;  // NaN when the check has no constant
  double margin = 0.0;
  bool pass = false;
  std::string note;
  double wall_seconds = 0.0;  // not part of the serialized report
};

/// Identity record: lhs = residual, rhs = tolerance, pass iff residual <= tolerance.
CheckResult identity_result(std::string id, std::string ref, double residual, double tolerance);

/// Inequality record lhs <= rhs: pass iff lhs <= rhs (1 + slack), margin = 1 - lhs / rhs.
CheckResult inequality_result(std::string id, std::string ref, double lhs, double rhs, double constant,
                              double slack = kInequalitySlack);

struct RunConfig {
  FockParams params;
  std::uint64_t seed = 42;
  /// Instances per randomized check; 0 keeps each check's own default.
  std::size_t n_random_series = 0;
  std::size_t max_degree = 10;
  std::vector<std::string> checks;  // defaults to every check
  std::filesystem::path output;
  std::string format = "json";
  std::size_t threads = 1;

  RunConfig();
};

struct CheckInfo {
  std::string id;
  std::string paper_ref;
  std::string summary;
};

/// Every check the suite knows, sorted by id.
const std::vector<CheckInfo>& check_catalog();
std::vector<std::string> all_check_ids();

/// Runs one check; throws UsageError for unknown ids.
std::vector<CheckResult> run_check(const std::string& id, const RunConfig& config);

/// Runs config.checks (possibly on config.threads workers) and returns the
/// records sorted by check_id. Throws UsageError for unknown ids and
/// ConfigError for invalid parameters.
std::vector<CheckResult> run_suite(const RunConfig& config);

bool all_passed(const std::vector<CheckResult>& results);

/// Reads "key=value" lines ('#' starts a comment). Throws ParseError with the
/// line number on malformed lines, IoError when the file cannot be read.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Applies one key (alpha, p, degree, domain, radius, truncation, quad-r,
/// quad-theta, slices, seed, series-count, threads, checks, out, format).
/// Throws ConfigError for unknown keys or bad values.
void apply_config_value(RunConfig& config, const std::string& key, const std::string& value);

/// Splits a comma-separated check list; "all" expands to every check, while
/// "none" or an empty string gives an empty list.
std::vector<std::string> parse_check_list(const std::string& text);

}  // namespace sliceq
