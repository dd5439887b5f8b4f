#include "sliceq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <thread>

#include "sliceq/errors.hpp"
#include "sliceq/slice_series.hpp"

namespace sliceq {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size() || !std::isfinite(v)) {
    throw ConfigError(key + ": not a number: '" + value + "'");
  }
  return v;
}

template <typename T>
T to_unsigned(const std::string& key, const std::string& value) {
  T v = 0;
  const auto res = std::from_chars(value.data(), value.data() + value.size(), v);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw ConfigError(key + ": not a non-negative integer: '" + value + "'");
  }
  return v;
}

}  // namespace

CheckResult identity_result(std::string id, std::string ref, double residual, double tolerance) {
  CheckResult r;
  r.check_id = std::move(id);
  r.paper_ref = std::move(ref);
  r.lhs = residual;
  r.rhs = tolerance;
  r.constant = std::numeric_limits<double>::quiet_NaN();
  r.margin = 1.0 - residual / tolerance;
  r.pass = std::isfinite(residual) && residual <= tolerance;
  return r;
}

CheckResult inequality_result(std::string id, std::string ref, double lhs, double rhs, double constant,
                              double slack) {
  CheckResult r;
  r.check_id = std::move(id);
  r.paper_ref = std::move(ref);
  r.lhs = lhs;
  r.rhs = rhs;
  r.constant = constant;
  r.margin = 1.0 - lhs / rhs;
  r.pass = std::isfinite(lhs) && lhs <= rhs * (1.0 + slack);
  return r;
}

RunConfig::RunConfig() : checks(all_check_ids()) {}

std::vector<CheckResult> run_suite(const RunConfig& config) {
  config.params.validate();
  if (config.max_degree > kDefaultMaxDegree) {
    throw ConfigError("degree must be at most " + std::to_string(kDefaultMaxDegree));
  }
  const auto known = all_check_ids();
  std::vector<std::string> ids = config.checks;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const auto& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw UsageError("unknown check id '" + id + "'");
    }
  }

  // Each check owns its RNG stream, so scheduling does not affect results.
  std::vector<std::vector<CheckResult>> slots(ids.size());
  const std::size_t workers = std::max<std::size_t>(1, std::min(config.threads, ids.size()));
  if (workers == 1) {
    for (std::size_t k = 0; k < ids.size(); ++k) slots[k] = run_check(ids[k], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k; (k = next.fetch_add(1)) < ids.size();) slots[k] = run_check(ids[k], config);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<CheckResult> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::map<std::string, std::string> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value");
    std::string key = trim(std::string_view(body).substr(0, eq));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ParseError(line, "empty key");
    if (value.empty()) throw ParseError(line, "empty value for '" + key + "'");
    out[std::move(key)] = std::move(value);
  }
  return out;
}

void apply_config_value(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "alpha") {
    c.params.alpha = to_double(key, value);
  } else if (key == "p") {
    c.params.p = to_double(key, value);
  } else if (key == "degree") {
    c.max_degree = to_unsigned<std::size_t>(key, value);
  } else if (key == "domain") {
    try {
      c.params.domain = parse_domain(value);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "radius") {
    c.params.radius = to_double(key, value);
  } else if (key == "truncation") {
    c.params.truncation = to_unsigned<std::size_t>(key, value);
  } else if (key == "quad-r") {
    c.params.n_r = to_unsigned<std::size_t>(key, value);
  } else if (key == "quad-theta") {
    c.params.n_theta = to_unsigned<std::size_t>(key, value);
  } else if (key == "slices") {
    c.params.n_slices = to_unsigned<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = to_unsigned<std::uint64_t>(key, value);
  } else if (key == "series-count") {
    c.n_random_series = to_unsigned<std::size_t>(key, value);
  } else if (key == "threads") {
    c.threads = to_unsigned<std::size_t>(key, value);
  } else if (key == "checks") {
    c.checks = parse_check_list(value);
  } else if (key == "out") {
    c.output = value;
  } else if (key == "format") {
    if (value != "json" && value != "csv") throw ConfigError("format must be json or csv");
    c.format = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

std::vector<std::string> parse_check_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string id = trim(std::string_view(text).substr(pos, comma - pos));
    if (id == "all") {
      const auto all = all_check_ids();
      out.insert(out.end(), all.begin(), all.end());
    } else if (!id.empty() && id != "none") {
      out.push_back(std::move(id));
    }
    pos = comma + 1;
  }
  return out;
}

}  // namespace sliceq
