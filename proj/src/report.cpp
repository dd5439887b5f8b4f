#include "sliceq/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"

#include "sliceq/errors.hpp"

namespace sliceq {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string shortest(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string csv_number(double v) { return std::isfinite(v) ? shortest(v) : std::string(); }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

std::string report_json(const RunConfig& config, const std::vector<CheckResult>& results) {
  const FockParams& p = config.params;
  ordered_json doc;
  doc["config"] = {
      {"alpha", p.alpha},
      {"p", p.p},
      {"domain", to_string(p.domain)},
      {"radius", p.radius},
      {"truncation", p.truncation},
      {"quad_r", p.n_r},
      {"quad_theta", p.n_theta},
      {"slices", p.n_slices},
      {"degree", config.max_degree},
      {"seed", config.seed},
      {"series_count", config.n_random_series},
  };
  ordered_json records = ordered_json::array();
  for (const auto& r : results) {
    records.push_back({
        {"check_id", r.check_id},
        {"paper_ref", r.paper_ref},
        {"lhs", number(r.lhs)},
        {"rhs", number(r.rhs)},
        {"constant", number(r.constant)},
        {"margin", number(r.margin)},
        {"pass", r.pass},
        {"note", r.note},
    });
  }
  doc["passed"] = all_passed(results);
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string report_csv(const std::vector<CheckResult>& results) {
  std::string out = "check_id,paper_ref,lhs,rhs,constant,margin,pass,note\n";
  for (const auto& r : results) {
    out += csv_field(r.check_id) + ',' + csv_field(r.paper_ref) + ',' + csv_number(r.lhs) + ',' +
           csv_number(r.rhs) + ',' + csv_number(r.constant) + ',' + csv_number(r.margin) + ',' +
           (r.pass ? "true" : "false") + ',' + csv_field(r.note) + '\n';
  }
  return out;
}

void write_reports(const std::filesystem::path& out, const RunConfig& config,
                   const std::vector<CheckResult>& results) {
  std::filesystem::path stem = out;
  if (stem.extension() == ".json" || stem.extension() == ".csv") stem.replace_extension();
  if (stem.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(stem.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + stem.parent_path().string());
  }
  write_file(stem.string() + ".json", report_json(config, results));
  write_file(stem.string() + ".csv", report_csv(results));
}

}  // namespace sliceq
