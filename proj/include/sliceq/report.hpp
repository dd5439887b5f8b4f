#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sliceq/harness.hpp"

namespace sliceq {

// Report columns, in order: check_id, paper_ref, lhs, rhs, constant, margin,
// pass, note. Numbers use the shortest round-trip decimal; non-finite values
// become null (JSON) or an empty field (CSV). Wall time is left out so that
// identical configurations give byte-identical reports.

std::string report_json(const RunConfig& config, const std::vector<CheckResult>& results);
std::string report_csv(const std::vector<CheckResult>& results);

/// Writes <stem>.json and <stem>.csv, where <stem> is `out` without a .json or
/// .csv extension. Throws IoError on failure.
void write_reports(const std::filesystem::path& out, const RunConfig& config,
                   const std::vector<CheckResult>& results);

}  // namespace sliceq
