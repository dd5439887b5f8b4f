// Acceptance gate: one PASS/FAIL line per criterion, tolerances and time
// budgets pinned here. Runs the default suite (seed 42), then reruns it with a
// different worker count and compares the serialized reports byte for byte.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sliceq/harness.hpp"
#include "sliceq/report.hpp"

using namespace sliceq;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> groups;  // check ids run by the suite
  double budget_seconds;
};

bool belongs(const CheckResult& r, const std::string& group) {
  if (r.check_id == group) return true;
  // Group "norm-sandwich" owns "norm-sandwich-lower[...]", "embedding" owns "embedding[...]".
  return r.check_id.rfind(group, 0) == 0 && (r.check_id[group.size()] == '-' || r.check_id[group.size()] == '[');
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "representation formula, 100 series x 100 points, tol 1e-12", {"rep-formula"}, 5},
      {2, "star algebra: assoc, unit, f*f^c real, reciprocal to degree 10, tol 1e-10",
       {"star-assoc", "star-unit", "star-conj-real", "star-reciprocal"}, 5},
      {3, "pointwise star identity, 500 triples incl. 50 zeros, tol 1e-10", {"star-pointwise"}, 5},
      {4, "norm sandwich, p in {4/3,2,3}, alpha in {0.5,1,2}, slack 1e-8", {"norm-sandwich"}, 60},
      {5, "Gaussian mass and Gram diagonal vs oracle, tol 1e-9", {"quadrature-mass", "gram-diagonal"}, 10},
      {6, "orthogonality of q^m, m < n <= 12, rel tol 1e-10", {"orthogonality"}, 10},
      {7, "growth: normalized <= 2 + 1e-6, corollary 2^{p+1}", {"growth"}, 30},
      {8, "reproducing: plane(R=4) exponential kernel 1e-6, disk corrected kernel 1e-8", {"reproducing"}, 30},
      {9, "dilation: decreasing, final < 1e-3 ||f||", {"dilation"}, 30},
      {10, "embedding 2^{u+1} u/p on (4/3,4), (3/2,3), (2,2), slack 1e-8", {"embedding"}, 60},
  };

  RunConfig config;  // seed 42, default quadrature
  const auto results = run_suite(config);

  int failures = 0;
  for (const auto& c : criteria) {
    bool pass = true;
    double seconds = 0.0;
    std::string detail;
    for (const auto& group : c.groups) {
      bool seen = false;
      for (const auto& r : results) {
        if (!belongs(r, group)) continue;
        if (!seen) seconds += r.wall_seconds;  // one timing per group
        seen = true;
        if (!r.pass) {
          pass = false;
          char buf[160];
          std::snprintf(buf, sizeof(buf), " %s: lhs %.3g > rhs %.3g;", r.check_id.c_str(), r.lhs, r.rhs);
          detail += buf;
        }
      }
      if (!seen) {
        pass = false;
        detail += " no records for " + group + ";";
      }
    }
    const bool in_time = seconds < c.budget_seconds;
    if (!in_time) detail += " over time budget;";
    const bool ok = pass && in_time;
    failures += ok ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%.2f s / %.0f s)%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                seconds, c.budget_seconds, detail.c_str());
  }

  // 11: same seed twice (the second run on 4 workers) gives identical report files.
  const auto dir = std::filesystem::temp_directory_path() / "sliceq_acceptance";
  std::filesystem::remove_all(dir);
  write_reports(dir / "run1", config, results);
  RunConfig threaded = config;
  threaded.threads = 4;
  write_reports(dir / "run2", threaded, run_suite(threaded));
  const bool same = slurp(dir / "run1.json") == slurp(dir / "run2.json") &&
                    slurp(dir / "run1.csv") == slurp(dir / "run2.csv") && !slurp(dir / "run1.json").empty();
  std::filesystem::remove_all(dir);
  failures += same ? 0 : 1;
  std::printf("[%s] criterion 11: repeated runs with seed 42 give byte-identical JSON and CSV reports\n",
              same ? "PASS" : "FAIL");

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
