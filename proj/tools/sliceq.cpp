// sliceq: command-line front end for the slice-regular Fock-space toolkit.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sliceq/errors.hpp"
#include "sliceq/fock.hpp"
#include "sliceq/harness.hpp"
#include "sliceq/oracle.hpp"
#include "sliceq/report.hpp"
#include "sliceq/series_io.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2, kIo = 3 };

struct Flags {
  std::string config_file;
  std::map<std::string, std::string> values;
};

// Every subcommand accepts the same parameter flags; each maps onto a config key.
void add_param_flags(CLI::App* sub, Flags& flags) {
  static const std::vector<std::pair<std::string, std::string>> keys{
      {"alpha", "Gaussian parameter alpha > 0"},
      {"p", "exponent p > 1"},
      {"degree", "degree of random series"},
      {"domain", "integration domain: disk or plane"},
      {"radius", "plane truncation radius"},
      {"truncation", "kernel series degree"},
      {"quad-r", "radial Gauss-Legendre nodes"},
      {"quad-theta", "angular trapezoid nodes"},
      {"slices", "slices sampled for the sup norm"},
      {"seed", "base random seed"},
      {"series-count", "instances per randomized check (0: per-check default)"},
      {"threads", "worker threads for verify"},
      {"checks", "comma-separated check ids, all, or none"},
      {"out", "report path stem (writes .json and .csv)"},
      {"format", "stdout report format: json or csv"},
  };
  for (const auto& [key, help] : keys) sub->add_option("--" + key, flags.values[key], help);
  sub->add_option("--config", flags.config_file, "key=value file; flags override it");
}

sliceq::RunConfig resolve(CLI::App* sub, const Flags& flags) {
  sliceq::RunConfig config;
  if (!flags.config_file.empty()) {
    for (const auto& [k, v] : sliceq::read_config_file(flags.config_file)) sliceq::apply_config_value(config, k, v);
  }
  for (const auto& [k, v] : flags.values) {
    if (sub->count("--" + k) > 0) sliceq::apply_config_value(config, k, v);
  }
  config.params.validate();
  return config;
}

sliceq::Quaternion quaternion_arg(const std::string& text, const char* name) {
  try {
    return sliceq::parse_quaternion(text);
  } catch (const sliceq::ParseError& e) {
    throw sliceq::UsageError(std::string(name) + ": expected \"x0 x1 x2 x3\", got '" + text + "'");
  }
}

int cmd_verify(const sliceq::RunConfig& config) {
  const auto results = sliceq::run_suite(config);
  if (!config.output.empty()) {
    sliceq::write_reports(config.output, config, results);
    for (const auto& r : results) {
      std::printf("%s %-48s margin %.3g\n", r.pass ? "PASS" : "FAIL", r.check_id.c_str(), r.margin);
    }
  } else if (config.format == "csv") {
    std::cout << sliceq::report_csv(results);
  } else {
    std::cout << sliceq::report_json(config, results);
  }
  return sliceq::all_passed(results) ? kPass : kCheckFailure;
}

int cmd_eval(const std::string& file, const std::string& q) {
  const auto f = sliceq::load_series(file);
  std::cout << sliceq::format_quaternion(sliceq::eval(f, quaternion_arg(q, "q"))) << '\n';
  return kPass;
}

int cmd_norm(const std::string& file, const sliceq::RunConfig& config) {
  const auto f = sliceq::load_series(file);
  const auto& P = config.params;
  for (const auto& [name, I] : {std::pair{"i", sliceq::ImaginaryUnit::i()}, std::pair{"j", sliceq::ImaginaryUnit::j()},
                                std::pair{"k", sliceq::ImaginaryUnit::k()}}) {
    std::printf("slice %s: %.17g\n", name, sliceq::fock_norm_slice(f, I, P));
  }
  const auto sup = sliceq::fock_norm(f, P);
  std::printf("sup: %.17g at %s\n", sup.value,
              sliceq::format_quaternion(static_cast<sliceq::Quaternion>(sup.unit)).c_str());
  return kPass;
}

int cmd_kernel(const std::string& qs, const std::string& ws, const sliceq::RunConfig& config) {
  const auto q = quaternion_arg(qs, "q");
  const auto w = quaternion_arg(ws, "w");
  const auto b = sliceq::kernel_eval(q, w, config.params);
  const auto c = sliceq::corrected_kernel_eval(q, w, config.params);
  std::cout << "kernel:     " << sliceq::format_quaternion(b) << '\n'
            << "corrected:  " << sliceq::format_quaternion(c) << '\n';
  std::printf("difference: %.17g\n", (b - c).norm());
  return kPass;
}

int cmd_gram(const sliceq::RunConfig& config) {
  sliceq::FockParams params = config.params;
  params.truncation = config.max_degree;
  const auto table = sliceq::gram_table(params);
  const double R = params.r_max();
  std::printf("%-4s %-24s %-24s %s\n", "m", "quadrature", "oracle", "abs diff");
  for (std::size_t m = 0; m <= config.max_degree; ++m) {
    const double oracle = sliceq::oracle::gram_diagonal(m, params.alpha, R);
    std::printf("%-4zu %-24.17g %-24.17g %.3g\n", m, table.diag[m], oracle, std::abs(table.diag[m] - oracle));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternionic slice-regular series and Fock-space numerics"};
  app.require_subcommand(1);

  Flags verify_flags, eval_flags, norm_flags, kernel_flags, gram_flags;
  std::string series_file, q_text, w_text;

  auto* verify = app.add_subcommand("verify", "run the property-check suite");
  add_param_flags(verify, verify_flags);

  auto* eval = app.add_subcommand("eval", "evaluate a series file at a quaternion");
  eval->add_option("series", series_file, "series file")->required();
  eval->add_option("q", q_text, "quaternion \"x0 x1 x2 x3\"")->required();
  add_param_flags(eval, eval_flags);

  auto* norm = app.add_subcommand("norm", "Fock norm of a series file");
  norm->add_option("series", series_file, "series file")->required();
  add_param_flags(norm, norm_flags);

  auto* kernel = app.add_subcommand("kernel", "reproducing kernel and corrected kernel at (q, w)");
  kernel->add_option("q", q_text, "quaternion \"x0 x1 x2 x3\"")->required();
  kernel->add_option("w", w_text, "quaternion \"x0 x1 x2 x3\"")->required();
  add_param_flags(kernel, kernel_flags);

  auto* gram = app.add_subcommand("gram", "Gram diagonal: quadrature against the incomplete-gamma oracle");
  add_param_flags(gram, gram_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(resolve(verify, verify_flags));
    if (*eval) return cmd_eval(series_file, q_text);
    if (*norm) return cmd_norm(series_file, resolve(norm, norm_flags));
    if (*kernel) return cmd_kernel(q_text, w_text, resolve(kernel, kernel_flags));
    if (*gram) return cmd_gram(resolve(gram, gram_flags));
  } catch (const sliceq::IoError& e) {
    std::cerr << "sliceq: " << e.what() << '\n';
    return kIo;
  } catch (const sliceq::Error& e) {
    std::cerr << "sliceq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
