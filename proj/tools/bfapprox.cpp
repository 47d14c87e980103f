// Command-line front end: approximate a mass function, check consistency and
// DF between two mass functions, or run the benchmark harness.
//
// Exit codes: 0 success, 1 validation error, 2 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfa/approx.hpp"
#include "bfa/consistency.hpp"
#include "bfa/error.hpp"
#include "bfa/experiments.hpp"
#include "bfa/json_io.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct ApproximateArgs {
  std::string method;
  std::optional<int> k;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> max_iterations;
  std::optional<std::int64_t> max_time_ms;
  std::string lump_cost = "cs";
  std::optional<int> klx_keep;
  int optimal_cap = bfa::kDefaultOptimalCap;
};

bool method_needs_k(bfa::Method method) {
  switch (method) {
    case bfa::Method::bayesian:
    case bfa::Method::consonant:
      return false;
    case bfa::Method::klx:
      return false;  // needs --klx-keep or --k; checked separately
    default:
      return true;
  }
}

int run_approximate(const ApproximateArgs& args) {
  const auto method = bfa::method_from_name(args.method);
  if (!method) {
    throw bfa::Error(bfa::ErrorCode::unknown_method,
                     "no method named \"" + args.method + "\"");
  }
  const bfa::MassFunction input = bfa::load_mass_function(args.input);

  bfa::ApproxOptions options;
  if (method_needs_k(*method)) {
    if (!args.k) {
      throw bfa::Error(bfa::ErrorCode::bad_arguments,
                       "--k is required for method \"" + args.method + "\"");
    }
    options.k = *args.k;
  } else if (args.k) {
    options.k = *args.k;
  }
  if (*method == bfa::Method::klx && !args.klx_keep && !args.k) {
    throw bfa::Error(bfa::ErrorCode::bad_arguments,
                     "klx needs --klx-keep (or --k as a fallback)");
  }
  options.seed = args.seed;
  if (args.max_iterations) options.budget.max_iterations = *args.max_iterations;
  if (args.max_time_ms) {
    options.budget.max_time = std::chrono::milliseconds(*args.max_time_ms);
  }
  if (args.lump_cost == "cs") {
    options.lump_cost = bfa::LumpCost::cs;
  } else if (args.lump_cost == "cr") {
    options.lump_cost = bfa::LumpCost::cr;
  } else {
    throw bfa::Error(bfa::ErrorCode::bad_arguments,
                     "--lump-cost must be cs or cr, got \"" + args.lump_cost + "\"");
  }
  options.klx_keep = args.klx_keep;
  options.optimal_max_focals = args.optimal_cap;

  const bfa::ApproxResult result = bfa::approximate(input, *method, options);
  bfa::save_mass_function(result.mass, args.output);

  ordered_json report;
  report["method"] = std::string(bfa::method_name(*method));
  report["df"] = result.df_value;
  report["focal_count"] = result.mass.focal_count();
  report["strongly_consistent"] =
      bfa::is_strongly_consistent(result.mass, input).consistent;
  std::cout << report.dump() << '\n';
  return 0;
}

int run_check(const std::string& original_path, const std::string& approx_path) {
  const bfa::MassFunction original = bfa::load_mass_function(original_path);
  const bfa::MassFunction approx = bfa::load_mass_function(approx_path);
  if (!(original.frame() == approx.frame())) {
    throw bfa::Error(bfa::ErrorCode::frame_mismatch,
                     "the two documents use different frames");
  }
  const auto weak = bfa::is_weakly_consistent(approx, original);
  const auto strong = bfa::is_strongly_consistent(approx, original);
  const double df_value = bfa::df(original, approx);

  ordered_json report;
  report["weak"] = weak.consistent;
  report["strong"] = strong.consistent;
  report["df"] = df_value;
  if (weak.witness) {
    report["violation_set"] = original.frame().labels_of(*weak.witness);
  } else {
    report["violation_set"] = nullptr;
  }
  std::cout << report.dump() << '\n';
  return 0;
}

struct BenchArgs {
  int frame_size = 4;
  std::string num_focal;
  int k = 4;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string methods = "all";
  std::string scale = "optimal";
  std::string out;
  std::string summary;
  int jobs = 1;
  int optimal_cap = bfa::kDefaultOptimalCap;
};

std::vector<int> parse_focal_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      return {std::stoi(text)};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) {
      throw bfa::Error(bfa::ErrorCode::bad_arguments,
                       "empty focal range \"" + text + "\"");
    }
    std::vector<int> values;
    for (int s = lo; s <= hi; ++s) values.push_back(s);
    return values;
  } catch (const std::invalid_argument&) {
    throw bfa::Error(bfa::ErrorCode::bad_arguments,
                     "--num-focal expects N or LO..HI, got \"" + text + "\"");
  } catch (const std::out_of_range&) {
    throw bfa::Error(bfa::ErrorCode::bad_arguments,
                     "--num-focal out of range: \"" + text + "\"");
  }
}

std::vector<bfa::Method> parse_methods(const std::string& text) {
  if (text == "all") {
    return {bfa::kAllMethods.begin(), bfa::kAllMethods.end()};
  }
  std::vector<bfa::Method> methods;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string name = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto method = bfa::method_from_name(name);
    if (!method) {
      throw bfa::Error(bfa::ErrorCode::unknown_method,
                       "no method named \"" + name + "\"");
    }
    methods.push_back(*method);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return methods;
}

int run_bench(const BenchArgs& args) {
  bfa::ExperimentConfig config;
  config.frame_size = args.frame_size;
  config.focal_counts = parse_focal_range(args.num_focal);
  config.k = args.k;
  config.trials = args.trials;
  config.master_seed = args.seed;
  config.methods = parse_methods(args.methods);
  if (args.scale == "optimal") {
    config.scale_mode = bfa::ScaleMode::optimal_vacuous;
  } else if (args.scale == "vacuous") {
    config.scale_mode = bfa::ScaleMode::vacuous_only;
  } else {
    throw bfa::Error(bfa::ErrorCode::bad_arguments,
                     "--scale must be optimal or vacuous, got \"" + args.scale + "\"");
  }
  config.optimal_cap = args.optimal_cap;
  config.jobs = args.jobs;

  const auto records = bfa::run_benchmark(config);

  std::ofstream out(args.out);
  if (!out) {
    throw bfa::Error(bfa::ErrorCode::bad_arguments, "cannot open " + args.out);
  }
  bfa::write_trial_csv(out, records);
  if (!args.summary.empty()) {
    std::ofstream summary(args.summary);
    if (!summary) {
      throw bfa::Error(bfa::ErrorCode::bad_arguments, "cannot open " + args.summary);
    }
    bfa::write_summary_csv(summary, bfa::summarize(records));
  }
  std::cerr << "wrote " << records.size() << " records to " << args.out << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Faithful approximation of belief functions"};
  app.require_subcommand(1);

  ApproximateArgs approx_args;
  auto* approximate = app.add_subcommand(
      "approximate", "Approximate a mass function and report DF and consistency");
  approximate->add_option("--method", approx_args.method, "Approximation method")
      ->required();
  approximate->add_option("--k", approx_args.k, "Target focal element count");
  approximate->add_option("--input", approx_args.input, "Input mass-function JSON")
      ->required();
  approximate->add_option("--output", approx_args.output, "Output mass-function JSON")
      ->required();
  approximate->add_option("--seed", approx_args.seed, "Seed for the iterative method");
  approximate->add_option("--max-iterations", approx_args.max_iterations,
                          "Iteration budget for the iterative method");
  approximate->add_option("--max-time-ms", approx_args.max_time_ms,
                          "Time budget for the iterative method (milliseconds)");
  approximate->add_option("--lump-cost", approx_args.lump_cost,
                          "Focal cost used by lump: cs or cr");
  approximate->add_option("--klx-keep", approx_args.klx_keep,
                          "Focal elements kept by klx (defaults to --k)");
  approximate->add_option("--optimal-cap", approx_args.optimal_cap,
                          "Focal-count cap for the optimal search");

  std::string check_original;
  std::string check_approx;
  auto* check = app.add_subcommand(
      "check", "Report weak/strong consistency and DF between two mass functions");
  check->add_option("--original", check_original, "Original mass-function JSON")
      ->required();
  check->add_option("--approx", check_approx, "Approximation mass-function JSON")
      ->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the random-instance benchmark");
  bench->add_option("--frame-size", bench_args.frame_size, "Frame size n")->required();
  bench->add_option("--num-focal", bench_args.num_focal, "Focal counts: N or LO..HI")
      ->required();
  bench->add_option("--k", bench_args.k, "Target focal element count")->required();
  bench->add_option("--trials", bench_args.trials, "Trials per focal count")->required();
  bench->add_option("--seed", bench_args.seed, "Master seed");
  bench->add_option("--methods", bench_args.methods,
                    "Comma-separated method names, or all");
  bench->add_option("--scale", bench_args.scale, "DF scaling: optimal or vacuous");
  bench->add_option("--out", bench_args.out, "Trial CSV path")->required();
  bench->add_option("--summary", bench_args.summary, "Summary CSV path");
  bench->add_option("--jobs", bench_args.jobs, "Worker threads for trials");
  bench->add_option("--optimal-cap", bench_args.optimal_cap,
                    "Focal-count cap for the optimal reference");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (approximate->parsed()) return run_approximate(approx_args);
    if (check->parsed()) return run_check(check_original, check_approx);
    if (bench->parsed()) return run_bench(bench_args);
    std::cerr << "no subcommand given\n";
    return 1;
  } catch (const bfa::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
