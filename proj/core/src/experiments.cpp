#include "bfa/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "bfa/error.hpp"
#include "bfa/random.hpp"

namespace bfa {

namespace {

// Salt folded into the per-trial seed for the iterative method's own stream.
constexpr std::uint64_t kIterativeSalt = 0x49544552ull;

std::uint64_t nonempty_subset_count(int n) {
  if (n >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}

}  // namespace

Frame default_frame(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return Frame::from_labels(std::move(labels));
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n, int s, int trial) {
  return mix_seed({master_seed, static_cast<std::uint64_t>(n),
                   static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(trial)});
}

MassFunction random_mass_function(const Frame& frame, int s, std::mt19937_64& rng) {
  const int n = frame.size();
  const std::uint64_t candidates = nonempty_subset_count(n);
  if (s < 1 || static_cast<std::uint64_t>(s) > candidates) {
    throw Error(ErrorCode::bad_arguments,
                "focal count " + std::to_string(s) + " outside [1, 2^n - 1]");
  }
  // Distinct non-empty subsets, uniform without replacement.
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(s));
  while (chosen.size() < static_cast<std::size_t>(s)) {
    const std::uint64_t bits = 1 + uniform_below(rng, candidates);
    if (seen.insert(bits).second) chosen.push_back(bits);
  }
  std::sort(chosen.begin(), chosen.end());

  // Masses uniform on the simplex: normalized unit exponentials.
  std::vector<double> raw(static_cast<std::size_t>(s));
  double total = 0.0;
  for (auto& value : raw) {
    double u = uniform_unit(rng);
    while (u == 0.0) u = uniform_unit(rng);
    value = -std::log1p(-u);
    total += value;
  }
  std::vector<MassFunction::Entry> entries;
  entries.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    entries.push_back({Subset::from_bits(chosen[i]), raw[i] / total});
  }
  return MassFunction::from_entries(frame, entries);
}

namespace {

void validate_config(const ExperimentConfig& config) {
  if (config.frame_size < 2 || config.frame_size > Frame::kMaxSize) {
    throw Error(ErrorCode::bad_arguments, "frame size must be in [2, 64]");
  }
  if (config.trials < 1) {
    throw Error(ErrorCode::bad_arguments, "trials must be at least 1");
  }
  if (config.k < 1) {
    throw Error(ErrorCode::bad_arguments, "k must be at least 1");
  }
  if (config.focal_counts.empty()) {
    throw Error(ErrorCode::bad_arguments, "no focal counts configured");
  }
  if (config.methods.empty()) {
    throw Error(ErrorCode::bad_arguments, "no methods configured");
  }
  if (config.jobs < 1) {
    throw Error(ErrorCode::bad_arguments, "jobs must be at least 1");
  }
  const std::uint64_t candidates = nonempty_subset_count(config.frame_size);
  const bool has_optimal =
      std::find(config.methods.begin(), config.methods.end(), Method::optimal) !=
      config.methods.end();
  const bool needs_optimal =
      config.scale_mode == ScaleMode::optimal_vacuous || has_optimal;
  for (const int s : config.focal_counts) {
    if (s < 1 || static_cast<std::uint64_t>(s) > candidates) {
      throw Error(ErrorCode::bad_arguments,
                  "focal count " + std::to_string(s) + " outside [1, 2^n - 1]");
    }
    if (needs_optimal && s > config.optimal_cap) {
      throw Error(ErrorCode::optimal_infeasible,
                  "focal count " + std::to_string(s) +
                      " exceeds the optimal-search cap " +
                      std::to_string(config.optimal_cap));
    }
  }
}

struct TrialTask {
  int cell = 0;
  int trial = 0;
};

}  // namespace

std::vector<TrialRecord> run_benchmark(const ExperimentConfig& config) {
  validate_config(config);
  const Frame frame = default_frame(config.frame_size);
  const auto methods = config.methods;
  const std::size_t per_trial = methods.size();
  const std::size_t cells = config.focal_counts.size();
  const auto trials = static_cast<std::size_t>(config.trials);

  std::vector<TrialRecord> records(cells * trials * per_trial);

  const auto needs_reference = config.scale_mode == ScaleMode::optimal_vacuous;

  auto run_trial = [&](int cell, int trial) {
    const int s = config.focal_counts[static_cast<std::size_t>(cell)];
    const std::uint64_t seed = trial_seed(config.master_seed, config.frame_size, s, trial);
    std::mt19937_64 rng(seed);
    const MassFunction instance = random_mass_function(frame, s, rng);
    const double df_vacuous = total_belief_weight(instance) - 1.0;

    ApproxOptions options;
    options.k = config.k;
    options.optimal_max_focals = config.optimal_cap;
    options.seed = mix_seed({seed, kIterativeSalt});

    std::optional<double> df_opt;
    std::optional<TrialRecord> optimal_record;
    const bool optimal_listed =
        std::find(methods.begin(), methods.end(), Method::optimal) != methods.end();
    if (needs_reference || optimal_listed) {
      // One timed run serves as both the scaling reference and, when listed,
      // the optimal method's own row.
      const auto t0 = std::chrono::steady_clock::now();
      const ApproxResult reference = approximate(instance, Method::optimal, options);
      const auto t1 = std::chrono::steady_clock::now();
      df_opt = reference.df_value;
      if (optimal_listed) {
        TrialRecord record;
        record.frame_size = config.frame_size;
        record.num_focal = s;
        record.k = config.k;
        record.method = Method::optimal;
        record.trial = trial;
        record.df_value = reference.df_value;
        record.scaled_df = scaled_df_value(
            reference.df_value, needs_reference ? df_opt : std::nullopt, df_vacuous,
            config.scale_mode);
        record.time_seconds = std::chrono::duration<double>(t1 - t0).count();
        record.seed = seed;
        optimal_record = record;
      }
    }

    const std::size_t base =
        (static_cast<std::size_t>(cell) * trials + static_cast<std::size_t>(trial)) *
        per_trial;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      const Method method = methods[mi];
      TrialRecord& slot = records[base + mi];
      if (method == Method::optimal && optimal_record) {
        slot = *optimal_record;
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      const ApproxResult result = approximate(instance, method, options);
      const auto t1 = std::chrono::steady_clock::now();
      slot.frame_size = config.frame_size;
      slot.num_focal = s;
      slot.k = config.k;
      slot.method = method;
      slot.trial = trial;
      slot.df_value = result.df_value;
      slot.scaled_df = scaled_df_value(
          result.df_value, needs_reference ? df_opt : std::nullopt, df_vacuous,
          config.scale_mode);
      slot.time_seconds = std::chrono::duration<double>(t1 - t0).count();
      slot.seed = seed;
    }
  };

  const std::size_t task_count = cells * trials;
  const int workers = std::min<int>(config.jobs, static_cast<int>(task_count));
  if (workers <= 1) {
    for (std::size_t task = 0; task < task_count; ++task) {
      run_trial(static_cast<int>(task / trials), static_cast<int>(task % trials));
    }
  } else {
    std::atomic<std::size_t> next_task{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t task = next_task.fetch_add(1);
          if (task >= task_count) return;
          run_trial(static_cast<int>(task / trials), static_cast<int>(task % trials));
        }
      });
    }
    for (auto& worker : pool) worker.join();
  }

  return records;
}

std::vector<SummaryRow> summarize(std::span<const TrialRecord> records) {
  struct Accumulator {
    Method method = Method::optimal;
    int count = 0;
    double scaled_sum = 0.0;
    double time_sum = 0.0;
  };
  // Keyed by method name so rows sort by (frame size, focal count, name).
  std::map<std::tuple<int, int, std::string>, Accumulator> cells;
  for (const auto& record : records) {
    auto& acc = cells[{record.frame_size, record.num_focal,
                       std::string(method_name(record.method))}];
    acc.method = record.method;
    acc.count += 1;
    acc.scaled_sum += record.scaled_df;
    acc.time_sum += record.time_seconds;
  }
  std::vector<SummaryRow> rows;
  rows.reserve(cells.size());
  for (const auto& [key, acc] : cells) {
    SummaryRow row;
    row.frame_size = std::get<0>(key);
    row.num_focal = std::get<1>(key);
    row.method = acc.method;
    row.trials = acc.count;
    row.mean_scaled_df = acc.scaled_sum / acc.count;
    row.mean_time_seconds = acc.time_sum / acc.count;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string format_double(double value, const char* spec) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), spec, value);
  return buffer;
}

}  // namespace

void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records) {
  out << "frame_size,num_focal,k,method,trial,df,scaled_df,time_seconds,seed\n";
  for (const auto& r : records) {
    out << r.frame_size << ',' << r.num_focal << ',' << r.k << ','
        << method_name(r.method) << ',' << r.trial << ','
        << format_double(r.df_value, "%.17g") << ','
        << format_double(r.scaled_df, "%.17g") << ','
        << format_double(r.time_seconds, "%.9f") << ',' << r.seed << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "frame_size,num_focal,method,trials,mean_scaled_df,mean_time_seconds\n";
  for (const auto& row : rows) {
    out << row.frame_size << ',' << row.num_focal << ',' << method_name(row.method)
        << ',' << row.trials << ','
        << format_double(row.mean_scaled_df, "%.17g") << ','
        << format_double(row.mean_time_seconds, "%.9f") << '\n';
  }
}

}  // namespace bfa
