#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "bfa/approx.hpp"
#include "bfa/consistency.hpp"
#include "bfa/mass.hpp"

namespace bfa {

/// One benchmark campaign: for each focal count s and each trial, generate
/// a random mass function and run every configured method on it, recording
/// DF, scaled DF, and wall time.
struct ExperimentConfig {
  int frame_size = 4;
  std::vector<int> focal_counts;
  int k = 4;
  int trials = 1;
  std::uint64_t master_seed = 0;
  std::vector<Method> methods;
  ScaleMode scale_mode = ScaleMode::optimal_vacuous;
  /// Largest s for which the optimal reference may be computed.
  int optimal_cap = kDefaultOptimalCap;
  /// Worker threads for trial-level parallelism; results are identical for
  /// any value (timings aside).
  int jobs = 1;
};

struct TrialRecord {
  int frame_size = 0;
  int num_focal = 0;
  int k = 0;
  Method method = Method::optimal;
  int trial = 0;
  double df_value = 0.0;
  double scaled_df = 0.0;
  double time_seconds = 0.0;
  std::uint64_t seed = 0;
};

struct SummaryRow {
  int frame_size = 0;
  int num_focal = 0;
  Method method = Method::optimal;
  int trials = 0;
  double mean_scaled_df = 0.0;
  double mean_time_seconds = 0.0;
};

/// Frame with labels x1..xn, used for generated instances.
Frame default_frame(int n);

/// Random mass function with s focal elements: subsets drawn uniformly
/// without replacement from the 2^n - 1 non-empty candidates, masses drawn
/// uniformly on the simplex (normalized unit exponentials). Deterministic
/// given the generator state.
MassFunction random_mass_function(const Frame& frame, int s, std::mt19937_64& rng);

/// Per-trial seed: splitmix64 chain over (master_seed, n, s, trial).
std::uint64_t trial_seed(std::uint64_t master_seed, int n, int s, int trial);

/// Runs the configured campaign. Records are ordered by (s cell, trial,
/// configured method order) regardless of `jobs`. DF and scaled-DF columns
/// are reproducible for equal configs; timings are not.
std::vector<TrialRecord> run_benchmark(const ExperimentConfig& config);

/// Arithmetic means per (frame_size, num_focal, method) cell, rows sorted
/// by (frame_size, num_focal, method name).
std::vector<SummaryRow> summarize(std::span<const TrialRecord> records);

void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace bfa
