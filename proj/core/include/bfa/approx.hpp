#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bfa/consistency.hpp"
#include "bfa/mass.hpp"
#include "bfa/partition.hpp"

namespace bfa {

enum class Method {
  optimal,
  pair,
  single,
  ratio,
  lump,
  iterative,
  summarization,
  bayesian,
  consonant,
  klx,
};

/// Canonical method order used by the CLI (`--methods all`) and CSV output.
inline constexpr std::array<Method, 10> kAllMethods = {
    Method::optimal,   Method::pair,     Method::single,
    Method::ratio,     Method::lump,     Method::iterative,
    Method::summarization, Method::bayesian, Method::consonant,
    Method::klx,
};

std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);

/// Whether the method guarantees a strongly consistent output. Bayesian and
/// k-l-x do not; they are kept as baselines.
bool method_is_faithful(Method method);

/// Cost used to rank focal elements in the lump method: CS(A) ranks by the
/// DF increase of merging A with X, CR(A) by m(A) / 2^|A|.
enum class LumpCost { cs, cr };

/// Stopping limits for the iterative local search; unset means unlimited.
struct Budget {
  std::optional<std::int64_t> max_iterations;
  std::optional<std::chrono::milliseconds> max_time;
};

struct ApproxResult {
  MassFunction mass;
  Method method;
  /// DF of `mass` against the input mass function (closed form).
  double df_value = 0.0;
  /// Method-level guarantee, not a per-instance verdict.
  bool faithful = false;
  /// Grouping of the input's focal elements, for partition-based methods.
  std::optional<Partition> partition;
  /// Pairwise merge trace (pair, single, ratio), in merge order.
  std::vector<std::pair<Subset, Subset>> merges;
  /// Completed sweeps of the iterative method.
  std::int64_t iterations = 0;
};

/// Default cap on the focal count accepted by the exact optimal search;
/// the partition space grows as a Stirling number.
inline constexpr int kDefaultOptimalCap = 15;

/// Exact optimal strong k-approximation: minimizes DF over all partitions
/// of the focal elements into exactly k blocks. Returns the input unchanged
/// when it already has at most k focal elements. Ties are broken by the
/// first partition found in restricted-growth lexicographic order. Throws
/// too_many_focals above `max_focals`.
ApproxResult optimal_approximation(const MassFunction& m, int k,
                                   int max_focals = kDefaultOptimalCap);

/// DF increase caused by merging two distinct focal elements of m:
/// CP(A,B) = m(A) 2^(n-|A|) + m(B) 2^(n-|B|) - (m(A)+m(B)) 2^(n-|A u B|).
/// Strictly positive for distinct focal elements.
double merge_cost_pair(const MassFunction& m, Subset a, Subset b);

/// Greedy descent on CP: repeatedly merges the cheapest pair, where the
/// first element is the focal with the smallest best-partner cost and the
/// second is that partner, until at most k focal elements remain.
ApproxResult pair_approximation(const MassFunction& m, int k);

/// Greedy merging of the two focals with the smallest per-focal cost
/// CS(A) = m(A) (2^(n-|A|) - 1).
ApproxResult single_approximation(const MassFunction& m, int k);

/// Same loop as single with cost CR(A) = m(A) / 2^|A|.
ApproxResult ratio_approximation(const MassFunction& m, int k);

/// Keeps the k-1 highest-cost focals and merges all remaining ones into
/// their union in one step.
ApproxResult lump_approximation(const MassFunction& m, int k,
                                LumpCost cost = LumpCost::cs);

/// Local search over exactly-k partitions: starts from a seeded random
/// partition and sweeps all single-element moves between blocks, accepting
/// improvements immediately, until a full sweep yields no improvement or
/// the budget is exhausted.
ApproxResult iterative_approximation(const MassFunction& m, int k,
                                     std::uint64_t seed,
                                     const Budget& budget = {});

/// Keeps the k-1 largest-mass focals and merges the rest into their union.
ApproxResult summarization(const MassFunction& m, int k);

/// Probability approximation m'({x}) = sum_{B owns x} m(B) / sum_C m(C)|C|.
/// Not consistent in general; commutes with Dempster's rule.
ApproxResult bayesian_approximation(const MassFunction& m);

/// Nested (consonant) approximation: focals ordered by descending mass form
/// a chain of cumulative unions, each carrying the mass of its focal;
/// duplicate chain sets merge. At most min(s, n) focal elements.
ApproxResult consonant_approximation(const MassFunction& m);

/// Keeps the `keep` largest-mass focals and renormalizes. Not consistent
/// in general.
ApproxResult klx_approximation(const MassFunction& m, int keep);

/// Options for the method dispatcher used by the CLI and the benchmark
/// harness. `k` applies to all k-parameterized methods; klx falls back to
/// `k` when `klx_keep` is unset.
struct ApproxOptions {
  int k = 0;
  std::uint64_t seed = 0;
  Budget budget;
  LumpCost lump_cost = LumpCost::cs;
  std::optional<int> klx_keep;
  int optimal_max_focals = kDefaultOptimalCap;
};

ApproxResult approximate(const MassFunction& m, Method method,
                         const ApproxOptions& options);

}  // namespace bfa
