#pragma once

#include <optional>
#include <vector>

#include "bfa/mass.hpp"

namespace bfa {

enum class DfMode { definitional, closed_form };

/// DF closeness of `approx` to `original`: the sum over all subsets of the
/// belief gap Bel(A) - Bel'(A). closed_form evaluates it as a difference of
/// total belief weights; definitional enumerates all 2^n subsets (n <= 20).
double df(const MassFunction& original, const MassFunction& approx,
          DfMode mode = DfMode::closed_form);

enum class ScaleMode { optimal_vacuous, vacuous_only };

/// Scales a DF value between 0 (optimal) and 1 (vacuous), or by the vacuous
/// DF alone. Returns 0 when the denominator vanishes.
double scaled_df_value(double df_value, std::optional<double> df_opt,
                       double df_vacuous, ScaleMode mode, double eps = kMassEpsilon);

/// Convenience wrapper: computes df(original, approx) and df(original,
/// vacuous) and scales. optimal_vacuous mode requires df_opt.
double scaled_df(const MassFunction& original, const MassFunction& approx,
                 std::optional<double> df_opt, ScaleMode mode,
                 double eps = kMassEpsilon);

struct WeakConsistency {
  bool consistent = false;
  /// Largest Bel'(A) - Bel(A) over all subsets (negative when none exceeds).
  double max_violation = 0.0;
  /// A subset attaining max_violation, present when not consistent.
  std::optional<Subset> witness;
};

/// Weak consistency (Bel(A) >= Bel'(A) for all A), decided by enumerating
/// all subsets; n <= 20. Reports the worst violation as a witness.
WeakConsistency is_weakly_consistent(const MassFunction& approx,
                                     const MassFunction& original,
                                     double eps = kMassEpsilon);

/// Admissible mass transport from original focal elements to approximation
/// focal elements; edges only connect A_i to supersets B_j.
struct FlowWitness {
  struct Edge {
    int original_index = 0;
    int approx_index = 0;
    double flow = 0.0;
  };
  std::vector<Edge> edges;
  /// Mass that could not be routed; zero (up to eps) iff strongly consistent.
  double residual = 0.0;
};

struct StrongConsistency {
  bool consistent = false;
  FlowWitness witness;
};

/// Strong consistency decided as a transportation feasibility problem:
/// sources carry m(A_i), sinks demand m'(B_j), an arc (i, j) is permitted
/// iff A_i is a subset of B_j, and the verdict is whether a maximum flow of
/// 1 - eps is reachable.
StrongConsistency is_strongly_consistent(const MassFunction& approx,
                                         const MassFunction& original,
                                         double eps = kMassEpsilon);

}  // namespace bfa
