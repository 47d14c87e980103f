#pragma once

#include <span>
#include <vector>

#include "bfa/frame.hpp"

namespace bfa {

/// Default tolerance for normalization and consistency checks. Masses are
/// doubles; powers of two up to 2^64 are exact in this representation.
inline constexpr double kMassEpsilon = 1e-9;

/// Exponential blow-up guard: operations that enumerate all 2^n subsets
/// (belief tables, Mobius inversion, definitional DF, the weak-consistency
/// scan) refuse frames larger than this.
inline constexpr int kMaxEnumerableFrame = 20;

/// 2^e as a double, exact for 0 <= e <= 64.
double pow2d(int e);

/// A normalized basic probability assignment: positive masses on distinct
/// non-empty subsets, summing to one. Entries are kept in ascending
/// bit-pattern order; instances are immutable after construction.
class MassFunction {
 public:
  struct Entry {
    Subset set;
    double mass;
  };

  /// Validates and canonicalizes raw entries. Entries with identical subsets
  /// are merged by summation. Throws empty_focal, non_positive_mass,
  /// not_normalized, or frame_mismatch.
  static MassFunction from_entries(Frame frame, std::span<const Entry> entries,
                                   double eps = kMassEpsilon);

  /// m(X) = 1: the belief function of total ignorance.
  static MassFunction vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  std::span<const Entry> entries() const { return entries_; }
  int focal_count() const { return static_cast<int>(entries_.size()); }

  /// Mass of `s`, zero when `s` is not focal.
  double mass_of(Subset s) const;
  bool is_focal(Subset s) const;

 private:
  MassFunction(Frame frame, std::vector<Entry> sorted_entries)
      : frame_(std::move(frame)), entries_(std::move(sorted_entries)) {}

  Frame frame_;
  std::vector<Entry> entries_;
};

/// Bel(A) = sum of masses of focal elements included in A.
double bel(const MassFunction& m, Subset a);

/// Pl(A) = sum of masses of focal elements meeting A; Pl(A) = 1 - Bel(X\A).
double pl(const MassFunction& m, Subset a);

/// Dense belief table indexed by subset bit pattern (size 2^n). Guarded at
/// n <= kMaxEnumerableFrame.
std::vector<double> bel_table(const MassFunction& m);

/// Mobius inversion of a full belief table back to a mass function.
/// Throws not_a_belief_function when an inverted mass is below -eps.
MassFunction mass_from_bel(const Frame& frame, std::span<const double> table,
                           double eps = kMassEpsilon);

/// Dempster's rule: normalized conjunctive combination. Throws
/// total_conflict when the conflict K reaches 1 - eps.
MassFunction combine_dempster(const MassFunction& m1, const MassFunction& m2,
                              double eps = kMassEpsilon);

/// Sum over focal elements of m(B) * 2^(n - |B|), which equals the sum of
/// Bel over all 2^n subsets without enumerating them.
double total_belief_weight(const MassFunction& m);

}  // namespace bfa
