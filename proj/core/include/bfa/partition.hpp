#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bfa/mass.hpp"

namespace bfa {

/// A set partition of {0..s-1} encoded as a restricted-growth string:
/// assignment[0] == 0 and assignment[i] <= 1 + max(assignment[0..i-1]).
/// Block ids are contiguous, so every block is non-empty.
class Partition {
 public:
  /// Validates the restricted-growth property; throws bad_arguments.
  static Partition from_assignment(std::vector<int> assignment);

  /// Canonicalizes arbitrary block labels into restricted-growth form by
  /// renaming blocks in order of first occurrence.
  static Partition normalized_from_labels(std::span<const int> labels);

  std::span<const int> assignment() const { return assignment_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  int block_count() const { return block_count_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  Partition(std::vector<int> assignment, int block_count)
      : assignment_(std::move(assignment)), block_count_(block_count) {}

  std::vector<int> assignment_;
  int block_count_;
};

/// Streams every partition of {0..count-1} into exactly `blocks` non-empty
/// blocks, in restricted-growth lexicographic order, each exactly once.
/// The number of emitted partitions is the Stirling partition number.
class PartitionEnumerator {
 public:
  PartitionEnumerator(int count, int blocks);

  /// Next partition, or nullopt when exhausted.
  std::optional<Partition> next();

 private:
  bool advance();

  int count_;
  int blocks_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> assignment_;
};

/// Collapses each partition block of m's focal elements into one entry:
/// the union of the block's subsets carrying the sum of their masses.
/// Blocks whose unions coincide are merged by summation. Throws
/// length_mismatch when the partition length differs from the focal count.
MassFunction blocks_to_mass(const MassFunction& m, const Partition& partition);

}  // namespace bfa
