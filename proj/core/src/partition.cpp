#include "bfa/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bfa/error.hpp"

namespace bfa {

Partition Partition::from_assignment(std::vector<int> assignment) {
  if (assignment.empty()) {
    throw Error(ErrorCode::bad_arguments, "partition of an empty set");
  }
  if (assignment[0] != 0) {
    throw Error(ErrorCode::bad_arguments, "restricted-growth string must start at 0");
  }
  int max_seen = 0;
  for (std::size_t i = 1; i < assignment.size(); ++i) {
    const int id = assignment[i];
    if (id < 0 || id > max_seen + 1) {
      throw Error(ErrorCode::bad_arguments,
                  "block id " + std::to_string(id) + " at position " + std::to_string(i) +
                      " violates the restricted-growth property");
    }
    max_seen = std::max(max_seen, id);
  }
  return Partition(std::move(assignment), max_seen + 1);
}

Partition Partition::normalized_from_labels(std::span<const int> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::bad_arguments, "partition of an empty set");
  }
  std::map<int, int> remap;
  std::vector<int> assignment(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0) {
      throw Error(ErrorCode::bad_arguments, "block labels must be non-negative");
    }
    const auto it =
        remap.try_emplace(labels[i], static_cast<int>(remap.size())).first;
    assignment[i] = it->second;
  }
  return Partition(std::move(assignment), static_cast<int>(remap.size()));
}

PartitionEnumerator::PartitionEnumerator(int count, int blocks)
    : count_(count), blocks_(blocks) {
  if (count < 1 || blocks < 1 || blocks > count) {
    throw Error(ErrorCode::bad_arguments,
                "cannot partition " + std::to_string(count) + " items into " +
                    std::to_string(blocks) + " non-empty blocks");
  }
  assignment_.resize(static_cast<std::size_t>(count));
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    // Lexicographically first: zeros, then one position per remaining block.
    started_ = true;
    const int zeros = count_ - blocks_ + 1;
    for (int i = 0; i < count_; ++i) {
      assignment_[static_cast<std::size_t>(i)] = i < zeros ? 0 : i - zeros + 1;
    }
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return Partition::from_assignment(assignment_);
}

bool PartitionEnumerator::advance() {
  // prefix_max[i] = max(assignment[0..i])
  std::vector<int> prefix_max(assignment_.size());
  prefix_max[0] = 0;
  for (std::size_t i = 1; i < assignment_.size(); ++i) {
    prefix_max[i] = std::max(prefix_max[i - 1], assignment_[i]);
  }
  for (int i = count_ - 1; i >= 1; --i) {
    const int before = prefix_max[static_cast<std::size_t>(i - 1)];
    const int limit = std::min(before + 1, blocks_ - 1);
    for (int v = assignment_[static_cast<std::size_t>(i)] + 1; v <= limit; ++v) {
      const int new_max = std::max(before, v);
      const int missing = (blocks_ - 1) - new_max;  // ids still to introduce
      const int tail = count_ - 1 - i;
      if (missing > tail) continue;
      assignment_[static_cast<std::size_t>(i)] = v;
      // Minimal completion: zeros, then the missing ids in ascending order.
      for (int j = i + 1; j < count_ - missing; ++j) {
        assignment_[static_cast<std::size_t>(j)] = 0;
      }
      for (int t = 0; t < missing; ++t) {
        assignment_[static_cast<std::size_t>(count_ - missing + t)] = new_max + 1 + t;
      }
      return true;
    }
  }
  return false;
}

MassFunction blocks_to_mass(const MassFunction& m, const Partition& partition) {
  if (partition.size() != m.focal_count()) {
    throw Error(ErrorCode::length_mismatch,
                "partition length " + std::to_string(partition.size()) +
                    " does not match focal count " + std::to_string(m.focal_count()));
  }
  const auto assignment = partition.assignment();
  const auto focals = m.entries();
  const std::size_t blocks = static_cast<std::size_t>(partition.block_count());
  std::vector<std::uint64_t> union_bits(blocks, 0);
  std::vector<double> block_mass(blocks, 0.0);
  for (std::size_t i = 0; i < focals.size(); ++i) {
    const auto b = static_cast<std::size_t>(assignment[i]);
    union_bits[b] |= focals[i].set.bits();
    block_mass[b] += focals[i].mass;
  }
  std::vector<MassFunction::Entry> entries;
  entries.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    entries.push_back({Subset::from_bits(union_bits[b]), block_mass[b]});
  }
  return MassFunction::from_entries(m.frame(), entries);
}

}  // namespace bfa
