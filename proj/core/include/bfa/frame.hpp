#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfa {

/// A subset of a frame's elements, stored as a bit set. Element i of the
/// frame corresponds to bit i. Ordering compares bit patterns, so sorted
/// containers iterate subsets in ascending bit-pattern order.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  /// True if `other` is included in this set.
  constexpr bool contains(Subset other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool contains_element(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

/// Ordered universal set of up to 64 distinct, non-empty element labels.
/// The label order fixes the bit encoding of every Subset over the frame.
class Frame {
 public:
  static constexpr int kMaxSize = 64;

  /// Builds a frame from labels; throws bad_arguments on empty, oversized,
  /// duplicate, or blank labels.
  static Frame from_labels(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  Subset universe() const;
  Subset singleton(int i) const;
  Subset complement(Subset a) const { return Subset::from_bits(universe().bits() & ~a.bits()); }

  std::optional<int> index_of(std::string_view label) const;

  /// Builds a subset from member labels; throws bad_arguments on unknown labels.
  Subset subset_from_labels(std::span<const std::string> members) const;

  /// Member labels of `a` in frame order.
  std::vector<std::string> labels_of(Subset a) const;

  bool contains(Subset a) const { return universe().contains(a); }

  friend bool operator==(const Frame& a, const Frame& b) { return a.labels_ == b.labels_; }

 private:
  explicit Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {}

  std::vector<std::string> labels_;
};

}  // namespace bfa
