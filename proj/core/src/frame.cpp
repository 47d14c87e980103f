#include "bfa/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "bfa/error.hpp"

namespace bfa {

Frame Frame::from_labels(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::bad_arguments, "frame needs at least one element");
  }
  if (labels.size() > static_cast<std::size_t>(kMaxSize)) {
    throw Error(ErrorCode::bad_arguments,
                "frame limited to " + std::to_string(kMaxSize) + " elements, got " +
                    std::to_string(labels.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw Error(ErrorCode::bad_arguments, "frame labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::bad_arguments, "duplicate frame label \"" + label + "\"");
    }
  }
  return Frame(std::move(labels));
}

Subset Frame::universe() const {
  const int n = size();
  const std::uint64_t bits = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return Subset::from_bits(bits);
}

Subset Frame::singleton(int i) const {
  if (i < 0 || i >= size()) {
    throw Error(ErrorCode::bad_arguments, "element index out of range");
  }
  return Subset::from_bits(std::uint64_t{1} << i);
}

std::optional<int> Frame::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Subset Frame::subset_from_labels(std::span<const std::string> members) const {
  std::uint64_t bits = 0;
  for (const auto& member : members) {
    const auto idx = index_of(member);
    if (!idx) {
      throw Error(ErrorCode::bad_arguments, "unknown label \"" + member + "\"");
    }
    bits |= std::uint64_t{1} << *idx;
  }
  return Subset::from_bits(bits);
}

std::vector<std::string> Frame::labels_of(Subset a) const {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(a.cardinality()));
  for (int i = 0; i < size(); ++i) {
    if (a.contains_element(i)) out.push_back(labels_[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace bfa
