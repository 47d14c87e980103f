#include "bfa/mass.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>

#include "bfa/error.hpp"

namespace bfa {

double pow2d(int e) {
  static const auto table = [] {
    std::array<double, 65> t{};
    for (int i = 0; i <= 64; ++i) t[static_cast<std::size_t>(i)] = std::ldexp(1.0, i);
    return t;
  }();
  return table[static_cast<std::size_t>(e)];
}

namespace {

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::frame_mismatch, "mass functions live on different frames");
  }
}

void require_in_frame(const Frame& frame, Subset a) {
  if (!frame.contains(a)) {
    throw Error(ErrorCode::frame_mismatch, "subset has bits outside the frame");
  }
}

void require_enumerable(const Frame& frame) {
  if (frame.size() > kMaxEnumerableFrame) {
    throw Error(ErrorCode::frame_too_large,
                "subset enumeration limited to " + std::to_string(kMaxEnumerableFrame) +
                    " elements, frame has " + std::to_string(frame.size()));
  }
}

}  // namespace

MassFunction MassFunction::from_entries(Frame frame, std::span<const Entry> entries,
                                        double eps) {
  std::vector<Entry> kept;
  kept.reserve(entries.size());
  for (const auto& entry : entries) {
    require_in_frame(frame, entry.set);
    if (entry.set.empty()) {
      if (entry.mass > eps) {
        throw Error(ErrorCode::empty_focal,
                    "the empty set cannot carry mass (" + std::to_string(entry.mass) + ")");
      }
      continue;  // negligible mass on the empty set is dropped
    }
    if (entry.mass <= 0.0) {
      throw Error(ErrorCode::non_positive_mass,
                  "mass " + std::to_string(entry.mass) + " is not positive");
    }
    kept.push_back(entry);
  }

  std::stable_sort(kept.begin(), kept.end(),
                   [](const Entry& a, const Entry& b) { return a.set < b.set; });

  // Merge duplicate subsets by summation, preserving input order per subset.
  std::vector<Entry> merged;
  merged.reserve(kept.size());
  for (const auto& entry : kept) {
    if (!merged.empty() && merged.back().set == entry.set) {
      merged.back().mass += entry.mass;
    } else {
      merged.push_back(entry);
    }
  }

  double total = 0.0;
  for (const auto& entry : merged) total += entry.mass;
  if (std::abs(total - 1.0) > eps) {
    throw Error(ErrorCode::not_normalized,
                "masses sum to " + std::to_string(total) + ", expected 1");
  }
  return MassFunction(std::move(frame), std::move(merged));
}

MassFunction MassFunction::vacuous(Frame frame) {
  std::vector<Entry> entries{{frame.universe(), 1.0}};
  return MassFunction(std::move(frame), std::move(entries));
}

double MassFunction::mass_of(Subset s) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), s,
      [](const Entry& e, Subset key) { return e.set < key; });
  if (it != entries_.end() && it->set == s) return it->mass;
  return 0.0;
}

bool MassFunction::is_focal(Subset s) const { return mass_of(s) > 0.0; }

double bel(const MassFunction& m, Subset a) {
  require_in_frame(m.frame(), a);
  double total = 0.0;
  for (const auto& entry : m.entries()) {
    if (a.contains(entry.set)) total += entry.mass;
  }
  return total;
}

double pl(const MassFunction& m, Subset a) {
  require_in_frame(m.frame(), a);
  double total = 0.0;
  for (const auto& entry : m.entries()) {
    if (entry.set.intersects(a)) total += entry.mass;
  }
  return total;
}

std::vector<double> bel_table(const MassFunction& m) {
  require_enumerable(m.frame());
  const int n = m.frame().size();
  std::vector<double> table(std::size_t{1} << n, 0.0);
  for (const auto& entry : m.entries()) {
    table[entry.set.bits()] += entry.mass;
  }
  // Zeta transform over the subset lattice: table[A] = sum of m(B), B in A.
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t a = 0; a < table.size(); ++a) {
      if (a & mask) table[a] += table[a ^ mask];
    }
  }
  return table;
}

MassFunction mass_from_bel(const Frame& frame, std::span<const double> table,
                           double eps) {
  require_enumerable(frame);
  const int n = frame.size();
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::bad_arguments,
                "belief table must list all 2^n subsets, got " +
                    std::to_string(table.size()));
  }
  std::vector<double> masses(table.begin(), table.end());
  // Mobius inversion: undo the zeta transform bit by bit.
  for (int bit = 0; bit < n; ++bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t a = 0; a < masses.size(); ++a) {
      if (a & mask) masses[a] -= masses[a ^ mask];
    }
  }
  if (std::abs(masses[0]) > eps) {
    throw Error(ErrorCode::not_a_belief_function,
                "Bel(empty) = " + std::to_string(masses[0]) + ", expected 0");
  }
  std::vector<MassFunction::Entry> entries;
  for (std::size_t bits = 1; bits < masses.size(); ++bits) {
    const double mass = masses[bits];
    if (mass < -eps) {
      throw Error(ErrorCode::not_a_belief_function,
                  "inverted mass " + std::to_string(mass) + " on subset " +
                      std::to_string(bits) + " is negative");
    }
    if (mass > eps) {
      entries.push_back({Subset::from_bits(bits), mass});
    }
  }
  return MassFunction::from_entries(frame, entries, eps);
}

MassFunction combine_dempster(const MassFunction& m1, const MassFunction& m2,
                              double eps) {
  require_same_frame(m1.frame(), m2.frame());
  std::map<Subset, double> products;
  double conflict = 0.0;
  for (const auto& e1 : m1.entries()) {
    for (const auto& e2 : m2.entries()) {
      const Subset meet = e1.set & e2.set;
      const double p = e1.mass * e2.mass;
      if (meet.empty()) {
        conflict += p;
      } else {
        products[meet] += p;
      }
    }
  }
  if (conflict >= 1.0 - eps) {
    throw Error(ErrorCode::total_conflict,
                "total conflict K = " + std::to_string(conflict));
  }
  const double scale = 1.0 / (1.0 - conflict);
  std::vector<MassFunction::Entry> entries;
  entries.reserve(products.size());
  for (const auto& [set, mass] : products) {
    entries.push_back({set, mass * scale});
  }
  return MassFunction::from_entries(m1.frame(), entries, eps);
}

double total_belief_weight(const MassFunction& m) {
  const int n = m.frame().size();
  double total = 0.0;
  for (const auto& entry : m.entries()) {
    total += entry.mass * pow2d(n - entry.set.cardinality());
  }
  return total;
}

}  // namespace bfa
