#include "bfa/approx.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "bfa/error.hpp"
#include "bfa/random.hpp"

namespace bfa {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::optimal: return "optimal";
    case Method::pair: return "pair";
    case Method::single: return "single";
    case Method::ratio: return "ratio";
    case Method::lump: return "lump";
    case Method::iterative: return "iterative";
    case Method::summarization: return "summarization";
    case Method::bayesian: return "bayesian";
    case Method::consonant: return "consonant";
    case Method::klx: return "klx";
  }
  return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (const Method method : kAllMethods) {
    if (method_name(method) == name) return method;
  }
  return std::nullopt;
}

bool method_is_faithful(Method method) {
  switch (method) {
    case Method::bayesian:
    case Method::klx:
      return false;
    default:
      return true;
  }
}

namespace {

void require_valid_k(int k) {
  if (k < 1) {
    throw Error(ErrorCode::bad_arguments, "k must be at least 1, got " + std::to_string(k));
  }
}

// Flat view of the focal elements in canonical (ascending bit) order.
struct FocalView {
  int n = 0;
  int s = 0;
  std::vector<std::uint64_t> bits;
  std::vector<double> mass;

  explicit FocalView(const MassFunction& m)
      : n(m.frame().size()), s(m.focal_count()) {
    bits.reserve(static_cast<std::size_t>(s));
    mass.reserve(static_cast<std::size_t>(s));
    for (const auto& entry : m.entries()) {
      bits.push_back(entry.set.bits());
      mass.push_back(entry.mass);
    }
  }
};

ApproxResult make_partition_result(const MassFunction& m, Method method,
                                   Partition partition,
                                   std::vector<std::pair<Subset, Subset>> merges = {},
                                   std::int64_t iterations = 0) {
  MassFunction mass = blocks_to_mass(m, partition);
  const double df_value = df(m, mass, DfMode::closed_form);
  return ApproxResult{std::move(mass),   method, df_value,
                      method_is_faithful(method), std::move(partition),
                      std::move(merges), iterations};
}

// Returned unchanged when the input already has at most k focal elements.
ApproxResult identity_result(const MassFunction& m, Method method) {
  std::vector<int> discrete(static_cast<std::size_t>(m.focal_count()));
  std::iota(discrete.begin(), discrete.end(), 0);
  return make_partition_result(m, method, Partition::from_assignment(std::move(discrete)));
}

ApproxResult entries_result(const MassFunction& m, Method method,
                            std::span<const MassFunction::Entry> entries) {
  MassFunction mass = MassFunction::from_entries(m.frame(), entries);
  const double df_value = df(m, mass, DfMode::closed_form);
  return ApproxResult{std::move(mass), method,       df_value,
                      method_is_faithful(method), std::nullopt, {}, 0};
}

// ---------------------------------------------------------------------------
// Optimal approximation: exhaustive search over exactly-k partitions in
// restricted-growth lexicographic order, with sound pruning. A subtree is cut
// only when even keeping every remaining focal at its solo weight cannot come
// within kPruneSlack of the current bound, so no partition that could match
// the incumbent is ever skipped and the first-found tie break is preserved.

constexpr double kNearTie = 1e-9;
constexpr double kPruneSlack = 1e-9;

class OptimalSearch {
 public:
  OptimalSearch(const MassFunction& m, int k)
      : focals_(m), k_(k), tbw_(total_belief_weight(m)) {
    const auto s = static_cast<std::size_t>(focals_.s);
    self_weight_.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
      self_weight_[i] =
          focals_.mass[i] * pow2d(focals_.n - std::popcount(focals_.bits[i]));
    }
    suffix_weight_.assign(s + 1, 0.0);
    for (std::size_t i = s; i-- > 0;) {
      suffix_weight_[i] = suffix_weight_[i + 1] + self_weight_[i];
    }
    assignment_.assign(s, 0);
    best_assignment_.assign(s, 0);
    const auto blocks = static_cast<std::size_t>(k);
    block_bits_.assign(blocks, 0);
    block_mass_.assign(blocks, 0.0);
    block_weight_.assign(blocks, 0.0);
  }

  /// Tightens the pruning bound with a DF value known to be achievable
  /// (used with a heuristic's DF; pruning against it stays strict).
  void set_df_bound(double df_bound) { bound_df_ = std::min(bound_df_, df_bound); }

  Partition run() {
    best_df_ = std::numeric_limits<double>::infinity();
    descend(0, 0, 0.0);
    return Partition::from_assignment(best_assignment_);
  }

  double best_df() const { return best_df_; }

 private:
  void descend(int position, int open_blocks, double potential) {
    if (position == focals_.s) {
      const double df_incremental = tbw_ - potential;
      if (df_incremental < best_df_ + kNearTie) {
        // Near ties are settled on the canonical evaluation so that the
        // stored optimum is bit-identical to df(m, blocks_to_mass(...)).
        const double df_exact = canonical_df();
        if (df_exact < best_df_) {
          best_df_ = df_exact;
          best_assignment_ = assignment_;
          bound_df_ = std::min(bound_df_, best_df_);
        }
      }
      return;
    }
    if (potential + suffix_weight_[static_cast<std::size_t>(position)] <
        tbw_ - bound_df_ - kPruneSlack) {
      return;
    }
    const bool must_open = (k_ - open_blocks) >= (focals_.s - position);
    const int first = must_open ? open_blocks : 0;
    const int last = std::min(open_blocks, k_ - 1);
    const std::uint64_t focal_bits = focals_.bits[static_cast<std::size_t>(position)];
    const double focal_mass = focals_.mass[static_cast<std::size_t>(position)];
    for (int id = first; id <= last; ++id) {
      const auto b = static_cast<std::size_t>(id);
      const std::uint64_t old_bits = block_bits_[b];
      const double old_mass = block_mass_[b];
      const double old_weight = block_weight_[b];

      const std::uint64_t new_bits = old_bits | focal_bits;
      const double new_mass = old_mass + focal_mass;
      const double new_weight = new_mass * pow2d(focals_.n - std::popcount(new_bits));

      block_bits_[b] = new_bits;
      block_mass_[b] = new_mass;
      block_weight_[b] = new_weight;
      assignment_[static_cast<std::size_t>(position)] = id;

      descend(position + 1, id == open_blocks ? open_blocks + 1 : open_blocks,
              potential - old_weight + new_weight);

      block_bits_[b] = old_bits;
      block_mass_[b] = old_mass;
      block_weight_[b] = old_weight;
    }
  }

  // Mirrors blocks_to_mass + total_belief_weight arithmetic exactly:
  // per-block sums in ascending focal order, duplicate unions merged in
  // block order, weights summed in ascending bit order.
  double canonical_df() const {
    const auto blocks = static_cast<std::size_t>(k_);
    std::vector<std::uint64_t> union_bits(blocks, 0);
    std::vector<double> mass_sum(blocks, 0.0);
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      const auto b = static_cast<std::size_t>(assignment_[i]);
      union_bits[b] |= focals_.bits[i];
      mass_sum[b] += focals_.mass[i];
    }
    std::vector<std::pair<std::uint64_t, double>> entries;
    entries.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      entries.emplace_back(union_bits[b], mass_sum[b]);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    double weight = 0.0;
    std::size_t i = 0;
    while (i < entries.size()) {
      double mass = entries[i].second;
      std::size_t j = i + 1;
      while (j < entries.size() && entries[j].first == entries[i].first) {
        mass += entries[j].second;
        ++j;
      }
      weight += mass * pow2d(focals_.n - std::popcount(entries[i].first));
      i = j;
    }
    return tbw_ - weight;
  }

  FocalView focals_;
  int k_;
  double tbw_;
  std::vector<double> self_weight_;
  std::vector<double> suffix_weight_;
  std::vector<int> assignment_;
  std::vector<int> best_assignment_;
  std::vector<std::uint64_t> block_bits_;
  std::vector<double> block_mass_;
  std::vector<double> block_weight_;
  double best_df_ = std::numeric_limits<double>::infinity();
  double bound_df_ = std::numeric_limits<double>::infinity();
};

}  // namespace

ApproxResult optimal_approximation(const MassFunction& m, int k, int max_focals) {
  require_valid_k(k);
  const int s = m.focal_count();
  if (s <= k) return identity_result(m, Method::optimal);
  if (s > max_focals) {
    throw Error(ErrorCode::too_many_focals,
                "optimal search capped at " + std::to_string(max_focals) +
                    " focal elements, got " + std::to_string(s));
  }
  OptimalSearch search(m, k);
  // A heuristic solution bounds the optimum from above and sharpens pruning.
  search.set_df_bound(pair_approximation(m, k).df_value);
  Partition best = search.run();
  return make_partition_result(m, Method::optimal, std::move(best));
}

double merge_cost_pair(const MassFunction& m, Subset a, Subset b) {
  if (a == b) {
    throw Error(ErrorCode::bad_arguments, "merge cost needs two distinct focal elements");
  }
  const double mass_a = m.mass_of(a);
  const double mass_b = m.mass_of(b);
  if (mass_a <= 0.0 || mass_b <= 0.0) {
    throw Error(ErrorCode::not_focal, "both subsets must be focal elements");
  }
  const int n = m.frame().size();
  return mass_a * pow2d(n - a.cardinality()) + mass_b * pow2d(n - b.cardinality()) -
         (mass_a + mass_b) * pow2d(n - (a | b).cardinality());
}

// ---------------------------------------------------------------------------
// Greedy agglomerative loops. Working clusters track the member focal
// indices so the final mass function is rebuilt canonically from the
// partition; costs drive the merge choices only.

namespace {

struct ClusterPool {
  explicit ClusterPool(const FocalView& focals) : n(focals.n) {
    const auto s = static_cast<std::size_t>(focals.s);
    bits = focals.bits;
    mass = focals.mass;
    alive.assign(s, true);
    members.resize(s);
    for (std::size_t i = 0; i < s; ++i) members[i] = {static_cast<int>(i)};
    alive_count = static_cast<int>(s);
  }

  // Merges clusters i and j; an existing cluster equal to their union is
  // absorbed as well. Returns the index of the merged cluster.
  int merge(int i, int j) {
    const std::uint64_t merged_bits = bits[static_cast<std::size_t>(i)] |
                                      bits[static_cast<std::size_t>(j)];
    int absorbed = -1;
    for (std::size_t c = 0; c < bits.size(); ++c) {
      if (alive[c] && bits[c] == merged_bits && static_cast<int>(c) != i &&
          static_cast<int>(c) != j) {
        absorbed = static_cast<int>(c);
        break;
      }
    }
    double merged_mass = mass[static_cast<std::size_t>(i)] + mass[static_cast<std::size_t>(j)];
    std::vector<int> merged_members = members[static_cast<std::size_t>(i)];
    merged_members.insert(merged_members.end(),
                          members[static_cast<std::size_t>(j)].begin(),
                          members[static_cast<std::size_t>(j)].end());
    alive[static_cast<std::size_t>(i)] = false;
    alive[static_cast<std::size_t>(j)] = false;
    alive_count -= 1;
    if (absorbed >= 0) {
      merged_mass += mass[static_cast<std::size_t>(absorbed)];
      merged_members.insert(merged_members.end(),
                            members[static_cast<std::size_t>(absorbed)].begin(),
                            members[static_cast<std::size_t>(absorbed)].end());
      alive[static_cast<std::size_t>(absorbed)] = false;
      alive_count -= 1;
    }
    bits.push_back(merged_bits);
    mass.push_back(merged_mass);
    members.push_back(std::move(merged_members));
    alive.push_back(true);
    return static_cast<int>(bits.size()) - 1;
  }

  Partition to_partition(int focal_count) const {
    std::vector<int> labels(static_cast<std::size_t>(focal_count), -1);
    for (std::size_t c = 0; c < bits.size(); ++c) {
      if (!alive[c]) continue;
      for (const int idx : members[c]) {
        labels[static_cast<std::size_t>(idx)] = static_cast<int>(c);
      }
    }
    // Labels exceed the focal count once merged clusters appear; compress
    // through first-occurrence renaming.
    std::map<int, int> remap;
    std::vector<int> dense(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto it = remap.try_emplace(labels[i], static_cast<int>(remap.size())).first;
      dense[i] = it->second;
    }
    return Partition::normalized_from_labels(dense);
  }

  int n;
  int alive_count;
  std::vector<std::uint64_t> bits;
  std::vector<double> mass;
  std::vector<char> alive;
  std::vector<std::vector<int>> members;
};

double pair_cost(const ClusterPool& pool, int i, int j) {
  const auto a = static_cast<std::size_t>(i);
  const auto b = static_cast<std::size_t>(j);
  return pool.mass[a] * pow2d(pool.n - std::popcount(pool.bits[a])) +
         pool.mass[b] * pow2d(pool.n - std::popcount(pool.bits[b])) -
         (pool.mass[a] + pool.mass[b]) *
             pow2d(pool.n - std::popcount(pool.bits[a] | pool.bits[b]));
}

// (cost, bit pattern) lexicographic comparison used by every argmin.
bool cost_less(double cost_a, std::uint64_t bits_a, double cost_b, std::uint64_t bits_b) {
  if (cost_a != cost_b) return cost_a < cost_b;
  return bits_a < bits_b;
}

}  // namespace

ApproxResult pair_approximation(const MassFunction& m, int k) {
  require_valid_k(k);
  const int s = m.focal_count();
  if (s <= k) return identity_result(m, Method::pair);

  const FocalView focals(m);
  ClusterPool pool(focals);
  std::vector<double> best_cost(static_cast<std::size_t>(s));
  std::vector<int> best_partner(static_cast<std::size_t>(s));

  auto recompute_best = [&](int i) {
    double cost = std::numeric_limits<double>::infinity();
    int partner = -1;
    for (std::size_t j = 0; j < pool.bits.size(); ++j) {
      if (!pool.alive[j] || static_cast<int>(j) == i) continue;
      const double c = pair_cost(pool, i, static_cast<int>(j));
      if (partner < 0 ||
          cost_less(c, pool.bits[j], cost, pool.bits[static_cast<std::size_t>(partner)])) {
        cost = c;
        partner = static_cast<int>(j);
      }
    }
    best_cost[static_cast<std::size_t>(i)] = cost;
    best_partner[static_cast<std::size_t>(i)] = partner;
  };

  for (int i = 0; i < s; ++i) recompute_best(i);

  std::vector<std::pair<Subset, Subset>> merges;
  while (pool.alive_count > k) {
    // Two-stage argmin: the focal with the cheapest best-partner cost, then
    // its cheapest partner.
    int chosen = -1;
    for (std::size_t i = 0; i < pool.bits.size(); ++i) {
      if (!pool.alive[i]) continue;
      if (chosen < 0 ||
          cost_less(best_cost[i], pool.bits[i],
                    best_cost[static_cast<std::size_t>(chosen)],
                    pool.bits[static_cast<std::size_t>(chosen)])) {
        chosen = static_cast<int>(i);
      }
    }
    const int partner = best_partner[static_cast<std::size_t>(chosen)];
    merges.emplace_back(
        Subset::from_bits(pool.bits[static_cast<std::size_t>(chosen)]),
        Subset::from_bits(pool.bits[static_cast<std::size_t>(partner)]));

    const int merged = pool.merge(chosen, partner);
    best_cost.resize(pool.bits.size());
    best_partner.resize(pool.bits.size());

    // Only focals whose best partner disappeared need a full rescan; the
    // rest at most improve against the merged cluster.
    for (std::size_t i = 0; i < pool.bits.size(); ++i) {
      if (!pool.alive[i] || static_cast<int>(i) == merged) continue;
      const int bp = best_partner[i];
      if (bp < 0 || !pool.alive[static_cast<std::size_t>(bp)]) {
        recompute_best(static_cast<int>(i));
      } else {
        const double c = pair_cost(pool, static_cast<int>(i), merged);
        if (cost_less(c, pool.bits[static_cast<std::size_t>(merged)], best_cost[i],
                      pool.bits[static_cast<std::size_t>(bp)])) {
          best_cost[i] = c;
          best_partner[i] = merged;
        }
      }
    }
    recompute_best(merged);
  }

  return make_partition_result(m, Method::pair, pool.to_partition(s), std::move(merges));
}

namespace {

ApproxResult single_family(const MassFunction& m, int k, Method method, bool ratio_cost) {
  require_valid_k(k);
  const int s = m.focal_count();
  if (s <= k) return identity_result(m, method);

  const FocalView focals(m);
  ClusterPool pool(focals);
  std::vector<double> cost(static_cast<std::size_t>(s));

  auto cluster_cost = [&](int i) {
    const auto c = static_cast<std::size_t>(i);
    const int card = std::popcount(pool.bits[c]);
    if (ratio_cost) return std::ldexp(pool.mass[c], -card);          // CR = m/2^|A|
    return pool.mass[c] * pow2d(pool.n - card) - pool.mass[c];       // CS = m(2^(n-|A|)-1)
  };
  for (int i = 0; i < s; ++i) cost[static_cast<std::size_t>(i)] = cluster_cost(i);

  std::vector<std::pair<Subset, Subset>> merges;
  while (pool.alive_count > k) {
    int first = -1;
    int second = -1;
    for (std::size_t i = 0; i < pool.bits.size(); ++i) {
      if (!pool.alive[i]) continue;
      if (first < 0 || cost_less(cost[i], pool.bits[i],
                                 cost[static_cast<std::size_t>(first)],
                                 pool.bits[static_cast<std::size_t>(first)])) {
        second = first;
        first = static_cast<int>(i);
      } else if (second < 0 ||
                 cost_less(cost[i], pool.bits[i], cost[static_cast<std::size_t>(second)],
                           pool.bits[static_cast<std::size_t>(second)])) {
        second = static_cast<int>(i);
      }
    }
    merges.emplace_back(Subset::from_bits(pool.bits[static_cast<std::size_t>(first)]),
                        Subset::from_bits(pool.bits[static_cast<std::size_t>(second)]));
    const int merged = pool.merge(first, second);
    cost.resize(pool.bits.size());
    cost[static_cast<std::size_t>(merged)] = cluster_cost(merged);
  }

  return make_partition_result(m, method, pool.to_partition(s), std::move(merges));
}

}  // namespace

ApproxResult single_approximation(const MassFunction& m, int k) {
  return single_family(m, k, Method::single, /*ratio_cost=*/false);
}

ApproxResult ratio_approximation(const MassFunction& m, int k) {
  return single_family(m, k, Method::ratio, /*ratio_cost=*/true);
}

namespace {

// Shared by lump and summarization: keep the k-1 first focals under `order`,
// merge the rest into one block.
ApproxResult keep_and_lump(const MassFunction& m, int k, Method method,
                           std::span<const int> order) {
  const int s = m.focal_count();
  std::vector<int> labels(static_cast<std::size_t>(s));
  for (int rank = 0; rank < s; ++rank) {
    const int idx = order[static_cast<std::size_t>(rank)];
    labels[static_cast<std::size_t>(idx)] = rank < k - 1 ? rank : k - 1;
  }
  return make_partition_result(m, method, Partition::normalized_from_labels(labels));
}

}  // namespace

ApproxResult lump_approximation(const MassFunction& m, int k, LumpCost cost) {
  require_valid_k(k);
  const FocalView focals(m);
  if (focals.s <= k) return identity_result(m, Method::lump);

  std::vector<double> focal_cost(static_cast<std::size_t>(focals.s));
  for (std::size_t i = 0; i < focal_cost.size(); ++i) {
    const int card = std::popcount(focals.bits[i]);
    focal_cost[i] = cost == LumpCost::cr
                        ? std::ldexp(focals.mass[i], -card)
                        : focals.mass[i] * pow2d(focals.n - card) - focals.mass[i];
  }
  std::vector<int> order(static_cast<std::size_t>(focals.s));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (focal_cost[ia] != focal_cost[ib]) return focal_cost[ia] > focal_cost[ib];
    return focals.bits[ia] < focals.bits[ib];
  });
  return keep_and_lump(m, k, Method::lump, order);
}

ApproxResult summarization(const MassFunction& m, int k) {
  require_valid_k(k);
  const FocalView focals(m);
  if (focals.s <= k) return identity_result(m, Method::summarization);

  std::vector<int> order(static_cast<std::size_t>(focals.s));
  std::iota(order.begin(), order.end(), 0);
  // Highest mass first; ties by ascending bit pattern.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (focals.mass[ia] != focals.mass[ib]) return focals.mass[ia] > focals.mass[ib];
    return focals.bits[ia] < focals.bits[ib];
  });
  return keep_and_lump(m, k, Method::summarization, order);
}

ApproxResult iterative_approximation(const MassFunction& m, int k, std::uint64_t seed,
                                     const Budget& budget) {
  require_valid_k(k);
  const int s = m.focal_count();
  if (s <= k) {
    ApproxResult result = identity_result(m, Method::iterative);
    return result;
  }

  const FocalView focals(m);
  std::mt19937_64 rng(seed);

  // Start: k distinct focals seed the k blocks, the rest placed uniformly.
  std::vector<int> shuffled(static_cast<std::size_t>(s));
  std::iota(shuffled.begin(), shuffled.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   uniform_below(rng, static_cast<std::uint64_t>(s - i));
    std::swap(shuffled[static_cast<std::size_t>(i)], shuffled[j]);
  }
  std::vector<int> assignment(static_cast<std::size_t>(s));
  std::vector<int> block_size(static_cast<std::size_t>(k), 0);
  for (int t = 0; t < s; ++t) {
    const int idx = shuffled[static_cast<std::size_t>(t)];
    const int block =
        t < k ? t : static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    assignment[static_cast<std::size_t>(idx)] = block;
    block_size[static_cast<std::size_t>(block)] += 1;
  }

  // Candidate moves are scored by rebuilding the blocked mass function and
  // its total weight from scratch; higher weight means lower DF.
  std::vector<std::uint64_t> union_bits(static_cast<std::size_t>(k));
  std::vector<double> mass_sum(static_cast<std::size_t>(k));
  auto potential = [&]() {
    std::fill(union_bits.begin(), union_bits.end(), 0);
    std::fill(mass_sum.begin(), mass_sum.end(), 0.0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      const auto b = static_cast<std::size_t>(assignment[i]);
      union_bits[b] |= focals.bits[i];
      mass_sum[b] += focals.mass[i];
    }
    double total = 0.0;
    for (std::size_t b = 0; b < union_bits.size(); ++b) {
      total += mass_sum[b] * pow2d(focals.n - std::popcount(union_bits[b]));
    }
    return total;
  };

  double best_potential = potential();
  std::int64_t sweeps = 0;
  const auto start_time = std::chrono::steady_clock::now();
  for (;;) {
    if (budget.max_iterations && sweeps >= *budget.max_iterations) break;
    if (budget.max_time &&
        std::chrono::steady_clock::now() - start_time >= *budget.max_time) {
      break;
    }
    bool improved = false;
    for (int from = 0; from < k; ++from) {
      for (int to = 0; to < k; ++to) {
        if (to == from) continue;
        for (int j = 0; j < s; ++j) {
          const auto idx = static_cast<std::size_t>(j);
          if (assignment[idx] != from || block_size[static_cast<std::size_t>(from)] < 2) {
            continue;
          }
          assignment[idx] = to;
          const double candidate = potential();
          if (candidate > best_potential) {
            best_potential = candidate;
            block_size[static_cast<std::size_t>(from)] -= 1;
            block_size[static_cast<std::size_t>(to)] += 1;
            improved = true;
          } else {
            assignment[idx] = from;
          }
        }
      }
    }
    ++sweeps;
    if (!improved) break;
  }

  return make_partition_result(m, Method::iterative,
                               Partition::normalized_from_labels(assignment), {}, sweeps);
}

ApproxResult bayesian_approximation(const MassFunction& m) {
  const FocalView focals(m);
  double denominator = 0.0;
  for (std::size_t i = 0; i < focals.bits.size(); ++i) {
    denominator += focals.mass[i] * std::popcount(focals.bits[i]);
  }
  std::vector<MassFunction::Entry> entries;
  for (int e = 0; e < focals.n; ++e) {
    const std::uint64_t bit = std::uint64_t{1} << e;
    double numerator = 0.0;
    for (std::size_t i = 0; i < focals.bits.size(); ++i) {
      if (focals.bits[i] & bit) numerator += focals.mass[i];
    }
    if (numerator > 0.0) {
      entries.push_back({Subset::from_bits(bit), numerator / denominator});
    }
  }
  return entries_result(m, Method::bayesian, entries);
}

ApproxResult consonant_approximation(const MassFunction& m) {
  const FocalView focals(m);
  std::vector<int> order(static_cast<std::size_t>(focals.s));
  std::iota(order.begin(), order.end(), 0);
  // Mass descending; ties by cardinality ascending, then bit pattern.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (focals.mass[ia] != focals.mass[ib]) return focals.mass[ia] > focals.mass[ib];
    const int ca = std::popcount(focals.bits[ia]);
    const int cb = std::popcount(focals.bits[ib]);
    if (ca != cb) return ca < cb;
    return focals.bits[ia] < focals.bits[ib];
  });

  std::vector<std::uint64_t> chain_of(static_cast<std::size_t>(focals.s));
  std::uint64_t chain = 0;
  for (const int idx : order) {
    chain |= focals.bits[static_cast<std::size_t>(idx)];
    chain_of[static_cast<std::size_t>(idx)] = chain;
  }
  // Collect per chain set in ascending focal order so sums are canonical.
  std::map<std::uint64_t, double> grouped;
  for (std::size_t i = 0; i < chain_of.size(); ++i) {
    grouped[chain_of[i]] += focals.mass[i];
  }
  std::vector<MassFunction::Entry> entries;
  entries.reserve(grouped.size());
  for (const auto& [bits, mass] : grouped) {
    entries.push_back({Subset::from_bits(bits), mass});
  }
  return entries_result(m, Method::consonant, entries);
}

ApproxResult klx_approximation(const MassFunction& m, int keep) {
  if (keep < 1) {
    throw Error(ErrorCode::bad_arguments,
                "klx keeps at least one focal element, got " + std::to_string(keep));
  }
  const FocalView focals(m);
  if (focals.s <= keep) {
    std::vector<MassFunction::Entry> entries(m.entries().begin(), m.entries().end());
    return entries_result(m, Method::klx, entries);
  }
  std::vector<int> order(static_cast<std::size_t>(focals.s));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (focals.mass[ia] != focals.mass[ib]) return focals.mass[ia] > focals.mass[ib];
    return focals.bits[ia] < focals.bits[ib];
  });
  order.resize(static_cast<std::size_t>(keep));
  std::sort(order.begin(), order.end());  // canonical renormalization order
  double kept_total = 0.0;
  for (const int idx : order) kept_total += focals.mass[static_cast<std::size_t>(idx)];
  std::vector<MassFunction::Entry> entries;
  entries.reserve(order.size());
  for (const int idx : order) {
    const auto i = static_cast<std::size_t>(idx);
    entries.push_back({Subset::from_bits(focals.bits[i]), focals.mass[i] / kept_total});
  }
  return entries_result(m, Method::klx, entries);
}

ApproxResult approximate(const MassFunction& m, Method method, const ApproxOptions& options) {
  switch (method) {
    case Method::optimal:
      return optimal_approximation(m, options.k, options.optimal_max_focals);
    case Method::pair:
      return pair_approximation(m, options.k);
    case Method::single:
      return single_approximation(m, options.k);
    case Method::ratio:
      return ratio_approximation(m, options.k);
    case Method::lump:
      return lump_approximation(m, options.k, options.lump_cost);
    case Method::iterative:
      return iterative_approximation(m, options.k, options.seed, options.budget);
    case Method::summarization:
      return summarization(m, options.k);
    case Method::bayesian:
      return bayesian_approximation(m);
    case Method::consonant:
      return consonant_approximation(m);
    case Method::klx:
      return klx_approximation(m, options.klx_keep.value_or(options.k));
  }
  throw Error(ErrorCode::unknown_method, "unhandled method");
}

}  // namespace bfa
