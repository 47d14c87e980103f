#include "bfa/consistency.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "bfa/error.hpp"

namespace bfa {

namespace {

void require_same_frame(const MassFunction& a, const MassFunction& b) {
  if (!(a.frame() == b.frame())) {
    throw Error(ErrorCode::frame_mismatch, "mass functions live on different frames");
  }
}

}  // namespace

double df(const MassFunction& original, const MassFunction& approx, DfMode mode) {
  require_same_frame(original, approx);
  if (mode == DfMode::closed_form) {
    return total_belief_weight(original) - total_belief_weight(approx);
  }
  const auto bel_orig = bel_table(original);
  const auto bel_appr = bel_table(approx);
  double total = 0.0;
  for (std::size_t a = 0; a < bel_orig.size(); ++a) {
    total += bel_orig[a] - bel_appr[a];
  }
  return total;
}

double scaled_df_value(double df_value, std::optional<double> df_opt,
                       double df_vacuous, ScaleMode mode, double eps) {
  double numerator = df_value;
  double denominator = df_vacuous;
  if (mode == ScaleMode::optimal_vacuous) {
    if (!df_opt) {
      throw Error(ErrorCode::missing_optimal,
                  "optimal_vacuous scaling needs the optimal DF");
    }
    numerator -= *df_opt;
    denominator -= *df_opt;
  }
  if (denominator < eps) return 0.0;
  return numerator / denominator;
}

double scaled_df(const MassFunction& original, const MassFunction& approx,
                 std::optional<double> df_opt, ScaleMode mode, double eps) {
  const double df_value = df(original, approx, DfMode::closed_form);
  const double df_vacuous = total_belief_weight(original) - 1.0;
  return scaled_df_value(df_value, df_opt, df_vacuous, mode, eps);
}

WeakConsistency is_weakly_consistent(const MassFunction& approx,
                                     const MassFunction& original, double eps) {
  require_same_frame(approx, original);
  const auto bel_orig = bel_table(original);
  const auto bel_appr = bel_table(approx);

  WeakConsistency result;
  result.max_violation = -std::numeric_limits<double>::infinity();
  Subset worst;
  for (std::size_t a = 0; a < bel_orig.size(); ++a) {
    const double violation = bel_appr[a] - bel_orig[a];
    if (violation > result.max_violation) {
      result.max_violation = violation;
      worst = Subset::from_bits(a);
    }
  }
  result.consistent = result.max_violation <= eps;
  if (!result.consistent) result.witness = worst;
  return result;
}

namespace {

// Edmonds-Karp max flow on the transportation network. Node layout:
// 0 = source, 1..p = original focals, p+1..p+q = approx focals, p+q+1 = sink.
// Interior arcs get capacity 2 (any feasible flow totals 1).
class TransportFlow {
 public:
  TransportFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_edge(int from, int to, double capacity) {
    edges_.push_back({to, next_of(from), capacity});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, next_of(to), 0.0});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(edges_.size()) - 1;
  }

  double max_flow(int source, int sink) {
    double total = 0.0;
    std::vector<int> parent_edge(head_.size());
    for (;;) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      parent_edge[static_cast<std::size_t>(source)] = -2;
      std::queue<int> frontier;
      frontier.push(source);
      while (!frontier.empty() && parent_edge[static_cast<std::size_t>(sink)] == -1) {
        const int v = frontier.front();
        frontier.pop();
        for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = edges_[static_cast<std::size_t>(e)].next) {
          const auto& edge = edges_[static_cast<std::size_t>(e)];
          if (edge.capacity > 0.0 && parent_edge[static_cast<std::size_t>(edge.to)] == -1) {
            parent_edge[static_cast<std::size_t>(edge.to)] = e;
            frontier.push(edge.to);
          }
        }
      }
      if (parent_edge[static_cast<std::size_t>(sink)] == -1) break;

      double bottleneck = std::numeric_limits<double>::infinity();
      for (int v = sink; v != source;) {
        const int e = parent_edge[static_cast<std::size_t>(v)];
        bottleneck = std::min(bottleneck, edges_[static_cast<std::size_t>(e)].capacity);
        v = edges_[static_cast<std::size_t>(e ^ 1)].to;
      }
      for (int v = sink; v != source;) {
        const int e = parent_edge[static_cast<std::size_t>(v)];
        edges_[static_cast<std::size_t>(e)].capacity -= bottleneck;
        edges_[static_cast<std::size_t>(e ^ 1)].capacity += bottleneck;
        v = edges_[static_cast<std::size_t>(e ^ 1)].to;
      }
      total += bottleneck;
    }
    return total;
  }

  /// Flow pushed through forward edge `index` (in add order).
  double flow_on(int forward_edge_index) const {
    return edges_[static_cast<std::size_t>(2 * forward_edge_index + 1)].capacity;
  }

 private:
  struct Edge {
    int to;
    int next;
    double capacity;
  };

  int next_of(int node) const { return head_[static_cast<std::size_t>(node)]; }

  std::vector<Edge> edges_;
  std::vector<int> head_;
};

}  // namespace

StrongConsistency is_strongly_consistent(const MassFunction& approx,
                                         const MassFunction& original, double eps) {
  require_same_frame(approx, original);
  const auto originals = original.entries();
  const auto approxs = approx.entries();
  const int p = static_cast<int>(originals.size());
  const int q = static_cast<int>(approxs.size());
  const int source = 0;
  const int sink = p + q + 1;

  TransportFlow network(p + q + 2);
  int edge_count = 0;
  for (int i = 0; i < p; ++i) {
    network.add_edge(source, 1 + i, originals[static_cast<std::size_t>(i)].mass);
    ++edge_count;
  }
  struct Arc {
    int original_index;
    int approx_index;
    int edge_index;
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) {
      if (approxs[static_cast<std::size_t>(j)].set.contains(
              originals[static_cast<std::size_t>(i)].set)) {
        network.add_edge(1 + i, 1 + p + j, 2.0);
        arcs.push_back({i, j, edge_count});
        ++edge_count;
      }
    }
  }
  for (int j = 0; j < q; ++j) {
    network.add_edge(1 + p + j, sink, approxs[static_cast<std::size_t>(j)].mass);
    ++edge_count;
  }

  const double flow = network.max_flow(source, sink);

  StrongConsistency result;
  result.consistent = flow >= 1.0 - eps;
  result.witness.residual = std::max(0.0, 1.0 - flow);
  for (const auto& arc : arcs) {
    const double w = network.flow_on(arc.edge_index);
    if (w > 0.0) {
      result.witness.edges.push_back({arc.original_index, arc.approx_index, w});
    }
  }
  return result;
}

}  // namespace bfa
