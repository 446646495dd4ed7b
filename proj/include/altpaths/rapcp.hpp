#pragma once

// Polynomial relaxation: maximize the number of arc-disjoint paths, then
// their minimum bottleneck, then minimize cost. One min-cost flow per
// capacity-filtering round.

#include <stdexcept>
#include <vector>

#include "altpaths/flow.hpp"
#include "altpaths/network.hpp"

namespace altpaths {

/// Which quantity sets the capacity filter between rounds.
enum class FilterMode {
  kBottleneck,  // drop arcs with cap <= obj_b (exact lexicographic optimum)
  kListing,     // drop arcs with cap <= obj_a * obj_b, as printed in the listing
};

struct RapcpSolution {
  std::vector<Path> disjoint_paths;
  PathSet completed;  // exactly k paths; empty when no path exists
  int obj_a = 0;
  Flow obj_b = 0;
  Flow obj_ab = 0;
  Flow cost = 0;  // cost of disjoint_paths
  int rounds = 0;
};

/// Up to k arc-disjoint s->t paths of maximum count, then minimum total
/// cost. Every allowed arc gets capacity 1; a dummy s->t arc of capacity k
/// costs more than any set of real disjoint paths, so real paths are
/// preferred and k' = k - flow(dummy).
inline std::vector<Path> rapcpa2(const Network& net, int s, int t, int k,
                                 std::span<const std::uint8_t> allowed = {}) {
  if (k < 1) throw std::invalid_argument("rapcpa2: k must be >= 1");
  std::vector<FlowArc> arcs;
  std::vector<int> origin;
  Flow cost_sum = 0;
  for (int a = 0; a < net.arc_count(); ++a) {
    if (!allowed.empty() && !allowed[a]) continue;
    const Arc& arc = net.arc(a);
    arcs.push_back({arc.tail, arc.head, 1, arc.cost});
    origin.push_back(a);
    cost_sum += arc.cost;
  }
  const int dummy = static_cast<int>(arcs.size());
  arcs.push_back({s, t, k, cost_sum + 1});
  const MinCostFlowResult mcf = min_cost_flow(net.node_count(), arcs, s, t, k);

  const int paths_found = static_cast<int>(k - mcf.arc_flow[dummy]);
  // Positive costs keep the optimal flow acyclic, so following unit-flow arcs
  // from s (smallest arc id first) always yields simple paths.
  std::vector<std::uint8_t> carries(net.arc_count(), 0);
  for (int i = 0; i < dummy; ++i) {
    if (mcf.arc_flow[i] > 0) carries[origin[i]] = 1;
  }
  std::vector<Path> paths;
  for (int p = 0; p < paths_found; ++p) {
    Path path;
    int v = s;
    while (v != t) {
      int next = -1;
      for (int a : net.out_arcs(v)) {
        if (carries[a]) {
          next = a;
          break;
        }
      }
      if (next < 0) throw std::logic_error("rapcpa2: broken flow decomposition");
      carries[next] = 0;
      path.push_back(next);
      v = net.arc(next).head;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

/// Pads a disjoint path list to exactly k paths with copies of its cheapest
/// member (first one on cost ties).
inline PathSet complete_to_k(const std::vector<Path>& disjoint, int k, const Network& net) {
  if (disjoint.empty()) throw std::invalid_argument("complete_to_k: no path to replicate");
  if (static_cast<int>(disjoint.size()) > k) {
    throw std::invalid_argument("complete_to_k: more than k paths given");
  }
  std::size_t cheapest = 0;
  for (std::size_t i = 1; i < disjoint.size(); ++i) {
    if (path_cost(net, disjoint[i]) < path_cost(net, disjoint[cheapest])) cheapest = i;
  }
  PathSet ps{disjoint};
  while (static_cast<int>(ps.size()) < k) ps.paths.push_back(disjoint[cheapest]);
  return ps;
}

inline RapcpSolution summarize(const Network& net, std::vector<Path> paths, int k) {
  RapcpSolution sol;
  sol.obj_a = static_cast<int>(paths.size());
  if (!paths.empty()) {
    sol.obj_b = mincap(net, paths.front());
    for (const Path& p : paths) {
      sol.obj_b = std::min(sol.obj_b, mincap(net, p));
      sol.cost += path_cost(net, p);
    }
    sol.completed = complete_to_k(paths, k, net);
  }
  sol.obj_ab = sol.obj_a * sol.obj_b;
  sol.disjoint_paths = std::move(paths);
  return sol;
}

/// Capacity filtering around rapcpa2. A round is accepted only while it
/// keeps the disjoint-path count of the first round; the filter then drops
/// every arc at or below the accepted threshold. At most |A| rounds.
inline RapcpSolution rapcp(const Network& net, int s, int t, int k,
                           FilterMode mode = FilterMode::kBottleneck) {
  ArcMask allowed(net.arc_count(), 1);
  RapcpSolution best = summarize(net, rapcpa2(net, s, t, k, allowed), k);
  best.rounds = 1;
  const int target = best.obj_a;
  int rounds = 1;
  RapcpSolution current = best;
  while (current.obj_a > 0) {
    const Flow threshold = mode == FilterMode::kBottleneck ? current.obj_b : current.obj_ab;
    for (int a = 0; a < net.arc_count(); ++a) {
      if (net.arc(a).cap <= threshold) allowed[a] = 0;
    }
    current = summarize(net, rapcpa2(net, s, t, k, allowed), k);
    ++rounds;
    if (current.obj_a < target) break;
    best = current;
  }
  best.rounds = rounds;
  return best;
}

}  // namespace altpaths
