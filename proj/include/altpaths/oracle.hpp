#pragma once

// Brute-force verifier: every multiset of k simple paths is evaluated.

#include <string>
#include <vector>

#include "altpaths/apcp.hpp"

namespace altpaths {

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  int max_paths = 60;
};

/// All simple s->t paths, in lexicographic arc-id order. Throws once more
/// than `cap` paths exist.
inline std::vector<Path> enumerate_simple_paths(const Network& net, int s, int t, int cap) {
  std::vector<Path> out;
  Path cur;
  std::vector<std::uint8_t> on_path(net.node_count(), 0);
  on_path[s] = 1;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == t) {
      if (static_cast<int>(out.size()) >= cap) {
        throw OracleLimitExceeded("more than " + std::to_string(cap) +
                                  " simple paths; exhaustive search refused");
      }
      out.push_back(cur);
      return;
    }
    for (int a : net.out_arcs(v)) {
      const int w = net.arc(a).head;
      if (on_path[w]) continue;
      on_path[w] = 1;
      cur.push_back(a);
      self(self, w);
      cur.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs, s);
  return out;
}

inline ApcpSolution exhaustive_oracle(const Instance& inst, OracleLimits limits = {}) {
  Stopwatch clock;
  ApcpSolution best;
  const Network& net = inst.network;
  const std::vector<Path> paths =
      enumerate_simple_paths(net, inst.source, inst.dest, limits.max_paths);
  if (paths.empty()) {
    best.status = SolveStatus::kInfeasible;
    best.stats.wall_s = clock.seconds();
    return best;
  }
  const int k = inst.k;
  std::vector<int> pick(k, 0);
  bool have = false;
  ArcMask used(net.arc_count());
  while (true) {
    std::fill(used.begin(), used.end(), 0);
    Flow cost = 0;
    for (int i : pick) {
      for (int a : paths[i]) used[a] = 1;
      cost += path_cost(net, paths[i]);
    }
    Flow z = kUnreachable;
    for (int a = 0; a < net.arc_count(); ++a) {
      if (used[a]) z = std::min(z, max_flow_value(net, used, a, inst.source, inst.dest));
    }
    ++best.stats.leaves;
    // Strict improvement keeps the lexicographically first id tuple on ties.
    if (!have || better(z, cost, best.z, best.cost)) {
      have = true;
      best.z = z;
      best.cost = cost;
      best.pathset.paths.clear();
      for (int i : pick) best.pathset.paths.push_back(paths[i]);
    }
    // Next non-decreasing index tuple.
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == static_cast<int>(paths.size()) - 1) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j < k; ++j) pick[j] = pick[pos];
  }
  best.status = SolveStatus::kOptimal;
  best.stats.wall_s = clock.seconds();
  return best;
}

}  // namespace altpaths
