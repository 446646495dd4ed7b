#pragma once

// Seeded random topologies (bidirectional spanning tree plus random extra
// links) and the congested-link x destination instance sweep.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "altpaths/network.hpp"

namespace altpaths {

struct GeneratorConfig {
  int node_count = 20;
  double density = 0.4;  // fraction of the n(n-1) possible arcs
  Flow cap_min = 10;
  Flow cap_max = 100;
  Flow cost_min = 1;
  Flow cost_max = 20;
  std::uint64_t seed = 1;

  /// Number of arcs the generated network will have.
  long long target_arcs() const {
    return std::llround(density * node_count * (node_count - 1));
  }

  void validate() const {
    if (node_count < 2) throw ModelError("node_count must be >= 2");
    if (!(density > 0.0 && density <= 1.0)) throw ModelError("density must lie in (0, 1]");
    if (cap_min < 1 || cap_max < cap_min) throw ModelError("capacity range must satisfy 1 <= min <= max");
    if (cost_min < 1 || cost_max < cost_min) throw ModelError("cost range must satisfy 1 <= min <= max");
    const long long tree = 2LL * (node_count - 1);
    if (target_arcs() < tree) {
      throw ModelError("density " + std::to_string(density) + " yields " +
                       std::to_string(target_arcs()) + " arcs, below the " +
                       std::to_string(tree) + " arcs of a bidirectional spanning tree");
    }
  }
};

/// Deterministic in the config: identical seeds give identical networks.
/// Arc ids are 0..m-1: tree arcs first (pairs), then extra links.
inline Network generate_random(const GeneratorConfig& cfg) {
  cfg.validate();
  const int n = cfg.node_count;
  std::mt19937_64 rng(cfg.seed);

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::uint8_t> present(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::pair<int, int>> links;
  links.reserve(cfg.target_arcs());
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int u = order[pick(rng)];
    const int v = order[i];
    links.emplace_back(u, v);
    links.emplace_back(v, u);
    present[u * n + v] = present[v * n + u] = 1;
  }

  std::vector<std::pair<int, int>> missing;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && !present[u * n + v]) missing.emplace_back(u, v);
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  const auto extra = static_cast<std::size_t>(cfg.target_arcs()) - links.size();
  links.insert(links.end(), missing.begin(), missing.begin() + extra);

  std::uniform_int_distribution<Flow> cap(cfg.cap_min, cfg.cap_max);
  std::uniform_int_distribution<Flow> cost(cfg.cost_min, cfg.cost_max);
  std::vector<ArcSpec> arcs;
  arcs.reserve(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    const Flow c = cap(rng);
    const Flow w = cost(rng);
    arcs.push_back({static_cast<ArcId>(i), links[i].first, links[i].second, c, w});
  }
  return Network::dense(n, std::move(arcs));
}

struct InstanceCase {
  std::string id;   // "a<arc id>-d<dest id>"
  Instance instance;
  bool reachable = true;
};

inline bool reachable(const Network& net, int s, int t) {
  std::vector<std::uint8_t> seen(net.node_count(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == t) return true;
    for (int a : net.out_arcs(v)) {
      const int w = net.arc(a).head;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

/// One case per (congested arc, destination != tail) pair, in arc-id then
/// node order. Cases whose destination becomes unreachable are kept and
/// flagged.
inline std::vector<InstanceCase> enumerate_instances(const Network& net, int k) {
  std::vector<InstanceCase> out;
  out.reserve(static_cast<std::size_t>(net.arc_count()) * net.node_count());
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    Network reduced = net.without_arc(a);
    for (int d = 0; d < net.node_count(); ++d) {
      if (d == arc.tail) continue;
      InstanceCase c;
      c.id = "a" + std::to_string(arc.id) + "-d" + std::to_string(net.node_id(d));
      c.instance.network = reduced;
      c.instance.source = arc.tail;
      c.instance.dest = d;
      c.instance.k = k;
      c.instance.congested_arc = arc.id;
      c.reachable = reachable(reduced, arc.tail, d);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace altpaths
