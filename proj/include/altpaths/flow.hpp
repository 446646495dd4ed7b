#pragma once

// Exact integral flow kernels: Edmonds-Karp max-flow with min-cut
// extraction, successive-shortest-path min-cost flow and a deterministic
// shortest path.

#include <cassert>
#include <concepts>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "altpaths/network.hpp"

namespace altpaths {

/// Arc of a stand-alone flow problem (dense node indices).
struct FlowArc {
  int tail = 0;
  int head = 0;
  Flow cap = 0;
  Flow cost = 0;
};

/// Paired forward/backward residual edges. Edge 2i is input arc i, edge
/// 2i+1 its reverse.
template <std::integral Cap>
class ResidualGraph {
 public:
  static constexpr Cap kInf = std::numeric_limits<Cap>::max() / 4;

  explicit ResidualGraph(int node_count) : adj_(node_count) {}

  int add_arc(int tail, int head, Cap cap, Cap cost = 0) {
    const int e = static_cast<int>(to_.size());
    to_.push_back(head);
    res_.push_back(cap);
    cost_.push_back(cost);
    to_.push_back(tail);
    res_.push_back(0);
    cost_.push_back(-cost);
    adj_[tail].push_back(e);
    adj_[head].push_back(e + 1);
    cap_.push_back(cap);
    return e / 2;
  }

  int node_count() const { return static_cast<int>(adj_.size()); }
  int arc_count() const { return static_cast<int>(cap_.size()); }
  Cap flow(int arc) const { return cap_[arc] - res_[2 * arc]; }

  /// Shortest-augmenting-path (BFS) max-flow; integral.
  Cap max_flow(int s, int t) {
    Cap total = 0;
    std::vector<int> parent(adj_.size());
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      std::queue<int> q;
      q.push(s);
      parent[s] = -2;
      while (!q.empty() && parent[t] == -1) {
        const int v = q.front();
        q.pop();
        for (int e : adj_[v]) {
          const int w = to_[e];
          if (res_[e] > 0 && parent[w] == -1) {
            parent[w] = e;
            q.push(w);
          }
        }
      }
      if (parent[t] == -1) break;
      Cap push = kInf;
      for (int v = t; v != s; v = to_[parent[v] ^ 1]) push = std::min(push, res_[parent[v]]);
      for (int v = t; v != s; v = to_[parent[v] ^ 1]) {
        res_[parent[v]] -= push;
        res_[parent[v] ^ 1] += push;
      }
      total += push;
    }
    return total;
  }

  /// Nodes reachable from s in the residual graph.
  std::vector<std::uint8_t> source_side(int s) const {
    std::vector<std::uint8_t> seen(adj_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int e : adj_[v]) {
        if (res_[e] > 0 && !seen[to_[e]]) {
          seen[to_[e]] = 1;
          stack.push_back(to_[e]);
        }
      }
    }
    return seen;
  }

  struct CostFlow {
    Cap value = 0;
    Cap cost = 0;
  };

  /// Sends up to `required` units along successive shortest paths using
  /// Dijkstra with node potentials. Costs must be non-negative.
  CostFlow min_cost_flow(int s, int t, Cap required) {
    const int n = node_count();
    std::vector<Cap> pot(n, 0);
    std::vector<Cap> dist(n);
    std::vector<int> parent(n);
    CostFlow out;
    while (out.value < required) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(parent.begin(), parent.end(), -1);
      using Item = std::pair<Cap, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[s] = 0;
      pq.emplace(0, s);
      while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (int e : adj_[v]) {
          if (res_[e] <= 0) continue;
          const int w = to_[e];
          const Cap nd = d + cost_[e] + pot[v] - pot[w];
          if (nd < dist[w]) {
            dist[w] = nd;
            parent[w] = e;
            pq.emplace(nd, w);
          }
        }
      }
      if (dist[t] == kInf) break;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < kInf) pot[v] += dist[v];
      }
      Cap push = required - out.value;
      for (int v = t; v != s; v = to_[parent[v] ^ 1]) push = std::min(push, res_[parent[v]]);
      for (int v = t; v != s; v = to_[parent[v] ^ 1]) {
        res_[parent[v]] -= push;
        res_[parent[v] ^ 1] += push;
        out.cost += push * cost_[parent[v]];
      }
      out.value += push;
    }
    return out;
  }

  /// Residual edges as (tail, head, residual, cost) for certificate checks.
  struct ResidualEdge {
    int tail;
    int head;
    Cap residual;
    Cap cost;
  };

  std::vector<ResidualEdge> residual_edges() const {
    std::vector<ResidualEdge> out;
    for (int e = 0; e < static_cast<int>(to_.size()); ++e) {
      if (res_[e] > 0) out.push_back({to_[e ^ 1], to_[e], res_[e], cost_[e]});
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<int> to_;
  std::vector<Cap> res_;
  std::vector<Cap> cost_;
  std::vector<Cap> cap_;
};

/// Max-flow buffer for hot loops: the graph is built once, then solved
/// repeatedly under small capacity patches without reallocating.
class PatchableMaxFlow {
 public:
  void reset(int node_count) {
    first_.assign(node_count, -1);
    to_.clear();
    next_.clear();
    cap_.clear();
  }

  int node_count() const { return static_cast<int>(first_.size()); }

  /// Returns the forward edge index.
  int add_arc(int tail, int head, Flow cap) {
    const int e = static_cast<int>(to_.size());
    to_.push_back(head);
    next_.push_back(first_[tail]);
    first_[tail] = e;
    cap_.push_back(cap);
    to_.push_back(tail);
    next_.push_back(first_[head]);
    first_[head] = e + 1;
    cap_.push_back(0);
    return e;
  }

  struct Patch {
    int edge;
    Flow cap;
  };

  Flow solve(int s, int t, std::span<const Patch> patches = {}) {
    res_ = cap_;
    for (const Patch& p : patches) {
      if (p.edge >= 0) res_[p.edge] = p.cap;
    }
    const int n = node_count();
    parent_.resize(n);
    queue_.resize(n);
    Flow total = 0;
    while (true) {
      std::fill(parent_.begin(), parent_.end(), -1);
      parent_[s] = -2;
      int head = 0, tail = 0;
      queue_[tail++] = s;
      while (head < tail && parent_[t] == -1) {
        const int v = queue_[head++];
        for (int e = first_[v]; e >= 0; e = next_[e]) {
          const int w = to_[e];
          if (res_[e] > 0 && parent_[w] == -1) {
            parent_[w] = e;
            queue_[tail++] = w;
          }
        }
      }
      if (parent_[t] == -1) return total;
      Flow push = res_[parent_[t]];
      for (int v = t; v != s; v = to_[parent_[v] ^ 1]) push = std::min(push, res_[parent_[v]]);
      for (int v = t; v != s; v = to_[parent_[v] ^ 1]) {
        res_[parent_[v]] -= push;
        res_[parent_[v] ^ 1] += push;
      }
      total += push;
    }
  }

 private:
  std::vector<int> first_, to_, next_, parent_, queue_;
  std::vector<Flow> cap_, res_;
};

struct FlowResult {
  Flow value = 0;
  std::vector<Flow> arc_flow;           // indexed like the input arcs
  std::vector<int> min_cut;             // input arc indices, ascending
  std::vector<std::uint8_t> source_side;  // residual-reachable node set
};

inline FlowResult max_flow(int node_count, std::span<const FlowArc> arcs, int s, int t) {
  ResidualGraph<Flow> g(node_count);
  for (const FlowArc& a : arcs) g.add_arc(a.tail, a.head, a.cap);
  FlowResult r;
  r.value = g.max_flow(s, t);
  r.source_side = g.source_side(s);
  r.arc_flow.resize(arcs.size());
  Flow cut_cap = 0;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    r.arc_flow[i] = g.flow(i);
    if (r.source_side[arcs[i].tail] && !r.source_side[arcs[i].head]) {
      r.min_cut.push_back(i);
      cut_cap += arcs[i].cap;
    }
  }
#ifdef ALTPATHS_CHECK_DUALITY
  if (cut_cap != r.value) throw std::logic_error("max_flow: cut capacity differs from flow value");
#endif
  (void)cut_cap;
  return r;
}

/// Max-flow restricted to the arcs selected by `allowed` (empty mask means
/// every arc). Flow and cut refer to network arc indices.
inline FlowResult max_flow(const Network& net, std::span<const std::uint8_t> allowed,
                           int s, int t) {
  std::vector<FlowArc> arcs;
  std::vector<int> origin;
  arcs.reserve(net.arc_count());
  for (int a = 0; a < net.arc_count(); ++a) {
    if (!allowed.empty() && !allowed[a]) continue;
    const Arc& arc = net.arc(a);
    arcs.push_back({arc.tail, arc.head, arc.cap, 0});
    origin.push_back(a);
  }
  FlowResult sub = max_flow(net.node_count(), arcs, s, t);
  FlowResult r;
  r.value = sub.value;
  r.source_side = std::move(sub.source_side);
  r.arc_flow.assign(net.arc_count(), 0);
  for (std::size_t i = 0; i < origin.size(); ++i) r.arc_flow[origin[i]] = sub.arc_flow[i];
  for (int i : sub.min_cut) r.min_cut.push_back(origin[i]);
  return r;
}

/// Value-only max-flow over a mask, skipping one arc. Hot path of the
/// failure scans.
inline Flow max_flow_value(const Network& net, std::span<const std::uint8_t> allowed,
                           int skip, int s, int t) {
  ResidualGraph<Flow> g(net.node_count());
  for (int a = 0; a < net.arc_count(); ++a) {
    if (a == skip || (!allowed.empty() && !allowed[a])) continue;
    const Arc& arc = net.arc(a);
    g.add_arc(arc.tail, arc.head, arc.cap);
  }
  return g.max_flow(s, t);
}

struct MinCostFlowResult {
  bool feasible = false;  // required flow fully routed
  Flow value = 0;
  Flow cost = 0;
  std::vector<Flow> arc_flow;
};

inline MinCostFlowResult min_cost_flow(int node_count, std::span<const FlowArc> arcs, int s,
                                       int t, Flow required) {
  if (required < 1) throw std::invalid_argument("min_cost_flow: required flow must be >= 1");
  ResidualGraph<Flow> g(node_count);
  for (const FlowArc& a : arcs) {
    if (a.cost < 0) throw std::invalid_argument("min_cost_flow: negative arc cost");
    g.add_arc(a.tail, a.head, a.cap, a.cost);
  }
  auto cf = g.min_cost_flow(s, t, required);
  MinCostFlowResult r;
  r.value = cf.value;
  r.cost = cf.cost;
  r.feasible = cf.value == required;
  r.arc_flow.resize(arcs.size());
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) r.arc_flow[i] = g.flow(i);
  return r;
}

inline MinCostFlowResult min_cost_flow(const Network& net, int s, int t, Flow required) {
  std::vector<FlowArc> arcs;
  arcs.reserve(net.arc_count());
  for (const Arc& a : net.arcs()) arcs.push_back({a.tail, a.head, a.cap, a.cost});
  return min_cost_flow(net.node_count(), arcs, s, t, required);
}

/// Optimality certificate of a flow on `net`: Bellman-Ford over the
/// residual graph, started from every node at once.
inline bool has_negative_residual_cycle(const Network& net, std::span<const Flow> arc_flow) {
  struct Edge {
    int tail, head;
    Flow cost;
  };
  std::vector<Edge> edges;
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (arc_flow[a] < arc.cap) edges.push_back({arc.tail, arc.head, arc.cost});
    if (arc_flow[a] > 0) edges.push_back({arc.head, arc.tail, -arc.cost});
  }
  std::vector<Flow> dist(net.node_count(), 0);
  for (int round = 0; round < net.node_count(); ++round) {
    bool changed = false;
    for (const Edge& e : edges) {
      if (dist[e.tail] + e.cost < dist[e.head]) {
        dist[e.head] = dist[e.tail] + e.cost;
        changed = true;
      }
    }
    if (!changed) return false;
  }
  return true;
}

inline constexpr Flow kUnreachable = std::numeric_limits<Flow>::max() / 4;

/// Cost distance from every node to `t` over allowed arcs, avoiding nodes
/// flagged in `blocked` (the target itself is never blocked).
inline std::vector<Flow> distances_to(const Network& net, int t,
                                      std::span<const std::uint8_t> allowed = {},
                                      std::span<const std::uint8_t> blocked = {}) {
  std::vector<Flow> dist(net.node_count(), kUnreachable);
  using Item = std::pair<Flow, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[t] = 0;
  pq.emplace(0, t);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (int a : net.in_arcs(v)) {
      if (!allowed.empty() && !allowed[a]) continue;
      const int u = net.arc(a).tail;
      if (!blocked.empty() && blocked[u]) continue;
      const Flow nd = d + net.arc(a).cost;
      if (nd < dist[u]) {
        dist[u] = nd;
        pq.emplace(nd, u);
      }
    }
  }
  return dist;
}

/// Cost distance from `s` to every node; mirror of distances_to.
inline std::vector<Flow> distances_from(const Network& net, int s,
                                        std::span<const std::uint8_t> allowed = {},
                                        std::span<const std::uint8_t> blocked = {}) {
  std::vector<Flow> dist(net.node_count(), kUnreachable);
  using Item = std::pair<Flow, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0;
  pq.emplace(0, s);
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (int a : net.out_arcs(v)) {
      if (!allowed.empty() && !allowed[a]) continue;
      const int w = net.arc(a).head;
      if (!blocked.empty() && blocked[w]) continue;
      const Flow nd = d + net.arc(a).cost;
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.emplace(nd, w);
      }
    }
  }
  return dist;
}

/// Minimum-cost s->t path. Among optimal paths returns the one with the
/// lexicographically smallest arc-id sequence. Requires costs >= 1.
inline std::optional<Path> shortest_path(const Network& net, int s, int t,
                                         std::span<const std::uint8_t> allowed = {}) {
  const std::vector<Flow> dist = distances_to(net, t, allowed);
  if (dist[s] == kUnreachable) return std::nullopt;
  Path path;
  int v = s;
  while (v != t) {
    int next = -1;
    for (int a : net.out_arcs(v)) {  // out_arcs ascend by id
      if (!allowed.empty() && !allowed[a]) continue;
      const Arc& arc = net.arc(a);
      if (dist[arc.head] != kUnreachable && arc.cost + dist[arc.head] == dist[v]) {
        next = a;
        break;
      }
    }
    path.push_back(next);
    v = net.arc(next).head;
  }
  return path;
}

}  // namespace altpaths
