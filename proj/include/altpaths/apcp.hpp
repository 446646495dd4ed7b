#pragma once

// Evaluation side of the alternative-paths problem: path-structure
// feasibility, worst single-arc failure and the min-cut Benders cuts
// derived from it.

#include <chrono>
#include <string>
#include <vector>

#include "altpaths/flow.hpp"
#include "altpaths/network.hpp"

namespace altpaths {

enum class ViolationKind {
  kPathCount,    // pathset does not hold exactly k paths
  kUnknownArc,   // arc index out of range
  kFlowBalance,  // +1 at s, -1 at t, 0 elsewhere
  kOutDegree,    // at most one leaving arc per node, none at t
  kInDegree,     // at most one entering arc per node, none at s
  kSubtour,      // arcs not reachable from s along the path's own arcs
  kOrder,        // sequence is not a contiguous walk from s
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kPathCount: return "path-count";
    case ViolationKind::kUnknownArc: return "unknown-arc";
    case ViolationKind::kFlowBalance: return "flow-balance";
    case ViolationKind::kOutDegree: return "out-degree";
    case ViolationKind::kInDegree: return "in-degree";
    case ViolationKind::kSubtour: return "subtour";
    case ViolationKind::kOrder: return "order";
  }
  return "?";
}

struct Violation {
  int path = -1;  // -1 for pathset-level violations
  ViolationKind kind = ViolationKind::kPathCount;
  int node = -1;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class InvalidPathSet : public std::runtime_error {
 public:
  InvalidPathSet(const Violation& v, const std::string& what)
      : std::runtime_error(what), violation(v) {}
  Violation violation;
};

/// Checks each path's arc set against the path constraints of the compact
/// model: flow balance, degree bounds and absence of sub-tours (found by a
/// DFS from s over the path's arcs). Arc order inside a path is ignored;
/// repeated arcs count as repeated selections.
inline std::vector<Violation> compact_check(const Network& net, int s, int t, int k,
                                            const PathSet& ps) {
  std::vector<Violation> out;
  if (static_cast<int>(ps.size()) != k) out.push_back({-1, ViolationKind::kPathCount, -1});
  const int n = net.node_count();
  std::vector<int> outdeg(n), indeg(n);
  for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
    const Path& p = ps.paths[i];
    bool known = !p.empty();
    for (int a : p) known = known && a >= 0 && a < net.arc_count();
    if (!known) {
      out.push_back({i, ViolationKind::kUnknownArc, -1});
      continue;
    }
    std::fill(outdeg.begin(), outdeg.end(), 0);
    std::fill(indeg.begin(), indeg.end(), 0);
    for (int a : p) {
      ++outdeg[net.arc(a).tail];
      ++indeg[net.arc(a).head];
    }
    for (int v = 0; v < n; ++v) {
      const int want = v == s ? 1 : v == t ? -1 : 0;
      if (outdeg[v] - indeg[v] != want) out.push_back({i, ViolationKind::kFlowBalance, v});
    }
    for (int v = 0; v < n; ++v) {
      if (outdeg[v] > (v == t ? 0 : 1)) out.push_back({i, ViolationKind::kOutDegree, v});
      if (indeg[v] > (v == s ? 0 : 1)) out.push_back({i, ViolationKind::kInDegree, v});
    }
    // Sub-tour separation: walk from s over the path's arcs.
    std::vector<std::uint8_t> visited(p.size(), 0);
    std::vector<int> stack{s};
    std::vector<std::uint8_t> seen(n, 0);
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (visited[j] || net.arc(p[j]).tail != v) continue;
        visited[j] = 1;
        const int w = net.arc(p[j]).head;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!visited[j]) {
        out.push_back({i, ViolationKind::kSubtour, net.arc(p[j]).tail});
        break;
      }
    }
  }
  return out;
}

inline std::vector<Violation> compact_check(const Instance& inst, const PathSet& ps) {
  return compact_check(inst.network, inst.source, inst.dest, inst.k, ps);
}

/// Throws InvalidPathSet naming the first bad path unless every path is a
/// simple s->t walk given in traversal order.
inline void validate_pathset(const Instance& inst, const PathSet& ps) {
  auto violations = compact_check(inst, ps);
  if (violations.empty()) {
    for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
      int v = inst.source;
      for (int a : ps.paths[i]) {
        if (inst.network.arc(a).tail != v) {
          violations.push_back({i, ViolationKind::kOrder, v});
          break;
        }
        v = inst.network.arc(a).head;
      }
    }
  }
  if (violations.empty()) return;
  const Violation& v = violations.front();
  std::string what = v.path < 0 ? "pathset: " : "path " + std::to_string(v.path) + ": ";
  what += to_string(v.kind);
  if (v.node >= 0) what += " at node " + std::to_string(inst.network.node_id(v.node));
  throw InvalidPathSet(v, what);
}

struct Evaluation {
  Flow z = 0;
  Flow cost = 0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// The failure scenario attaining the worst-case max-flow.
struct FailureScenario {
  int arc = -1;  // failed arc (dense index)
  Flow z = 0;
  std::vector<int> min_cut;               // used arcs crossing the cut
  std::vector<std::uint8_t> source_side;  // residual-reachable nodes
};

/// Failing an arc outside the used set leaves the restricted max-flow
/// unchanged, and failing a used arc can only lower it, so scanning the used
/// arcs is enough to find the minimum over every arc of the network. The
/// failed arc is removed from the graph, so no flow crosses it. Ties go to
/// the smallest arc id.
inline FailureScenario worst_failure(const Network& net, int s, int t,
                                     std::span<const std::uint8_t> used) {
  FailureScenario best;
  best.z = kUnreachable;
  for (int a = 0; a < net.arc_count(); ++a) {
    if (!used[a]) continue;
    const Flow v = max_flow_value(net, used, a, s, t);
    if (v < best.z) {
      best.z = v;
      best.arc = a;
    }
  }
  if (best.arc < 0) {
    best.z = 0;
    return best;
  }
  ArcMask scenario(used.begin(), used.end());
  scenario[best.arc] = 0;
  FlowResult fr = max_flow(net, scenario, s, t);
  best.min_cut = std::move(fr.min_cut);
  best.source_side = std::move(fr.source_side);
  return best;
}

inline FailureScenario worst_failure(const Instance& inst, const PathSet& ps) {
  validate_pathset(inst, ps);
  const ArcMask used = used_arcs(inst.network, ps);
  return worst_failure(inst.network, inst.source, inst.dest, used);
}

inline Evaluation evaluate_solution(const Instance& inst, const PathSet& ps) {
  validate_pathset(inst, ps);
  const ArcMask used = used_arcs(inst.network, ps);
  Flow z = kUnreachable;
  for (int a = 0; a < inst.network.arc_count(); ++a) {
    if (used[a]) z = std::min(z, max_flow_value(inst.network, used, a, inst.source, inst.dest));
  }
  return {z == kUnreachable ? 0 : z, total_cost(inst.network, ps)};
}

/// z <= sum of cap(a) * y(a) over `arcs`: every network arc leaving the
/// source side of a failure scenario's min cut, minus the failed arc. Valid
/// for any used-arc set, since that failure bounds z for every solution.
struct BendersCut {
  std::vector<int> arcs;
  int failed_arc = -1;

  Flow value(const Network& net, std::span<const std::uint8_t> used) const {
    Flow v = 0;
    for (int a : arcs) {
      if (used[a]) v += net.arc(a).cap;
    }
    return v;
  }
};

inline BendersCut make_cut(const Network& net, const FailureScenario& sc) {
  BendersCut cut;
  cut.failed_arc = sc.arc;
  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (a != sc.arc && sc.source_side[arc.tail] && !sc.source_side[arc.head]) {
      cut.arcs.push_back(a);
    }
  }
  return cut;
}

enum class SolveStatus { kOptimal, kTimeLimit, kInfeasible };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kTimeLimit: return "time-limit-incumbent";
    case SolveStatus::kInfeasible: return "infeasible";
  }
  return "?";
}

struct SolveStats {
  long long nodes = 0;
  long long cuts = 0;
  long long leaves = 0;
  double wall_s = 0.0;
};

struct ApcpSolution {
  PathSet pathset;
  Flow z = 0;
  Flow cost = 0;
  SolveStatus status = SolveStatus::kInfeasible;
  SolveStats stats;
};

/// Lexicographic comparison of (z, -cost): true when a is strictly better.
inline bool better(Flow z_a, Flow cost_a, Flow z_b, Flow cost_b) {
  return z_a > z_b || (z_a == z_b && cost_a < cost_b);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace altpaths
