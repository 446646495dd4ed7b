#pragma once

// Core data model: capacitated directed network, routing instance and the
// k-path solution container shared by every solver.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace altpaths {

using NodeId = std::int64_t;
using ArcId = std::int64_t;
using Flow = std::int64_t;

/// Arc-level boolean mask indexed by dense arc index.
using ArcMask = std::vector<std::uint8_t>;

/// A path is a sequence of dense arc indices into the owning network.
using Path = std::vector<int>;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arc as supplied by a user: endpoints are external node ids.
struct ArcSpec {
  ArcId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  Flow cap = 1;
  Flow cost = 1;

  friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
};

/// Arc after indexing: endpoints are dense node indices.
struct Arc {
  ArcId id = 0;
  int tail = 0;
  int head = 0;
  Flow cap = 1;
  Flow cost = 1;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable directed multigraph. Arcs are stored sorted by id, so ordering
/// by dense arc index is the same as ordering by arc id.
class Network {
 public:
  Network() = default;

  Network(std::vector<NodeId> node_ids, std::vector<ArcSpec> arcs)
      : node_ids_(std::move(node_ids)) {
    for (std::size_t i = 0; i < node_ids_.size(); ++i) {
      if (node_ids_[i] < 0) {
        throw ModelError("nodes[" + std::to_string(i) + "]: negative node id");
      }
      if (!node_index_.emplace(node_ids_[i], static_cast<int>(i)).second) {
        throw ModelError("nodes[" + std::to_string(i) + "]: duplicate node id " +
                         std::to_string(node_ids_[i]));
      }
    }
    std::sort(arcs.begin(), arcs.end(),
              [](const ArcSpec& a, const ArcSpec& b) { return a.id < b.id; });
    arcs_.reserve(arcs.size());
    for (const ArcSpec& spec : arcs) {
      const std::string where = "arc " + std::to_string(spec.id);
      if (!arcs_.empty() && arcs_.back().id == spec.id) {
        throw ModelError(where + ": duplicate arc id");
      }
      auto tail = node_index_.find(spec.tail);
      auto head = node_index_.find(spec.head);
      if (tail == node_index_.end()) {
        throw ModelError(where + ": unknown tail node " + std::to_string(spec.tail));
      }
      if (head == node_index_.end()) {
        throw ModelError(where + ": unknown head node " + std::to_string(spec.head));
      }
      if (tail->second == head->second) throw ModelError(where + ": self-loop");
      if (spec.cap < 1) throw ModelError(where + ": capacity must be >= 1");
      if (spec.cost < 1) throw ModelError(where + ": cost must be >= 1");
      arcs_.push_back({spec.id, tail->second, head->second, spec.cap, spec.cost});
    }
    out_.assign(node_ids_.size(), {});
    in_.assign(node_ids_.size(), {});
    for (int a = 0; a < arc_count(); ++a) {
      out_[arcs_[a].tail].push_back(a);
      in_[arcs_[a].head].push_back(a);
      arc_index_.emplace(arcs_[a].id, a);
    }
  }

  /// Dense network with nodes 0..n-1 and arcs in the given order.
  static Network dense(int node_count, std::vector<ArcSpec> arcs) {
    std::vector<NodeId> ids(node_count);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    return Network(std::move(ids), std::move(arcs));
  }

  int node_count() const { return static_cast<int>(node_ids_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(int a) const {
    assert(a >= 0 && a < arc_count());
    return arcs_[a];
  }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const int> out_arcs(int v) const { return out_[v]; }
  std::span<const int> in_arcs(int v) const { return in_[v]; }

  NodeId node_id(int v) const { return node_ids_.at(v); }
  const std::vector<NodeId>& node_ids() const { return node_ids_; }

  std::optional<int> node_index(NodeId id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<int> arc_index(ArcId id) const {
    auto it = arc_index_.find(id);
    if (it == arc_index_.end()) return std::nullopt;
    return it->second;
  }

  Flow total_cost() const {
    Flow sum = 0;
    for (const Arc& a : arcs_) sum += a.cost;
    return sum;
  }

  std::vector<ArcSpec> arc_specs() const {
    std::vector<ArcSpec> out;
    out.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
      out.push_back({a.id, node_ids_[a.tail], node_ids_[a.head], a.cap, a.cost});
    }
    return out;
  }

  /// Copy of the network with the arc at dense index `a` removed.
  Network without_arc(int a) const {
    std::vector<ArcSpec> specs = arc_specs();
    specs.erase(specs.begin() + a);
    return Network(node_ids_, std::move(specs));
  }

  Network with_arc(const ArcSpec& extra) const {
    std::vector<ArcSpec> specs = arc_specs();
    specs.push_back(extra);
    return Network(node_ids_, std::move(specs));
  }

  ArcId next_arc_id() const { return arcs_.empty() ? 0 : arcs_.back().id + 1; }

  friend bool operator==(const Network& a, const Network& b) {
    return a.node_ids_ == b.node_ids_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<NodeId> node_ids_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::map<NodeId, int> node_index_;
  std::map<ArcId, int> arc_index_;
};

/// Routing problem after the congested arc has been taken out of service.
struct Instance {
  Network network;
  int source = 0;  // dense node index
  int dest = 0;    // dense node index
  int k = 1;
  std::optional<ArcId> congested_arc;

  void validate() const {
    const int n = network.node_count();
    if (source < 0 || source >= n) throw ModelError("source: node not in network");
    if (dest < 0 || dest >= n) throw ModelError("dest: node not in network");
    if (source == dest) throw ModelError("source and dest must differ");
    if (k < 1) throw ModelError("k: must be >= 1");
    if (congested_arc && network.arc_index(*congested_arc)) {
      throw ModelError("congested_arc " + std::to_string(*congested_arc) +
                       " is still present in the network");
    }
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// k paths (duplicates allowed) from source to destination.
struct PathSet {
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  friend bool operator==(const PathSet&, const PathSet&) = default;
};

inline Flow path_cost(const Network& net, const Path& p) {
  Flow c = 0;
  for (int a : p) c += net.arc(a).cost;
  return c;
}

/// Bottleneck capacity of a path.
inline Flow mincap(const Network& net, const Path& p) {
  if (p.empty()) return 0;
  Flow m = net.arc(p.front()).cap;
  for (int a : p) m = std::min(m, net.arc(a).cap);
  return m;
}

inline Flow total_cost(const Network& net, const PathSet& ps) {
  Flow c = 0;
  for (const Path& p : ps.paths) c += path_cost(net, p);
  return c;
}

inline ArcMask used_arcs(const Network& net, const PathSet& ps) {
  ArcMask used(net.arc_count(), 0);
  for (const Path& p : ps.paths) {
    for (int a : p) used.at(a) = 1;
  }
  return used;
}

inline bool arc_disjoint(const Path& a, const Path& b) {
  for (int x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

}  // namespace altpaths
