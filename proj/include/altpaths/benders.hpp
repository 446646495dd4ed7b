#pragma once

// Exact solver for the alternative-paths problem.
//
// The master problem (choose k simple s->t paths) is explored by a
// depth-first branch-and-bound that extends one path arc by arc; paths are
// generated in non-decreasing canonical order so each multiset is met once.
// At every complete candidate the failure sub-problems are solved as
// max-flows, and the min cut of the worst failure is pooled as a Benders cut
// when the pool did not already certify the candidate's value. Pooled cuts
// are globally valid and bound partial candidates together with two
// combinatorial relaxations (s-out / t-in counting and a max-flow over the
// arcs that can still be selected).

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "altpaths/apcp.hpp"
#include "altpaths/flow.hpp"
#include "altpaths/rapcp.hpp"

namespace altpaths {

struct BendersParams {
  double time_limit_s = 200.0;
  long long node_limit = 0;  // 0 = unlimited; deterministic alternative to the clock
  bool warm_start = true;    // seed the incumbent with the relaxation's paths
};

namespace detail {

class BendersSearch {
 public:
  BendersSearch(const Instance& inst, const BendersParams& params)
      : net_(inst.network),
        s_(inst.source),
        t_(inst.dest),
        k_(inst.k),
        n_(net_.node_count()),
        m_(net_.arc_count()),
        params_(params) {}

  ApcpSolution run() {
    ApcpSolution out;
    dist_to_t_ = distances_to(net_, t_);
    dist_from_s_ = distances_from(net_, s_);
    if (dist_to_t_[s_] == kUnreachable) {
      out.status = SolveStatus::kInfeasible;
      out.stats.wall_s = clock_.seconds();
      return out;
    }
    d_st_ = dist_to_t_[s_];

    // Canonical path order compares arc ranks: capacity descending, id ascending.
    std::vector<int> by_rank(m_);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::stable_sort(by_rank.begin(), by_rank.end(),
                     [&](int a, int b) { return net_.arc(a).cap > net_.arc(b).cap; });
    rank_.assign(m_, 0);
    for (int r = 0; r < m_; ++r) rank_[by_rank[r]] = r;

    use_count_.assign(m_, 0);
    on_cur_.assign(n_, 0);
    seed_incumbent();

    on_cur_[s_] = 1;
    grow(s_, false, kUnreachable, -1);
    on_cur_[s_] = 0;

    out.pathset = best_paths_;
    out.z = best_z_;
    out.cost = best_cost_;
    out.status = aborted_ ? SolveStatus::kTimeLimit : SolveStatus::kOptimal;
    out.stats = stats_;
    out.stats.cuts = static_cast<long long>(pool_.size());
    out.stats.wall_s = clock_.seconds();
    return out;
  }

 private:
  struct Child {
    int arc = -1;
    Flow z_ub = 0;
    int argmin = -1;
    Flow cost_lb = 0;
  };

  // ---- incumbent -------------------------------------------------------

  void offer(const std::vector<Path>& paths) {
    ArcMask used(m_, 0);
    Flow cost = 0;
    for (const Path& p : paths) {
      for (int a : p) used[a] = 1;
      cost += path_cost(net_, p);
    }
    const Flow z = worst_failure(net_, s_, t_, used).z;
    if (!have_ || better(z, cost, best_z_, best_cost_)) {
      have_ = true;
      best_z_ = z;
      best_cost_ = cost;
      best_paths_.paths = paths;
    }
  }

  void seed_incumbent() {
    if (auto sp = shortest_path(net_, s_, t_)) offer(std::vector<Path>(k_, *sp));
    if (!params_.warm_start) return;
    for (FilterMode mode : {FilterMode::kBottleneck, FilterMode::kListing}) {
      RapcpSolution r = rapcp(net_, s_, t_, k_, mode);
      if (!r.completed.paths.empty()) offer(r.completed.paths);
    }
  }

  // ---- leaf ------------------------------------------------------------

  void evaluate_leaf() {
    ++stats_.leaves;
    ArcMask used(m_, 0);
    for (int a = 0; a < m_; ++a) used[a] = use_count_[a] > 0;
#ifndef NDEBUG
    {
      std::vector<Path> all = done_;
      all.push_back(cur_);
      assert(compact_check(net_, s_, t_, k_, PathSet{all}).empty());
    }
#endif
    FailureScenario worst = worst_failure(net_, s_, t_, used);
    Flow estimate = kUnreachable;
    for (const BendersCut& cut : pool_) estimate = std::min(estimate, cut.value(net_, used));
    if (worst.z < estimate) pool_.push_back(make_cut(net_, worst));
    if (!have_ || better(worst.z, cost_fixed_, best_z_, best_cost_)) {
      have_ = true;
      best_z_ = worst.z;
      best_cost_ = cost_fixed_;
      best_paths_.paths = done_;
      best_paths_.paths.push_back(cur_);
    }
  }

  // ---- bounds ----------------------------------------------------------

  /// Cost distances to t for the remainder of the current path, which sits
  /// at `w` and may not revisit any other node of the path.
  std::vector<Flow> remainder_to_t(int w) const {
    std::vector<Flow> dist(n_, kUnreachable);
    using Item = std::pair<Flow, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[t_] = 0;
    pq.emplace(0, t_);
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v] || v == w) continue;
      for (int a : net_.in_arcs(v)) {
        const int u = net_.arc(a).tail;
        if (on_cur_[u] && u != w) continue;
        const Flow nd = d + net_.arc(a).cost;
        if (nd < dist[u]) {
          dist[u] = nd;
          pq.emplace(nd, u);
        }
      }
    }
    return dist;
  }

  std::vector<Flow> remainder_from(int w) const {
    std::vector<Flow> dist(n_, kUnreachable);
    using Item = std::pair<Flow, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[w] = 0;
    pq.emplace(0, w);
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v] || v == t_) continue;
      for (int a : net_.out_arcs(v)) {
        const int x = net_.arc(a).head;
        if (on_cur_[x]) continue;
        const Flow nd = d + net_.arc(a).cost;
        if (nd < dist[x]) {
          dist[x] = nd;
          pq.emplace(nd, x);
        }
      }
    }
    return dist;
  }

  /// Arcs that the unfinished part of the search may still add. With a
  /// budget, only arcs lying on some completion within `slack` extra cost.
  ArcMask selectable(int w, bool incomplete, int future, int first_rank,
                     const std::vector<Flow>& to_t, std::optional<Flow> slack) const {
    ArcMask sel(m_, 0);
    if (incomplete) {
      const std::vector<Flow> from_w = remainder_from(w);
      const Flow limit = slack ? to_t[w] + *slack : kUnreachable;
      for (int a = 0; a < m_; ++a) {
        const Arc& arc = net_.arc(a);
        if (arc.tail == t_ || from_w[arc.tail] == kUnreachable) continue;
        if (on_cur_[arc.head] || to_t[arc.head] == kUnreachable) continue;
        if (from_w[arc.tail] + arc.cost + to_t[arc.head] <= limit) sel[a] = 1;
      }
    }
    if (future > 0) {
      const Flow limit = slack ? d_st_ + *slack : kUnreachable;
      for (int a = 0; a < m_; ++a) {
        const Arc& arc = net_.arc(a);
        if (arc.tail == t_ || arc.head == s_) continue;
        if (arc.tail == s_ && rank_[a] < first_rank) continue;
        if (dist_from_s_[arc.tail] == kUnreachable || dist_to_t_[arc.head] == kUnreachable) {
          continue;
        }
        if (dist_from_s_[arc.tail] + arc.cost + dist_to_t_[arc.head] <= limit) sel[a] = 1;
      }
    }
    return sel;
  }

  static Flow top_sum(std::vector<Flow>& caps, int count) {
    if (count <= 0 || caps.empty()) return 0;
    const auto take = std::min<std::size_t>(count, caps.size());
    std::partial_sort(caps.begin(), caps.begin() + take, caps.end(), std::greater<>());
    return std::accumulate(caps.begin(), caps.begin() + take, Flow{0});
  }

  /// z <= (sum - max) over the s-out arcs, and likewise over the t-in arcs,
  /// of the final solution. Each future path adds at most one of each.
  Flow counting_bound(const ArcMask& sel, int future, bool incomplete) const {
    auto side = [&](std::span<const int> arcs, int extra) {
      std::vector<Flow> chosen, fresh;
      for (int a : arcs) {
        if (use_count_[a] > 0) {
          chosen.push_back(net_.arc(a).cap);
        } else if (sel[a]) {
          fresh.push_back(net_.arc(a).cap);
        }
      }
      const auto take = std::min<std::size_t>(std::max(extra, 0), fresh.size());
      std::partial_sort(fresh.begin(), fresh.begin() + take, fresh.end(), std::greater<>());
      chosen.insert(chosen.end(), fresh.begin(), fresh.begin() + take);
      if (chosen.empty()) return Flow{0};
      return std::accumulate(chosen.begin(), chosen.end(), Flow{0}) -
             *std::max_element(chosen.begin(), chosen.end());
    };
    return std::min(side(net_.out_arcs(s_), future),
                    side(net_.in_arcs(t_), future + (incomplete ? 1 : 0)));
  }

  Flow pool_bound(const ArcMask& sel, int future, bool incomplete) const {
    Flow best = kUnreachable;
    std::vector<Flow> fresh_s, fresh_t;
    for (const BendersCut& cut : pool_) {
      Flow v = 0;
      fresh_s.clear();
      fresh_t.clear();
      for (int a : cut.arcs) {
        const Arc& arc = net_.arc(a);
        if (use_count_[a] > 0) {
          v += arc.cap;
        } else if (sel[a]) {
          if (arc.tail == s_) {
            fresh_s.push_back(arc.cap);
          } else if (arc.head == t_) {
            fresh_t.push_back(arc.cap);
          } else {
            v += arc.cap;
          }
        }
      }
      v += top_sum(fresh_s, future) + top_sum(fresh_t, future + (incomplete ? 1 : 0));
      best = std::min(best, v);
    }
    return best;
  }

  /// Relaxed support graph: chosen arcs as they are, selectable arcs routed
  /// from an out-gadget of their tail to an in-gadget of their head. A node
  /// gadget carries the largest caps its remaining paths can still open,
  /// since each path adds at most one arc leaving and one entering a node.
  void build_relaxation(const ArcMask& sel, int w, int future, bool incomplete) {
    relax_.reset(3 * n_);
    arc_edge_.assign(m_, -1);
    out_edge_.assign(n_, -1);
    in_edge_.assign(n_, -1);
    out_rest_.assign(n_, 0);
    in_rest_.assign(n_, 0);
    fresh_out_.resize(n_);
    fresh_in_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      fresh_out_[v].clear();
      fresh_in_[v].clear();
    }
    for (int a = 0; a < m_; ++a) {
      const Arc& arc = net_.arc(a);
      if (use_count_[a] > 0) {
        arc_edge_[a] = relax_.add_arc(arc.tail, arc.head, arc.cap);
      } else if (sel[a]) {
        relax_.add_arc(2 * n_ + arc.tail, n_ + arc.head, arc.cap);
        fresh_out_[arc.tail].push_back(arc.cap);
        fresh_in_[arc.head].push_back(arc.cap);
      }
    }
    for (int v = 0; v < n_; ++v) {
      const int q_out = future + (incomplete && (v == w || !on_cur_[v]) ? 1 : 0);
      const int q_in = future + (incomplete && !on_cur_[v] ? 1 : 0);
      if (q_out > 0 && !fresh_out_[v].empty()) {
        const Flow sum = top_sum(fresh_out_[v], q_out);
        out_rest_[v] = sum - fresh_out_[v].front();
        out_edge_[v] = relax_.add_arc(v, 2 * n_ + v, sum);
      }
      if (q_in > 0 && !fresh_in_[v].empty()) {
        const Flow sum = top_sum(fresh_in_[v], q_in);
        in_rest_[v] = sum - fresh_in_[v].front();
        in_edge_[v] = relax_.add_arc(n_ + v, v, sum);
      }
    }
  }

  /// Cheapest way to reach z >= target on the arcs leaving s (entering t).
  /// Each remaining path either opens a new endpoint arc, paying at least
  /// the cheapest path through it, or reuses one and pays at least d(s,t).
  /// The chosen endpoint caps must keep sum - max >= target. Returns the
  /// extra cost beyond cost_fixed_, or nullopt if the target is out of reach.
  struct EndpointOption {
    Flow cap;
    Flow cost;
  };

  static std::optional<Flow> endpoint_cost(std::vector<Flow> fixed,
                                           const std::vector<EndpointOption>& fresh, int picks,
                                           Flow reuse_cost, Flow target,
                                           const std::vector<EndpointOption>& forced) {
    std::optional<Flow> best;
    std::vector<int> idx;
    auto feasible = [&]() {
      Flow sum = 0, mx = 0;
      for (Flow c : fixed) {
        sum += c;
        mx = std::max(mx, c);
      }
      for (int i : idx) {
        sum += fresh[i].cap;
        mx = std::max(mx, fresh[i].cap);
      }
      return sum - mx >= target;
    };
    auto rec = [&](auto&& self, int from, Flow cost) -> void {
      const Flow total = cost + (picks - static_cast<int>(idx.size())) * reuse_cost;
      if (best && total >= *best) return;
      if (feasible()) best = total;
      if (static_cast<int>(idx.size()) == picks) return;
      for (int i = from; i < static_cast<int>(fresh.size()); ++i) {
        idx.push_back(i);
        self(self, i + 1, cost + fresh[i].cost);
        idx.pop_back();
      }
    };
    if (forced.empty()) {
      rec(rec, 0, 0);
      return best;
    }
    // One pick is forced to come from `forced` (the current path's last arc).
    std::optional<Flow> out;
    for (const EndpointOption& f : forced) {
      best.reset();
      fixed.push_back(f.cap);
      rec(rec, 0, 0);
      fixed.pop_back();
      if (best && (!out || *best + f.cost < *out)) out = *best + f.cost;
    }
    return out;
  }

  std::optional<Flow> endpoint_bound(Flow target, int w, bool incomplete, int future,
                                     int first_rank, const std::vector<Flow>& to_t) const {
    Flow s_side = 0;
    if (future > 0) {
      std::vector<Flow> fixed;
      std::vector<EndpointOption> fresh;
      for (int a : net_.out_arcs(s_)) {
        const Arc& arc = net_.arc(a);
        if (use_count_[a] > 0) {
          fixed.push_back(arc.cap);
        } else if (rank_[a] >= first_rank && dist_to_t_[arc.head] != kUnreachable) {
          fresh.push_back({arc.cap, arc.cost + dist_to_t_[arc.head]});
        }
      }
      auto v = endpoint_cost(fixed, fresh, future, d_st_, target, {});
      if (!v) return std::nullopt;
      s_side = *v;
    }
    std::vector<Flow> fixed;
    std::vector<EndpointOption> fresh, forced;
    std::vector<Flow> from_w;
    if (incomplete) from_w = remainder_from(w);
    for (int a : net_.in_arcs(t_)) {
      const Arc& arc = net_.arc(a);
      const bool chosen = use_count_[a] > 0;
      if (chosen) fixed.push_back(arc.cap);
      if (incomplete && from_w[arc.tail] != kUnreachable) {
        // The current path may end on a chosen arc, which adds no capacity.
        forced.push_back({chosen ? 0 : arc.cap, from_w[arc.tail] + arc.cost});
      }
      if (!chosen && dist_from_s_[arc.tail] != kUnreachable) {
        fresh.push_back({arc.cap, dist_from_s_[arc.tail] + arc.cost});
      }
    }
    Flow t_side = 0;
    if (incomplete) {
      if (forced.empty()) return std::nullopt;
      auto v = endpoint_cost(fixed, fresh, future, d_st_, target, forced);
      if (!v) return std::nullopt;
      t_side = *v;
      // The s side left out the current path's remainder.
      s_side += to_t[w];
    } else if (future > 0) {
      auto v = endpoint_cost(fixed, fresh, future, d_st_, target, {});
      if (!v) return std::nullopt;
      t_side = *v;
    }
    return std::max(s_side, t_side);
  }

  // Scenario ids: [0, m) fails a chosen arc, m + v the largest new arc
  // leaving v, m + n + v the largest new arc entering v. Each one bounds z
  // for every completion. Returns nullopt when the scenario does not apply.
  std::optional<Flow> scenario_flow(int id) {
    PatchableMaxFlow::Patch p{-1, 0};
    if (id < m_) {
      p = {arc_edge_[id], 0};
    } else if (id < m_ + n_) {
      p = {out_edge_[id - m_], out_rest_[id - m_]};
    } else {
      p = {in_edge_[id - m_ - n_], in_rest_[id - m_ - n_]};
    }
    if (p.edge < 0) return std::nullopt;
    return relax_.solve(s_, t_, std::span<const PatchableMaxFlow::Patch>(&p, 1));
  }

  void note_pruner(int id) {
    auto it = std::find(hot_.begin(), hot_.end(), id);
    if (it == hot_.end()) {
      if (hot_.size() < 6) hot_.push_back(id);
      it = hot_.end() - 1;
      *it = id;
    }
    std::rotate(hot_.begin(), it, it + 1);
  }

  // ---- search ------------------------------------------------------------

  bool out_of_budget() {
    if (aborted_) return true;
    if (params_.node_limit > 0 && stats_.nodes >= params_.node_limit) aborted_ = true;
    if ((stats_.nodes & 63) == 0 && clock_.seconds() >= params_.time_limit_s) aborted_ = true;
    return aborted_;
  }

  /// Bounds the state reached by the arc just appended to cur_. Returns
  /// nullopt when the state cannot beat the incumbent.
  std::optional<Child> bound_state(int arc, Flow parent_ub, int parent_argmin) {
    const int w = net_.arc(arc).head;
    const bool incomplete = w != t_;
    const int future = k_ - static_cast<int>(done_.size()) - 1;
    const int first_rank = rank_[cur_.front()];

    std::vector<Flow> to_t;
    Flow remainder = 0;
    if (incomplete) {
      to_t = remainder_to_t(w);
      remainder = to_t[w];
      if (remainder == kUnreachable) return std::nullopt;
    }
    Child c;
    c.arc = arc;
    c.cost_lb = cost_fixed_ + remainder + future * d_st_;
    const Flow base_lb = c.cost_lb;
    if (have_ && parent_ub <= best_z_) {
      // Only equal-z, strictly cheaper solutions remain interesting.
      if (c.cost_lb >= best_cost_) return std::nullopt;
      const auto ends = endpoint_bound(best_z_, w, incomplete, future, first_rank, to_t);
      if (!ends) return std::nullopt;
      c.cost_lb = std::max(c.cost_lb, cost_fixed_ + *ends);
      if (c.cost_lb >= best_cost_) return std::nullopt;
    }

    // Scenarios scanned: the new arc, the parent's tightest one, recent
    // pruners and the s / t gadgets; everything once a path is closed.
    std::vector<int> scenarios;
    if (incomplete) {
      scenarios.push_back(arc);
      if (parent_argmin >= 0) scenarios.push_back(parent_argmin);
      scenarios.insert(scenarios.end(), hot_.begin(), hot_.end());
      scenarios.push_back(m_ + s_);
      scenarios.push_back(m_ + n_ + t_);
    } else {
      for (int a = 0; a < m_; ++a) {
        if (use_count_[a] > 0) scenarios.push_back(a);
      }
      for (int v = 0; v < n_; ++v) {
        scenarios.push_back(m_ + v);
        scenarios.push_back(m_ + n_ + v);
      }
    }

    auto z_bound = [&](const ArcMask& sel, Flow start, Flow floor, int& argmin) {
      Flow ub = std::min(start, counting_bound(sel, future, incomplete));
      if (ub < floor) return ub;
      ub = std::min(ub, pool_bound(sel, future, incomplete));
      if (ub < floor) return ub;
      build_relaxation(sel, w, future, incomplete);
      std::vector<int> seen;
      for (int id : scenarios) {
        if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
        seen.push_back(id);
        const std::optional<Flow> v = scenario_flow(id);
        if (v && *v < ub) {
          ub = *v;
          argmin = id;
        }
        if (ub < floor) {
          note_pruner(id);
          break;
        }
      }
      return ub;
    };

    const Flow floor = have_ ? best_z_ : 0;
    c.argmin = parent_argmin;
    const ArcMask open = selectable(w, incomplete, future, first_rank, to_t, std::nullopt);
    c.z_ub = z_bound(open, parent_ub, floor, c.argmin);
    if (!have_) return c;
    if (c.z_ub < best_z_) return std::nullopt;
    if (c.z_ub == best_z_) {
      if (parent_ub > best_z_) {
        const auto ends = endpoint_bound(best_z_, w, incomplete, future, first_rank, to_t);
        if (!ends) return std::nullopt;
        c.cost_lb = std::max(c.cost_lb, cost_fixed_ + *ends);
      }
      if (c.cost_lb >= best_cost_) return std::nullopt;
      // Arcs off every completion within the budget cannot help; the budget
      // is measured against the per-path bound, not the endpoint one.
      const Flow slack = best_cost_ - 1 - base_lb;
      const ArcMask cheap = selectable(w, incomplete, future, first_rank, to_t, slack);
      int ignored = -1;
      if (z_bound(cheap, c.z_ub, best_z_, ignored) < best_z_) return std::nullopt;
    }
    return c;
  }

  bool still_promising(const Child& c) const {
    if (!have_) return true;
    return c.z_ub > best_z_ || (c.z_ub == best_z_ && c.cost_lb < best_cost_);
  }

  void push_arc(int a) {
    cur_.push_back(a);
    ++use_count_[a];
    cost_fixed_ += net_.arc(a).cost;
    on_cur_[net_.arc(a).head] = 1;
  }

  void pop_arc() {
    const int a = cur_.back();
    on_cur_[net_.arc(a).head] = 0;
    cost_fixed_ -= net_.arc(a).cost;
    --use_count_[a];
    cur_.pop_back();
  }

  /// Extends the current path, which ends at v. `tied` holds while the
  /// current path equals the previous path's prefix.
  void grow(int v, bool tied, Flow parent_ub, int parent_argmin) {
    if (out_of_budget()) return;
    ++stats_.nodes;
    const std::size_t pos = cur_.size();
    const Path* prev = done_.empty() ? nullptr : &done_.back();
    const bool last_path = static_cast<int>(done_.size()) == k_ - 1;

    std::vector<std::pair<Child, bool>> children;
    for (int a : net_.out_arcs(v)) {
      const int w = net_.arc(a).head;
      if (on_cur_[w]) continue;
      bool child_tied = false;
      if (prev && tied) {
        const int r_prev = rank_[(*prev)[pos]];
        if (rank_[a] < r_prev) continue;
        child_tied = rank_[a] == r_prev;
      }
      push_arc(a);
      if (w == t_ && last_path) {
        evaluate_leaf();
      } else if (auto c = bound_state(a, parent_ub, parent_argmin)) {
        children.emplace_back(*c, child_tied);
      }
      pop_arc();
    }
    std::stable_sort(children.begin(), children.end(), [](const auto& x, const auto& y) {
      if (x.first.z_ub != y.first.z_ub) return x.first.z_ub > y.first.z_ub;
      return x.first.cost_lb < y.first.cost_lb;
    });

    for (const auto& [c, child_tied] : children) {
      if (aborted_) return;
      if (!still_promising(c)) continue;
      const int w = net_.arc(c.arc).head;
      push_arc(c.arc);
      if (w == t_) {
        // Close this path and open the next one at s.
        done_.push_back(cur_);
        Path saved;
        saved.swap(cur_);
        for (int a : saved) on_cur_[net_.arc(a).head] = 0;
        grow(s_, true, c.z_ub, c.argmin);
        for (int a : saved) on_cur_[net_.arc(a).head] = 1;
        cur_.swap(saved);
        done_.pop_back();
      } else {
        grow(w, child_tied, c.z_ub, c.argmin);
      }
      pop_arc();
    }
  }

  const Network& net_;
  int s_, t_, k_, n_, m_;
  BendersParams params_;
  Stopwatch clock_;

  std::vector<Flow> dist_to_t_, dist_from_s_;
  Flow d_st_ = 0;
  std::vector<int> rank_;

  std::vector<Path> done_;
  Path cur_;
  std::vector<std::uint8_t> on_cur_;
  std::vector<int> use_count_;
  Flow cost_fixed_ = 0;

  bool have_ = false;
  Flow best_z_ = 0;
  Flow best_cost_ = 0;
  PathSet best_paths_;
  std::vector<BendersCut> pool_;

  PatchableMaxFlow relax_;
  std::vector<int> arc_edge_, out_edge_, in_edge_, hot_;
  std::vector<Flow> out_rest_, in_rest_;
  std::vector<std::vector<Flow>> fresh_out_, fresh_in_;

  SolveStats stats_;
  bool aborted_ = false;
};

}  // namespace detail

/// Exact lexicographic optimum of (worst-failure max-flow, -cost), or the
/// best incumbent when the time or node limit interrupts the search.
inline ApcpSolution benders_solve(const Instance& inst, const BendersParams& params = {}) {
  inst.validate();
  return detail::BendersSearch(inst, params).run();
}

/// Every cut in `pool` evaluated against a used-arc set; exposed for tests.
inline Flow pool_value(const Network& net, std::span<const BendersCut> pool,
                       std::span<const std::uint8_t> used) {
  Flow v = kUnreachable;
  for (const BendersCut& c : pool) v = std::min(v, c.value(net, used));
  return v;
}

}  // namespace altpaths
