#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace altpaths;

namespace {

ArcMask all_of(const Network& net) { return ArcMask(net.arc_count(), 1); }

}  // namespace

TEST(MaxFlow, SingleArc) {
  Network net({0, 1}, {{0, 0, 1, 7, 1}});
  const FlowResult r = max_flow(net, all_of(net), 0, 1);
  EXPECT_EQ(r.value, 7);
  EXPECT_EQ(r.min_cut, std::vector<int>{0});
}

TEST(MaxFlow, Diamond) {
  const Network net = testutil::diamond();
  const FlowResult r = max_flow(net, all_of(net), 0, 3);
  EXPECT_EQ(r.value, 15);
  EXPECT_EQ(r.min_cut, (std::vector<int>{0, 1}));
  ArcMask top{1, 0, 1, 0};
  EXPECT_EQ(max_flow(net, top, 0, 3).value, 10);
  EXPECT_EQ(max_flow_value(net, all_of(net), 0, 0, 3), 5);
}

TEST(MaxFlow, Disconnected) {
  Network net({0, 1, 2}, {{0, 1, 2, 4, 1}});
  const FlowResult r = max_flow(net, all_of(net), 0, 2);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.min_cut.empty());
}

TEST(MaxFlow, DualityAndConservationOnRandomSubsets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testutil::random_small(rng, 9, 1);
    const Network& net = inst.network;
    ArcMask allowed(net.arc_count());
    for (auto& b : allowed) b = rng() % 3 != 0;
    const FlowResult r = max_flow(net, allowed, inst.source, inst.dest);
    Flow cut = 0;
    for (int a : r.min_cut) cut += net.arc(a).cap;
    EXPECT_EQ(cut, r.value);
    std::vector<Flow> bal(net.node_count(), 0);
    for (int a = 0; a < net.arc_count(); ++a) {
      EXPECT_GE(r.arc_flow[a], 0);
      EXPECT_LE(r.arc_flow[a], allowed[a] ? net.arc(a).cap : 0);
      bal[net.arc(a).tail] += r.arc_flow[a];
      bal[net.arc(a).head] -= r.arc_flow[a];
    }
    for (int v = 0; v < net.node_count(); ++v) {
      if (v == inst.source) {
        EXPECT_EQ(bal[v], r.value);
      } else if (v == inst.dest) {
        EXPECT_EQ(bal[v], -r.value);
      } else {
        EXPECT_EQ(bal[v], 0);
      }
    }
  }
}

TEST(MinCostFlow, Examples) {
  Network one({0, 1}, {{0, 0, 1, 3, 5}});
  auto r = min_cost_flow(one, 0, 1, 3);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.cost, 15);

  Network two({0, 1}, {{0, 0, 1, 1, 2}, {1, 0, 1, 1, 9}});
  EXPECT_EQ(min_cost_flow(two, 0, 1, 1).cost, 2);
  EXPECT_EQ(min_cost_flow(two, 0, 1, 2).cost, 11);
  const auto short_of = min_cost_flow(two, 0, 1, 3);
  EXPECT_FALSE(short_of.feasible);
  EXPECT_EQ(short_of.value, 2);

  EXPECT_THROW(min_cost_flow(two, 0, 1, 0), std::invalid_argument);
}

TEST(MinCostFlow, MatchesEnumerationWithoutNegativeCycles) {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 25) {
    const int n = std::uniform_int_distribution<int>(3, 5)(rng);
    std::vector<ArcSpec> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && rng() % 2) {
          arcs.push_back({static_cast<ArcId>(arcs.size()), u, v,
                          std::uniform_int_distribution<Flow>(1, 2)(rng),
                          std::uniform_int_distribution<Flow>(1, 6)(rng)});
        }
      }
    }
    if (arcs.size() > 8) continue;
    const Network net = Network::dense(n, arcs);
    const Flow want = std::uniform_int_distribution<Flow>(1, 2)(rng);
    const auto r = min_cost_flow(net, 0, n - 1, want);
    const Flow brute = testutil::brute_min_cost(net, 0, n - 1, want);
    EXPECT_EQ(r.feasible, brute >= 0);
    if (brute >= 0) {
      EXPECT_EQ(r.cost, brute);
      EXPECT_FALSE(has_negative_residual_cycle(net, r.arc_flow));
    }
    ++checked;
  }
}

TEST(ShortestPath, Examples) {
  // direct arc (cost 4) against a two-hop route (3 + 3)
  Network net({0, 1, 2}, {{0, 0, 2, 5, 4}, {1, 0, 1, 5, 3}, {2, 1, 2, 5, 3}});
  EXPECT_EQ(shortest_path(net, 0, 2), Path{0});

  Network cut({0, 1, 2}, {{0, 0, 1, 1, 1}});
  EXPECT_FALSE(shortest_path(cut, 0, 2));

  // Two routes of cost 4: 0-1-3 uses arcs {2, 5}, 0-2-3 uses arcs {3, 4}.
  Network tie({0, 1, 2, 3}, {{2, 0, 1, 1, 2}, {3, 0, 2, 1, 1}, {4, 2, 3, 1, 3}, {5, 1, 3, 1, 2}});
  const auto p = shortest_path(tie, 0, 3);
  ASSERT_TRUE(p);
  std::vector<ArcId> ids;
  for (int a : *p) ids.push_back(tie.arc(a).id);
  EXPECT_EQ(ids, (std::vector<ArcId>{2, 5}));
}

TEST(ShortestPath, MatchesDistances) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testutil::random_small(rng, 10, 1);
    const auto p = shortest_path(inst.network, inst.source, inst.dest);
    ASSERT_TRUE(p);
    EXPECT_EQ(path_cost(inst.network, *p),
              distances_to(inst.network, inst.dest)[inst.source]);
    EXPECT_TRUE(compact_check(inst.network, inst.source, inst.dest, 1, PathSet{{*p}}).empty());
  }
}
