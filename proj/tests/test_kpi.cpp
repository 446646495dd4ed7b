#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace altpaths;

namespace {

// s=0, a=1, b=2, c=3, d=4, t=5
Instance six_node() {
  Network net({0, 1, 2, 3, 4, 5}, {{0, 0, 1, 8, 1}, {1, 1, 5, 4, 1}, {2, 1, 2, 4, 1},
                                   {3, 2, 5, 4, 1}, {4, 0, 3, 6, 1}, {5, 3, 4, 6, 1},
                                   {6, 4, 5, 6, 1}});
  return Instance{net, 0, 5, 3, std::nullopt};
}

KpiReport report(Flow cost, int surv, Flow mmf, int disj) {
  KpiReport r;
  r.cost = cost;
  r.min_surviving_paths = surv;
  r.min_max_flow = mmf;
  r.path_disjointness = disj;
  return r;
}

std::vector<InstanceCase> small_cases(int k, std::uint64_t seed = 4) {
  GeneratorConfig cfg;
  cfg.node_count = 5;
  cfg.density = 0.6;
  cfg.seed = seed;
  return enumerate_instances(generate_random(cfg), k);
}

std::string strip_time(const std::string& csv) {
  std::string out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    auto cells = altpaths::detail::split_csv(line);
    cells[3].clear();
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
    out += "\n";
  }
  return out;
}

}  // namespace

TEST(Kpis, IdenticalPaths) {
  const Instance inst = six_node();
  const KpiReport r = kpis(inst, PathSet{{{0, 1}, {0, 1}, {0, 1}}}, 0.5);
  EXPECT_EQ(r.min_surviving_paths, 0);
  EXPECT_EQ(r.path_disjointness, 1);
  EXPECT_EQ(r.min_max_flow, 0);
  EXPECT_EQ(r.cost, 6);
  EXPECT_DOUBLE_EQ(r.solve_time_s, 0.5);
}

TEST(Kpis, TwoShareOneArc) {
  const Instance inst = six_node();
  const PathSet ps{{{0, 1}, {0, 2, 3}, {4, 5, 6}}};
  const KpiReport r = kpis(inst, ps, 0.0);
  EXPECT_EQ(r.min_surviving_paths, 1);
  EXPECT_EQ(r.path_disjointness, 2);
  EXPECT_EQ(r.cost, 2 + 3 + 3);
  EXPECT_EQ(r.min_max_flow, evaluate_solution(inst, ps).z);
}

TEST(Kpis, FullyDisjoint) {
  Network par({0, 1}, {{0, 0, 1, 4, 1}, {1, 0, 1, 5, 1}, {2, 0, 1, 6, 1}, {3, 0, 1, 7, 1}});
  const Instance inst{par, 0, 1, 4, std::nullopt};
  const KpiReport r = kpis(inst, PathSet{{{0}, {1}, {2}, {3}}}, 0.0);
  EXPECT_EQ(r.min_surviving_paths, 3);
  EXPECT_EQ(r.path_disjointness, 4);
  EXPECT_EQ(r.min_max_flow, 15);
  EXPECT_THROW(kpis(inst, PathSet{{{0}}}, 0.0), InvalidPathSet);
}

TEST(Kpis, RelaxationInvariants) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = testutil::random_small(rng, 8, 2 + trial % 3);
    const RapcpSolution r = rapcp(inst.network, inst.source, inst.dest, inst.k);
    const KpiReport k = kpis(inst, r.completed, 0.0);
    EXPECT_EQ(k.path_disjointness, r.obj_a);
    EXPECT_GE(k.min_surviving_paths, r.obj_a - 1);
    EXPECT_LE(k.min_surviving_paths, inst.k - 1);
  }
}

TEST(GapTable, Examples) {
  const std::vector<KpiReport> same{report(10, 1, 7, 2), report(20, 2, 9, 3)};
  for (const GapRow& row : gap_table(same, same)) EXPECT_EQ(row.gap_pct, 0.0);

  // Integer KPIs: a hundred instances reach averages of 101.65 and 124.69.
  std::vector<KpiReport> relaxed, exact;
  for (int i = 0; i < 100; ++i) {
    relaxed.push_back(report(100, 1, 100, 2));
    exact.push_back(report(i < 65 ? 102 : 101, 1, i < 69 ? 125 : 124, 2));
  }
  const auto gaps = gap_table(relaxed, exact);
  ASSERT_EQ(gaps.size(), 4u);
  EXPECT_EQ(gaps[0].kpi, "Cost");
  EXPECT_NEAR(gaps[0].gap_pct, -1.65, 1e-9);
  EXPECT_EQ(gaps[1].kpi, "Min Surviving Paths");
  EXPECT_EQ(gaps[2].kpi, "Min Max-Flow");
  EXPECT_NEAR(gaps[2].gap_pct, -24.69, 1e-9);
  EXPECT_EQ(gaps[3].kpi, "Paths disjointness");
  const std::string csv = gap_csv(gaps);
  EXPECT_NE(csv.find("Cost,100.0000,101.6500,-1.65"), std::string::npos) << csv;
  EXPECT_NE(csv.find("Min Max-Flow,100.0000,124.6900,-24.69"), std::string::npos) << csv;

  EXPECT_THROW(gap_table({}, {}), std::invalid_argument);
  EXPECT_THROW(gap_table(same, {report(1, 1, 1, 1)}), std::invalid_argument);
}

TEST(Profile, Examples) {
  const std::vector<ProfileEntry> instant{{"a", 0.0, true}, {"b", 0.0, true}};
  const std::vector<ProfileEntry> never{{"a", 3.0, false}, {"b", 200.0, false}};
  const std::vector<ProfileEntry> half{{"a", 10.0, true}, {"b", 200.0, false}};
  const std::string csv =
      performance_profile({{"fast", instant}, {"none", never}, {"half", half}}, 12);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t_s,frac_fast,frac_none,frac_half");
  std::getline(in, line);
  EXPECT_EQ(line, "0,1.0000,0.0000,0.0000");
  for (int t = 1; t <= 12; ++t) {
    std::getline(in, line);
    EXPECT_EQ(line, std::to_string(t) + ",1.0000,0.0000," + (t >= 10 ? "0.5000" : "0.0000"));
  }
  EXPECT_FALSE(std::getline(in, line));
  EXPECT_THROW(performance_profile({}, 0), std::invalid_argument);
}

TEST(Sweep, TwoNodeNetwork) {
  GeneratorConfig cfg;
  cfg.node_count = 2;
  cfg.density = 1.0;
  SweepOptions opt;
  opt.methods = {"rapcp"};
  const auto records = sweep(enumerate_instances(generate_random(cfg), 1), opt);
  ASSERT_EQ(records.size(), 2u);
  for (const SweepRecord& r : records) {
    EXPECT_EQ(r.status, "infeasible");
    EXPECT_FALSE(r.kpi);
  }
}

TEST(Sweep, AllMethodsAgreeAndAuditRuns) {
  const auto cases = small_cases(2);
  SweepOptions opt;
  opt.methods = {"benders", "rapcp", "rapcpa2", "oracle"};
  opt.stride = 3;
  const auto records = sweep(cases, opt);
  ASSERT_EQ(records.size(), 4 * ((cases.size() + 2) / 3));
  std::map<std::string, std::map<std::string, const SweepRecord*>> by_id;
  for (const SweepRecord& r : records) by_id[r.instance_id][r.method] = &r;
  for (const auto& [id, m] : by_id) {
    const SweepRecord& b = *m.at("benders");
    const SweepRecord& o = *m.at("oracle");
    const SweepRecord& r = *m.at("rapcp");
    if (b.status == "infeasible") continue;
    ASSERT_EQ(b.status, "optimal");
    if (o.status == "optimal") {
      EXPECT_EQ(b.z, o.z);
      EXPECT_EQ(b.kpi->cost, o.kpi->cost);
    }
    EXPECT_GE(*b.z, *r.z);
    EXPECT_EQ(b.kpi->min_max_flow, *b.z);
  }
  std::size_t checked = 0;
  for (const BoundFinding& f : bound_audit(records, &checked)) EXPECT_GT(f.obj_ab, f.z);
  EXPECT_GT(checked, 0u);
}

TEST(Sweep, ResumesAndIsDeterministic) {
  const auto cases = small_cases(3, 6);
  const std::string dir = testutil::temp_dir("sweep");
  SweepOptions opt;
  opt.methods = {"benders", "rapcp"};
  opt.results_path = dir + "/a.csv";
  opt.max_instances = 6;
  const auto first = sweep(cases, opt);
  const std::string once = testutil::slurp(opt.results_path);
  const auto again = sweep(cases, opt);  // everything already present
  EXPECT_EQ(testutil::slurp(opt.results_path), once);
  ASSERT_EQ(again.size(), first.size());
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(to_csv_row(again[i]), to_csv_row(first[i]));

  opt.max_instances = 9;  // three new instances appended
  const auto more = sweep(cases, opt);
  EXPECT_EQ(more.size(), 18u);

  SweepOptions par = opt;
  par.results_path = dir + "/b.csv";
  par.jobs = 3;
  sweep(cases, par);
  EXPECT_EQ(strip_time(testutil::slurp(opt.results_path)),
            strip_time(testutil::slurp(par.results_path)));
  std::filesystem::remove_all(dir);
}

TEST(Sweep, CsvRoundTripAndErrors) {
  SweepRecord r;
  r.instance_id = "x-a1-d2";
  r.method = "rapcp";
  r.status = "optimal";
  r.time_s = 0.25;
  r.kpi = report(12, 1, 7, 2);
  r.z = 7;
  r.obj_a = 2;
  r.obj_b = 4;
  EXPECT_EQ(to_csv_row(r), "x-a1-d2,rapcp,optimal,0.250,12,1,7,2,7,2,4");
  EXPECT_EQ(to_csv_row(from_csv_row(to_csv_row(r))), to_csv_row(r));
  SweepRecord empty;
  empty.instance_id = "y";
  empty.method = "oracle";
  empty.status = "refused";
  EXPECT_EQ(to_csv_row(empty), "y,oracle,refused,0.000,,,,,,,");
  EXPECT_EQ(to_csv_row(from_csv_row(to_csv_row(empty))), to_csv_row(empty));
  EXPECT_THROW(from_csv_row("a,b"), std::runtime_error);

  SweepOptions bad;
  bad.methods = {"simplex"};
  EXPECT_THROW(sweep({}, bad), std::invalid_argument);
}
