#pragma once

// Per-solution indicators, the RAPCP-vs-Benders gap table and performance
// profiles.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "altpaths/apcp.hpp"

namespace altpaths {

struct KpiReport {
  Flow cost = 0;
  int min_surviving_paths = 0;
  Flow min_max_flow = 0;
  int path_disjointness = 0;
  double solve_time_s = 0.0;
  std::string status;
};

/// Largest subset of pairwise arc-disjoint paths, by subset enumeration.
inline int max_disjoint_subset(const std::vector<Path>& paths) {
  const int k = static_cast<int>(paths.size());
  if (k > 20) throw std::invalid_argument("max_disjoint_subset: too many paths");
  std::vector<std::uint32_t> clash(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && !arc_disjoint(paths[i], paths[j])) clash[i] |= 1u << j;
    }
  }
  int best = 0;
  for (std::uint32_t set = 1; set < (1u << k); ++set) {
    const int size = std::popcount(set);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if ((set >> i & 1u) && (clash[i] & set)) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

/// Failing an arc no path uses leaves all k paths alive, so the minimum is
/// taken over the used arcs only.
inline int min_surviving_paths(const Network& net, const PathSet& ps) {
  const int k = static_cast<int>(ps.size());
  std::vector<int> hits(net.arc_count(), 0);
  for (const Path& p : ps.paths) {
    std::vector<int> arcs = p;
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (int a : arcs) ++hits[a];
  }
  int out = k;
  for (int h : hits) {
    if (h > 0) out = std::min(out, k - h);
  }
  return out;
}

inline KpiReport kpis(const Instance& inst, const PathSet& ps, double solve_time_s,
                      std::string status = "optimal") {
  const Evaluation ev = evaluate_solution(inst, ps);
  KpiReport r;
  r.cost = ev.cost;
  r.min_max_flow = ev.z;
  r.min_surviving_paths = min_surviving_paths(inst.network, ps);
  r.path_disjointness = max_disjoint_subset(ps.paths);
  r.solve_time_s = solve_time_s;
  r.status = std::move(status);
  return r;
}

struct GapRow {
  std::string kpi;
  double avg_rapcp = 0.0;
  double avg_benders = 0.0;
  double gap_pct = 0.0;  // NaN when the RAPCP average is zero and the other is not
};

/// (avg RAPCP - avg Benders) / avg RAPCP * 100 per KPI, over aligned lists.
inline std::vector<GapRow> gap_table(const std::vector<KpiReport>& rapcp,
                                     const std::vector<KpiReport>& benders) {
  if (rapcp.size() != benders.size()) {
    throw std::invalid_argument("gap_table: report lists are not aligned");
  }
  if (rapcp.empty()) {
    throw std::invalid_argument("gap_table: no instance solved by both methods");
  }
  using Getter = double (*)(const KpiReport&);
  const std::pair<const char*, Getter> rows[] = {
      {"Cost", [](const KpiReport& r) { return static_cast<double>(r.cost); }},
      {"Min Surviving Paths",
       [](const KpiReport& r) { return static_cast<double>(r.min_surviving_paths); }},
      {"Min Max-Flow", [](const KpiReport& r) { return static_cast<double>(r.min_max_flow); }},
      {"Paths disjointness",
       [](const KpiReport& r) { return static_cast<double>(r.path_disjointness); }},
  };
  std::vector<GapRow> out;
  const double n = static_cast<double>(rapcp.size());
  for (const auto& [name, get] : rows) {
    GapRow row;
    row.kpi = name;
    for (std::size_t i = 0; i < rapcp.size(); ++i) {
      row.avg_rapcp += get(rapcp[i]);
      row.avg_benders += get(benders[i]);
    }
    row.avg_rapcp /= n;
    row.avg_benders /= n;
    if (row.avg_rapcp != 0.0) {
      row.gap_pct = (row.avg_rapcp - row.avg_benders) / row.avg_rapcp * 100.0;
    } else {
      row.gap_pct = row.avg_benders == 0.0 ? 0.0 : std::nan("");
    }
    out.push_back(row);
  }
  return out;
}

inline std::string format_fixed(double v, int digits) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0.00" || s == "-0.0000") s.erase(0, 1);
  return s;
}

inline std::string gap_csv(const std::vector<GapRow>& rows) {
  std::string out = "kpi,avg_rapcp,avg_benders,gap_pct\n";
  for (const GapRow& r : rows) {
    out += r.kpi + "," + format_fixed(r.avg_rapcp, 4) + "," + format_fixed(r.avg_benders, 4) +
           "," + format_fixed(r.gap_pct, 2) + "\n";
  }
  return out;
}

struct ProfileEntry {
  std::string instance_id;
  double time_s = 0.0;
  bool solved = false;
};

/// Fraction of each method's instances solved within t, for t = 0, 1, ...,
/// horizon seconds. Methods keep the order given.
inline std::string performance_profile(
    const std::vector<std::pair<std::string, std::vector<ProfileEntry>>>& methods,
    int horizon_s) {
  if (horizon_s <= 0) throw std::invalid_argument("performance_profile: horizon must be > 0");
  std::string out = "t_s";
  for (const auto& [name, entries] : methods) out += ",frac_" + name;
  out += "\n";
  for (int t = 0; t <= horizon_s; ++t) {
    out += std::to_string(t);
    for (const auto& [name, entries] : methods) {
      int hit = 0;
      for (const ProfileEntry& e : entries) {
        if (e.solved && e.time_s <= t) ++hit;
      }
      const double frac = entries.empty() ? 0.0 : static_cast<double>(hit) / entries.size();
      out += "," + format_fixed(frac, 4);
    }
    out += "\n";
  }
  return out;
}

}  // namespace altpaths
