#pragma once

// Instance-sweep benchmark runner with a resumable results CSV.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "altpaths/generator.hpp"
#include "altpaths/kpi.hpp"
#include "altpaths/solve.hpp"

namespace altpaths {

inline constexpr const char* kResultsHeader =
    "instance_id,method,status,time_s,cost,min_surviving_paths,min_max_flow,"
    "path_disjointness,z,obj_a,obj_b";

struct SweepRecord {
  std::string instance_id;
  std::string method;
  std::string status;
  double time_s = 0.0;
  std::optional<KpiReport> kpi;  // present when a pathset was returned
  std::optional<Flow> z;
  std::optional<int> obj_a;
  std::optional<Flow> obj_b;

  bool solved() const { return status == "optimal"; }
};

struct SweepOptions {
  std::vector<std::string> methods{"benders", "rapcp"};
  MethodParams params;
  int jobs = 1;
  std::string results_path;  // empty: keep results in memory only
  std::string id_prefix;     // prepended to every instance id
  std::size_t stride = 1;    // keep every stride-th enumerated instance
  std::size_t max_instances = 0;  // 0: no cap
  std::function<void(const std::string&)> log;  // diagnostics, may be empty
};

namespace detail {

template <class T>
std::string opt_field(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace detail

inline std::string to_csv_row(const SweepRecord& r) {
  using detail::opt_field;
  std::string row = r.instance_id + "," + r.method + "," + r.status + "," +
                    format_fixed(r.time_s, 3) + ",";
  if (r.kpi) {
    row += std::to_string(r.kpi->cost) + "," + std::to_string(r.kpi->min_surviving_paths) + "," +
           std::to_string(r.kpi->min_max_flow) + "," + std::to_string(r.kpi->path_disjointness);
  } else {
    row += ",,,";
  }
  row += "," + opt_field(r.z) + "," + opt_field(r.obj_a) + "," + opt_field(r.obj_b);
  return row;
}

inline SweepRecord from_csv_row(const std::string& line) {
  const auto cells = detail::split_csv(line);
  if (cells.size() != 11) throw std::runtime_error("results row has " +
                                                   std::to_string(cells.size()) +
                                                   " fields, expected 11: " + line);
  SweepRecord r;
  r.instance_id = cells[0];
  r.method = cells[1];
  r.status = cells[2];
  r.time_s = std::stod(cells[3]);
  if (!cells[4].empty()) {
    KpiReport k;
    k.cost = std::stoll(cells[4]);
    k.min_surviving_paths = std::stoi(cells[5]);
    k.min_max_flow = std::stoll(cells[6]);
    k.path_disjointness = std::stoi(cells[7]);
    k.solve_time_s = r.time_s;
    k.status = r.status;
    r.kpi = k;
  }
  if (!cells[8].empty()) r.z = std::stoll(cells[8]);
  if (!cells[9].empty()) r.obj_a = std::stoi(cells[9]);
  if (!cells[10].empty()) r.obj_b = std::stoll(cells[10]);
  return r;
}

/// Rows of an existing results file; a missing file yields none.
inline std::vector<SweepRecord> read_results(const std::string& path) {
  std::vector<SweepRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      if (line != kResultsHeader) throw std::runtime_error(path + ": unexpected results header");
      header = false;
      continue;
    }
    out.push_back(from_csv_row(line));
  }
  return out;
}

inline SweepRecord run_case(const InstanceCase& c, const std::string& id,
                            const std::string& method, const MethodParams& params) {
  SweepRecord rec;
  rec.instance_id = id;
  rec.method = method;
  Stopwatch clock;
  try {
    const MethodResult r = run_method(c.instance, method, params);
    rec.time_s = clock.seconds();
    rec.status = r.status;
    rec.obj_a = r.obj_a;
    rec.obj_b = r.obj_b;
    if (!r.pathset.paths.empty()) {
      rec.kpi = kpis(c.instance, r.pathset, rec.time_s, r.status);
      rec.z = r.z;
    }
  } catch (const std::exception&) {
    rec.time_s = clock.seconds();
    rec.status = "error";
  }
  return rec;
}

/// Runs every selected instance through every method. Rows already present
/// in the results file are reused, not recomputed. New rows are appended in
/// (instance, method) order even with several workers, and each row is
/// flushed as soon as all rows before it are done.
inline std::vector<SweepRecord> sweep(const std::vector<InstanceCase>& cases,
                                      const SweepOptions& opt) {
  for (const std::string& m : opt.methods) {
    if (!is_method(m)) throw std::invalid_argument("unknown method '" + m + "'");
  }
  if (opt.stride < 1) throw std::invalid_argument("stride must be >= 1");
  std::vector<const InstanceCase*> selected;
  for (std::size_t i = 0; i < cases.size(); i += opt.stride) {
    if (opt.max_instances && selected.size() >= opt.max_instances) break;
    selected.push_back(&cases[i]);
  }

  std::map<std::pair<std::string, std::string>, SweepRecord> done;
  bool file_exists = false;
  if (!opt.results_path.empty()) {
    file_exists = std::filesystem::exists(opt.results_path);
    for (SweepRecord& r : read_results(opt.results_path)) {
      auto key = std::make_pair(r.instance_id, r.method);
      done.emplace(std::move(key), std::move(r));
    }
  }

  struct Task {
    const InstanceCase* c;
    std::string id;
    std::string method;
  };
  std::vector<Task> tasks;
  std::vector<std::optional<SweepRecord>> slots;
  for (const InstanceCase* c : selected) {
    for (const std::string& m : opt.methods) {
      std::string id = opt.id_prefix + c->id;
      auto it = done.find({id, m});
      if (it != done.end()) {
        slots.emplace_back(it->second);
      } else {
        slots.emplace_back();
        tasks.push_back({c, std::move(id), m});
      }
    }
  }
  if (opt.log && !done.empty()) {
    opt.log("resuming: " + std::to_string(slots.size() - tasks.size()) + " of " +
            std::to_string(slots.size()) + " rows already present");
  }

  std::ofstream out;
  if (!opt.results_path.empty()) {
    out.open(opt.results_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot write " + opt.results_path);
    if (!file_exists || std::filesystem::file_size(opt.results_path) == 0) {
      out << kResultsHeader << "\n" << std::flush;
    }
  }

  // Slot index of every task, in order.
  std::vector<std::size_t> task_slot;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) task_slot.push_back(i);
  }
  std::vector<std::uint8_t> finished(tasks.size(), 0);
  std::size_t next_to_write = 0;
  std::mutex mu;
  std::atomic<std::size_t> next_task{0};

  auto worker = [&]() {
    while (true) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size()) return;
      SweepRecord rec = run_case(*tasks[t].c, tasks[t].id, tasks[t].method, opt.params);
      std::lock_guard lock(mu);
      if (opt.log && rec.status == "error") {
        opt.log(rec.instance_id + " " + rec.method + ": solver error");
      }
      slots[task_slot[t]] = std::move(rec);
      finished[t] = 1;
      while (next_to_write < tasks.size() && finished[next_to_write]) {
        if (out.is_open()) out << to_csv_row(*slots[task_slot[next_to_write]]) << "\n";
        ++next_to_write;
      }
      if (out.is_open()) out.flush();
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  std::vector<SweepRecord> records;
  for (auto& s : slots) records.push_back(std::move(*s));
  return records;
}

struct BoundFinding {
  std::string instance_id;
  Flow obj_ab = 0;
  Flow z = 0;
};

/// obj_a * obj_b of the relaxation against the exact z, on every instance
/// where both benders and rapcp finished optimally. Returns the violations.
inline std::vector<BoundFinding> bound_audit(const std::vector<SweepRecord>& records,
                                             std::size_t* checked = nullptr) {
  std::map<std::string, const SweepRecord*> exact, relaxed;
  std::vector<std::string> order;
  for (const SweepRecord& r : records) {
    if (!r.solved()) continue;
    if (r.method == "benders") {
      exact[r.instance_id] = &r;
      order.push_back(r.instance_id);
    } else if (r.method == "rapcp") {
      relaxed[r.instance_id] = &r;
    }
  }
  std::vector<BoundFinding> out;
  std::size_t n = 0;
  for (const std::string& id : order) {
    auto it = relaxed.find(id);
    if (it == relaxed.end()) continue;
    ++n;
    const Flow obj_ab = static_cast<Flow>(*it->second->obj_a) * *it->second->obj_b;
    const Flow z = *exact[id]->z;
    if (obj_ab > z) out.push_back({id, obj_ab, z});
  }
  if (checked) *checked = n;
  return out;
}

/// KPI lists of the instances solved optimally by both methods, aligned.
inline std::pair<std::vector<KpiReport>, std::vector<KpiReport>> aligned_reports(
    const std::vector<SweepRecord>& records, const std::string& relaxed_method = "rapcp",
    const std::string& exact_method = "benders") {
  std::map<std::string, const SweepRecord*> relaxed;
  for (const SweepRecord& r : records) {
    if (r.method == relaxed_method && r.solved() && r.kpi) relaxed[r.instance_id] = &r;
  }
  std::pair<std::vector<KpiReport>, std::vector<KpiReport>> out;
  for (const SweepRecord& r : records) {
    if (r.method != exact_method || !r.solved() || !r.kpi) continue;
    auto it = relaxed.find(r.instance_id);
    if (it == relaxed.end()) continue;
    out.first.push_back(*it->second->kpi);
    out.second.push_back(*r.kpi);
  }
  return out;
}

/// Profile input per method, in the order the methods are listed.
inline std::vector<std::pair<std::string, std::vector<ProfileEntry>>> profile_entries(
    const std::vector<SweepRecord>& records, const std::vector<std::string>& methods) {
  std::vector<std::pair<std::string, std::vector<ProfileEntry>>> out;
  for (const std::string& m : methods) {
    std::vector<ProfileEntry> entries;
    for (const SweepRecord& r : records) {
      if (r.method == m) entries.push_back({r.instance_id, r.time_s, r.solved()});
    }
    out.emplace_back(m, std::move(entries));
  }
  return out;
}

}  // namespace altpaths
