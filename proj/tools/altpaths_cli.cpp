// altpaths: generate networks, solve single instances, run benchmark sweeps.
//
// Exit codes: 0 optimal or feasible, 1 bad flags or I/O error, 2 infeasible
// or refused, 3 time limit reached (incumbent printed when one exists).

#include <cmath>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "altpaths/altpaths.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace altpaths;

namespace {

struct Preset {
  int nodes;
  std::vector<double> densities;
  std::vector<int> ks;
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> p{
      {"config1", {20, {0.4, 0.6}, {3, 6}}},
      {"config2", {40, {0.1}, {3, 6}}},
  };
  return p;
}

std::string network_name(int nodes, double density, std::uint64_t seed) {
  return "n" + std::to_string(nodes) + "-d" + std::to_string(std::lround(density * 100)) + "-s" +
         std::to_string(seed);
}

int cmd_generate(int nodes, double density, std::uint64_t seed, const std::string& preset,
                 std::vector<int> ks, const std::string& out_dir) {
  std::vector<GeneratorConfig> configs;
  if (!preset.empty()) {
    const Preset& p = presets().at(preset);
    for (double d : p.densities) {
      GeneratorConfig cfg;
      cfg.node_count = p.nodes;
      cfg.density = d;
      cfg.seed = seed;
      configs.push_back(cfg);
    }
    if (ks.empty()) ks = p.ks;
  } else {
    GeneratorConfig cfg;
    cfg.node_count = nodes;
    cfg.density = density;
    cfg.seed = seed;
    configs.push_back(cfg);
  }
  if (ks.empty()) ks = {3};
  for (int k : ks) {
    if (k < 1) throw CLI::ValidationError("--k", "values must be >= 1");
  }
  fs::create_directories(out_dir);
  json manifest;
  manifest["networks"] = json::array();
  for (const GeneratorConfig& cfg : configs) {
    cfg.validate();
    const Network net = generate_random(cfg);
    const std::string name = network_name(cfg.node_count, cfg.density, cfg.seed);
    const std::string file = name + ".json";
    save_network(net, (fs::path(out_dir) / file).string());
    manifest["networks"].push_back({{"name", name},
                                    {"file", file},
                                    {"nodes", cfg.node_count},
                                    {"density", cfg.density},
                                    {"seed", cfg.seed},
                                    {"arcs", net.arc_count()},
                                    {"k", ks}});
    std::cerr << "wrote " << (fs::path(out_dir) / file).string() << " (" << net.node_count()
              << " nodes, " << net.arc_count() << " arcs)\n";
  }
  std::ofstream(fs::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
  std::cout << manifest.dump(2) << "\n";
  return 0;
}

json solution_json(const Instance& inst, const MethodResult& r) {
  json doc;
  doc["method"] = r.method;
  doc["status"] = r.status;
  json paths = json::array();
  for (const Path& p : r.pathset.paths) {
    json ids = json::array();
    for (int a : p) ids.push_back(inst.network.arc(a).id);
    paths.push_back(ids);
  }
  doc["paths"] = paths;
  if (r.pathset.paths.empty()) {
    doc["z"] = nullptr;
    doc["cost"] = nullptr;
  } else {
    doc["z"] = r.z;
    doc["cost"] = r.cost;
  }
  if (r.obj_a) {
    doc["obj_a"] = *r.obj_a;
    doc["obj_b"] = *r.obj_b;
  }
  if (!r.message.empty()) doc["message"] = r.message;
  doc["stats"] = {{"nodes", r.stats.nodes},
                  {"cuts", r.stats.cuts},
                  {"leaves", r.stats.leaves},
                  {"wall_s", r.stats.wall_s}};
  return doc;
}

int cmd_solve(const std::string& instance_path, const std::string& method, int k,
              const MethodParams& params, const std::string& out_path) {
  Instance inst = load_instance(instance_path);
  if (k > 0) inst.k = k;
  const MethodResult r = run_method(inst, method, params);
  const std::string text = solution_json(inst, r).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  if (r.status == "refused") std::cerr << "oracle refused: " << r.message << "\n";
  if (r.status == "infeasible") std::cerr << "no path from source to destination\n";
  if (r.status == "time-limit-incumbent") std::cerr << "time limit reached\n";
  if (r.status == "optimal") return 0;
  if (r.status == "time-limit-incumbent") return 3;
  return 2;
}

struct BenchFlags {
  std::string dir;
  std::string out = "bench-out";
  std::vector<std::string> methods{"benders", "rapcp"};
  std::vector<int> ks;
  double time_limit = 200.0;
  long long node_limit = 0;
  int jobs = 1;
  std::size_t stride = 1;
  std::size_t max_instances = 0;
  int oracle_max_paths = 60;
};

int cmd_bench(const BenchFlags& f) {
  const json manifest = json::parse(detail::read_file((fs::path(f.dir) / "manifest.json").string()));
  fs::create_directories(f.out);
  const std::string results_path = (fs::path(f.out) / "results.csv").string();

  SweepOptions opt;
  opt.methods = f.methods;
  opt.params.time_limit_s = f.time_limit;
  opt.params.node_limit = f.node_limit;
  opt.params.oracle.max_paths = f.oracle_max_paths;
  opt.jobs = f.jobs;
  opt.results_path = results_path;
  opt.stride = f.stride;
  opt.max_instances = f.max_instances;
  opt.log = [](const std::string& msg) { std::cerr << msg << "\n"; };

  std::vector<SweepRecord> all;
  for (const json& entry : manifest.at("networks")) {
    const std::string name = entry.at("name").get<std::string>();
    const Network net = load_network((fs::path(f.dir) / entry.at("file").get<std::string>()).string());
    std::vector<int> ks = f.ks.empty() ? entry.at("k").get<std::vector<int>>() : f.ks;
    for (int k : ks) {
      opt.id_prefix = name + "-k" + std::to_string(k) + "-";
      const auto cases = enumerate_instances(net, k);
      std::cerr << name << " k=" << k << ": " << cases.size() << " instances enumerated\n";
      auto records = sweep(cases, opt);
      all.insert(all.end(), std::make_move_iterator(records.begin()),
                 std::make_move_iterator(records.end()));
    }
  }

  const int horizon = std::max(1, static_cast<int>(std::ceil(f.time_limit)));
  std::ofstream(fs::path(f.out) / "profile.csv")
      << performance_profile(profile_entries(all, f.methods), horizon);

  const bool both = std::find(f.methods.begin(), f.methods.end(), "benders") != f.methods.end() &&
                    std::find(f.methods.begin(), f.methods.end(), "rapcp") != f.methods.end();
  if (!both) {
    std::cerr << "gap table skipped: needs both benders and rapcp\n";
  } else {
    auto [relaxed, exact] = aligned_reports(all);
    if (relaxed.empty()) {
      std::cerr << "gap table skipped: no instance solved optimally by both methods\n";
    } else {
      std::ofstream(fs::path(f.out) / "gap.csv") << gap_csv(gap_table(relaxed, exact));
    }
    std::size_t checked = 0;
    const auto findings = bound_audit(all, &checked);
    std::ofstream audit(fs::path(f.out) / "bound_audit.csv");
    audit << "instance_id,obj_ab,z\n";
    for (const BoundFinding& p : findings) {
      audit << p.instance_id << "," << p.obj_ab << "," << p.z << "\n";
    }
    std::cerr << "obj_a*obj_b <= z audit: " << findings.size() << " violations over " << checked
              << " instances solved by both\n";
  }
  std::cerr << "results: " << results_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternative k-path computation under single-arc failures"};
  app.require_subcommand(1);

  int nodes = 20;
  double density = 0.4;
  std::uint64_t seed = 1;
  std::string preset;
  std::vector<int> gen_ks;
  std::string gen_out = ".";
  auto* gen = app.add_subcommand("generate", "Write random network JSON files and a manifest");
  gen->add_option("--nodes", nodes, "Node count")->check(CLI::Range(2, 100000));
  gen->add_option("--density", density, "Arc density in (0, 1]")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--preset", preset, "Named configuration")
      ->check(CLI::IsMember({"config1", "config2"}))
      ->excludes("--nodes")
      ->excludes("--density");
  gen->add_option("--k", gen_ks, "Path counts recorded in the manifest");
  gen->add_option("--out", gen_out, "Output directory");

  std::string instance_path;
  std::string method = "benders";
  int solve_k = 0;
  MethodParams params;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Solve one instance JSON");
  solve->add_option("--instance", instance_path, "Instance JSON file")->required();
  solve->add_option("--method", method, "Solution method")
      ->check(CLI::IsMember(method_names()));
  solve->add_option("--k", solve_k, "Override the instance's path count")->check(CLI::PositiveNumber);
  solve->add_option("--time-limit", params.time_limit_s, "Seconds")->check(CLI::PositiveNumber);
  solve->add_option("--node-limit", params.node_limit, "Search nodes, 0 for none")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--oracle-max-paths", params.oracle.max_paths, "Path cap for the oracle")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", solve_out, "Write the solution here instead of stdout");

  BenchFlags bf;
  auto* bench = app.add_subcommand("bench", "Sweep every instance of a generated set");
  bench->add_option("--dir", bf.dir, "Directory holding manifest.json")->required();
  bench->add_option("--methods", bf.methods, "Comma-separated methods")
      ->delimiter(',')
      ->check(CLI::IsMember(method_names()));
  bench->add_option("--time-limit", bf.time_limit, "Seconds per solve")->check(CLI::PositiveNumber);
  bench->add_option("--node-limit", bf.node_limit, "Search nodes per solve, 0 for none")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--jobs", bf.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--out", bf.out, "Output directory");
  bench->add_option("--k", bf.ks, "Restrict to these path counts");
  bench->add_option("--stride", bf.stride, "Keep every n-th instance")->check(CLI::PositiveNumber);
  bench->add_option("--max-instances", bf.max_instances, "Per network and k, 0 for all");
  bench->add_option("--oracle-max-paths", bf.oracle_max_paths, "Path cap for the oracle")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_generate(nodes, density, seed, preset, gen_ks, gen_out);
    if (solve->parsed()) return cmd_solve(instance_path, method, solve_k, params, solve_out);
    if (bench->parsed()) return cmd_bench(bf);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
