#pragma once

// One entry point for every solution method, by name.

#include <optional>
#include <string>
#include <vector>

#include "altpaths/benders.hpp"
#include "altpaths/oracle.hpp"
#include "altpaths/rapcp.hpp"

namespace altpaths {

inline const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names{"benders", "rapcp", "rapcpa2", "oracle"};
  return names;
}

inline bool is_method(const std::string& name) {
  const auto& all = method_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

struct MethodParams {
  double time_limit_s = 200.0;
  long long node_limit = 0;
  OracleLimits oracle;
};

struct MethodResult {
  std::string method;
  std::string status;  // optimal | time-limit-incumbent | infeasible | refused
  std::string message;  // reason for a refusal
  PathSet pathset;     // empty unless a solution exists
  Flow z = 0;
  Flow cost = 0;
  std::optional<int> obj_a;
  std::optional<Flow> obj_b;
  SolveStats stats;
};

inline MethodResult from_apcp(std::string method, const ApcpSolution& sol) {
  MethodResult r;
  r.method = std::move(method);
  r.status = to_string(sol.status);
  r.stats = sol.stats;
  if (sol.status != SolveStatus::kInfeasible) {
    r.pathset = sol.pathset;
    r.z = sol.z;
    r.cost = sol.cost;
  }
  return r;
}

inline MethodResult from_rapcp(std::string method, const Instance& inst, const RapcpSolution& sol,
                               double wall_s) {
  MethodResult r;
  r.method = std::move(method);
  r.obj_a = sol.obj_a;
  r.obj_b = sol.obj_b;
  r.stats.wall_s = wall_s;
  if (sol.completed.paths.empty()) {
    r.status = "infeasible";
    return r;
  }
  r.status = "optimal";
  r.pathset = sol.completed;
  const Evaluation ev = evaluate_solution(inst, sol.completed);
  r.z = ev.z;
  r.cost = ev.cost;
  return r;
}

/// Throws std::invalid_argument on an unknown method name.
inline MethodResult run_method(const Instance& inst, const std::string& method,
                               const MethodParams& params = {}) {
  inst.validate();
  if (method == "benders") {
    BendersParams bp;
    bp.time_limit_s = params.time_limit_s;
    bp.node_limit = params.node_limit;
    return from_apcp(method, benders_solve(inst, bp));
  }
  if (method == "oracle") {
    try {
      return from_apcp(method, exhaustive_oracle(inst, params.oracle));
    } catch (const OracleLimitExceeded& e) {
      MethodResult r;
      r.method = method;
      r.status = "refused";
      r.message = e.what();
      return r;
    }
  }
  if (method == "rapcp") {
    Stopwatch clock;
    RapcpSolution sol = rapcp(inst.network, inst.source, inst.dest, inst.k);
    return from_rapcp(method, inst, sol, clock.seconds());
  }
  if (method == "rapcpa2") {
    Stopwatch clock;
    RapcpSolution sol =
        summarize(inst.network, rapcpa2(inst.network, inst.source, inst.dest, inst.k), inst.k);
    sol.rounds = 1;
    return from_rapcp(method, inst, sol, clock.seconds());
  }
  throw std::invalid_argument("unknown method '" + method + "'");
}

}  // namespace altpaths
