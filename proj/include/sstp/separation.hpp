#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sstp/formulations.hpp"
#include "sstp/instance.hpp"
#include "sstp/lp.hpp"

namespace sstp::sep {

// A cut is violated when its row is short of the rhs by more than this.
inline constexpr double kViolationTol = 1e-6;

struct Cut {
    lp::Model::Row row;
    form::CutFamily family{};
    int scenario = -1;          // -1 for first-stage tree cuts
    int target = -1;            // sink terminal / high-indegree vertex
    std::vector<int> cut_set;   // sink-side vertex set (contains target)
};

// Exact separation, one min-cut per (scenario, target) — resp. per vertex for
// tree cuts — and at most one emitted cut each per call. The cut side is the
// sink side (complement of the residual-reachable set).
std::vector<Cut> separate_undirected(const form::BuiltModel& model,
                                     const StochasticInstance& inst,
                                     const std::vector<double>& x);
std::vector<Cut> separate_semi_joint(const form::BuiltModel& model,
                                     const StochasticInstance& inst,
                                     const std::vector<double>& x);
std::vector<Cut> separate_directed(const form::BuiltModel& model,
                                   const StochasticInstance& inst,
                                   const std::vector<double>& x);
std::vector<Cut> separate_first_stage_tree(const form::BuiltModel& model,
                                           const StochasticInstance& inst,
                                           const std::vector<double>& x);

// Dispatches on model.families, preserving their order.
std::vector<Cut> separate_all(const form::BuiltModel& model,
                              const StochasticInstance& inst,
                              const std::vector<double>& x);

// Canonical-fingerprint row dedup (coefficients sorted by column).
class CutPool {
  public:
    bool insert(const lp::Model::Row& row);  // false when already present
    void seed(const lp::Model& m);
    std::size_t size() const { return seen_.size(); }

  private:
    std::set<std::string> seen_;
};

// Per-solve separation state: pool-filtered cut oracle plus counters. The
// pool is seeded with the model's current rows, so rows already present are
// never re-delivered. Holds references; keep model/instance alive.
class Engine {
  public:
    Engine(const form::BuiltModel& model, const StochasticInstance& inst);
    std::vector<lp::Model::Row> fresh_cuts(const std::vector<double>& x);
    lp::CutOracle oracle();
    const std::map<form::CutFamily, long long>& counts() const { return counts_; }
    int rounds() const { return rounds_; }

  private:
    const form::BuiltModel& model_;
    const StochasticInstance& inst_;
    CutPool pool_;
    std::map<form::CutFamily, long long> counts_;
    int rounds_ = 0;
};

struct LoopResult {
    lp::Solution solution;
    int rounds = 0;
    long long cuts_added = 0;
    std::map<form::CutFamily, long long> counts;
};

// Alternates LP solves and separation until no family finds a violation (or
// the LP fails). Generated rows are appended to model.lp, so the returned
// optimum is the bound over the full relaxation.
LoopResult run_separation_loop(form::BuiltModel& model,
                               const StochasticInstance& inst,
                               int round_limit = 10000);

}  // namespace sstp::sep
