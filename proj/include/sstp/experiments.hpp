#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sstp/formulations.hpp"
#include "sstp/instance.hpp"
#include "sstp/lp.hpp"

namespace sstp::exp {

// Comparison tolerance for LP bounds and IP values across formulations.
inline constexpr double kCompareTol = 1e-6;

// One formulation's bounds on one instance.
struct FormulationRun {
    form::Id id{};
    lp::Status lp_status = lp::Status::infeasible;
    double lp_bound = 0.0;            // optimum over the full relaxation
    std::optional<double> ip_value;   // branch-and-cut optimum when requested
    long long cuts = 0;               // separation rows added (LP + IP)
    int rounds = 0;                   // separation rounds during the LP phase
    long long nodes = 0;              // branch-and-bound nodes for the IP
    double seconds = 0.0;             // wall time, LP + IP
};

struct ComparisonTable {
    std::vector<FormulationRun> runs;
    std::vector<std::string> flags;   // violated relations, empty = consistent
    bool ok() const { return flags.empty(); }
};

// Solves the LP relaxation of every listed formulation (exact separation to
// optimality), optionally the IP by branch-and-cut, and flags every violated
// relation among the listed ids, all within kCompareTol:
//   LP(uc) = LP(uf);  LP(uc) <= LP(sdc1) <= LP(sdc2);
//   LP(sdc2) = LP(sdc2star) = LP(sdf);
//   LP(dc1) = LP(dc2) = LP(dc2star) = LP(df);
//   every LP bound <= its own IP value; IP values identical within the
//   unrooted group and within the rooted group.
// Throws std::invalid_argument when an id does not apply to the instance.
ComparisonTable compare(const StochasticInstance& inst,
                        const std::vector<form::Id>& ids, bool with_ip);

// Branch-and-cut with the first-stage block relaxed to [0,1] (every other
// decision block stays integral) and a report on whether the relaxed block
// came back 0/1 anyway. Supported: sdc2 (any instance), dc1 (rooted), dc2
// (rooted, and only when c0 < c* holds on every edge — else throws
// std::invalid_argument naming the offending assumption).
struct IntegralityResult {
    double relaxed_objective = 0.0;
    bool integral = false;
    std::vector<double> first_stage_values;
};
IntegralityResult test_first_stage_integrality(const StochasticInstance& inst,
                                               form::Id id);

enum class CostRegime { unconstrained, enforce_c0_below_cstar };

struct GenConfig {
    std::uint64_t seed = 1;
    int vertices = 6;
    double edge_prob = 0.5;
    int scenarios = 2;
    CostRegime regime = CostRegime::unconstrained;
    bool rooted = false;
};

// Deterministic random instance: connected graph (rejection sampling with a
// densify fallback), integer costs in [1,20], exact rational probabilities
// (integer weights over their sum), 2..5 terminals per scenario; rooted
// instances get a random root inserted into every terminal set. Under
// enforce_c0_below_cstar each first-stage cost is decremented until strictly
// below the expected scenario cost.
StochasticInstance generate_random_instance(const GenConfig& cfg);

// Exhaustive check of every cut family registered on the model at the point
// x: enumerates all candidate vertex sets (exponential in |V|; callers keep
// instances small) and returns a description per violated constraint.
std::vector<std::string> enumerate_violations(const form::BuiltModel& model,
                                              const StochasticInstance& inst,
                                              const std::vector<double>& x);

// Batch verification suites. Each returns one line per failure; empty = pass.
// Counts and sizes follow the workbench defaults used by the acceptance
// runner; seeds make every suite reproducible.
std::vector<std::string> hierarchy_suite(int count, std::uint64_t seed_base,
                                         int perturbations);
std::vector<std::string> rooted_equivalence_suite(int count, std::uint64_t seed_base);
std::vector<std::string> integrality_suite(form::Id id, int count,
                                           std::uint64_t seed_base);
std::vector<std::string> oracle_equivalence_suite(int count, std::uint64_t seed_base);
std::vector<std::string> separation_exactness_suite(int count, std::uint64_t seed_base);

// Table emitters (deterministic field order and float formatting).
std::string table_to_tsv(const ComparisonTable& t);
std::string table_to_json(const ComparisonTable& t);

}  // namespace sstp::exp
