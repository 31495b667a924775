#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "sstp/instance.hpp"
#include "sstp/lp.hpp"

namespace sstp::form {

// The ten model builders. Unrooted (two-stage edge sets):
//   uc   — undirected cuts over both stages
//   uf   — single-commodity flow version of uc (compact)
//   sdc1 — semi-directed cuts: undirected first stage + oriented recourse
//   sdc2 — directed cuts on a combined orientation y covering both stages,
//          linked to the first stage, double-payment corrected in the
//          objective (printed form)
//   sdc2star — sdc2 with the objective algebraically rewritten; identical
//          coefficients, kept as a separate id for reporting
//   sdf  — flow version of sdc2 (compact)
// Rooted (first stage must be a tree containing the root):
//   dc1  — first-stage tree cuts + joint scenario cuts on (z0, zk)
//   dc2  — first-stage tree cuts + pure directed scenario cuts linked to z0
//   dc2star — dc2, rewritten objective (identical coefficients)
//   df   — flow version of dc2 (compact)
enum class Id { uc, uf, sdc1, sdc2, sdc2star, sdf, dc1, dc2, dc2star, df };

inline constexpr std::array<Id, 10> kAllIds = {
    Id::uc, Id::uf, Id::sdc1, Id::sdc2, Id::sdc2star,
    Id::sdf, Id::dc1, Id::dc2, Id::dc2star, Id::df};

const char* name(Id id);
std::optional<Id> from_name(std::string_view s);
bool rooted_only(Id id);     // dc1, dc2, dc2star, df
bool has_arc_block(Id id);   // every id except uc and uf
bool is_flow_based(Id id);   // uf, sdf, df (no separation oracle)

enum class CutFamily { undirected, semi_joint, directed, first_stage_tree };
const char* family_name(CutFamily f);

struct BuiltModel {
    Id id{};
    lp::Model lp;

    // block offsets into lp.vars; -1 when the block is absent
    int x0 = -1;   // per edge
    int xk = -1;   // per (scenario, edge)
    int zk = -1;   // per (scenario, arc)
    int yk = -1;   // per (scenario, arc)
    int z0 = -1;   // per arc
    int w0 = -1;   // per non-root vertex (df)
    int f0 = -1;   // per (non-root vertex, arc) (df)
    std::vector<int> fk_base;                  // per scenario flow offset, -1 absent
    std::vector<std::vector<int>> flow_sinks;  // per scenario: sinks T^k_r in order

    int vertex_count = 0, edge_count = 0, arc_count = 0, K = 0;
    int root = -1;                             // global root when rooted, else -1
    std::vector<int> scenario_roots;           // r^k
    std::vector<int> nonroot_vertices;         // df: ordering of w0/f0 blocks

    std::vector<int> integer_vars;             // all binary decision blocks
    std::vector<int> first_stage_vars;         // x0 or z0 (+w0 for df)
    std::vector<CutFamily> families;           // separation families

    int x0_var(int e) const { return x0 + e; }
    int xk_var(int k, int e) const { return xk + k * edge_count + e; }
    int zk_var(int k, int a) const { return zk + k * arc_count + a; }
    int yk_var(int k, int a) const { return yk + k * arc_count + a; }
    int z0_var(int a) const { return z0 + a; }
    int w0_var(int idx) const { return w0 + idx; }
    int f0_var(int idx, int a) const { return f0 + idx * arc_count + a; }
    int fk_var(int k, int ti, int a) const { return fk_base[k] + ti * arc_count + a; }
};

// Builds the formulation for the instance (cut rows of the exponential
// families are not included; they come from separation). Throws
// std::invalid_argument for a rooted-only id on an unrooted instance.
BuiltModel build(Id id, const StochasticInstance& inst);

// Degree/orientation strengthening rows, added per scenario: pairwise arc
// exclusivity, zero indegree at the scenario root, outdegree >= 1 at the
// root and indegree = 1 at terminals (when the scenario has other
// terminals), indegree <= 1 elsewhere; first-stage analogues for rooted
// models. They never cut off an optimal integer solution. Throws
// std::invalid_argument for uc/uf (no arc block to strengthen).
void add_valid_inequalities(BuiltModel& model, const StochasticInstance& inst);

// Objective coefficients for the model under replacement costs (used to
// re-price a built model without rebuilding it). Rational arithmetic
// throughout; converted to double once.
std::vector<double> objective_for(const BuiltModel& model,
                                  const StochasticInstance& inst,
                                  const std::vector<Rat>& first_stage_cost,
                                  const std::vector<std::vector<Rat>>& scenario_costs);

// Maps an integer point of the model back to explicit edge sets.
struct EdgeSolution {
    std::vector<char> first_stage;
    std::vector<std::vector<char>> second_stage;
};
EdgeSolution project_solution(const BuiltModel& model, const std::vector<double>& x);

// Demonstrates that aggregate flow-balance rows (outflow >= inflow at
// intermediate vertices) are NOT valid here, unlike in single-stage Steiner
// models: first-stage purchases useful only in other scenarios break them.
// Solves the instance without and with balance rows and returns both optima;
// with_balance_opt can strictly exceed plain_opt.
struct BalanceDemo {
    double plain_opt = 0.0;
    double with_balance_opt = 0.0;
};
BalanceDemo flow_balance_invalidity_demo(const StochasticInstance& inst);

}  // namespace sstp::form
