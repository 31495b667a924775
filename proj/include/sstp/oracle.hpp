#pragma once

#include <optional>
#include <string>

#include "sstp/formulations.hpp"
#include "sstp/instance.hpp"

namespace sstp::oracle {

// Exhaustive enumeration is 2^|E| over first stages; recourse search is
// pruned but still exponential, so the reference solver is capped here.
inline constexpr int kBruteForceEdgeLimit = 16;

// True iff every scenario's terminals are connected by its stage union and,
// when `rooted`, the first stage is a tree containing the root (the empty
// set counts as the trivial tree {root}). On failure `why`, when given,
// receives the first violated condition.
bool check_feasible(const StochasticInstance& inst, const form::EdgeSolution& sol,
                    bool rooted, std::string* why = nullptr);

// Exact objective of an explicit two-stage edge selection.
Rat solution_cost(const StochasticInstance& inst, const form::EdgeSolution& sol);

struct ExactSolution {
    Rat objective{0};
    form::EdgeSolution solution;
};

// Reference optimum by exhaustive first-stage enumeration; per scenario the
// cheapest augmentation is found by branching over component-joining edges
// with cost-bound pruning. Deterministic: among equal-cost optima the
// lowest first-stage bitmask (and first-found recourse) wins. `rooted`
// restricts first stages to trees containing the instance root. Returns
// nullopt when no feasible solution exists. Throws std::invalid_argument
// beyond kBruteForceEdgeLimit edges, or when rooted is requested without a
// root.
std::optional<ExactSolution> brute_force(const StochasticInstance& inst, bool rooted);

}  // namespace sstp::oracle
