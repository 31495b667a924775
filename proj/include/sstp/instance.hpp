#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sstp/rational.hpp"

namespace sstp {

// Undirected graph; vertices 0..n-1, edges as stored endpoint pairs.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool operator==(const Graph&) const = default;
};

// Bidirection of a graph: edge e = {i,j} (stored order) yields arc 2e = (i,j)
// and arc 2e+1 = (j,i). Arc a and a^1 are the two orientations of edge a/2.
struct Bidirection {
    int n = 0;
    std::vector<int> tails, heads;          // size 2m
    std::vector<std::vector<int>> in_arcs_;  // per head vertex
    std::vector<std::vector<int>> out_arcs_; // per tail vertex

    explicit Bidirection(const Graph& g);

    int arc_count() const { return static_cast<int>(tails.size()); }
    static int forward(int e) { return 2 * e; }
    static int backward(int e) { return 2 * e + 1; }
    static int edge_of(int a) { return a / 2; }
    static int reverse(int a) { return a ^ 1; }
    int tail(int a) const { return tails[a]; }
    int head(int a) const { return heads[a]; }
    const std::vector<int>& in_arcs(int v) const { return in_arcs_[v]; }
    const std::vector<int>& out_arcs(int v) const { return out_arcs_[v]; }
};

struct Scenario {
    Rat probability{0};
    std::vector<Rat> edge_costs;        // size |E|
    std::vector<int> terminals;         // sorted, unique
    std::optional<int> root_hint;       // must be a terminal when present

    bool operator==(const Scenario&) const = default;
};

struct StochasticInstance {
    Graph graph;
    std::vector<Rat> first_stage_cost;  // size |E|
    std::vector<Scenario> scenarios;
    std::optional<int> root;            // global root => rooted variant

    bool rooted() const { return root.has_value(); }
    int scenario_count() const { return static_cast<int>(scenarios.size()); }
    bool operator==(const StochasticInstance&) const = default;
};

// All structural violations, empty when the instance is well-formed.
// Checks: edge endpoints in range, no self-loops, cost vector sizes, costs
// nonnegative, at least one scenario, probabilities positive and summing to 1
// (exact, 1e-9 slack for decimal input), terminals nonempty/in-range/sorted
// unique, root hints are terminals, a global root is a terminal of every
// scenario.
std::vector<std::string> validate(const StochasticInstance& inst);

// Scenario root r^k: the global root when the instance is rooted, otherwise
// the scenario's root_hint, otherwise its lowest-indexed terminal.
std::vector<int> select_scenario_roots(const StochasticInstance& inst);

struct DerivedCosts {
    std::vector<Rat> expected_cost;                    // c*_e = sum_k p^k c^k_e
    std::vector<int> scenario_roots;                   // r^k
    std::vector<std::vector<int>> terminals_minus_root; // T^k_r = T^k \ {r^k}
    int total_terminal_count = 0;                      // sum_k |T^k_r|
};
DerivedCosts derive_costs(const StochasticInstance& inst);

struct CostAssumptions {
    std::vector<bool> below_expected;        // c0_e <  c*_e (strict)
    std::vector<bool> above_min_scenario;    // c0_e >  min_k p^k c^k_e
    bool all_below_expected = false;
};
CostAssumptions check_cost_assumptions(const StochasticInstance& inst);

// Small union-find used by feasibility checks and generators.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    // Returns false when u and v were already joined.
    bool unite(int u, int v) {
        u = find(u); v = find(v);
        if (u == v) return false;
        parent[u] = v;
        return true;
    }
};

}  // namespace sstp
