#include "sstp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sstp {

Bidirection::Bidirection(const Graph& g) : n(g.vertex_count) {
    in_arcs_.resize(n);
    out_arcs_.resize(n);
    tails.reserve(2 * g.edges.size());
    heads.reserve(2 * g.edges.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges[e];
        tails.push_back(i); heads.push_back(j);   // arc 2e
        tails.push_back(j); heads.push_back(i);   // arc 2e+1
        out_arcs_[i].push_back(2 * e);
        in_arcs_[j].push_back(2 * e);
        out_arcs_[j].push_back(2 * e + 1);
        in_arcs_[i].push_back(2 * e + 1);
    }
}

std::vector<std::string> validate(const StochasticInstance& inst) {
    std::vector<std::string> v;
    const int n = inst.graph.vertex_count;
    const int m = inst.graph.edge_count();
    auto item = [&](std::string s) { v.push_back(std::move(s)); };

    if (n < 1) item("graph has no vertices");
    for (int e = 0; e < m; ++e) {
        auto [i, j] = inst.graph.edges[e];
        if (i < 0 || i >= n || j < 0 || j >= n)
            item("edge " + std::to_string(e) + " references vertex out of range");
        else if (i == j)
            item("edge " + std::to_string(e) + " is a self-loop");
    }
    if (static_cast<int>(inst.first_stage_cost.size()) != m)
        item("first-stage cost vector size differs from edge count");
    for (std::size_t e = 0; e < inst.first_stage_cost.size(); ++e)
        if (inst.first_stage_cost[e] < Rat(0))
            item("first-stage cost of edge " + std::to_string(e) + " is negative");

    if (inst.scenarios.empty()) item("instance has no scenarios");

    Rat prob_sum(0);
    for (int k = 0; k < inst.scenario_count(); ++k) {
        const Scenario& sc = inst.scenarios[k];
        const std::string tag = "scenario " + std::to_string(k);
        if (sc.probability <= Rat(0)) item(tag + " probability is not positive");
        prob_sum += sc.probability;
        if (static_cast<int>(sc.edge_costs.size()) != m)
            item(tag + " cost vector size differs from edge count");
        for (std::size_t e = 0; e < sc.edge_costs.size(); ++e)
            if (sc.edge_costs[e] < Rat(0))
                item(tag + " cost of edge " + std::to_string(e) + " is negative");
        if (sc.terminals.empty()) item(tag + " has no terminals");
        std::set<int> seen;
        for (int t : sc.terminals) {
            if (t < 0 || t >= n) item(tag + " terminal out of range");
            if (!seen.insert(t).second) item(tag + " has duplicate terminals");
        }
        if (!std::is_sorted(sc.terminals.begin(), sc.terminals.end()))
            item(tag + " terminals not sorted");
        if (sc.root_hint) {
            if (!seen.count(*sc.root_hint))
                item(tag + " root hint is not one of its terminals");
        }
    }
    if (!inst.scenarios.empty()) {
        // Exact when costs were given as rationals; 1e-9 slack covers decimals.
        if (std::abs(to_double(prob_sum - Rat(1))) > 1e-9)
            item("scenario probabilities sum to " + format_rational(prob_sum) +
                 ", expected 1");
    }
    if (inst.root) {
        if (*inst.root < 0 || *inst.root >= n) {
            item("root vertex out of range");
        } else {
            for (int k = 0; k < inst.scenario_count(); ++k) {
                const auto& t = inst.scenarios[k].terminals;
                if (!std::binary_search(t.begin(), t.end(), *inst.root))
                    item("root is not a terminal of scenario " + std::to_string(k));
            }
        }
    }
    return v;
}

std::vector<int> select_scenario_roots(const StochasticInstance& inst) {
    std::vector<int> roots;
    roots.reserve(inst.scenarios.size());
    for (const Scenario& sc : inst.scenarios) {
        if (inst.root) roots.push_back(*inst.root);
        else if (sc.root_hint) roots.push_back(*sc.root_hint);
        else roots.push_back(sc.terminals.empty() ? 0 : sc.terminals.front());
    }
    return roots;
}

DerivedCosts derive_costs(const StochasticInstance& inst) {
    DerivedCosts d;
    const int m = inst.graph.edge_count();
    d.expected_cost.assign(m, Rat(0));
    for (const Scenario& sc : inst.scenarios)
        for (int e = 0; e < m; ++e)
            d.expected_cost[e] += sc.probability * sc.edge_costs[e];
    d.scenario_roots = select_scenario_roots(inst);
    d.terminals_minus_root.resize(inst.scenario_count());
    for (int k = 0; k < inst.scenario_count(); ++k) {
        for (int t : inst.scenarios[k].terminals)
            if (t != d.scenario_roots[k]) d.terminals_minus_root[k].push_back(t);
        d.total_terminal_count += static_cast<int>(d.terminals_minus_root[k].size());
    }
    return d;
}

CostAssumptions check_cost_assumptions(const StochasticInstance& inst) {
    CostAssumptions r;
    const int m = inst.graph.edge_count();
    DerivedCosts d = derive_costs(inst);
    r.below_expected.resize(m);
    r.above_min_scenario.resize(m);
    r.all_below_expected = true;
    for (int e = 0; e < m; ++e) {
        r.below_expected[e] = inst.first_stage_cost[e] < d.expected_cost[e];
        if (!r.below_expected[e]) r.all_below_expected = false;
        bool have_min = false;
        Rat min_weighted(0);
        for (const Scenario& sc : inst.scenarios) {
            Rat w = sc.probability * sc.edge_costs[e];
            if (!have_min || w < min_weighted) { min_weighted = w; have_min = true; }
        }
        r.above_min_scenario[e] = have_min && inst.first_stage_cost[e] > min_weighted;
    }
    return r;
}

}  // namespace sstp
