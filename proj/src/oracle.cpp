#include "sstp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sstp::oracle {

namespace {

std::string scenario_tag(int k) { return "scenario " + std::to_string(k); }

bool first_stage_is_root_tree(const StochasticInstance& inst,
                              const std::vector<char>& first, int root,
                              std::string* why) {
    DisjointSets ds(inst.graph.vertex_count);
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        if (!first[e]) continue;
        if (!ds.unite(inst.graph.edges[e].first, inst.graph.edges[e].second)) {
            if (why) *why = "first stage contains a cycle";
            return false;
        }
    }
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        if (!first[e]) continue;
        if (ds.find(inst.graph.edges[e].first) != ds.find(root)) {
            if (why) *why = "first stage is not connected to the root";
            return false;
        }
    }
    return true;
}

}  // namespace

bool check_feasible(const StochasticInstance& inst, const form::EdgeSolution& sol,
                    bool rooted, std::string* why) {
    const int m = inst.graph.edge_count();
    const int K = inst.scenario_count();
    if (static_cast<int>(sol.first_stage.size()) != m ||
        static_cast<int>(sol.second_stage.size()) != K) {
        if (why) *why = "solution shape does not match the instance";
        return false;
    }
    for (const auto& stage : sol.second_stage)
        if (static_cast<int>(stage.size()) != m) {
            if (why) *why = "solution shape does not match the instance";
            return false;
        }
    if (rooted) {
        if (!inst.rooted()) {
            if (why) *why = "rooted check requested on an unrooted instance";
            return false;
        }
        if (!first_stage_is_root_tree(inst, sol.first_stage, *inst.root, why))
            return false;
    }
    for (int k = 0; k < K; ++k) {
        DisjointSets ds(inst.graph.vertex_count);
        for (int e = 0; e < m; ++e)
            if (sol.first_stage[e] || sol.second_stage[k][e])
                ds.unite(inst.graph.edges[e].first, inst.graph.edges[e].second);
        const auto& terms = inst.scenarios[k].terminals;
        for (int t : terms)
            if (ds.find(t) != ds.find(terms[0])) {
                if (why) *why = scenario_tag(k) + " terminals are disconnected";
                return false;
            }
    }
    return true;
}

Rat solution_cost(const StochasticInstance& inst, const form::EdgeSolution& sol) {
    Rat total(0);
    for (int e = 0; e < inst.graph.edge_count(); ++e)
        if (sol.first_stage[e]) total += inst.first_stage_cost[e];
    for (int k = 0; k < inst.scenario_count(); ++k)
        for (int e = 0; e < inst.graph.edge_count(); ++e)
            if (sol.second_stage[k][e])
                total += inst.scenarios[k].probability * inst.scenarios[k].edge_costs[e];
    return total;
}

namespace {

struct Candidate {
    int edge;
    Rat cost;
};

// Cheapest augmentation connecting the scenario's terminals on top of the
// first-stage components. Branches over candidate edges (cheapest
// representative per component pair), pruning on the incumbent cost.
struct RecourseSearch {
    const Graph& g;
    const std::vector<int>& terminals;
    std::vector<Candidate> cands;
    std::optional<Rat> best_cost;
    std::vector<int> best_set, current;

    bool connected(DisjointSets& ds) const {
        for (int t : terminals)
            if (ds.find(t) != ds.find(terminals[0])) return false;
        return true;
    }

    void dfs(DisjointSets ds, std::size_t idx, Rat cost) {
        if (connected(ds)) {
            if (!best_cost || cost < *best_cost) {
                best_cost = cost;
                best_set = current;
            }
            return;  // supersets only cost more
        }
        if (idx == cands.size()) return;
        if (best_cost && cost >= *best_cost) return;
        int u = ds.find(g.edges[cands[idx].edge].first);
        int v = ds.find(g.edges[cands[idx].edge].second);
        if (u != v) {
            DisjointSets taken = ds;
            taken.unite(u, v);
            current.push_back(cands[idx].edge);
            dfs(std::move(taken), idx + 1, cost + cands[idx].cost);
            current.pop_back();
        }
        dfs(std::move(ds), idx + 1, cost);
    }
};

std::optional<std::pair<Rat, std::vector<int>>> cheapest_recourse(
    const StochasticInstance& inst, int k, DisjointSets base) {
    const Graph& g = inst.graph;
    const Scenario& sc = inst.scenarios[k];
    RecourseSearch rs{g, sc.terminals, {}, std::nullopt, {}, {}};
    if (rs.connected(base)) return std::make_pair(Rat(0), std::vector<int>{});

    // one representative per component pair: cheapest scenario cost, lowest
    // index on ties
    std::vector<std::pair<std::pair<int, int>, int>> best_per_pair;
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = base.find(g.edges[e].first), v = base.find(g.edges[e].second);
        if (u == v) continue;
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        auto it = std::find_if(best_per_pair.begin(), best_per_pair.end(),
                               [&](const auto& p) { return p.first == key; });
        if (it == best_per_pair.end()) best_per_pair.push_back({key, e});
        else if (sc.edge_costs[e] < sc.edge_costs[it->second]) it->second = e;
    }
    for (const auto& [key, e] : best_per_pair) rs.cands.push_back({e, sc.edge_costs[e]});
    std::stable_sort(rs.cands.begin(), rs.cands.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.cost != b.cost ? a.cost < b.cost : a.edge < b.edge;
                     });
    rs.dfs(std::move(base), 0, Rat(0));
    if (!rs.best_cost) return std::nullopt;
    return std::make_pair(*rs.best_cost, rs.best_set);
}

}  // namespace

std::optional<ExactSolution> brute_force(const StochasticInstance& inst, bool rooted) {
    const int m = inst.graph.edge_count();
    const int K = inst.scenario_count();
    if (m > kBruteForceEdgeLimit)
        throw std::invalid_argument("instance exceeds the exhaustive-search edge limit");
    if (rooted && !inst.rooted())
        throw std::invalid_argument("rooted enumeration needs an instance root");

    std::optional<ExactSolution> best;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        DisjointSets ds(inst.graph.vertex_count);
        bool tree_ok = true;
        Rat cost(0);
        for (int e = 0; e < m && tree_ok; ++e) {
            if (!(mask >> e & 1u)) continue;
            cost += inst.first_stage_cost[e];
            if (!ds.unite(inst.graph.edges[e].first, inst.graph.edges[e].second) && rooted)
                tree_ok = false;  // cycle
        }
        if (rooted && tree_ok)
            for (int e = 0; e < m && tree_ok; ++e)
                if ((mask >> e & 1u) &&
                    ds.find(inst.graph.edges[e].first) != ds.find(*inst.root))
                    tree_ok = false;  // disconnected from the root
        if (!tree_ok) continue;
        if (best && cost >= best->objective) continue;  // recourse is nonnegative

        std::vector<std::vector<int>> recourse(K);
        bool feasible = true;
        for (int k = 0; k < K && feasible; ++k) {
            auto r = cheapest_recourse(inst, k, ds);
            if (!r) {
                feasible = false;
                break;
            }
            cost += inst.scenarios[k].probability * r->first;
            recourse[k] = std::move(r->second);
            if (best && cost >= best->objective) {
                feasible = false;  // already dominated
                break;
            }
        }
        if (!feasible) continue;
        if (!best || cost < best->objective) {
            ExactSolution sol;
            sol.objective = cost;
            sol.solution.first_stage.assign(m, 0);
            for (int e = 0; e < m; ++e) sol.solution.first_stage[e] = mask >> e & 1u;
            sol.solution.second_stage.assign(K, std::vector<char>(m, 0));
            for (int k = 0; k < K; ++k)
                for (int e : recourse[k]) sol.solution.second_stage[k][e] = 1;
            best = std::move(sol);
        }
    }
    return best;
}

}  // namespace sstp::oracle
