#include "sstp/fixtures.hpp"

namespace sstp::fixtures {

namespace {

StochasticInstance make(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<long long> c0,
                        std::vector<Scenario> scenarios,
                        std::optional<int> root = std::nullopt) {
    StochasticInstance inst;
    inst.graph.vertex_count = n;
    inst.graph.edges = std::move(edges);
    for (long long c : c0) inst.first_stage_cost.emplace_back(c);
    inst.scenarios = std::move(scenarios);
    inst.root = root;
    return inst;
}

Scenario scen(Rat prob, std::vector<long long> costs, std::vector<int> terminals) {
    Scenario s;
    s.probability = prob;
    for (long long c : costs) s.edge_costs.emplace_back(c);
    s.terminals = std::move(terminals);
    return s;
}

}  // namespace

StochasticInstance path4() {
    return make(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 10, 1},
                {scen(Rat(1), {11, 1, 11}, {0, 3})});
}

StochasticInstance path4_rooted() {
    StochasticInstance inst = path4();
    inst.root = 0;
    return inst;
}

StochasticInstance k4_two_scenarios() {
    const long long M = 100;  // effectively forbids buying in that stage
    return make(4,
                {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {0, 2}, {0, 3}},
                {1, 11, 11, 1, 30, 30},
                {scen(Rat(1, 2), {M, 10, 20, M, 30, 40}, {0, 2, 3}),
                 scen(Rat(1, 2), {M, 20, 10, M, 40, 30}, {0, 2, 3})});
}

StochasticInstance gap9over10() {
    return make(7,
                {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {6, 4}, {6, 5}},
                {1, 1, 1, 1, 1, 1, 1, 1, 1},
                {scen(Rat(1), {2, 2, 2, 2, 2, 2, 2, 2, 2}, {0, 3, 4, 5})},
                0);
}

StochasticInstance triangle() {
    return make(3, {{0, 1}, {0, 2}, {1, 2}}, {10, 10, 10},
                {scen(Rat(1), {1, 1, 1}, {0, 1, 2})});
}

StochasticInstance triangle_swapped() {
    return make(3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1},
                {scen(Rat(1), {10, 10, 10}, {0, 1, 2})});
}

}  // namespace sstp::fixtures
