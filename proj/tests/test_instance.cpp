#include <doctest.h>

#include <algorithm>

#include "sstp/fixtures.hpp"
#include "sstp/instance.hpp"

using namespace sstp;

namespace {

StochasticInstance tiny() {
    StochasticInstance inst;
    inst.graph.vertex_count = 3;
    inst.graph.edges = {{0, 1}, {1, 2}};
    inst.first_stage_cost = {Rat(1), Rat(2)};
    Scenario sc;
    sc.probability = Rat(1);
    sc.edge_costs = {Rat(3), Rat(4)};
    sc.terminals = {0, 2};
    inst.scenarios.push_back(sc);
    return inst;
}

}  // namespace

TEST_CASE("bidirection arc numbering and incidence") {
    Graph g;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {1, 2}, {0, 2}};
    Bidirection bd(g);
    CHECK(bd.n == 3);
    CHECK(bd.arc_count() == 6);
    for (int e = 0; e < 3; ++e) {
        const int f = Bidirection::forward(e), b = Bidirection::backward(e);
        CHECK(f == 2 * e);
        CHECK(b == 2 * e + 1);
        CHECK(Bidirection::edge_of(f) == e);
        CHECK(Bidirection::edge_of(b) == e);
        CHECK(Bidirection::reverse(f) == b);
        CHECK(Bidirection::reverse(b) == f);
        CHECK(bd.tail(f) == g.edges[e].first);
        CHECK(bd.head(f) == g.edges[e].second);
        CHECK(bd.tail(b) == g.edges[e].second);
        CHECK(bd.head(b) == g.edges[e].first);
    }
    // vertex 1 touches edges 0 and 1, one incoming and one outgoing arc each
    auto in1 = bd.in_arcs(1);
    auto out1 = bd.out_arcs(1);
    CHECK(in1.size() == 2);
    CHECK(out1.size() == 2);
    for (int a : in1) CHECK(bd.head(a) == 1);
    for (int a : out1) CHECK(bd.tail(a) == 1);
}

TEST_CASE("disjoint sets union and find") {
    DisjointSets ds(4);
    CHECK(ds.unite(0, 1));
    CHECK(!ds.unite(1, 0));
    CHECK(ds.unite(2, 3));
    CHECK(ds.find(0) == ds.find(1));
    CHECK(ds.find(0) != ds.find(2));
    CHECK(ds.unite(1, 3));
    CHECK(ds.find(0) == ds.find(2));
}

TEST_CASE("validation accepts the bundled instances") {
    for (const auto& inst :
         {fixtures::path4(), fixtures::path4_rooted(), fixtures::k4_two_scenarios(),
          fixtures::gap9over10(), fixtures::triangle(), fixtures::triangle_swapped()})
        CHECK(validate(inst).empty());
}

TEST_CASE("validation flags broken probability and root data") {
    StochasticInstance inst = tiny();
    SUBCASE("probabilities must sum to one exactly") {
        inst.scenarios[0].probability = Rat(2, 5);
        CHECK(!validate(inst).empty());
    }
    SUBCASE("the global root must appear in every terminal set") {
        inst.root = 1;
        CHECK(!validate(inst).empty());
        inst.scenarios[0].terminals = {0, 1, 2};
        CHECK(validate(inst).empty());
    }
    SUBCASE("terminal indices must be in range") {
        inst.scenarios[0].terminals = {0, 7};
        CHECK(!validate(inst).empty());
    }
    SUBCASE("edge endpoints must be distinct") {
        inst.graph.edges[0] = {1, 1};
        CHECK(!validate(inst).empty());
    }
    SUBCASE("scenario cost vectors match the edge count") {
        inst.scenarios[0].edge_costs.pop_back();
        CHECK(!validate(inst).empty());
    }
    SUBCASE("costs must be nonnegative") {
        inst.first_stage_cost[0] = Rat(-1);
        CHECK(!validate(inst).empty());
    }
}

TEST_CASE("scenario roots come from the global root when present") {
    StochasticInstance inst = tiny();
    auto roots = select_scenario_roots(inst);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == 0);  // unrooted: deterministic pick from the terminals

    StochasticInstance rooted = fixtures::path4_rooted();
    auto r = select_scenario_roots(rooted);
    REQUIRE(rooted.root.has_value());
    for (int v : r) CHECK(v == *rooted.root);
}

TEST_CASE("derived costs are exact expectations") {
    StochasticInstance inst = tiny();
    inst.scenarios[0].probability = Rat(1, 3);
    Scenario sc2;
    sc2.probability = Rat(2, 3);
    sc2.edge_costs = {Rat(6), Rat(1)};
    sc2.terminals = {0, 1};
    inst.scenarios.push_back(sc2);
    DerivedCosts d = derive_costs(inst);
    CHECK(d.expected_cost[0] == Rat(3) * Rat(1, 3) + Rat(6) * Rat(2, 3));  // 5
    CHECK(d.expected_cost[1] == Rat(4) * Rat(1, 3) + Rat(1) * Rat(2, 3));  // 2
    CHECK(d.expected_cost[0] == Rat(5));
    CHECK(d.expected_cost[1] == Rat(2));
    // terminals minus the scenario root, ascending
    REQUIRE(d.terminals_minus_root.size() == 2);
    CHECK((int)d.terminals_minus_root[0].size() + 1 ==
          (int)inst.scenarios[0].terminals.size());
    CHECK(d.total_terminal_count ==
          (int)(d.terminals_minus_root[0].size() + d.terminals_minus_root[1].size()));
}

TEST_CASE("cost assumption checks") {
    // triangle: first stage 10, scenario 1 -> not below expectation
    CHECK(!check_cost_assumptions(fixtures::triangle()).all_below_expected);
    // swapped: first stage 1, scenario 10 -> strictly below on every edge
    CHECK(check_cost_assumptions(fixtures::triangle_swapped()).all_below_expected);
}
