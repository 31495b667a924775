#include <doctest.h>

#include <stdexcept>

#include "sstp/fixtures.hpp"
#include "sstp/oracle.hpp"

using namespace sstp;

namespace {

form::EdgeSolution sol_of(std::vector<char> first,
                          std::vector<std::vector<char>> second) {
    form::EdgeSolution s;
    s.first_stage = std::move(first);
    s.second_stage = std::move(second);
    return s;
}

}  // namespace

TEST_CASE("feasibility checker on the path instance") {
    StochasticInstance p = fixtures::path4();  // edges 0-1, 1-2, 2-3; T = {0, 3}
    CHECK(oracle::check_feasible(p, sol_of({1, 1, 1}, {{0, 0, 0}}), false));
    CHECK(oracle::check_feasible(p, sol_of({1, 0, 1}, {{0, 1, 0}}), false));
    CHECK(oracle::check_feasible(p, sol_of({0, 0, 0}, {{1, 1, 1}}), false));
    std::string why;
    CHECK(!oracle::check_feasible(p, sol_of({1, 0, 1}, {{0, 0, 0}}), false, &why));
    CHECK(!why.empty());
}

TEST_CASE("rooted feasibility requires a first-stage tree containing the root") {
    StochasticInstance pr = fixtures::path4_rooted();  // root 0
    // empty first stage is the trivial tree {root}
    CHECK(oracle::check_feasible(pr, sol_of({0, 0, 0}, {{1, 1, 1}}), true));
    // a connected prefix through the root is fine
    CHECK(oracle::check_feasible(pr, sol_of({1, 1, 1}, {{0, 0, 0}}), true));
    // edge 2-3 alone is a tree, but not one containing the root
    CHECK(!oracle::check_feasible(pr, sol_of({0, 0, 1}, {{1, 1, 0}}), true));
    // the same selection is fine in the unrooted problem
    CHECK(oracle::check_feasible(pr, sol_of({0, 0, 1}, {{1, 1, 0}}), false));

    StochasticInstance k4 = fixtures::k4_two_scenarios();
    k4.root = 0;
    // triangle 0-1, 0-2, 1-2 contains a cycle: not a tree
    form::EdgeSolution cyc;
    cyc.first_stage.assign(k4.graph.edge_count(), 0);
    cyc.second_stage.assign(2, std::vector<char>(k4.graph.edge_count(), 1));
    for (int e = 0; e < k4.graph.edge_count(); ++e) {
        auto [u, v] = k4.graph.edges[e];
        if (u != 3 && v != 3) cyc.first_stage[e] = 1;
    }
    std::string why;
    CHECK(!oracle::check_feasible(k4, cyc, true, &why));
    CHECK(!why.empty());
}

TEST_CASE("shape mismatches are rejected") {
    StochasticInstance p = fixtures::path4();
    CHECK(!oracle::check_feasible(p, sol_of({1, 1}, {{1, 1, 1}}), false));
    CHECK(!oracle::check_feasible(p, sol_of({1, 1, 1}, {}), false));
}

TEST_CASE("solution cost is an exact expectation") {
    StochasticInstance k4 = fixtures::k4_two_scenarios();
    // first stage {0-1, 2-3}, scenario 0 adds 1-2, scenario 1 adds 1-3
    form::EdgeSolution s;
    s.first_stage.assign(k4.graph.edge_count(), 0);
    s.second_stage.assign(2, std::vector<char>(k4.graph.edge_count(), 0));
    auto edge_index = [&](int u, int v) {
        for (int e = 0; e < k4.graph.edge_count(); ++e)
            if (k4.graph.edges[e] == std::pair<int, int>{u, v}) return e;
        FAIL("missing edge");
        return -1;
    };
    s.first_stage[edge_index(0, 1)] = 1;
    s.first_stage[edge_index(2, 3)] = 1;
    s.second_stage[0][edge_index(1, 2)] = 1;
    s.second_stage[1][edge_index(1, 3)] = 1;
    CHECK(oracle::solution_cost(k4, s) == Rat(12));
    CHECK(oracle::check_feasible(k4, s, false));
}

TEST_CASE("reference optima on the bundled instances") {
    auto p = oracle::brute_force(fixtures::path4(), false);
    REQUIRE(p.has_value());
    CHECK(p->objective == Rat(3));

    auto pr = oracle::brute_force(fixtures::path4_rooted(), true);
    REQUIRE(pr.has_value());
    CHECK(pr->objective == Rat(12));

    auto k4 = oracle::brute_force(fixtures::k4_two_scenarios(), false);
    REQUIRE(k4.has_value());
    CHECK(k4->objective == Rat(12));

    auto gap = oracle::brute_force(fixtures::gap9over10(), true);
    REQUIRE(gap.has_value());
    CHECK(gap->objective == Rat(5));

    auto t = oracle::brute_force(fixtures::triangle(), false);
    REQUIRE(t.has_value());
    CHECK(t->objective == Rat(2));

    auto ts = oracle::brute_force(fixtures::triangle_swapped(), false);
    REQUIRE(ts.has_value());
    CHECK(ts->objective == Rat(2));
}

TEST_CASE("reference solutions are feasible and priced consistently") {
    for (bool rooted : {false, true}) {
        StochasticInstance inst =
            rooted ? fixtures::path4_rooted() : fixtures::k4_two_scenarios();
        auto best = oracle::brute_force(inst, rooted);
        REQUIRE(best.has_value());
        CHECK(oracle::check_feasible(inst, best->solution, rooted));
        CHECK(oracle::solution_cost(inst, best->solution) == best->objective);
    }
}

TEST_CASE("rooted optima can exceed unrooted optima") {
    StochasticInstance pr = fixtures::path4_rooted();
    auto rooted = oracle::brute_force(pr, true);
    auto unrooted = oracle::brute_force(pr, false);
    REQUIRE(rooted.has_value());
    REQUIRE(unrooted.has_value());
    CHECK(unrooted->objective == Rat(3));
    CHECK(rooted->objective == Rat(12));
    CHECK(rooted->objective > unrooted->objective);
}

TEST_CASE("guard rails") {
    StochasticInstance big;
    big.graph.vertex_count = 18;
    for (int i = 0; i + 1 < 18; ++i) big.graph.edges.push_back({i, i + 1});
    big.first_stage_cost.assign(big.graph.edge_count(), Rat(1));
    Scenario sc;
    sc.probability = Rat(1);
    sc.edge_costs.assign(big.graph.edge_count(), Rat(1));
    sc.terminals = {0, 17};
    big.scenarios.push_back(sc);
    CHECK_THROWS_AS(oracle::brute_force(big, false), std::invalid_argument);

    StochasticInstance p = fixtures::path4();  // unrooted
    CHECK_THROWS_AS(oracle::brute_force(p, true), std::invalid_argument);
}

TEST_CASE("infeasible instances return no solution") {
    // two isolated vertices, no edges, both terminals
    StochasticInstance inst;
    inst.graph.vertex_count = 2;
    Scenario sc;
    sc.probability = Rat(1);
    sc.terminals = {0, 1};
    inst.scenarios.push_back(sc);
    CHECK(!oracle::brute_force(inst, false).has_value());
}
