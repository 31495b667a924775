#include <doctest.h>

#include "sstp/flow.hpp"

using namespace sstp::flow;

TEST_CASE("single arc saturates") {
    CapGraph g(2);
    g.add_arc(0, 1, 1.0);
    MinCutResult r = max_flow_min_cut(g, 0, 1);
    CHECK(r.value == doctest::Approx(1.0));
    REQUIRE(r.cut_arcs.size() == 1);
    CHECK(r.cut_arcs[0] == std::pair<int, int>{0, 1});
    CHECK(r.source_side[0]);
    CHECK(!r.source_side[1]);
}

TEST_CASE("unreachable sink gives zero flow") {
    CapGraph g(3);
    g.add_arc(0, 1, 5.0);
    MinCutResult r = max_flow_min_cut(g, 0, 2);
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(r.cut_arcs.empty());
    CHECK(!r.source_side[2]);
}

TEST_CASE("parallel arcs merge capacities") {
    CapGraph g(2);
    g.add_arc(0, 1, 0.5);
    g.add_arc(0, 1, 0.5);
    MinCutResult r = max_flow_min_cut(g, 0, 1);
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.cut_arcs.size() == 1);  // merged into one arc
}

TEST_CASE("tiny capacities are treated as absent") {
    CapGraph g(2);
    g.add_arc(0, 1, 1e-12);
    MinCutResult r = max_flow_min_cut(g, 0, 1);
    CHECK(r.value == doctest::Approx(0.0));
}

TEST_CASE("triangle with all half capacities routes one unit") {
    // both orientations of each edge at 0.5: two disjoint half-unit paths
    CapGraph g(3);
    for (auto [u, v] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
        g.add_arc(u, v, 0.5);
        g.add_arc(v, u, 0.5);
    }
    MinCutResult r = max_flow_min_cut(g, 0, 2);
    CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("diamond bottleneck: flow equals the minimum cut") {
    // 0 -> {1,2} -> 3 with asymmetric capacities; min cut = 1.2 + 0.7
    CapGraph g(4);
    g.add_arc(0, 1, 1.2);
    g.add_arc(0, 2, 2.0);
    g.add_arc(1, 3, 3.0);
    g.add_arc(2, 3, 0.7);
    MinCutResult r = max_flow_min_cut(g, 0, 3);
    CHECK(r.value == doctest::Approx(1.9));
    double crossing = 0.0;
    for (auto [u, v] : r.cut_arcs) {
        CHECK(r.source_side[u]);
        CHECK(!r.source_side[v]);
        // capacities of the reported crossing arcs sum to the flow value
        if (u == 0 && v == 1) crossing += 1.2;
        if (u == 0 && v == 2) crossing += 2.0;
        if (u == 1 && v == 3) crossing += 3.0;
        if (u == 2 && v == 3) crossing += 0.7;
    }
    CHECK(crossing == doctest::Approx(r.value));
}

TEST_CASE("minimal source side is reported") {
    // chain 0 -> 1 -> 2, middle arc is the bottleneck: the residual-reachable
    // set is exactly {0, 1}
    CapGraph g(3);
    g.add_arc(0, 1, 2.0);
    g.add_arc(1, 2, 1.0);
    MinCutResult r = max_flow_min_cut(g, 0, 2);
    CHECK(r.value == doctest::Approx(1.0));
    CHECK(r.source_side[0]);
    CHECK(r.source_side[1]);
    CHECK(!r.source_side[2]);
    REQUIRE(r.cut_arcs.size() == 1);
    CHECK(r.cut_arcs[0] == std::pair<int, int>{1, 2});
}
