#include <doctest.h>

#include "sstp/fixtures.hpp"
#include "sstp/io.hpp"

using namespace sstp;

TEST_CASE("serialization round-trips every bundled instance exactly") {
    for (const auto& inst :
         {fixtures::path4(), fixtures::path4_rooted(), fixtures::k4_two_scenarios(),
          fixtures::gap9over10(), fixtures::triangle(), fixtures::triangle_swapped()}) {
        std::string text = io::write_instance(inst);
        StochasticInstance back = io::parse_instance(text);
        CHECK(back == inst);
        CHECK(io::write_instance(back) == text);  // canonical form is a fixpoint
    }
}

TEST_CASE("parser reads the documented grammar") {
    const std::string text =
        "# demo\n"
        "SECTION Graph\n"
        "Nodes 3\n"
        "Edges 2\n"
        "E 1 2 5\n"
        "E 2 3 7\n"
        "END\n"
        "SECTION Scenario\n"
        "Probability 1/2\n"
        "Terminals 1 3\n"
        "SE 1 9\n"
        "END\n"
        "SECTION Scenario\n"
        "Probability 0.5\n"
        "Root 2\n"
        "Terminals 2 3\n"
        "END\n";
    StochasticInstance inst = io::parse_instance(text);
    CHECK(inst.graph.vertex_count == 3);
    REQUIRE(inst.graph.edge_count() == 2);
    CHECK(inst.graph.edges[0] == std::pair<int, int>{0, 1});
    CHECK(inst.first_stage_cost[1] == Rat(7));
    REQUIRE(inst.scenario_count() == 2);
    CHECK(inst.scenarios[0].probability == Rat(1, 2));
    CHECK(inst.scenarios[0].terminals == std::vector<int>{0, 2});
    CHECK(inst.scenarios[0].edge_costs[0] == Rat(9));
    CHECK(inst.scenarios[0].edge_costs[1] == Rat(7));  // inherited
    REQUIRE(inst.scenarios[1].root_hint.has_value());
    CHECK(*inst.scenarios[1].root_hint == 1);
    CHECK(!inst.rooted());
}

TEST_CASE("parser reports the offending line") {
    const std::string bad =
        "SECTION Graph\n"
        "Nodes 2\n"
        "Edges 1\n"
        "E 1 5 3\n"  // endpoint out of range
        "END\n";
    try {
        io::parse_instance(bad);
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("parser rejects semantic violations") {
    const std::string text =
        "SECTION Graph\n"
        "Nodes 2\n"
        "Edges 1\n"
        "E 1 2 3\n"
        "END\n"
        "SECTION Scenario\n"
        "Probability 2/5\n"
        "Terminals 1 2\n"
        "END\n";
    CHECK_THROWS_AS(io::parse_instance(text), io::ParseError);  // p sums to 2/5
}

TEST_CASE("missing files raise errors") {
    CHECK_THROWS(io::load_instance("/nonexistent/file.sstp"));
}

TEST_CASE("solver reports serialize with stable keys and sparse values") {
    io::SolveReport rep;
    rep.formulation = "uc";
    rep.bound_type = "ip";
    rep.status = "optimal";
    rep.objective = 3.0;
    rep.values = {{"x0[0]", 1.0}, {"xk[0][1]", 1.0}};
    rep.cut_counts = {{"undirected_cuts", 4}};
    rep.separation_rounds = 2;
    rep.nodes = 1;
    std::string a = io::report_to_json(rep);
    std::string b = io::report_to_json(rep);
    CHECK(a == b);                                     // byte identical
    CHECK(a.find("wall_time_s") == std::string::npos); // absent unless requested
    CHECK(a.find("\"schema\": 1") != std::string::npos);
    CHECK(a.find("x0[0]") != std::string::npos);
    rep.wall_time_s = 0.25;
    CHECK(io::report_to_json(rep).find("wall_time_s") != std::string::npos);
}
