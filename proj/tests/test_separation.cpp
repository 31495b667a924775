#include <doctest.h>

#include <cmath>

#include "sstp/experiments.hpp"
#include "sstp/fixtures.hpp"
#include "sstp/formulations.hpp"
#include "sstp/separation.hpp"

using namespace sstp;

namespace {

double row_value(const lp::Model::Row& row, const std::vector<double>& x) {
    double v = 0.0;
    for (auto [j, c] : row.coef) v += c * x[j];
    return v;
}

}  // namespace

TEST_CASE("undirected separation finds the isolated terminal") {
    StochasticInstance t = fixtures::triangle();
    form::BuiltModel bm = form::build(form::Id::uc, t);
    std::vector<double> x(bm.lp.vars.size(), 0.0);
    x[bm.xk_var(0, 0)] = 0.9;  // only edge {0,1} partially bought
    std::vector<sep::Cut> cuts = sep::separate_undirected(bm, t, x);
    REQUIRE(!cuts.empty());
    for (const sep::Cut& c : cuts) {
        CHECK(c.family == form::CutFamily::undirected);
        CHECK(c.row.sense == 'G');
        CHECK(c.row.rhs == doctest::Approx(1.0));
        // every returned cut is genuinely violated at x
        CHECK(row_value(c.row, x) < c.row.rhs - sep::kViolationTol);
        // and satisfied by the all-ones (clearly feasible) point
        std::vector<double> ones(bm.lp.vars.size(), 1.0);
        CHECK(row_value(c.row, ones) >= c.row.rhs);
    }
}

TEST_CASE("undirected separation is silent on a fractionally connected point") {
    // all three scenario edges at 0.5: every terminal cut sees two crossing
    // edges, so the cut value is exactly 1 and nothing is violated
    StochasticInstance t = fixtures::triangle();
    form::BuiltModel bm = form::build(form::Id::uc, t);
    std::vector<double> x(bm.lp.vars.size(), 0.0);
    for (int e = 0; e < 3; ++e) x[bm.xk_var(0, e)] = 0.5;
    CHECK(sep::separate_undirected(bm, t, x).empty());
}

TEST_CASE("semi-joint separation respects arc directions") {
    StochasticInstance t = fixtures::triangle();
    form::BuiltModel bm = form::build(form::Id::sdc1, t);
    std::vector<double> x(bm.lp.vars.size(), 0.0);
    // scenario root is vertex 0: a directed path 0 -> 1 -> 2 reaches everyone
    x[bm.zk_var(0, Bidirection::forward(0))] = 1.0;  // 0 -> 1
    x[bm.zk_var(0, Bidirection::forward(2))] = 1.0;  // 1 -> 2 (edge {1,2})
    CHECK(sep::separate_semi_joint(bm, t, x).empty());

    // flip one arc. vertex 2 becomes unreachable and a cut must appear
    x[bm.zk_var(0, Bidirection::forward(2))] = 0.0;
    x[bm.zk_var(0, Bidirection::backward(2))] = 1.0;  // 2 -> 1
    std::vector<sep::Cut> cuts = sep::separate_semi_joint(bm, t, x);
    REQUIRE(!cuts.empty());
    for (const sep::Cut& c : cuts)
        CHECK(row_value(c.row, x) < c.row.rhs - sep::kViolationTol);
}

TEST_CASE("directed separation cuts off an unreached terminal") {
    StochasticInstance t = fixtures::triangle();
    form::BuiltModel bm = form::build(form::Id::sdc2, t);
    std::vector<double> x(bm.lp.vars.size(), 0.0);
    x[bm.yk_var(0, Bidirection::forward(0))] = 1.0;  // 0 -> 1 only
    std::vector<sep::Cut> cuts = sep::separate_directed(bm, t, x);
    REQUIRE(!cuts.empty());
    bool saw_vertex2 = false;
    for (const sep::Cut& c : cuts) {
        CHECK(c.family == form::CutFamily::directed);
        CHECK(row_value(c.row, x) < c.row.rhs - sep::kViolationTol);
        for (int v : c.cut_set) saw_vertex2 = saw_vertex2 || v == 2;
    }
    CHECK(saw_vertex2);
}

TEST_CASE("tree cuts fire on a disconnected first-stage arc") {
    StochasticInstance pr = fixtures::path4_rooted();  // root 0, path 0-1-2-3
    form::BuiltModel bm = form::build(form::Id::dc2, pr);
    std::vector<double> x(bm.lp.vars.size(), 0.0);
    // first-stage arc 2 -> 3 with nothing connecting 2 to the root
    x[bm.z0_var(Bidirection::forward(2))] = 1.0;
    std::vector<sep::Cut> cuts = sep::separate_first_stage_tree(bm, pr, x);
    REQUIRE(!cuts.empty());
    for (const sep::Cut& c : cuts) {
        CHECK(c.family == form::CutFamily::first_stage_tree);
        CHECK(c.scenario == -1);
        CHECK(row_value(c.row, x) < c.row.rhs - sep::kViolationTol);
    }

    // a root arborescence satisfies every tree cut
    std::vector<double> y(bm.lp.vars.size(), 0.0);
    y[bm.z0_var(Bidirection::forward(0))] = 1.0;  // 0 -> 1
    y[bm.z0_var(Bidirection::forward(1))] = 1.0;  // 1 -> 2
    y[bm.z0_var(Bidirection::forward(2))] = 1.0;  // 2 -> 3
    CHECK(sep::separate_first_stage_tree(bm, pr, y).empty());
}

TEST_CASE("cut pool rejects repeats regardless of coefficient order") {
    sep::CutPool pool;
    lp::Model::Row a{{{0, 1.0}, {3, 2.0}}, 'G', 1.0};
    lp::Model::Row b{{{3, 2.0}, {0, 1.0}}, 'G', 1.0};  // same row, reordered
    CHECK(pool.insert(a));
    CHECK(!pool.insert(a));
    CHECK(!pool.insert(b));
    lp::Model::Row c{{{0, 1.0}, {3, 2.0}}, 'G', 2.0};  // different rhs
    CHECK(pool.insert(c));
    CHECK(pool.size() == 2);
}

TEST_CASE("engine never re-delivers a cut") {
    StochasticInstance t = fixtures::triangle();
    form::BuiltModel bm = form::build(form::Id::uc, t);
    sep::Engine eng(bm, t);
    std::vector<double> x(bm.lp.vars.size(), 0.0);
    std::vector<lp::Model::Row> first = eng.fresh_cuts(x);
    CHECK(!first.empty());
    std::vector<lp::Model::Row> second = eng.fresh_cuts(x);  // same point again
    CHECK(second.empty());
    CHECK(eng.rounds() == 2);
    CHECK(eng.counts().at(form::CutFamily::undirected) == (long long)first.size());
}

TEST_CASE("separation loop reaches the full relaxation bound") {
    StochasticInstance t = fixtures::triangle();
    form::BuiltModel bm = form::build(form::Id::uc, t);
    const std::size_t static_rows = bm.lp.rows.size();
    sep::LoopResult lr = sep::run_separation_loop(bm, t);
    REQUIRE(lr.solution.status == lp::Status::optimal);
    CHECK(lr.solution.objective == doctest::Approx(1.5));
    CHECK(lr.cuts_added > 0);
    CHECK(bm.lp.rows.size() == static_rows + (std::size_t)lr.cuts_added);
    // the returned point admits no violated family constraint anywhere
    CHECK(exp::enumerate_violations(bm, t, lr.solution.x).empty());
    CHECK(sep::separate_all(bm, t, lr.solution.x).empty());
}

TEST_CASE("cut rows only strengthen, never cut off integer points") {
    // integer-feasible point on the rooted path: buy everything everywhere
    StochasticInstance pr = fixtures::path4_rooted();
    form::BuiltModel bm = form::build(form::Id::dc1, pr);
    std::vector<double> zero(bm.lp.vars.size(), 0.0);
    for (const sep::Cut& c : sep::separate_all(bm, pr, zero)) {
        // arborescence 0->1->2->3 plus matching scenario arcs
        std::vector<double> point(bm.lp.vars.size(), 0.0);
        for (int e = 0; e < 3; ++e) {
            point[bm.z0_var(Bidirection::forward(e))] = 1.0;
            point[bm.zk_var(0, Bidirection::forward(e))] = 1.0;
        }
        CHECK(row_value(c.row, point) >= c.row.rhs - 1e-9);
    }
}
