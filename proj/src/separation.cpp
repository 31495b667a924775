#include "sstp/separation.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "sstp/flow.hpp"

namespace sstp::sep {

namespace {

// one fixed-point coefficient scale for fingerprinting
long long scaled(double v) { return std::llround(v * 1048576.0); }

std::vector<int> sink_side(const std::vector<char>& source_side) {
    std::vector<int> s;
    for (int v = 0; v < static_cast<int>(source_side.size()); ++v)
        if (!source_side[v]) s.push_back(v);
    return s;
}

}  // namespace

std::vector<Cut> separate_undirected(const form::BuiltModel& md,
                                     const StochasticInstance& inst,
                                     const std::vector<double>& x) {
    std::vector<Cut> cuts;
    const Graph& g = inst.graph;
    for (int k = 0; k < md.K; ++k) {
        for (int t : md.flow_sinks[k]) {
            flow::CapGraph cg(g.vertex_count);
            for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
                double cap = x[md.x0_var(e)] + x[md.xk_var(k, e)];
                cg.add_arc(g.edges[e].first, g.edges[e].second, cap);
                cg.add_arc(g.edges[e].second, g.edges[e].first, cap);
            }
            flow::MinCutResult mc = flow::max_flow_min_cut(cg, md.scenario_roots[k], t);
            if (mc.value >= 1.0 - kViolationTol) continue;
            Cut c;
            for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
                if (mc.source_side[g.edges[e].first] != mc.source_side[g.edges[e].second]) {
                    c.row.coef.emplace_back(md.x0_var(e), 1.0);
                    c.row.coef.emplace_back(md.xk_var(k, e), 1.0);
                }
            c.row.sense = 'G';
            c.row.rhs = 1.0;
            c.family = form::CutFamily::undirected;
            c.scenario = k;
            c.target = t;
            c.cut_set = sink_side(mc.source_side);
            cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

std::vector<Cut> separate_semi_joint(const form::BuiltModel& md,
                                     const StochasticInstance& inst,
                                     const std::vector<double>& x) {
    std::vector<Cut> cuts;
    Bidirection bd(inst.graph);
    auto first_stage_var = [&](int a) {
        return md.x0 >= 0 ? md.x0_var(Bidirection::edge_of(a)) : md.z0_var(a);
    };
    for (int k = 0; k < md.K; ++k) {
        for (int t : md.flow_sinks[k]) {
            flow::CapGraph cg(bd.n);
            for (int a = 0; a < bd.arc_count(); ++a)
                cg.add_arc(bd.tail(a), bd.head(a),
                           x[first_stage_var(a)] + x[md.zk_var(k, a)]);
            flow::MinCutResult mc = flow::max_flow_min_cut(cg, md.scenario_roots[k], t);
            if (mc.value >= 1.0 - kViolationTol) continue;
            Cut c;
            for (int a = 0; a < bd.arc_count(); ++a)
                if (mc.source_side[bd.tail(a)] && !mc.source_side[bd.head(a)]) {
                    c.row.coef.emplace_back(first_stage_var(a), 1.0);
                    c.row.coef.emplace_back(md.zk_var(k, a), 1.0);
                }
            c.row.sense = 'G';
            c.row.rhs = 1.0;
            c.family = form::CutFamily::semi_joint;
            c.scenario = k;
            c.target = t;
            c.cut_set = sink_side(mc.source_side);
            cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

std::vector<Cut> separate_directed(const form::BuiltModel& md,
                                   const StochasticInstance& inst,
                                   const std::vector<double>& x) {
    std::vector<Cut> cuts;
    Bidirection bd(inst.graph);
    for (int k = 0; k < md.K; ++k) {
        for (int t : md.flow_sinks[k]) {
            flow::CapGraph cg(bd.n);
            for (int a = 0; a < bd.arc_count(); ++a)
                cg.add_arc(bd.tail(a), bd.head(a), x[md.yk_var(k, a)]);
            flow::MinCutResult mc = flow::max_flow_min_cut(cg, md.scenario_roots[k], t);
            if (mc.value >= 1.0 - kViolationTol) continue;
            Cut c;
            for (int a = 0; a < bd.arc_count(); ++a)
                if (mc.source_side[bd.tail(a)] && !mc.source_side[bd.head(a)])
                    c.row.coef.emplace_back(md.yk_var(k, a), 1.0);
            c.row.sense = 'G';
            c.row.rhs = 1.0;
            c.family = form::CutFamily::directed;
            c.scenario = k;
            c.target = t;
            c.cut_set = sink_side(mc.source_side);
            cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

std::vector<Cut> separate_first_stage_tree(const form::BuiltModel& md,
                                           const StochasticInstance& inst,
                                           const std::vector<double>& x) {
    std::vector<Cut> cuts;
    Bidirection bd(inst.graph);
    for (int v = 0; v < bd.n; ++v) {
        if (v == md.root) continue;
        double indeg = 0.0;
        for (int a : bd.in_arcs(v)) indeg += x[md.z0_var(a)];
        if (indeg <= kViolationTol) continue;
        flow::CapGraph cg(bd.n);
        for (int a = 0; a < bd.arc_count(); ++a)
            cg.add_arc(bd.tail(a), bd.head(a), x[md.z0_var(a)]);
        flow::MinCutResult mc = flow::max_flow_min_cut(cg, md.root, v);
        if (mc.value >= indeg - kViolationTol) continue;
        // z0(into S) - z0(into v) >= 0; arcs entering v from inside S keep a
        // net -1, those from outside cancel. Violation guarantees the merged
        // row is nonempty.
        std::map<int, double> merged;
        for (int a = 0; a < bd.arc_count(); ++a)
            if (mc.source_side[bd.tail(a)] && !mc.source_side[bd.head(a)])
                merged[md.z0_var(a)] += 1.0;
        for (int a : bd.in_arcs(v)) merged[md.z0_var(a)] -= 1.0;
        Cut c;
        for (auto [col, coef] : merged)
            if (coef != 0.0) c.row.coef.emplace_back(col, coef);
        c.row.sense = 'G';
        c.row.rhs = 0.0;
        c.family = form::CutFamily::first_stage_tree;
        c.scenario = -1;
        c.target = v;
        c.cut_set = sink_side(mc.source_side);
        cuts.push_back(std::move(c));
    }
    return cuts;
}

std::vector<Cut> separate_all(const form::BuiltModel& md,
                              const StochasticInstance& inst,
                              const std::vector<double>& x) {
    std::vector<Cut> all;
    for (form::CutFamily f : md.families) {
        std::vector<Cut> part;
        switch (f) {
            case form::CutFamily::undirected: part = separate_undirected(md, inst, x); break;
            case form::CutFamily::semi_joint: part = separate_semi_joint(md, inst, x); break;
            case form::CutFamily::directed: part = separate_directed(md, inst, x); break;
            case form::CutFamily::first_stage_tree:
                part = separate_first_stage_tree(md, inst, x);
                break;
        }
        for (Cut& c : part) all.push_back(std::move(c));
    }
    return all;
}

bool CutPool::insert(const lp::Model::Row& row) {
    std::map<int, double> merged;
    for (auto [col, coef] : row.coef) merged[col] += coef;
    std::string key(1, row.sense);
    key += std::to_string(scaled(row.rhs));
    for (auto [col, coef] : merged) {
        key += ';';
        key += std::to_string(col);
        key += ',';
        key += std::to_string(scaled(coef));
    }
    return seen_.insert(std::move(key)).second;
}

void CutPool::seed(const lp::Model& m) {
    for (const lp::Model::Row& r : m.rows) insert(r);
}

Engine::Engine(const form::BuiltModel& model, const StochasticInstance& inst)
    : model_(model), inst_(inst) {
    pool_.seed(model.lp);
}

std::vector<lp::Model::Row> Engine::fresh_cuts(const std::vector<double>& x) {
    ++rounds_;
    std::vector<lp::Model::Row> rows;
    for (Cut& c : separate_all(model_, inst_, x)) {
        if (!pool_.insert(c.row)) continue;
        ++counts_[c.family];
        rows.push_back(std::move(c.row));
    }
    return rows;
}

lp::CutOracle Engine::oracle() {
    return [this](const std::vector<double>& x) { return fresh_cuts(x); };
}

LoopResult run_separation_loop(form::BuiltModel& model, const StochasticInstance& inst,
                               int round_limit) {
    Engine eng(model, inst);
    LoopResult out;
    for (int r = 0; r < round_limit; ++r) {
        out.solution = lp::solve_lp(model.lp);
        if (out.solution.status != lp::Status::optimal) break;
        std::vector<lp::Model::Row> rows = eng.fresh_cuts(out.solution.x);
        if (rows.empty()) break;
        for (lp::Model::Row& row : rows) {
            out.cuts_added += 1;
            model.lp.add_row(std::move(row.coef), row.sense, row.rhs);
        }
    }
    out.rounds = eng.rounds();
    out.counts = eng.counts();
    return out;
}

}  // namespace sstp::sep
