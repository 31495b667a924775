#include "sstp/formulations.hpp"

#include <algorithm>
#include <stdexcept>

#include "sstp/separation.hpp"

namespace sstp::form {

const char* name(Id id) {
    switch (id) {
        case Id::uc: return "uc";
        case Id::uf: return "uf";
        case Id::sdc1: return "sdc1";
        case Id::sdc2: return "sdc2";
        case Id::sdc2star: return "sdc2star";
        case Id::sdf: return "sdf";
        case Id::dc1: return "dc1";
        case Id::dc2: return "dc2";
        case Id::dc2star: return "dc2star";
        case Id::df: return "df";
    }
    return "?";
}

std::optional<Id> from_name(std::string_view s) {
    for (Id id : kAllIds)
        if (s == name(id)) return id;
    return std::nullopt;
}

bool rooted_only(Id id) {
    return id == Id::dc1 || id == Id::dc2 || id == Id::dc2star || id == Id::df;
}

bool has_arc_block(Id id) { return id != Id::uc && id != Id::uf; }

bool is_flow_based(Id id) { return id == Id::uf || id == Id::sdf || id == Id::df; }

const char* family_name(CutFamily f) {
    switch (f) {
        case CutFamily::undirected: return "undirected_cuts";
        case CutFamily::semi_joint: return "semi_joint_cuts";
        case CutFamily::directed: return "directed_cuts";
        case CutFamily::first_stage_tree: return "tree_cuts";
    }
    return "?";
}

namespace {

std::string sub(const char* base, int i) {
    return std::string(base) + "[" + std::to_string(i) + "]";
}
std::string sub2(const char* base, int i, int j) {
    return sub(base, i) + "[" + std::to_string(j) + "]";
}
std::string sub3(const char* base, int i, int j, int k) {
    return sub2(base, i, j) + "[" + std::to_string(k) + "]";
}

}  // namespace

BuiltModel build(Id id, const StochasticInstance& inst) {
    if (rooted_only(id) && !inst.rooted())
        throw std::invalid_argument(std::string(name(id)) +
                                    " requires an instance with a global root");
    BuiltModel md;
    md.id = id;
    const Graph& g = inst.graph;
    Bidirection bd(g);
    DerivedCosts d = derive_costs(inst);

    const int n = g.vertex_count;
    const int m = g.edge_count();
    const int A = bd.arc_count();
    const int K = inst.scenario_count();
    md.vertex_count = n;
    md.edge_count = m;
    md.arc_count = A;
    md.K = K;
    md.root = inst.root.value_or(-1);
    md.scenario_roots = d.scenario_roots;
    md.flow_sinks = d.terminals_minus_root;

    const bool need_x0 = !rooted_only(id);
    const bool need_xk = id == Id::uc || id == Id::uf;
    const bool need_zk = id == Id::sdc1 || id == Id::dc1;
    const bool need_yk = id == Id::sdc2 || id == Id::sdc2star || id == Id::sdf ||
                         id == Id::dc2 || id == Id::dc2star || id == Id::df;
    const bool need_z0 = rooted_only(id);
    const bool need_wf0 = id == Id::df;
    const bool need_fk = is_flow_based(id);

    lp::Model& L = md.lp;

    if (need_x0) {
        md.x0 = static_cast<int>(L.vars.size());
        for (int e = 0; e < m; ++e) L.add_var(sub("x0", e), 0.0, 1.0, 0.0);
    }
    if (need_z0) {
        md.z0 = static_cast<int>(L.vars.size());
        for (int a = 0; a < A; ++a) L.add_var(sub("z0", a), 0.0, 1.0, 0.0);
    }
    if (need_xk) {
        md.xk = static_cast<int>(L.vars.size());
        for (int k = 0; k < K; ++k)
            for (int e = 0; e < m; ++e) L.add_var(sub2("xk", k, e), 0.0, 1.0, 0.0);
    }
    if (need_zk) {
        md.zk = static_cast<int>(L.vars.size());
        for (int k = 0; k < K; ++k)
            for (int a = 0; a < A; ++a) L.add_var(sub2("zk", k, a), 0.0, 1.0, 0.0);
    }
    if (need_yk) {
        md.yk = static_cast<int>(L.vars.size());
        for (int k = 0; k < K; ++k)
            for (int a = 0; a < A; ++a) L.add_var(sub2("yk", k, a), 0.0, 1.0, 0.0);
    }
    if (need_wf0) {
        for (int v = 0; v < n; ++v)
            if (v != md.root) md.nonroot_vertices.push_back(v);
        md.w0 = static_cast<int>(L.vars.size());
        for (int v : md.nonroot_vertices) L.add_var(sub("w0", v), 0.0, 1.0, 0.0);
        md.f0 = static_cast<int>(L.vars.size());
        for (int v : md.nonroot_vertices)
            for (int a = 0; a < A; ++a) L.add_var(sub2("f0", v, a), 0.0, 1.0, 0.0);
    }
    md.fk_base.assign(K, -1);
    if (need_fk) {
        for (int k = 0; k < K; ++k) {
            md.fk_base[k] = static_cast<int>(L.vars.size());
            for (int t : md.flow_sinks[k])
                for (int a = 0; a < A; ++a)
                    L.add_var(sub3("f", k, t, a), 0.0, 1.0, 0.0);
        }
    }

    // ----- static rows -----
    auto scenario_conservation = [&](int k, int ti, int sink) {
        // route one unit r^k -> sink on the scenario flow block
        for (int u = 0; u < n; ++u) {
            std::vector<std::pair<int, double>> coef;
            for (int a : bd.in_arcs(u)) coef.emplace_back(md.fk_var(k, ti, a), 1.0);
            for (int a : bd.out_arcs(u)) coef.emplace_back(md.fk_var(k, ti, a), -1.0);
            double rhs = u == sink ? 1.0 : (u == md.scenario_roots[k] ? -1.0 : 0.0);
            L.add_row(std::move(coef), 'E', rhs);
        }
    };

    switch (id) {
        case Id::uc:
            break;  // pure cut model
        case Id::uf:
            for (int k = 0; k < K; ++k)
                for (int ti = 0; ti < static_cast<int>(md.flow_sinks[k].size()); ++ti) {
                    scenario_conservation(k, ti, md.flow_sinks[k][ti]);
                    for (int e = 0; e < m; ++e) {
                        L.add_row({{md.x0_var(e), 1.0},
                                   {md.xk_var(k, e), 1.0},
                                   {md.fk_var(k, ti, Bidirection::forward(e)), -1.0}},
                                  'G', 0.0);
                        L.add_row({{md.x0_var(e), 1.0},
                                   {md.xk_var(k, e), 1.0},
                                   {md.fk_var(k, ti, Bidirection::backward(e)), -1.0}},
                                  'G', 0.0);
                    }
                }
            break;
        case Id::sdc1:
            for (int k = 0; k < K; ++k)
                for (int e = 0; e < m; ++e)
                    L.add_row({{md.zk_var(k, 2 * e), 1.0}, {md.zk_var(k, 2 * e + 1), 1.0}},
                              'L', 1.0);
            break;
        case Id::sdc2:
        case Id::sdc2star:
            for (int k = 0; k < K; ++k)
                for (int e = 0; e < m; ++e) {
                    L.add_row({{md.yk_var(k, 2 * e), 1.0},
                               {md.yk_var(k, 2 * e + 1), 1.0},
                               {md.x0_var(e), -1.0}},
                              'G', 0.0);
                    L.add_row({{md.yk_var(k, 2 * e), 1.0}, {md.yk_var(k, 2 * e + 1), 1.0}},
                              'L', 1.0);
                }
            break;
        case Id::sdf:
            for (int k = 0; k < K; ++k) {
                for (int ti = 0; ti < static_cast<int>(md.flow_sinks[k].size()); ++ti) {
                    scenario_conservation(k, ti, md.flow_sinks[k][ti]);
                    for (int a = 0; a < A; ++a)
                        L.add_row({{md.yk_var(k, a), 1.0}, {md.fk_var(k, ti, a), -1.0}},
                                  'G', 0.0);
                }
                for (int e = 0; e < m; ++e)
                    L.add_row({{md.yk_var(k, 2 * e), 1.0},
                               {md.yk_var(k, 2 * e + 1), 1.0},
                               {md.x0_var(e), -1.0}},
                              'G', 0.0);
            }
            break;
        case Id::dc1:
            for (int k = 0; k < K; ++k)
                for (int a = 0; a < A; ++a)
                    L.add_row({{md.z0_var(a), 1.0}, {md.zk_var(k, a), 1.0}}, 'L', 1.0);
            for (int v = 0; v < n; ++v) {
                if (v == md.root) continue;
                std::vector<std::pair<int, double>> coef;
                for (int a : bd.in_arcs(v)) coef.emplace_back(md.z0_var(a), 1.0);
                if (!coef.empty()) L.add_row(std::move(coef), 'L', 1.0);
            }
            break;
        case Id::dc2:
        case Id::dc2star:
            for (int k = 0; k < K; ++k)
                for (int a = 0; a < A; ++a)
                    L.add_row({{md.yk_var(k, a), 1.0}, {md.z0_var(a), -1.0}}, 'G', 0.0);
            for (int v = 0; v < n; ++v) {
                if (v == md.root) continue;
                std::vector<std::pair<int, double>> coef;
                for (int a : bd.in_arcs(v)) coef.emplace_back(md.z0_var(a), 1.0);
                if (!coef.empty()) L.add_row(std::move(coef), 'L', 1.0);
            }
            break;
        case Id::df: {
            const int R = static_cast<int>(md.nonroot_vertices.size());
            for (int idx = 0; idx < R; ++idx)
                for (int a = 0; a < A; ++a)
                    L.add_row({{md.z0_var(a), 1.0}, {md.f0_var(idx, a), -1.0}}, 'G', 0.0);
            for (int idx = 0; idx < R; ++idx) {
                int v = md.nonroot_vertices[idx];
                std::vector<std::pair<int, double>> coef{{md.w0_var(idx), 1.0}};
                for (int a : bd.in_arcs(v)) coef.emplace_back(md.z0_var(a), -1.0);
                L.add_row(std::move(coef), 'G', 0.0);
            }
            for (int idx = 0; idx < R; ++idx) {
                int v = md.nonroot_vertices[idx];
                // w0[v] units of first-stage flow from the root to v
                for (int u = 0; u < n; ++u) {
                    std::vector<std::pair<int, double>> coef;
                    for (int a : bd.in_arcs(u)) coef.emplace_back(md.f0_var(idx, a), 1.0);
                    for (int a : bd.out_arcs(u)) coef.emplace_back(md.f0_var(idx, a), -1.0);
                    if (u == md.root) coef.emplace_back(md.w0_var(idx), 1.0);
                    else if (u == v) coef.emplace_back(md.w0_var(idx), -1.0);
                    L.add_row(std::move(coef), 'E', 0.0);
                }
            }
            for (int k = 0; k < K; ++k) {
                for (int a = 0; a < A; ++a)
                    L.add_row({{md.yk_var(k, a), 1.0}, {md.z0_var(a), -1.0}}, 'G', 0.0);
                for (int ti = 0; ti < static_cast<int>(md.flow_sinks[k].size()); ++ti) {
                    for (int a = 0; a < A; ++a)
                        L.add_row({{md.yk_var(k, a), 1.0}, {md.fk_var(k, ti, a), -1.0}},
                                  'G', 0.0);
                    scenario_conservation(k, ti, md.flow_sinks[k][ti]);
                }
            }
            break;
        }
    }

    // ----- objective, integrality masks, separation families -----
    std::vector<std::vector<Rat>> scen_costs;
    for (const Scenario& sc : inst.scenarios) scen_costs.push_back(sc.edge_costs);
    std::vector<double> obj = objective_for(md, inst, inst.first_stage_cost, scen_costs);
    for (std::size_t j = 0; j < L.vars.size(); ++j) L.vars[j].obj = obj[j];

    auto push_range = [](std::vector<int>& dst, int base, int count) {
        for (int i = 0; i < count; ++i) dst.push_back(base + i);
    };
    if (md.x0 >= 0) {
        push_range(md.integer_vars, md.x0, m);
        push_range(md.first_stage_vars, md.x0, m);
    }
    if (md.z0 >= 0) {
        push_range(md.integer_vars, md.z0, A);
        push_range(md.first_stage_vars, md.z0, A);
    }
    if (md.xk >= 0) push_range(md.integer_vars, md.xk, K * m);
    if (md.zk >= 0) push_range(md.integer_vars, md.zk, K * A);
    if (md.yk >= 0) push_range(md.integer_vars, md.yk, K * A);
    if (md.w0 >= 0) {
        push_range(md.integer_vars, md.w0, static_cast<int>(md.nonroot_vertices.size()));
        push_range(md.first_stage_vars, md.w0,
                   static_cast<int>(md.nonroot_vertices.size()));
    }

    switch (id) {
        case Id::uc: md.families = {CutFamily::undirected}; break;
        case Id::sdc1: md.families = {CutFamily::semi_joint}; break;
        case Id::sdc2:
        case Id::sdc2star: md.families = {CutFamily::directed}; break;
        case Id::dc1:
            md.families = {CutFamily::first_stage_tree, CutFamily::semi_joint};
            break;
        case Id::dc2:
        case Id::dc2star:
            md.families = {CutFamily::first_stage_tree, CutFamily::directed};
            break;
        default: break;  // flow-based: fully static
    }
    return md;
}

std::vector<double> objective_for(const BuiltModel& md,
                                  const StochasticInstance& inst,
                                  const std::vector<Rat>& c0,
                                  const std::vector<std::vector<Rat>>& ck) {
    const int m = md.edge_count;
    const int A = md.arc_count;
    const int K = md.K;
    std::vector<Rat> expected(m, Rat(0));
    for (int k = 0; k < K; ++k)
        for (int e = 0; e < m; ++e)
            expected[e] += inst.scenarios[k].probability * ck[k][e];

    std::vector<double> obj(md.lp.vars.size(), 0.0);
    const bool corrected = md.id == Id::sdc2 || md.id == Id::sdc2star ||
                           md.id == Id::sdf || md.id == Id::dc2 ||
                           md.id == Id::dc2star || md.id == Id::df;
    if (md.x0 >= 0)
        for (int e = 0; e < m; ++e)
            obj[md.x0_var(e)] = to_double(corrected ? c0[e] - expected[e] : c0[e]);
    if (md.z0 >= 0)
        for (int a = 0; a < A; ++a) {
            int e = Bidirection::edge_of(a);
            obj[md.z0_var(a)] = to_double(corrected ? c0[e] - expected[e] : c0[e]);
        }
    for (int k = 0; k < K; ++k) {
        const Rat p = inst.scenarios[k].probability;
        if (md.xk >= 0)
            for (int e = 0; e < m; ++e) obj[md.xk_var(k, e)] = to_double(p * ck[k][e]);
        if (md.zk >= 0)
            for (int a = 0; a < A; ++a)
                obj[md.zk_var(k, a)] = to_double(p * ck[k][Bidirection::edge_of(a)]);
        if (md.yk >= 0)
            for (int a = 0; a < A; ++a)
                obj[md.yk_var(k, a)] = to_double(p * ck[k][Bidirection::edge_of(a)]);
    }
    return obj;
}

void add_valid_inequalities(BuiltModel& md, const StochasticInstance& inst) {
    if (!has_arc_block(md.id))
        throw std::invalid_argument(std::string(name(md.id)) +
                                    " has no arc variables to strengthen");
    const Graph& g = inst.graph;
    Bidirection bd(g);
    DerivedCosts d = derive_costs(inst);
    lp::Model& L = md.lp;
    const int n = g.vertex_count;
    const int m = g.edge_count();
    const int K = md.K;

    auto indeg_row = [&](auto var_of, int v) {
        std::vector<std::pair<int, double>> coef;
        for (int a : bd.in_arcs(v)) coef.emplace_back(var_of(a), 1.0);
        return coef;
    };
    auto outdeg_row = [&](auto var_of, int v) {
        std::vector<std::pair<int, double>> coef;
        for (int a : bd.out_arcs(v)) coef.emplace_back(var_of(a), 1.0);
        return coef;
    };

    for (int k = 0; k < K; ++k) {
        const int rk = md.scenario_roots[k];
        const std::vector<int>& tkr = d.terminals_minus_root[k];
        auto is_extra_terminal = [&](int v) {
            return std::binary_search(tkr.begin(), tkr.end(), v);
        };
        if (md.yk >= 0) {
            auto yv = [&](int a) { return md.yk_var(k, a); };
            if (md.id != Id::sdc2 && md.id != Id::sdc2star)  // already static there
                for (int e = 0; e < m; ++e)
                    L.add_row({{yv(2 * e), 1.0}, {yv(2 * e + 1), 1.0}}, 'L', 1.0);
            if (auto c = indeg_row(yv, rk); !c.empty()) L.add_row(std::move(c), 'E', 0.0);
            if (!tkr.empty()) {
                if (auto c = outdeg_row(yv, rk); !c.empty())
                    L.add_row(std::move(c), 'G', 1.0);
                for (int t : tkr)
                    if (auto c = indeg_row(yv, t); !c.empty())
                        L.add_row(std::move(c), 'E', 1.0);
            }
            for (int v = 0; v < n; ++v) {
                if (v == rk || is_extra_terminal(v)) continue;
                if (auto c = indeg_row(yv, v); !c.empty()) L.add_row(std::move(c), 'L', 1.0);
            }
        } else {
            // recourse-only arc block: orientation constraints that never touch
            // edges bought in stage one
            auto zv = [&](int a) { return md.zk_var(k, a); };
            if (auto c = indeg_row(zv, rk); !c.empty()) L.add_row(std::move(c), 'E', 0.0);
            for (int v = 0; v < n; ++v) {
                if (v == rk) continue;
                if (auto c = indeg_row(zv, v); !c.empty()) L.add_row(std::move(c), 'L', 1.0);
            }
        }
    }
    if (md.z0 >= 0) {
        auto z0v = [&](int a) { return md.z0_var(a); };
        for (int e = 0; e < m; ++e)
            L.add_row({{z0v(2 * e), 1.0}, {z0v(2 * e + 1), 1.0}}, 'L', 1.0);
        if (auto c = indeg_row(z0v, md.root); !c.empty()) L.add_row(std::move(c), 'E', 0.0);
        if (md.id == Id::df)  // dc1/dc2 carry these statically
            for (int v = 0; v < n; ++v) {
                if (v == md.root) continue;
                if (auto c = indeg_row(z0v, v); !c.empty())
                    L.add_row(std::move(c), 'L', 1.0);
            }
    }
}

EdgeSolution project_solution(const BuiltModel& md, const std::vector<double>& x) {
    EdgeSolution s;
    const int m = md.edge_count;
    const int K = md.K;
    s.first_stage.assign(m, 0);
    s.second_stage.assign(K, std::vector<char>(m, 0));
    auto pair_val = [&](int base, int e) { return x[base + 2 * e] + x[base + 2 * e + 1]; };

    std::vector<double> first_val(m, 0.0);
    for (int e = 0; e < m; ++e) {
        if (md.x0 >= 0) first_val[e] = x[md.x0_var(e)];
        else first_val[e] = pair_val(md.z0, e);
        s.first_stage[e] = first_val[e] > 0.5;
    }
    for (int k = 0; k < K; ++k)
        for (int e = 0; e < m; ++e) {
            double v = 0.0;
            if (md.xk >= 0) v = x[md.xk_var(k, e)];
            else if (md.zk >= 0) v = x[md.zk_var(k, 2 * e)] + x[md.zk_var(k, 2 * e + 1)];
            else v = x[md.yk_var(k, 2 * e)] + x[md.yk_var(k, 2 * e + 1)] - first_val[e];
            s.second_stage[k][e] = v > 0.5;
        }
    return s;
}

BalanceDemo flow_balance_invalidity_demo(const StochasticInstance& inst) {
    const Id id = inst.rooted() ? Id::dc2 : Id::sdc2;
    auto solve_ip = [&](BuiltModel& bm) {
        sep::Engine eng(bm, inst);
        lp::MipResult r = lp::solve_mip(bm.lp, bm.integer_vars, eng.oracle());
        if (r.status != lp::Status::optimal)
            throw std::runtime_error("balance demo solve failed: " +
                                     std::string(lp::status_name(r.status)));
        return r.objective;
    };

    BalanceDemo demo;
    BuiltModel plain = build(id, inst);
    demo.plain_opt = solve_ip(plain);

    BuiltModel with = build(id, inst);
    Bidirection bd(inst.graph);
    if (inst.rooted()) {
        // outflow >= inflow on the first-stage orientation at every non-root
        for (int v = 0; v < inst.graph.vertex_count; ++v) {
            if (v == *inst.root) continue;
            std::vector<std::pair<int, double>> coef;
            for (int a : bd.out_arcs(v)) coef.emplace_back(with.z0_var(a), 1.0);
            for (int a : bd.in_arcs(v)) coef.emplace_back(with.z0_var(a), -1.0);
            if (!coef.empty()) with.lp.add_row(std::move(coef), 'G', 0.0);
        }
    } else {
        // per scenario at every non-terminal, on the combined orientation
        for (int k = 0; k < inst.scenario_count(); ++k) {
            const auto& terms = inst.scenarios[k].terminals;
            for (int v = 0; v < inst.graph.vertex_count; ++v) {
                if (std::binary_search(terms.begin(), terms.end(), v)) continue;
                std::vector<std::pair<int, double>> coef;
                for (int a : bd.out_arcs(v)) coef.emplace_back(with.yk_var(k, a), 1.0);
                for (int a : bd.in_arcs(v)) coef.emplace_back(with.yk_var(k, a), -1.0);
                if (!coef.empty()) with.lp.add_row(std::move(coef), 'G', 0.0);
            }
        }
    }
    demo.with_balance_opt = solve_ip(with);
    return demo;
}

}  // namespace sstp::form
