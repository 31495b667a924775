#include "sstp/experiments.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "sstp/oracle.hpp"
#include "sstp/separation.hpp"

namespace sstp::exp {

namespace {

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

ComparisonTable compare(const StochasticInstance& inst,
                        const std::vector<form::Id>& ids, bool with_ip) {
    ComparisonTable table;
    for (form::Id id : ids) {
        const double t0 = now_s();
        form::BuiltModel bm = form::build(id, inst);
        sep::LoopResult lr = sep::run_separation_loop(bm, inst);
        FormulationRun run;
        run.id = id;
        run.lp_status = lr.solution.status;
        run.lp_bound = lr.solution.objective;
        run.cuts = lr.cuts_added;
        run.rounds = lr.rounds;
        if (lr.solution.status != lp::Status::optimal)
            table.flags.push_back(std::string(form::name(id)) +
                                  ": LP relaxation ended with status " +
                                  lp::status_name(lr.solution.status));
        if (with_ip) {
            sep::Engine eng(bm, inst);  // pool already holds the loop's rows
            lp::MipResult mr = lp::solve_mip(bm.lp, bm.integer_vars, eng.oracle());
            if (mr.status == lp::Status::optimal) {
                run.ip_value = mr.objective;
                run.nodes = mr.nodes;
                run.cuts += mr.cuts_added;
            } else {
                table.flags.push_back(std::string(form::name(id)) +
                                      ": branch-and-cut ended with status " +
                                      lp::status_name(mr.status));
            }
        }
        run.seconds = now_s() - t0;
        table.runs.push_back(std::move(run));
    }

    auto bound = [&](form::Id id) -> std::optional<double> {
        for (const FormulationRun& r : table.runs)
            if (r.id == id && r.lp_status == lp::Status::optimal) return r.lp_bound;
        return std::nullopt;
    };
    auto flag_eq = [&](form::Id a, form::Id b) {
        auto x = bound(a), y = bound(b);
        if (x && y && std::abs(*x - *y) > kCompareTol)
            table.flags.push_back("LP(" + std::string(form::name(a)) + ")=" + fmt(*x) +
                                  " differs from LP(" + form::name(b) + ")=" + fmt(*y));
    };
    auto flag_le = [&](form::Id a, form::Id b) {
        auto x = bound(a), y = bound(b);
        if (x && y && *x > *y + kCompareTol)
            table.flags.push_back("LP(" + std::string(form::name(a)) + ")=" + fmt(*x) +
                                  " exceeds LP(" + form::name(b) + ")=" + fmt(*y));
    };
    flag_eq(form::Id::uc, form::Id::uf);
    flag_le(form::Id::uc, form::Id::sdc1);
    flag_le(form::Id::sdc1, form::Id::sdc2);
    flag_le(form::Id::uc, form::Id::sdc2);
    flag_eq(form::Id::sdc2, form::Id::sdc2star);
    flag_eq(form::Id::sdc2, form::Id::sdf);
    flag_eq(form::Id::sdc2star, form::Id::sdf);
    flag_eq(form::Id::dc1, form::Id::dc2);
    flag_eq(form::Id::dc1, form::Id::dc2star);
    flag_eq(form::Id::dc1, form::Id::df);
    flag_eq(form::Id::dc2, form::Id::dc2star);
    flag_eq(form::Id::dc2, form::Id::df);
    flag_eq(form::Id::dc2star, form::Id::df);

    for (const FormulationRun& r : table.runs)
        if (r.ip_value && r.lp_status == lp::Status::optimal &&
            r.lp_bound > *r.ip_value + kCompareTol)
            table.flags.push_back(std::string(form::name(r.id)) + ": LP bound " +
                                  fmt(r.lp_bound) + " exceeds IP value " +
                                  fmt(*r.ip_value));
    // IPs agree inside each variant group (the rooted tree requirement makes
    // rooted and unrooted optima genuinely different values)
    for (bool rooted_group : {false, true}) {
        std::optional<double> first;
        form::Id first_id{};
        for (const FormulationRun& r : table.runs) {
            if (!r.ip_value || form::rooted_only(r.id) != rooted_group) continue;
            if (!first) {
                first = *r.ip_value;
                first_id = r.id;
            } else if (std::abs(*r.ip_value - *first) > kCompareTol) {
                table.flags.push_back("IP(" + std::string(form::name(r.id)) + ")=" +
                                      fmt(*r.ip_value) + " differs from IP(" +
                                      form::name(first_id) + ")=" + fmt(*first));
            }
        }
    }
    return table;
}

IntegralityResult test_first_stage_integrality(const StochasticInstance& inst,
                                               form::Id id) {
    if (id != form::Id::sdc2 && id != form::Id::dc2 && id != form::Id::dc1)
        throw std::invalid_argument(
            "first-stage integrality testing supports sdc2, dc1, and dc2");
    if (id == form::Id::dc2) {
        CostAssumptions ca = check_cost_assumptions(inst);
        if (!ca.all_below_expected)
            throw std::invalid_argument(
                "dc2 first-stage integrality requires first-stage costs strictly "
                "below expected scenario costs on every edge");
    }
    form::BuiltModel bm = form::build(id, inst);
    std::vector<int> mask;
    std::set_difference(bm.integer_vars.begin(), bm.integer_vars.end(),
                        bm.first_stage_vars.begin(), bm.first_stage_vars.end(),
                        std::back_inserter(mask));
    sep::Engine eng(bm, inst);
    lp::MipResult mr = lp::solve_mip(bm.lp, mask, eng.oracle());
    if (mr.status != lp::Status::optimal)
        throw std::runtime_error(std::string("first-stage-relaxed solve failed: ") +
                                 lp::status_name(mr.status));
    IntegralityResult res;
    res.relaxed_objective = mr.objective;
    res.integral = true;
    for (int j : bm.first_stage_vars) {
        double v = mr.x[j];
        res.first_stage_values.push_back(v);
        if (std::abs(v - std::round(v)) > lp::Tol::integrality) res.integral = false;
    }
    return res;
}

StochasticInstance generate_random_instance(const GenConfig& cfg) {
    if (cfg.vertices < 2) throw std::invalid_argument("need at least two vertices");
    if (cfg.scenarios < 1) throw std::invalid_argument("need at least one scenario");
    std::mt19937_64 rng(cfg.seed);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const int n = cfg.vertices;
    const long long keep = std::llround(cfg.edge_prob * 1000000.0);

    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < 64; ++attempt) {
        edges.clear();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (static_cast<long long>(rng() % 1000000) < keep)
                    edges.emplace_back(i, j);
        DisjointSets ds(n);
        int comps = n;
        for (auto [i, j] : edges)
            if (ds.unite(i, j)) --comps;
        if (comps == 1) break;
        if (attempt == 63) {
            for (int i = 0; i < n && comps > 1; ++i)
                for (int j = i + 1; j < n && comps > 1; ++j)
                    if (ds.find(i) != ds.find(j)) {
                        edges.emplace_back(i, j);
                        ds.unite(i, j);
                        --comps;
                    }
            std::sort(edges.begin(), edges.end());
        }
    }

    StochasticInstance inst;
    inst.graph.vertex_count = n;
    inst.graph.edges = edges;
    const int m = inst.graph.edge_count();
    inst.first_stage_cost.resize(m);
    for (int e = 0; e < m; ++e) inst.first_stage_cost[e] = Rat(rnd(1, 20));

    int root = cfg.rooted ? rnd(0, n - 1) : -1;

    std::vector<long long> weights(cfg.scenarios);
    long long wsum = 0;
    for (auto& w : weights) {
        w = rnd(1, 9);
        wsum += w;
    }
    for (int k = 0; k < cfg.scenarios; ++k) {
        Scenario sc;
        sc.probability = Rat(weights[k], wsum);
        sc.edge_costs.resize(m);
        for (int e = 0; e < m; ++e) sc.edge_costs[e] = Rat(rnd(1, 20));
        const int smax = std::min(n, 5);
        const int s = rnd(2, std::max(2, smax));
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < s; ++i) std::swap(pool[i], pool[rnd(i, n - 1)]);
        sc.terminals.assign(pool.begin(), pool.begin() + std::min(s, n));
        if (cfg.rooted &&
            std::find(sc.terminals.begin(), sc.terminals.end(), root) ==
                sc.terminals.end())
            sc.terminals.push_back(root);
        std::sort(sc.terminals.begin(), sc.terminals.end());
        inst.scenarios.push_back(std::move(sc));
    }
    if (cfg.rooted) inst.root = root;

    if (cfg.regime == CostRegime::enforce_c0_below_cstar) {
        DerivedCosts d = derive_costs(inst);
        for (int e = 0; e < m; ++e)
            while (inst.first_stage_cost[e] >= d.expected_cost[e])
                inst.first_stage_cost[e] -= 1;
    }
    return inst;
}

std::vector<std::string> enumerate_violations(const form::BuiltModel& md,
                                              const StochasticInstance& inst,
                                              const std::vector<double>& x) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count;
    if (n > 20)
        throw std::invalid_argument("exhaustive cut enumeration limited to 20 vertices");
    Bidirection bd(g);
    DerivedCosts d = derive_costs(inst);
    std::vector<std::string> out;
    auto in_set = [](unsigned mask, int v) { return (mask >> v & 1u) != 0; };
    auto set_name = [&](unsigned mask) {
        std::string s = "{";
        for (int v = 0; v < n; ++v)
            if (in_set(mask, v)) {
                if (s.size() > 1) s += ',';
                s += std::to_string(v);
            }
        return s + "}";
    };

    for (form::CutFamily fam : md.families) {
        if (fam == form::CutFamily::first_stage_tree) {
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                if (in_set(mask, md.root)) continue;
                double cut = 0.0;
                for (int a = 0; a < bd.arc_count(); ++a)
                    if (!in_set(mask, bd.tail(a)) && in_set(mask, bd.head(a)))
                        cut += x[md.z0_var(a)];
                for (int v = 0; v < n; ++v) {
                    if (!in_set(mask, v)) continue;
                    double indeg = 0.0;
                    for (int a : bd.in_arcs(v)) indeg += x[md.z0_var(a)];
                    if (cut < indeg - sep::kViolationTol)
                        out.push_back("tree cut violated: S=" + set_name(mask) +
                                      " v=" + std::to_string(v) + " cut=" + fmt(cut) +
                                      " indeg=" + fmt(indeg));
                }
            }
            continue;
        }
        for (int k = 0; k < md.K; ++k) {
            const int rk = md.scenario_roots[k];
            const auto& tkr = d.terminals_minus_root[k];
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                if (in_set(mask, rk)) continue;
                bool hits_terminal = false;
                for (int t : tkr) hits_terminal = hits_terminal || in_set(mask, t);
                if (!hits_terminal) continue;
                double val = 0.0;
                switch (fam) {
                    case form::CutFamily::undirected:
                        for (int e = 0; e < g.edge_count(); ++e)
                            if (in_set(mask, g.edges[e].first) !=
                                in_set(mask, g.edges[e].second))
                                val += x[md.x0_var(e)] + x[md.xk_var(k, e)];
                        break;
                    case form::CutFamily::semi_joint:
                        for (int a = 0; a < bd.arc_count(); ++a)
                            if (!in_set(mask, bd.tail(a)) && in_set(mask, bd.head(a)))
                                val += (md.x0 >= 0
                                            ? x[md.x0_var(Bidirection::edge_of(a))]
                                            : x[md.z0_var(a)]) +
                                       x[md.zk_var(k, a)];
                        break;
                    case form::CutFamily::directed:
                        for (int a = 0; a < bd.arc_count(); ++a)
                            if (!in_set(mask, bd.tail(a)) && in_set(mask, bd.head(a)))
                                val += x[md.yk_var(k, a)];
                        break;
                    default:
                        break;
                }
                if (val < 1.0 - sep::kViolationTol)
                    out.push_back(std::string(form::family_name(fam)) +
                                  " violated: scenario " + std::to_string(k) +
                                  " S=" + set_name(mask) + " value=" + fmt(val));
            }
        }
    }
    return out;
}

namespace {

// cut-model LP sweep state: rows accumulate across objective swaps, the pool
// guarantees no duplicates, the basis survives objective changes
struct SweepState {
    form::BuiltModel bm;
    lp::IncrementalLp incr;
    std::optional<sep::Engine> eng;

    SweepState(form::Id id, const StochasticInstance& inst)
        : bm(form::build(id, inst)), incr(bm.lp) {
        if (!bm.families.empty()) eng.emplace(bm, inst);
    }

    lp::Solution solve_to_separation_fixpoint() {
        while (true) {
            lp::Solution sol = incr.solve();
            if (sol.status != lp::Status::optimal || !eng) return sol;
            std::vector<lp::Model::Row> rows = eng->fresh_cuts(sol.x);
            if (rows.empty()) return sol;
            for (lp::Model::Row& row : rows) incr.add_row(std::move(row));
        }
    }
};

}  // namespace

std::vector<std::string> hierarchy_suite(int count, std::uint64_t seed_base,
                                         int perturbations) {
    const std::vector<form::Id> ids = {form::Id::uc,   form::Id::uf,
                                       form::Id::sdc1, form::Id::sdc2,
                                       form::Id::sdc2star, form::Id::sdf};
    std::vector<std::string> fails;
    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.seed = seed_base + static_cast<std::uint64_t>(i);
        cfg.vertices = 5 + i % 6;
        cfg.edge_prob = 0.45;
        cfg.scenarios = 1 + i % 3;
        StochasticInstance inst = generate_random_instance(cfg);
        const int m = inst.graph.edge_count();
        const int K = inst.scenario_count();

        std::vector<std::unique_ptr<SweepState>> states;
        for (form::Id id : ids) states.push_back(std::make_unique<SweepState>(id, inst));

        std::mt19937_64 prng(cfg.seed * 0x9e3779b97f4a7c15ULL + 12345);
        auto cost = [&] { return Rat(1 + static_cast<long long>(prng() % 20)); };

        for (int j = 0; j <= perturbations; ++j) {
            std::vector<Rat> c0(m);
            std::vector<std::vector<Rat>> ck(K, std::vector<Rat>(m));
            if (j == 0) {
                c0 = inst.first_stage_cost;
                for (int k = 0; k < K; ++k) ck[k] = inst.scenarios[k].edge_costs;
            } else {
                for (int e = 0; e < m; ++e) c0[e] = cost();
                for (int k = 0; k < K; ++k)
                    for (int e = 0; e < m; ++e) ck[k][e] = cost();
            }

            std::vector<double> bounds(ids.size(), 0.0);
            bool solved = true;
            for (std::size_t s = 0; s < states.size(); ++s) {
                states[s]->incr.set_objective(
                    form::objective_for(states[s]->bm, inst, c0, ck));
                lp::Solution sol = states[s]->solve_to_separation_fixpoint();
                if (sol.status != lp::Status::optimal) {
                    fails.push_back("instance " + std::to_string(i) + " objective " +
                                    std::to_string(j) + " " + form::name(ids[s]) +
                                    ": LP status " + lp::status_name(sol.status));
                    solved = false;
                    break;
                }
                bounds[s] = sol.objective;
            }
            if (!solved) continue;

            auto note = [&](const std::string& what) {
                fails.push_back("instance " + std::to_string(i) + " objective " +
                                std::to_string(j) + ": " + what + " [uc=" +
                                fmt(bounds[0]) + " uf=" + fmt(bounds[1]) + " sdc1=" +
                                fmt(bounds[2]) + " sdc2=" + fmt(bounds[3]) +
                                " sdc2star=" + fmt(bounds[4]) + " sdf=" +
                                fmt(bounds[5]) + "]");
            };
            if (std::abs(bounds[0] - bounds[1]) > kCompareTol) note("LP(uc) != LP(uf)");
            if (bounds[0] > bounds[2] + kCompareTol) note("LP(uc) > LP(sdc1)");
            if (bounds[2] > bounds[3] + kCompareTol) note("LP(sdc1) > LP(sdc2)");
            if (std::abs(bounds[3] - bounds[4]) > kCompareTol)
                note("LP(sdc2) != LP(sdc2star)");
            if (std::abs(bounds[3] - bounds[5]) > kCompareTol) note("LP(sdc2) != LP(sdf)");
        }
    }
    return fails;
}

std::vector<std::string> rooted_equivalence_suite(int count, std::uint64_t seed_base) {
    const std::vector<form::Id> ids = {form::Id::dc1, form::Id::dc2, form::Id::dc2star,
                                       form::Id::df};
    std::vector<std::string> fails;
    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.seed = seed_base + static_cast<std::uint64_t>(i);
        cfg.vertices = 5 + i % 4;
        cfg.edge_prob = 0.5;
        cfg.scenarios = 1 + i % 3;
        cfg.rooted = true;
        StochasticInstance inst = generate_random_instance(cfg);

        std::vector<double> bounds;
        bool solved = true;
        for (form::Id id : ids) {
            form::BuiltModel bm = form::build(id, inst);
            sep::LoopResult lr = sep::run_separation_loop(bm, inst);
            if (lr.solution.status != lp::Status::optimal) {
                fails.push_back("instance " + std::to_string(i) + " " + form::name(id) +
                                ": LP status " + lp::status_name(lr.solution.status));
                solved = false;
                break;
            }
            bounds.push_back(lr.solution.objective);
        }
        if (!solved) continue;
        for (std::size_t s = 1; s < bounds.size(); ++s)
            if (std::abs(bounds[s] - bounds[0]) > kCompareTol)
                fails.push_back("instance " + std::to_string(i) + ": LP(" +
                                form::name(ids[s]) + ")=" + fmt(bounds[s]) +
                                " differs from LP(dc1)=" + fmt(bounds[0]));
    }
    return fails;
}

std::vector<std::string> integrality_suite(form::Id id, int count,
                                           std::uint64_t seed_base) {
    std::vector<std::string> fails;
    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.vertices = 5 + i % 2;
        cfg.edge_prob = 0.5;
        cfg.scenarios = 1 + i % 3;
        cfg.regime = CostRegime::enforce_c0_below_cstar;
        cfg.rooted = form::rooted_only(id);
        StochasticInstance inst;
        for (int attempt = 0;; ++attempt) {
            cfg.seed = seed_base + static_cast<std::uint64_t>(i) * 1009 +
                       static_cast<std::uint64_t>(attempt);
            inst = generate_random_instance(cfg);
            if (inst.graph.edge_count() <= 10) break;
        }
        try {
            IntegralityResult res = test_first_stage_integrality(inst, id);
            if (!res.integral) {
                std::string vals;
                for (double v : res.first_stage_values) vals += " " + fmt(v);
                fails.push_back("instance " + std::to_string(i) + " seed " +
                                std::to_string(cfg.seed) +
                                ": fractional first stage:" + vals);
            }
        } catch (const std::exception& ex) {
            fails.push_back("instance " + std::to_string(i) + " seed " +
                            std::to_string(cfg.seed) + ": " + ex.what());
        }
    }
    return fails;
}

std::vector<std::string> oracle_equivalence_suite(int count, std::uint64_t seed_base) {
    std::vector<std::string> fails;
    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.vertices = 4 + i % 2;
        cfg.edge_prob = 0.6;
        cfg.scenarios = 1 + i % 3;
        cfg.rooted = i % 2 == 1;
        StochasticInstance inst;
        for (int attempt = 0;; ++attempt) {
            cfg.seed = seed_base + static_cast<std::uint64_t>(i) * 1013 +
                       static_cast<std::uint64_t>(attempt);
            inst = generate_random_instance(cfg);
            if (inst.graph.edge_count() <= 8) break;
        }
        auto plain = oracle::brute_force(inst, false);
        std::optional<oracle::ExactSolution> rooted_ref;
        if (inst.rooted()) rooted_ref = oracle::brute_force(inst, true);
        for (form::Id id : form::kAllIds) {
            if (form::rooted_only(id) && !inst.rooted()) continue;
            const auto& ref = form::rooted_only(id) ? rooted_ref : plain;
            if (!ref) {
                fails.push_back("instance " + std::to_string(i) +
                                ": exhaustive search found no feasible solution");
                break;
            }
            form::BuiltModel bm = form::build(id, inst);
            sep::Engine eng(bm, inst);
            lp::MipResult mr = lp::solve_mip(bm.lp, bm.integer_vars, eng.oracle());
            if (mr.status != lp::Status::optimal) {
                fails.push_back("instance " + std::to_string(i) + " " + form::name(id) +
                                ": status " + lp::status_name(mr.status));
                continue;
            }
            double want = to_double(ref->objective);
            if (std::abs(mr.objective - want) > kCompareTol)
                fails.push_back("instance " + std::to_string(i) + " " + form::name(id) +
                                ": branch-and-cut " + fmt(mr.objective) +
                                " vs exhaustive " + fmt(want));
        }
    }
    return fails;
}

std::vector<std::string> separation_exactness_suite(int count, std::uint64_t seed_base) {
    std::vector<std::string> fails;
    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.seed = seed_base + static_cast<std::uint64_t>(i);
        cfg.vertices = 4 + i % 4;
        cfg.edge_prob = 0.55;
        cfg.scenarios = 1 + i % 3;
        cfg.rooted = i % 2 == 1;
        StochasticInstance inst = generate_random_instance(cfg);

        std::vector<form::Id> ids = {form::Id::uc, form::Id::sdc1, form::Id::sdc2};
        if (inst.rooted()) {
            ids.push_back(form::Id::dc1);
            ids.push_back(form::Id::dc2);
        }
        for (form::Id id : ids) {
            form::BuiltModel bm = form::build(id, inst);
            sep::LoopResult lr = sep::run_separation_loop(bm, inst);
            if (lr.solution.status != lp::Status::optimal) {
                fails.push_back("instance " + std::to_string(i) + " " + form::name(id) +
                                ": LP status " + lp::status_name(lr.solution.status));
                continue;
            }
            for (const std::string& v :
                 enumerate_violations(bm, inst, lr.solution.x))
                fails.push_back("instance " + std::to_string(i) + " " + form::name(id) +
                                ": " + v);
        }
    }
    return fails;
}

std::string table_to_tsv(const ComparisonTable& t) {
    std::string s = "formulation\tlp_bound\tip_value\tcuts\trounds\tnodes\n";
    for (const FormulationRun& r : t.runs) {
        s += form::name(r.id);
        s += '\t';
        s += r.lp_status == lp::Status::optimal ? fmt(r.lp_bound)
                                                : lp::status_name(r.lp_status);
        s += '\t';
        s += r.ip_value ? fmt(*r.ip_value) : "-";
        s += '\t';
        s += std::to_string(r.cuts);
        s += '\t';
        s += std::to_string(r.rounds);
        s += '\t';
        s += std::to_string(r.nodes);
        s += '\n';
    }
    for (const std::string& f : t.flags) s += "# FLAG " + f + "\n";
    return s;
}

std::string table_to_json(const ComparisonTable& t) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["runs"] = nlohmann::ordered_json::array();
    for (const FormulationRun& r : t.runs) {
        nlohmann::ordered_json run;
        run["formulation"] = form::name(r.id);
        run["lp_status"] = lp::status_name(r.lp_status);
        run["lp_bound"] = r.lp_bound;
        if (r.ip_value) run["ip_value"] = *r.ip_value;
        run["cuts"] = r.cuts;
        run["rounds"] = r.rounds;
        run["nodes"] = r.nodes;
        j["runs"].push_back(std::move(run));
    }
    j["flags"] = t.flags;
    return j.dump(2) + "\n";
}

}  // namespace sstp::exp
