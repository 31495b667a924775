// Command-line front end: solve, relax, compare, verify-paper, gen.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sstp/experiments.hpp"
#include "sstp/fixtures.hpp"
#include "sstp/formulations.hpp"
#include "sstp/io.hpp"
#include "sstp/lp.hpp"
#include "sstp/oracle.hpp"
#include "sstp/separation.hpp"

namespace {

using namespace sstp;

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
}

// --objective rewritten reports the first-stage objective in its expanded
// per-scenario form; the two forms have identical coefficients, so this only
// switches sdc2 <-> sdc2star and dc2 <-> dc2star.
form::Id parse_id(const std::string& s) {
    std::optional<form::Id> id = form::from_name(s);
    if (!id) throw std::invalid_argument("unknown formulation id: " + s);
    return *id;
}

form::Id apply_objective_mode(form::Id id, const std::string& mode) {
    if (mode == "printed") return id;
    if (id == form::Id::sdc2) return form::Id::sdc2star;
    if (id == form::Id::dc2) return form::Id::dc2star;
    return id;
}

std::vector<std::pair<std::string, double>> sparse_values(
    const lp::Model& model, const std::vector<double>& x) {
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (std::abs(x[j]) > 1e-9) out.emplace_back(model.vars[j].name, x[j]);
    return out;
}

std::vector<std::pair<std::string, long long>> named_counts(
    const std::map<sstp::form::CutFamily, long long>& counts) {
    std::vector<std::pair<std::string, long long>> out;
    for (const auto& [fam, cnt] : counts)
        out.emplace_back(form::family_name(fam), cnt);
    return out;
}

struct SolveArgs {
    std::string instance_path;
    std::string formulation;
    std::string objective_mode = "printed";
    std::string out;
    std::string dump_lp;
    bool with_vi = false;
    bool timings = false;
    bool relax_first_stage = false;
};

void add_common(CLI::App* cmd, SolveArgs& a) {
    cmd->add_option("instance", a.instance_path, "instance file")->required();
    cmd->add_option("-f,--formulation", a.formulation,
                    "formulation id (uc uf sdc1 sdc2 sdc2star sdf dc1 dc2 dc2star df)")
        ->required();
    cmd->add_flag("--with-valid-inequalities", a.with_vi,
                  "add the orientation-based strengthening rows");
    cmd->add_option("--objective", a.objective_mode,
                    "objective form to report under")
        ->check(CLI::IsMember({"printed", "rewritten"}));
    cmd->add_option("-o,--out", a.out, "write the JSON report here (default stdout)");
    cmd->add_option("--dump-lp", a.dump_lp, "write the model in LP text format");
    cmd->add_flag("--timings", a.timings, "include wall time in the report");
}

int run_solve(const SolveArgs& a, bool relaxation) {
    StochasticInstance inst = io::load_instance(a.instance_path);
    form::Id id = apply_objective_mode(parse_id(a.formulation), a.objective_mode);
    form::BuiltModel bm = form::build(id, inst);
    if (a.with_vi) form::add_valid_inequalities(bm, inst);

    io::SolveReport rep;
    rep.formulation = form::name(id);
    const double t0 = now_s();

    std::vector<int> relax_mask;
    if (relaxation && a.relax_first_stage) {
        std::set_difference(bm.integer_vars.begin(), bm.integer_vars.end(),
                            bm.first_stage_vars.begin(), bm.first_stage_vars.end(),
                            std::back_inserter(relax_mask));
    }
    if (!a.dump_lp.empty()) {
        std::vector<int> integers;
        if (!relaxation)
            integers = bm.integer_vars;
        else if (a.relax_first_stage)
            integers = relax_mask;
        write_output(a.dump_lp, lp::to_lp_format(bm.lp, integers));
    }

    lp::Status status;
    if (relaxation && !a.relax_first_stage) {
        rep.bound_type = "lp_relaxation";
        sep::LoopResult lr = sep::run_separation_loop(bm, inst);
        status = lr.solution.status;
        rep.objective = lr.solution.objective;
        rep.separation_rounds = lr.rounds;
        rep.cut_counts = named_counts(lr.counts);
        if (status == lp::Status::optimal)
            rep.values = sparse_values(bm.lp, lr.solution.x);
    } else {
        rep.bound_type = relaxation ? "first_stage_relaxed" : "ip";
        sep::Engine eng(bm, inst);
        const std::vector<int>& integers = relaxation ? relax_mask : bm.integer_vars;
        lp::MipResult mr = lp::solve_mip(bm.lp, integers, eng.oracle());
        status = mr.status;
        rep.objective = mr.objective;
        rep.nodes = mr.nodes;
        rep.cut_counts = named_counts(eng.counts());
        if (status == lp::Status::optimal) rep.values = sparse_values(bm.lp, mr.x);
    }
    rep.status = lp::status_name(status);
    if (a.timings) rep.wall_time_s = now_s() - t0;
    write_output(a.out, io::report_to_json(rep));
    return status == lp::Status::optimal ? 0 : 1;
}

struct CompareArgs {
    std::string instance_path;
    std::vector<std::string> formulations;
    std::string format = "tsv";
    std::string out;
    bool with_ip = false;
};

int run_compare(const CompareArgs& a) {
    StochasticInstance inst = io::load_instance(a.instance_path);
    std::vector<form::Id> ids;
    if (a.formulations.empty()) {
        for (form::Id id : form::kAllIds)
            if (!form::rooted_only(id) || inst.rooted()) ids.push_back(id);
    } else {
        for (const std::string& s : a.formulations) ids.push_back(parse_id(s));
    }
    exp::ComparisonTable table = exp::compare(inst, ids, a.with_ip);
    write_output(a.out, a.format == "json" ? exp::table_to_json(table)
                                           : exp::table_to_tsv(table));
    return table.ok() ? 0 : 1;
}

struct GenArgs {
    std::uint64_t seed = 1;
    int vertices = 6;
    double edge_prob = 0.5;
    int scenarios = 2;
    std::string cost_regime = "unconstrained";
    bool rooted = false;
    std::string out;
};

int run_gen(const GenArgs& a) {
    exp::GenConfig cfg;
    cfg.seed = a.seed;
    cfg.vertices = a.vertices;
    cfg.edge_prob = a.edge_prob;
    cfg.scenarios = a.scenarios;
    cfg.rooted = a.rooted;
    cfg.regime = a.cost_regime == "enforce_c0_below_cstar"
                     ? exp::CostRegime::enforce_c0_below_cstar
                     : exp::CostRegime::unconstrained;
    write_output(a.out, io::write_instance(exp::generate_random_instance(cfg)));
    return 0;
}

// ---- verify-paper: re-derive the documented claims on the built-in instances.

bool nearly(double a, double b) { return std::abs(a - b) <= 1e-6; }

double ip_value(const StochasticInstance& inst, form::Id id) {
    form::BuiltModel bm = form::build(id, inst);
    sep::Engine eng(bm, inst);
    lp::MipResult mr = lp::solve_mip(bm.lp, bm.integer_vars, eng.oracle());
    if (mr.status != lp::Status::optimal)
        throw std::runtime_error(std::string(form::name(id)) + ": " +
                                 lp::status_name(mr.status));
    return mr.objective;
}

double lp_value(const StochasticInstance& inst, form::Id id) {
    form::BuiltModel bm = form::build(id, inst);
    sep::LoopResult lr = sep::run_separation_loop(bm, inst);
    if (lr.solution.status != lp::Status::optimal)
        throw std::runtime_error(std::string(form::name(id)) + ": " +
                                 lp::status_name(lr.solution.status));
    return lr.solution.objective;
}

int run_verify() {
    int failures = 0;
    auto claim = [&](const std::string& label, bool pass, const std::string& detail) {
        if (pass) {
            std::cout << "PASS: " << label << "\n";
        } else {
            std::cout << "FAIL: " << label << " (" << detail << ")\n";
            ++failures;
        }
    };
    auto guard = [&](const std::string& label, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& ex) {
            claim(label, false, ex.what());
        }
    };

    guard("path optima", [&] {
        StochasticInstance p = fixtures::path4();
        for (form::Id id :
             {form::Id::uc, form::Id::uf, form::Id::sdc1, form::Id::sdc2,
              form::Id::sdc2star, form::Id::sdf}) {
            double v = ip_value(p, id);
            claim(std::string("path instance: IP(") + form::name(id) + ") = 3",
                  nearly(v, 3.0), "got " + std::to_string(v));
        }
        StochasticInstance pr = fixtures::path4_rooted();
        for (form::Id id :
             {form::Id::dc1, form::Id::dc2, form::Id::dc2star, form::Id::df}) {
            double v = ip_value(pr, id);
            claim(std::string("rooted path instance: IP(") + form::name(id) + ") = 12",
                  nearly(v, 12.0), "got " + std::to_string(v));
        }
    });

    guard("two-scenario solution structure", [&] {
        StochasticInstance k4 = fixtures::k4_two_scenarios();
        form::BuiltModel bm = form::build(form::Id::uc, k4);
        sep::Engine eng(bm, k4);
        lp::MipResult mr = lp::solve_mip(bm.lp, bm.integer_vars, eng.oracle());
        claim("complete-graph instance: optimum 12",
              mr.status == lp::Status::optimal && nearly(mr.objective, 12.0),
              "got " + std::to_string(mr.objective));
        form::EdgeSolution sol = form::project_solution(bm, mr.x);
        auto picked = [](const std::vector<char>& mask) {
            std::vector<int> out;
            for (std::size_t e = 0; e < mask.size(); ++e)
                if (mask[e]) out.push_back(static_cast<int>(e));
            return out;
        };
        bool first_ok = picked(sol.first_stage) == std::vector<int>{0, 3};
        bool rec_ok = sol.second_stage.size() == 2 &&
                      picked(sol.second_stage[0]) == std::vector<int>{1} &&
                      picked(sol.second_stage[1]) == std::vector<int>{2};
        claim("complete-graph instance: first stage buys the two disjoint edges",
              first_ok, "support differs");
        claim("complete-graph instance: each scenario adds its own cheap edge",
              rec_ok, "support differs");
    });

    guard("first-stage relaxation gap", [&] {
        StochasticInstance g = fixtures::gap9over10();
        exp::IntegralityResult weak = exp::test_first_stage_integrality(g, form::Id::dc1);
        claim("gap instance: tree-cut model relaxes to 4.5",
              nearly(weak.relaxed_objective, 4.5),
              "got " + std::to_string(weak.relaxed_objective));
        exp::IntegralityResult strong =
            exp::test_first_stage_integrality(g, form::Id::dc2);
        claim("gap instance: linked-cut model stays integral at 5",
              strong.integral && nearly(strong.relaxed_objective, 5.0),
              "got " + std::to_string(strong.relaxed_objective));
        double ip = ip_value(g, form::Id::dc2);
        claim("gap instance: optimum 5 and ratio 10/9",
              nearly(ip, 5.0) && nearly(ip / weak.relaxed_objective, 10.0 / 9.0),
              "got " + std::to_string(ip));
    });

    guard("relaxation strength on the triangle", [&] {
        StochasticInstance t = fixtures::triangle();
        double uc = lp_value(t, form::Id::uc);
        double uf = lp_value(t, form::Id::uf);
        double sdc1 = lp_value(t, form::Id::sdc1);
        claim("triangle: undirected relaxations stop at 1.5",
              nearly(uc, 1.5) && nearly(uf, 1.5),
              "got " + std::to_string(uc) + ", " + std::to_string(uf));
        claim("triangle: semi-directed cuts reach 2", nearly(sdc1, 2.0),
              "got " + std::to_string(sdc1));
        StochasticInstance s = fixtures::triangle_swapped();
        double s1 = lp_value(s, form::Id::sdc1);
        double s2 = lp_value(s, form::Id::sdc2);
        claim("swapped triangle: semi-directed cuts stop at 1.5", nearly(s1, 1.5),
              "got " + std::to_string(s1));
        claim("swapped triangle: linking rows lift the bound above 1.5",
              s2 > 1.5 + 1e-6, "got " + std::to_string(s2));
    });

    std::cout << (failures == 0 ? "all claims verified\n"
                                : std::to_string(failures) + " claim(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-stage stochastic Steiner tree toolkit"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "solve an instance to integer optimality");
    add_common(solve_cmd, solve_args);

    SolveArgs relax_args;
    CLI::App* relax_cmd =
        app.add_subcommand("relax", "solve the LP relaxation (exact separation)");
    add_common(relax_cmd, relax_args);
    relax_cmd->add_flag("--relax-first-stage", relax_args.relax_first_stage,
                        "keep scenario variables integral, relax only stage one");

    CompareArgs cmp_args;
    CLI::App* cmp_cmd =
        app.add_subcommand("compare", "tabulate relaxation bounds across formulations");
    cmp_cmd->add_option("instance", cmp_args.instance_path, "instance file")->required();
    cmp_cmd->add_option("-f,--formulations", cmp_args.formulations,
                        "formulation ids (default: every applicable one)")
        ->delimiter(',');
    cmp_cmd->add_flag("--ip", cmp_args.with_ip, "also solve each to integer optimality");
    cmp_cmd->add_option("--format", cmp_args.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmp_cmd->add_option("-o,--out", cmp_args.out, "output file (default stdout)");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify-paper", "check the documented claims on the built-in instances");

    GenArgs gen_args;
    CLI::App* gen_cmd =
        app.add_subcommand("gen", "generate a reproducible random instance");
    gen_cmd->add_option("--seed", gen_args.seed, "RNG seed");
    gen_cmd->add_option("--vertices", gen_args.vertices, "vertex count")
        ->check(CLI::Range(2, 64));
    gen_cmd->add_option("--edge-prob", gen_args.edge_prob, "edge keep probability")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--scenarios", gen_args.scenarios, "scenario count")
        ->check(CLI::Range(1, 64));
    gen_cmd->add_option("--cost-regime", gen_args.cost_regime,
                        "unconstrained or enforce_c0_below_cstar")
        ->check(CLI::IsMember({"unconstrained", "enforce_c0_below_cstar"}));
    gen_cmd->add_flag("--rooted", gen_args.rooted, "add a global root");
    gen_cmd->add_option("-o,--out", gen_args.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_args, false);
        if (relax_cmd->parsed()) return run_solve(relax_args, true);
        if (cmp_cmd->parsed()) return run_compare(cmp_args);
        if (verify_cmd->parsed()) return run_verify();
        if (gen_cmd->parsed()) return run_gen(gen_args);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;  // unusable request (unknown id, inapplicable formulation, ...)
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
