#include "sstp/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sstp::io {

namespace {

struct Lines {
    // (line number, tokens) with comments and blanks stripped
    std::vector<std::pair<int, std::vector<std::string>>> items;
    std::size_t pos = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream ls(raw);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            if (!toks.empty()) items.emplace_back(no, std::move(toks));
        }
    }
    bool done() const { return pos >= items.size(); }
    const std::pair<int, std::vector<std::string>>& peek() const { return items[pos]; }
    const std::pair<int, std::vector<std::string>>& next() { return items[pos++]; }
    int last_line() const { return items.empty() ? 1 : items.back().first; }
};

int parse_int(const std::string& s, int line, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + s + "'");
    }
}

Rat parse_rat(const std::string& s, int line, const char* what) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected number ") + what + ", got '" + s + "'");
    }
}

}  // namespace

StochasticInstance parse_instance(const std::string& text) {
    Lines lines(text);
    if (lines.done()) throw ParseError(1, "empty input");

    StochasticInstance inst;
    bool have_graph = false;

    while (!lines.done()) {
        auto& [line, toks] = lines.next();
        if (toks[0] == "END" || toks[0] == "EOF") continue;  // stray terminator
        if (toks[0] != "SECTION")
            throw ParseError(line, "expected SECTION, got '" + toks[0] + "'");
        if (toks.size() < 2) throw ParseError(line, "SECTION without a name");

        if (toks[1] == "Graph") {
            if (have_graph) throw ParseError(line, "duplicate SECTION Graph");
            have_graph = true;
            int nodes = -1, edges = -1;
            bool closed = false;
            while (!lines.done()) {
                auto& [ln, tk] = lines.next();
                if (tk[0] == "END") { closed = true; break; }
                if (tk[0] == "Nodes") {
                    if (tk.size() != 2) throw ParseError(ln, "Nodes takes one value");
                    nodes = parse_int(tk[1], ln, "after Nodes");
                    inst.graph.vertex_count = nodes;
                } else if (tk[0] == "Edges") {
                    if (tk.size() != 2) throw ParseError(ln, "Edges takes one value");
                    edges = parse_int(tk[1], ln, "after Edges");
                } else if (tk[0] == "E") {
                    if (tk.size() != 4)
                        throw ParseError(ln, "edge line must be: E <i> <j> <cost>");
                    if (nodes < 0) throw ParseError(ln, "edge before Nodes count");
                    int i = parse_int(tk[1], ln, "edge endpoint");
                    int j = parse_int(tk[2], ln, "edge endpoint");
                    if (i < 1 || i > nodes || j < 1 || j > nodes)
                        throw ParseError(ln, "edge endpoint out of range");
                    inst.graph.edges.emplace_back(i - 1, j - 1);
                    inst.first_stage_cost.push_back(parse_rat(tk[3], ln, "edge cost"));
                } else {
                    throw ParseError(ln, "unknown directive '" + tk[0] + "' in Graph");
                }
            }
            if (!closed) throw ParseError(lines.last_line(), "unterminated SECTION Graph");
            if (edges >= 0 && edges != inst.graph.edge_count())
                throw ParseError(line, "Edges count does not match number of E lines");
        } else if (toks[1] == "Scenario") {
            if (!have_graph) throw ParseError(line, "SECTION Scenario before SECTION Graph");
            Scenario sc;
            sc.edge_costs = inst.first_stage_cost;  // default: inherit stage-one cost
            std::vector<bool> set_cost(inst.graph.edge_count(), false);
            bool closed = false, have_prob = false;
            while (!lines.done()) {
                auto& [ln, tk] = lines.next();
                if (tk[0] == "END") { closed = true; break; }
                if (tk[0] == "Probability") {
                    if (tk.size() != 2) throw ParseError(ln, "Probability takes one value");
                    sc.probability = parse_rat(tk[1], ln, "probability");
                    have_prob = true;
                } else if (tk[0] == "Root") {
                    if (tk.size() != 2) throw ParseError(ln, "Root takes one value");
                    int v = parse_int(tk[1], ln, "root vertex");
                    if (v < 1 || v > inst.graph.vertex_count)
                        throw ParseError(ln, "root vertex out of range");
                    sc.root_hint = v - 1;
                } else if (tk[0] == "Terminals") {
                    for (std::size_t i = 1; i < tk.size(); ++i) {
                        int v = parse_int(tk[i], ln, "terminal");
                        if (v < 1 || v > inst.graph.vertex_count)
                            throw ParseError(ln, "terminal out of range");
                        sc.terminals.push_back(v - 1);
                    }
                } else if (tk[0] == "SE") {
                    if (tk.size() != 3)
                        throw ParseError(ln, "scenario edge line must be: SE <edge> <cost>");
                    int e = parse_int(tk[1], ln, "edge index");
                    if (e < 1 || e > inst.graph.edge_count())
                        throw ParseError(ln, "edge index out of range");
                    if (set_cost[e - 1]) throw ParseError(ln, "duplicate SE line for edge");
                    set_cost[e - 1] = true;
                    sc.edge_costs[e - 1] = parse_rat(tk[2], ln, "scenario cost");
                } else {
                    throw ParseError(ln, "unknown directive '" + tk[0] + "' in Scenario");
                }
            }
            if (!closed) throw ParseError(lines.last_line(), "unterminated SECTION Scenario");
            if (!have_prob) throw ParseError(line, "scenario without Probability");
            std::sort(sc.terminals.begin(), sc.terminals.end());
            sc.terminals.erase(std::unique(sc.terminals.begin(), sc.terminals.end()),
                               sc.terminals.end());
            inst.scenarios.push_back(std::move(sc));
        } else if (toks[1] == "Root") {
            if (toks.size() != 3) throw ParseError(line, "usage: SECTION Root <vertex>");
            if (inst.root) throw ParseError(line, "duplicate SECTION Root");
            int v = parse_int(toks[2], line, "root vertex");
            if (!have_graph || v < 1 || v > inst.graph.vertex_count)
                throw ParseError(line, "root vertex out of range");
            inst.root = v - 1;
        } else {
            throw ParseError(line, "unknown section '" + toks[1] + "'");
        }
    }

    std::vector<std::string> violations = validate(inst);
    if (!violations.empty()) {
        std::string msg = "invalid instance:";
        for (const std::string& s : violations) msg += "\n  - " + s;
        throw ParseError(0, msg);
    }
    return inst;
}

StochasticInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string write_instance(const StochasticInstance& inst) {
    std::ostringstream out;
    out << "SECTION Graph\n";
    out << "Nodes " << inst.graph.vertex_count << "\n";
    out << "Edges " << inst.graph.edge_count() << "\n";
    for (int e = 0; e < inst.graph.edge_count(); ++e)
        out << "E " << inst.graph.edges[e].first + 1 << " "
            << inst.graph.edges[e].second + 1 << " "
            << format_rational(inst.first_stage_cost[e]) << "\n";
    out << "END\n";
    for (const Scenario& sc : inst.scenarios) {
        out << "SECTION Scenario\n";
        out << "Probability " << format_rational(sc.probability) << "\n";
        if (sc.root_hint) out << "Root " << *sc.root_hint + 1 << "\n";
        out << "Terminals";
        for (int t : sc.terminals) out << " " << t + 1;
        out << "\n";
        for (int e = 0; e < inst.graph.edge_count(); ++e)
            if (sc.edge_costs[e] != inst.first_stage_cost[e])
                out << "SE " << e + 1 << " " << format_rational(sc.edge_costs[e]) << "\n";
        out << "END\n";
    }
    if (inst.root) out << "SECTION Root " << *inst.root + 1 << "\n";
    out << "END\n";
    return out.str();
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["formulation"] = report.formulation;
    j["bound_type"] = report.bound_type;
    j["status"] = report.status;
    j["objective"] = report.objective;
    nlohmann::ordered_json vals = nlohmann::ordered_json::object();
    for (const auto& [name, v] : report.values) vals[name] = v;
    j["values"] = vals;
    nlohmann::ordered_json cuts = nlohmann::ordered_json::object();
    for (const auto& [fam, c] : report.cut_counts) cuts[fam] = c;
    j["cut_counts"] = cuts;
    j["separation_rounds"] = report.separation_rounds;
    j["nodes"] = report.nodes;
    if (report.wall_time_s) j["wall_time_s"] = *report.wall_time_s;
    return j.dump(2) + "\n";
}

}  // namespace sstp::io
