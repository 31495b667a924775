#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sstp/instance.hpp"

namespace sstp::io {

// Parse failure; line is 1-based, 0 marks instance-level (semantic) errors.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

// Text format (1-based vertex/edge indices in files, 0-based in memory):
//
//   # comment
//   SECTION Graph
//   Nodes <n>
//   Edges <m>
//   E <i> <j> <first-stage cost>      (m lines)
//   END
//   SECTION Scenario                   (repeated once per scenario)
//   Probability <p>                    (integer, decimal, or num/den)
//   Root <v>                           (optional per-scenario root hint)
//   Terminals <v1> <v2> ...
//   SE <edge index> <cost>             (edges omitted here inherit the
//   END                                 first-stage cost)
//   SECTION Root <v>                   (optional; makes the instance rooted)
//
// Parsed instances are validated; semantic violations raise ParseError too.
StochasticInstance parse_instance(const std::string& text);
StochasticInstance load_instance(const std::string& path);

// Canonical serialization; parse_instance(write_instance(x)) == x.
std::string write_instance(const StochasticInstance& inst);

// Solver run report. Serialized as JSON with a stable key order; volatile
// fields (timings) are only emitted when present so identical runs produce
// byte-identical files.
struct SolveReport {
    std::string formulation;
    std::string bound_type;   // "ip" | "lp_relaxation" | "first_stage_relaxed"
    std::string status;       // "optimal" | "infeasible" | ...
    double objective = 0.0;
    std::vector<std::pair<std::string, double>> values;   // nonzeros only
    std::vector<std::pair<std::string, long long>> cut_counts;
    int separation_rounds = 0;
    long long nodes = 0;
    std::optional<double> wall_time_s;
};

std::string report_to_json(const SolveReport& report);

}  // namespace sstp::io
