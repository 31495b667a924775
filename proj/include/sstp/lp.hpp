#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sstp::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Pinned numeric tolerances, used consistently across the solver stack.
struct Tol {
    static constexpr double feas = 1e-7;         // primal feasibility
    static constexpr double bounds = 1e-9;       // at-bound / reduced-cost
    static constexpr double integrality = 1e-6;  // MIP integrality
    static constexpr double objective = 1e-6;    // objective comparisons
    static constexpr double pivot = 1e-9;        // minimal pivot magnitude
};

enum class Status { optimal, infeasible, unbounded, iteration_limit, node_limit };
const char* status_name(Status s);

// Linear model: min c'x subject to rows, bounds on x. Senses: 'G' (>=),
// 'L' (<=), 'E' (=). Duplicate column entries in a row are summed.
struct Model {
    struct Var {
        std::string name;
        double lo = 0.0, hi = kInf;
        double obj = 0.0;
    };
    struct Row {
        std::vector<std::pair<int, double>> coef;
        char sense = 'G';
        double rhs = 0.0;
    };
    std::vector<Var> vars;
    std::vector<Row> rows;

    int add_var(std::string name, double lo, double hi, double obj);
    void add_row(std::vector<std::pair<int, double>> coef, char sense, double rhs);
    double eval_objective(const std::vector<double>& x) const;
};

// CPLEX-LP-style textual dump (debugging aid); `integers` marks the
// integrality mask used by MIP solves.
std::string to_lp_format(const Model& m, const std::vector<int>& integers = {});

struct Solution {
    Status status = Status::infeasible;
    double objective = 0.0;
    std::vector<double> x;       // structural variable values
    int iterations = 0;
};

// Bounded-variable revised simplex, two phases, dense product-form inverse
// with periodic refactorization. Anti-cycling: Bland's rule after 50
// consecutive degenerate pivots. Iteration limit: 100 * (rows + cols).
Solution solve_lp(const Model& m);

// Model wrapper that keeps the last optimal basis together with its basis
// inverse. Re-solving after set_objective warm starts from that basis (it
// stays primal feasible). add_row keeps the basis too: the new row's slack
// enters it, the cached inverse is extended in closed form, and the next
// solve repairs any violation of the new row in place of a cold start.
class IncrementalLp {
  public:
    explicit IncrementalLp(Model m) : model_(std::move(m)) {}
    const Model& model() const { return model_; }
    void set_objective(const std::vector<double>& obj);
    void add_row(Model::Row row);
    Solution solve();

    struct Basis {
        std::vector<int> vstat;    // per column (structurals then slacks)
        std::vector<int> basic;    // per row
        std::vector<double> binv;  // basis inverse, row-major binv_dim^2
        int binv_dim = 0;          // 0 when no cached inverse is held
        int binv_age = 0;          // updates applied since last factorization
    };

  private:
    Model model_;
    std::optional<Basis> basis_;
};

// Returns violated rows for an LP point. Contract: rows already delivered by
// a previous call must not be returned again (the caller appends what it
// receives); returned rows must be valid for every integer-feasible point.
using CutOracle = std::function<std::vector<Model::Row>(const std::vector<double>&)>;

struct MipOptions {
    long long node_limit = 100000;
};

struct MipResult {
    Status status = Status::infeasible;
    double objective = 0.0;
    std::vector<double> x;
    long long nodes = 0;              // processed nodes
    double root_bound = 0.0;          // LP bound after root separation
    int cuts_added = 0;
};

// Branch and cut. Best-bound node selection (FIFO among ties), branching on
// the most fractional variable of `integer_vars` (ties: lowest index), cut
// separation run to exhaustion at every node before branching. Cut rows are
// valid model rows, so they accumulate globally across nodes. Variables not
// in `integer_vars` stay continuous (partial relaxations are expressed by
// shrinking the mask).
MipResult solve_mip(const Model& m, const std::vector<int>& integer_vars,
                    const CutOracle& oracle = {}, const MipOptions& opt = {});

}  // namespace sstp::lp
