#include "sstp/lp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

namespace sstp::lp {

const char* status_name(Status s) {
    switch (s) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
        case Status::iteration_limit: return "iteration_limit";
        case Status::node_limit: return "node_limit";
    }
    return "unknown";
}

int Model::add_var(std::string name, double lo, double hi, double obj) {
    vars.push_back({std::move(name), lo, hi, obj});
    return static_cast<int>(vars.size()) - 1;
}

void Model::add_row(std::vector<std::pair<int, double>> coef, char sense, double rhs) {
    rows.push_back({std::move(coef), sense, rhs});
}

double Model::eval_objective(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t j = 0; j < vars.size(); ++j) s += vars[j].obj * x[j];
    return s;
}

namespace {

std::string lp_name(const std::string& raw) {
    std::string out;
    for (char c : raw) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

}  // namespace

std::string to_lp_format(const Model& m, const std::vector<int>& integers) {
    std::ostringstream o;
    o << "Minimize\n obj:";
    bool first = true;
    for (std::size_t j = 0; j < m.vars.size(); ++j) {
        double c = m.vars[j].obj;
        if (c == 0.0) continue;
        o << (c < 0 ? " - " : (first ? " " : " + ")) << std::abs(c) << " "
          << lp_name(m.vars[j].name);
        first = false;
    }
    if (first) o << " 0 " << (m.vars.empty() ? "x" : lp_name(m.vars[0].name));
    o << "\nSubject To\n";
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        o << " r" << i << ":";
        bool f2 = true;
        for (auto [c, a] : m.rows[i].coef) {
            o << (a < 0 ? " - " : (f2 ? " " : " + ")) << std::abs(a) << " "
              << lp_name(m.vars[c].name);
            f2 = false;
        }
        const char* rel = m.rows[i].sense == 'G' ? ">=" : m.rows[i].sense == 'L' ? "<=" : "=";
        o << " " << rel << " " << m.rows[i].rhs << "\n";
    }
    o << "Bounds\n";
    for (const auto& v : m.vars) {
        if (v.lo == -kInf && v.hi == kInf) o << " " << lp_name(v.name) << " free\n";
        else if (v.lo == -kInf) o << " -inf <= " << lp_name(v.name) << " <= " << v.hi << "\n";
        else if (v.hi == kInf) o << " " << lp_name(v.name) << " >= " << v.lo << "\n";
        else o << " " << v.lo << " <= " << lp_name(v.name) << " <= " << v.hi << "\n";
    }
    if (!integers.empty()) {
        o << "General\n";
        for (int j : integers) o << " " << lp_name(m.vars[j].name);
        o << "\n";
    }
    o << "End\n";
    return o.str();
}

namespace {

enum VStat : int { kBasic = 0, kAtLo = 1, kAtHi = 2, kFreeNb = 3 };

// Bounded-variable revised simplex with a dense product-form basis inverse.
// Rows are handled as a.x + s = rhs with one slack per row; phase 1 minimizes
// the total bound violation of basic variables (composite method, no
// artificial columns), phase 2 the true objective.
struct Simplex {
    int n = 0, m = 0, total = 0;
    std::vector<double> lo, hi, cost;
    std::vector<std::vector<std::pair<int, double>>> cols;  // (row, coef)
    Eigen::VectorXd rhs;

    std::vector<int> vstat;
    std::vector<int> basic;
    std::vector<double> x;
    Eigen::MatrixXd binv;

    int iterations = 0;
    int iter_limit = 0;
    int degen_run = 0;
    bool bland = false;
    int pivots_since_refactor = 0;
    bool have_binv = false;  // binv was injected; skip the entry factorization
    std::vector<double> devex_w;  // devex reference weights, per column

    // Anti-degeneracy bound perturbation. Zero-step pivots come from primal
    // degeneracy: basic variables sitting exactly at a bound block every ratio
    // test at t = 0, and highly degenerate vertices (flow models especially)
    // can trap the iteration in tens of thousands of such Bland pivots. A
    // stall triggers a tiny deterministic random outward shift of every
    // movable column's bounds, which puts the blockers strictly interior and
    // restores real progress. At any terminal candidate the true bounds come
    // back, nonbasic values snap onto them, and iteration continues, so every
    // verdict is reached under the original data; the epsilon drift is
    // repaired by the composite phase 1. Bland remains the final fallback,
    // which keeps termination guaranteed.
    std::vector<double> lo_true, hi_true;
    bool perturbed = false;
    int stalls = 0;
    std::mt19937_64 pert_rng{0x9e3779b97f4a7c15ULL};

    void perturb_bounds() {
        if (!perturbed) {
            lo_true = lo;
            hi_true = hi;
            perturbed = true;
        }
        for (int j = 0; j < total; ++j) {
            if (hi[j] - lo[j] <= 0.0) continue;  // keep fixed columns fixed
            if (std::isfinite(lo[j])) {
                double u = static_cast<double>(pert_rng() >> 11) * 0x1p-53;  // [0,1)
                lo[j] -= 1e-7 * (1.0 + u) * (1.0 + std::abs(lo_true[j]));
            }
            if (std::isfinite(hi[j])) {
                double u = static_cast<double>(pert_rng() >> 11) * 0x1p-53;
                hi[j] += 1e-7 * (1.0 + u) * (1.0 + std::abs(hi_true[j]));
            }
        }
        if (y_phase == 1) y_phase = -1;  // violation signs follow the bounds
    }

    void restore_bounds() {
        if (!perturbed) return;
        lo = lo_true;
        hi = hi_true;
        perturbed = false;
        for (int j = 0; j < total; ++j)
            if (vstat[j] != kBasic) set_nonbasic_value(j);
        compute_basic_values();
        if (y_phase == 1) y_phase = -1;  // violation signs follow the bounds
    }

    void load(const Model& mod) {
        n = static_cast<int>(mod.vars.size());
        m = static_cast<int>(mod.rows.size());
        total = n + m;
        lo.resize(total);
        hi.resize(total);
        cost.assign(total, 0.0);
        cols.assign(total, {});
        rhs.resize(m);
        for (int j = 0; j < n; ++j) {
            lo[j] = mod.vars[j].lo;
            hi[j] = mod.vars[j].hi;
            cost[j] = mod.vars[j].obj;
        }
        for (int i = 0; i < m; ++i) {
            const auto& row = mod.rows[i];
            for (auto [c, a] : row.coef)
                if (a != 0.0) cols[c].emplace_back(i, a);
            int s = n + i;
            cols[s].emplace_back(i, 1.0);
            switch (row.sense) {
                case 'L': lo[s] = 0.0; hi[s] = kInf; break;
                case 'G': lo[s] = -kInf; hi[s] = 0.0; break;
                default:  lo[s] = 0.0; hi[s] = 0.0; break;  // 'E'
            }
            rhs[i] = row.rhs;
        }
        iter_limit = 100 * (m + total);
        devex_w.assign(total, 1.0);
    }

    void set_nonbasic_value(int j) {
        if (vstat[j] == kAtLo) x[j] = lo[j];
        else if (vstat[j] == kAtHi) x[j] = hi[j];
        else x[j] = 0.0;
    }

    void cold_basis() {
        vstat.assign(total, kAtLo);
        x.assign(total, 0.0);
        for (int j = 0; j < total; ++j) {
            if (std::isfinite(lo[j])) vstat[j] = kAtLo;
            else if (std::isfinite(hi[j])) vstat[j] = kAtHi;
            else vstat[j] = kFreeNb;
            set_nonbasic_value(j);
        }
        basic.resize(m);
        for (int i = 0; i < m; ++i) {
            basic[i] = n + i;
            vstat[n + i] = kBasic;
        }
    }

    bool warm_basis(const IncrementalLp::Basis& b) {
        if (static_cast<int>(b.vstat.size()) != total ||
            static_cast<int>(b.basic.size()) != m)
            return false;
        std::vector<char> used(total, 0);
        int nbasic = 0;
        for (int j = 0; j < total; ++j)
            if (b.vstat[j] == kBasic) ++nbasic;
        if (nbasic != m) return false;
        for (int c : b.basic) {
            if (c < 0 || c >= total || b.vstat[c] != kBasic || used[c]) return false;
            used[c] = 1;
        }
        vstat = b.vstat;
        basic = b.basic;
        x.assign(total, 0.0);
        for (int j = 0; j < total; ++j)
            if (vstat[j] != kBasic) {
                if (vstat[j] == kAtLo && !std::isfinite(lo[j])) return false;
                if (vstat[j] == kAtHi && !std::isfinite(hi[j])) return false;
                set_nonbasic_value(j);
            }
        return true;
    }

    void compute_basic_values() {
        Eigen::VectorXd r = rhs;
        for (int j = 0; j < total; ++j) {
            if (vstat[j] == kBasic || x[j] == 0.0) continue;
            for (auto [ri, a] : cols[j]) r[ri] -= a * x[j];
        }
        Eigen::VectorXd xb = binv * r;
        for (int i = 0; i < m; ++i) x[basic[i]] = xb[i];
    }

    // Rebuilds the explicit inverse. Permutes the basis order first so that
    // every basic slack sits at its own row's position: the basis matrix then
    // differs from the identity only in the positions held by structural
    // columns, and Gauss-Jordan elimination over those k positions (with
    // partial pivoting among them) produces the inverse in O(k m^2) instead
    // of O(m^3). Simplex bases here are slack-heavy, so k << m.
    bool refactor() {
        std::vector<int> newbasic(m, -1);
        std::vector<int> structs;
        for (int i = 0; i < m; ++i) {
            int c = basic[i];
            if (c >= n) newbasic[c - n] = c;
            else structs.push_back(c);
        }
        std::vector<int> spots;
        for (int i = 0; i < m; ++i)
            if (newbasic[i] < 0) spots.push_back(i);
        if (spots.size() != structs.size()) return false;
        binv = Eigen::MatrixXd::Identity(m, m);
        std::vector<char> used(spots.size(), 0);
        Eigen::VectorXd w(m);
        for (int c : structs) {
            w.setZero();
            for (auto [ri, a] : cols[c]) w += a * binv.col(ri);
            int bestu = -1;
            double bestpiv = Tol::pivot;
            for (std::size_t u = 0; u < spots.size(); ++u) {
                if (used[u]) continue;
                double mag = std::abs(w[spots[u]]);
                if (mag > bestpiv) { bestpiv = mag; bestu = static_cast<int>(u); }
            }
            if (bestu < 0) return false;  // numerically singular basis
            used[bestu] = 1;
            int p = spots[bestu];
            newbasic[p] = c;
            double piv = w[p];
            binv.row(p) /= piv;
            w[p] = 0.0;
            binv.noalias() -= w * binv.row(p);
        }
        basic = std::move(newbasic);
        if (m > 0 && (!binv.allFinite() || binv.cwiseAbs().maxCoeff() > 1e13))
            return false;
        compute_basic_values();
        pivots_since_refactor = 0;
        y_phase = -1;
        return true;
    }

    double max_basic_violation() const {
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            int c = basic[i];
            if (x[c] < lo[c]) worst = std::max(worst, lo[c] - x[c]);
            if (x[c] > hi[c]) worst = std::max(worst, x[c] - hi[c]);
        }
        return worst;
    }

    int viol_sign(int c) const {
        if (x[c] < lo[c] - Tol::feas) return -1;
        if (x[c] > hi[c] + Tol::feas) return 1;
        return 0;
    }

    // Devex-priced entering column (Bland: lowest index). Returns -1 when no
    // candidate; dir is +1 (increase) or -1 (decrease). Keeps the pricing
    // vector y in y_last for the terminal certificate check.
    //
    // y_phase tracks which cost vector y_last currently prices: -1 none,
    // 0 the true costs, 1 the phase-1 violation signs. Phase-2 pivots update
    // y_last in O(m) (see apply_step), so the full O(m^2) backward transform
    // runs only on phase switches, refactorizations, and fresh loads; any
    // drift is caught by the terminal certificate, which re-validates y_last
    // against the basic dual system before a verdict is accepted.
    Eigen::VectorXd y_last;
    int y_phase = -1;
    int price(bool phase1, int* dir) {
        if (y_phase != (phase1 ? 1 : 0)) {
            Eigen::VectorXd cb(m);
            for (int i = 0; i < m; ++i)
                cb[i] = phase1 ? static_cast<double>(viol_sign(basic[i])) : cost[basic[i]];
            y_last = binv.transpose() * cb;
            y_phase = phase1 ? 1 : 0;
        }
        const Eigen::VectorXd& y = y_last;
        int best = -1, best_dir = 0;
        double best_score = 0.0;
        for (int j = 0; j < total; ++j) {
            if (vstat[j] == kBasic) continue;
            if (hi[j] - lo[j] <= 0.0) continue;  // fixed
            double d = phase1 ? 0.0 : cost[j];
            for (auto [r, a] : cols[j]) d -= y[r] * a;
            int dr = 0;
            if (vstat[j] == kAtLo && d < -Tol::bounds) dr = 1;
            else if (vstat[j] == kAtHi && d > Tol::bounds) dr = -1;
            else if (vstat[j] == kFreeNb && std::abs(d) > Tol::bounds) dr = d < 0 ? 1 : -1;
            else continue;
            if (bland) { *dir = dr; return j; }
            double score = d * d / devex_w[j];
            if (score > best_score) { best = j; best_dir = dr; best_score = score; }
        }
        *dir = best_dir;
        return best;
    }

    struct Ratio {
        double t = kInf;
        int leave_pos = -1;
        int leave_to = kAtLo;
        bool flip = false;
        bool unbounded = false;
    };

    Ratio ratio_test(int j, int dir, const Eigen::VectorXd& w, bool phase1) const {
        Ratio r;
        double best_piv = 0.0;
        for (int pos = 0; pos < m; ++pos) {
            double wp = w[pos];
            if (std::abs(wp) < Tol::pivot) continue;
            int c = basic[pos];
            double delta = -dir * wp;  // rate of x[c] per unit step
            double t_c;
            int land;
            if (delta < 0) {
                if (x[c] < lo[c] - Tol::feas) continue;  // below lo, moving away
                if (phase1 && x[c] > hi[c] + Tol::feas) {
                    t_c = (x[c] - hi[c]) / -delta;       // reaches hi, turns feasible
                    land = kAtHi;
                } else if (std::isfinite(lo[c])) {
                    t_c = (x[c] - lo[c]) / -delta;
                    land = kAtLo;
                } else {
                    continue;
                }
            } else {
                if (x[c] > hi[c] + Tol::feas) continue;  // above hi, moving away
                if (phase1 && x[c] < lo[c] - Tol::feas) {
                    t_c = (lo[c] - x[c]) / delta;
                    land = kAtLo;
                } else if (std::isfinite(hi[c])) {
                    t_c = (hi[c] - x[c]) / delta;
                    land = kAtHi;
                } else {
                    continue;
                }
            }
            t_c = std::max(t_c, 0.0);
            bool better;
            if (t_c < r.t - 1e-12) better = true;
            else if (t_c > r.t + 1e-12) better = false;
            else if (bland) better = r.leave_pos >= 0 && c < basic[r.leave_pos];
            else better = std::abs(wp) > best_piv;
            if (better) {
                r.t = t_c;
                r.leave_pos = pos;
                r.leave_to = land;
                best_piv = std::abs(wp);
            }
        }
        double span = hi[j] - lo[j];
        if (std::isfinite(span) && span < r.t) {
            r.t = span;
            r.flip = true;
            r.leave_pos = -1;
        }
        if (r.leave_pos < 0 && !r.flip) r.unbounded = true;
        return r;
    }

    void apply_step(int j, int dir, const Eigen::VectorXd& w, const Ratio& r, bool phase1) {
        double t = r.t;
        x[j] += dir * t;
        for (int pos = 0; pos < m; ++pos) x[basic[pos]] -= dir * t * w[pos];
        if (r.flip) {
            vstat[j] = vstat[j] == kAtLo ? kAtHi : kAtLo;
            set_nonbasic_value(j);  // snap exactly
            if (phase1) y_phase = -1;  // basic values moved with the flip
        } else {
            int out = basic[r.leave_pos];
            vstat[out] = r.leave_to;
            set_nonbasic_value(out);
            basic[r.leave_pos] = j;
            vstat[j] = kBasic;
            double piv = w[r.leave_pos];
            // Devex weight update (Forrest-Goldfarb) from the pre-pivot
            // tableau row of the leaving position.
            double gamma = std::max(devex_w[j], 1.0);
            Eigen::VectorXd rowr = binv.row(r.leave_pos);
            // Rank-1 pricing-vector update: the new y must price every
            // still-basic column unchanged and the entering column to its
            // cost, which pins y' = y + (d_j / w_r) * (old row r of the
            // inverse). Phase-1 prices shift with the violation pattern, so
            // they are recomputed instead.
            if (phase1) {
                y_phase = -1;
            } else if (y_phase == 0) {
                double d = cost[j];
                for (auto [ri, a] : cols[j]) d -= y_last[ri] * a;
                y_last.noalias() += (d / piv) * rowr;
            }
            // product-form update of the explicit inverse
            binv.row(r.leave_pos) /= piv;
            Eigen::VectorXd wz = w;
            wz[r.leave_pos] = 0.0;
            binv.noalias() -= wz * binv.row(r.leave_pos);
            ++pivots_since_refactor;
            double ginv = gamma / (piv * piv);
            bool blew_up = false;
            for (int q = 0; q < total; ++q) {
                if (vstat[q] == kBasic || q == out) continue;
                double t = 0.0;
                for (auto [ri, a] : cols[q]) t += a * rowr[ri];
                if (t == 0.0) continue;
                double cand = t * t * ginv;
                if (cand > devex_w[q]) devex_w[q] = cand;
                if (cand > 1e12) blew_up = true;
            }
            devex_w[out] = std::max(ginv, 1.0);
            if (blew_up) devex_w.assign(total, 1.0);  // new reference framework
        }
        if (t <= 1e-10) {
            if (++degen_run >= 50) {
                // Stalls get a perturbation escape first (compounding on
                // repeat); exhausted escapes fall back to Bland.
                if (stalls < 6) {
                    ++stalls;
                    perturb_bounds();
                } else {
                    bland = true;
                }
                degen_run = 0;
            }
        } else {
            degen_run = 0;
            bland = false;
        }
        ++iterations;
    }

    // Certifies a terminal verdict reached on a stale (eta-updated or
    // injected) inverse without refactorizing: the primal point must satisfy
    // the row system and the last pricing vector must solve the basic dual
    // system to tight tolerance. Both residuals are O(nnz); when they hold,
    // x and y_last form an exact-enough optimality (or, in phase 1,
    // infeasibility) certificate, so the conclusion cannot be a drift
    // artifact. Verdicts whose residuals fail fall back to a fresh
    // factorization.
    bool verdict_certified(bool phase1) const {
        const double tol = 1e-9;
        if (static_cast<int>(y_last.size()) != m) return false;
        Eigen::VectorXd act = Eigen::VectorXd::Zero(m);
        for (int j = 0; j < total; ++j) {
            if (x[j] == 0.0) continue;
            for (auto [ri, a] : cols[j]) act[ri] += a * x[j];
        }
        for (int i = 0; i < m; ++i)
            if (std::abs(act[i] - rhs[i]) > tol * (1.0 + std::abs(rhs[i]))) return false;
        for (int i = 0; i < m; ++i) {
            int c = basic[i];
            double cb = phase1 ? static_cast<double>(viol_sign(c)) : cost[c];
            double dot = 0.0;
            for (auto [ri, a] : cols[c]) dot += a * y_last[ri];
            if (std::abs(dot - cb) > tol * (1.0 + std::abs(cb))) return false;
        }
        return true;
    }

    Status run() {
        for (int j = 0; j < total; ++j)
            if (lo[j] > hi[j] + Tol::feas) return Status::infeasible;
        if (have_binv) {
            // Injected inverse: reuse it as-is. `fresh` starts false below, so
            // any terminal verdict is still confirmed on a new factorization.
            compute_basic_values();
        } else if (!refactor()) {
            cold_basis();
            if (!refactor()) return Status::iteration_limit;
        }
        bool fresh = !have_binv;
        while (true) {
            if (iterations >= iter_limit) return Status::iteration_limit;
            bool phase1 = max_basic_violation() > Tol::feas;
            int dir = 0;
            int j = price(phase1, &dir);
            if (j < 0) {
                // The perturbation only steers the path; every verdict must
                // hold under the true bounds.
                if (perturbed) {
                    restore_bounds();
                    continue;
                }
                // Accept the verdict off a stale inverse only when the KKT
                // residuals certify it; otherwise refactorize and re-check.
                if (!fresh && !verdict_certified(phase1)) {
                    if (!refactor()) return Status::iteration_limit;
                    fresh = true;
                    continue;
                }
                return phase1 ? Status::infeasible : Status::optimal;
            }
            Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
            for (auto [ri, a] : cols[j]) w += a * binv.col(ri);
            Ratio r = ratio_test(j, dir, w, phase1);
            if (r.unbounded) {
                // Relaxed bounds must never decide a ray verdict; recheck it
                // under the true data.
                if (perturbed) {
                    restore_bounds();
                    continue;
                }
                if (!fresh) {
                    if (!refactor()) return Status::iteration_limit;
                    fresh = true;
                    continue;
                }
                // A minimization of total infeasibility cannot be unbounded;
                // reaching this in phase 1 means numeric trouble.
                return phase1 ? Status::iteration_limit : Status::unbounded;
            }
            apply_step(j, dir, w, r, phase1);
            fresh = false;
            if (pivots_since_refactor >= 64) {
                if (!refactor()) {
                    cold_basis();
                    if (!refactor()) return Status::iteration_limit;
                }
                fresh = true;
            }
        }
    }

    Solution extract(Status st) const {
        Solution s;
        s.status = st;
        s.iterations = iterations;
        s.x.assign(n, 0.0);
        for (int j = 0; j < n; ++j) s.x[j] = x.empty() ? 0.0 : x[j];
        if (st == Status::optimal) {
            double obj = 0.0;
            for (int j = 0; j < n; ++j) obj += cost[j] * s.x[j];
            s.objective = obj;
        }
        return s;
    }
};

}  // namespace

Solution solve_lp(const Model& m) {
    Simplex s;
    s.load(m);
    s.cold_basis();
    return s.extract(s.run());
}

void IncrementalLp::set_objective(const std::vector<double>& obj) {
    for (std::size_t j = 0; j < model_.vars.size() && j < obj.size(); ++j)
        model_.vars[j].obj = obj[j];
}

void IncrementalLp::add_row(Model::Row row) {
    const int n = static_cast<int>(model_.vars.size());
    const int m_old = static_cast<int>(model_.rows.size());
    model_.rows.push_back(std::move(row));
    if (!basis_ || static_cast<int>(basis_->vstat.size()) != n + m_old ||
        static_cast<int>(basis_->basic.size()) != m_old) {
        basis_.reset();
        return;
    }
    // Keep the basis: the new row's slack becomes its basic variable. The
    // extended basis matrix is [[B, 0], [a_B', 1]] (a_B = new-row coefficients
    // on the current basic columns), which stays nonsingular with inverse
    // [[B^-1, 0], [-a_B'B^-1, 1]], so the cached inverse extends in O(m^2)
    // without refactorizing. If the new row is violated, its slack lands
    // outside its bounds and the composite phase 1 repairs that in a few
    // pivots on the next solve.
    if (basis_->binv_dim == m_old) {
        const int md = m_old + 1;
        std::vector<double> ext(static_cast<std::size_t>(md) * md, 0.0);
        for (int i = 0; i < m_old; ++i)
            std::copy_n(basis_->binv.begin() + static_cast<std::size_t>(i) * m_old,
                        m_old, ext.begin() + static_cast<std::size_t>(i) * md);
        std::vector<int> bpos(n + m_old, -1);
        for (int i = 0; i < m_old; ++i) bpos[basis_->basic[i]] = i;
        double* last = ext.data() + static_cast<std::size_t>(m_old) * md;
        for (auto [c, a] : model_.rows.back().coef) {
            if (a == 0.0 || c < 0 || c >= n) continue;
            int i = bpos[c];
            if (i < 0) continue;
            const double* bi = basis_->binv.data() + static_cast<std::size_t>(i) * m_old;
            for (int j = 0; j < m_old; ++j) last[j] -= a * bi[j];
        }
        last[m_old] = 1.0;
        basis_->binv = std::move(ext);
        basis_->binv_dim = md;
        ++basis_->binv_age;
    } else {
        basis_->binv.clear();
        basis_->binv_dim = 0;
    }
    basis_->vstat.push_back(kBasic);
    basis_->basic.push_back(n + m_old);
}

Solution IncrementalLp::solve() {
    Simplex s;
    s.load(model_);
    bool warm = basis_ && s.warm_basis(*basis_);
    if (!warm) s.cold_basis();
    if (warm && basis_->binv_dim == s.m) {
        s.binv = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                Eigen::RowMajor>>(basis_->binv.data(), s.m, s.m);
        s.have_binv = true;
        s.pivots_since_refactor = basis_->binv_age;
    }
    Status st = s.run();
    if (st == Status::optimal) {
        basis_ = Basis{s.vstat, s.basic};
        basis_->binv.resize(static_cast<std::size_t>(s.m) * s.m);
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
            basis_->binv.data(), s.m, s.m) = s.binv;
        basis_->binv_dim = s.m;
        basis_->binv_age = s.pivots_since_refactor;
    } else {
        basis_.reset();
    }
    return s.extract(st);
}

MipResult solve_mip(const Model& base, const std::vector<int>& integer_vars,
                    const CutOracle& oracle, const MipOptions& opt) {
    struct Fix { int var; double lo, hi; };
    struct Node {
        double bound;
        long long id;
        std::vector<Fix> fixes;
    };
    auto later = [](const Node& a, const Node& b) {
        if (a.bound != b.bound) return a.bound > b.bound;
        return a.id > b.id;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(later)> open(later);

    MipResult res;
    std::vector<Model::Row> cuts;
    bool have_incumbent = false;
    double incumbent_obj = kInf;
    std::vector<double> incumbent_x;
    long long next_id = 0;

    open.push({-kInf, next_id++, {}});
    while (!open.empty()) {
        if (res.nodes >= opt.node_limit) {
            res.status = Status::node_limit;
            res.objective = incumbent_obj;
            res.x = incumbent_x;
            return res;
        }
        Node node = open.top();
        open.pop();
        if (have_incumbent && node.bound >= incumbent_obj - 1e-9) break;  // best-bound order
        ++res.nodes;

        Model local = base;
        for (const Fix& f : node.fixes) {
            local.vars[f.var].lo = std::max(local.vars[f.var].lo, f.lo);
            local.vars[f.var].hi = std::min(local.vars[f.var].hi, f.hi);
        }
        for (const Model::Row& r : cuts) local.rows.push_back(r);

        Solution sol;
        bool pruned = false;
        for (int round = 0; round < 10000; ++round) {
            sol = solve_lp(local);
            if (sol.status == Status::infeasible) { pruned = true; break; }
            if (sol.status != Status::optimal) {
                res.status = sol.status;  // unbounded / iteration trouble: surface it
                return res;
            }
            if (!oracle) break;
            std::vector<Model::Row> fresh = oracle(sol.x);
            if (fresh.empty()) break;
            for (Model::Row& r : fresh) {
                cuts.push_back(r);
                local.rows.push_back(std::move(r));
            }
            res.cuts_added += static_cast<int>(fresh.size());
        }
        if (pruned) continue;
        if (node.id == 0) res.root_bound = sol.objective;
        if (have_incumbent && sol.objective >= incumbent_obj - 1e-9) continue;

        int branch_var = -1;
        double branch_score = Tol::integrality;
        for (int v : integer_vars) {
            double f = sol.x[v] - std::floor(sol.x[v]);
            double score = std::min(f, 1.0 - f);
            if (score > branch_score) {
                branch_score = score;
                branch_var = v;
            }
        }
        if (branch_var < 0) {
            // integral on the mask
            incumbent_obj = sol.objective;
            incumbent_x = sol.x;
            for (int v : integer_vars) incumbent_x[v] = std::round(incumbent_x[v]);
            have_incumbent = true;
            continue;
        }
        double xv = sol.x[branch_var];
        Node down{sol.objective, next_id++, node.fixes};
        down.fixes.push_back({branch_var, -kInf, std::floor(xv)});
        Node up{sol.objective, next_id++, node.fixes};
        up.fixes.push_back({branch_var, std::ceil(xv), kInf});
        open.push(std::move(down));
        open.push(std::move(up));
    }

    if (have_incumbent) {
        res.status = Status::optimal;
        res.objective = incumbent_obj;
        res.x = incumbent_x;
    } else {
        res.status = Status::infeasible;
    }
    return res;
}

}  // namespace sstp::lp
