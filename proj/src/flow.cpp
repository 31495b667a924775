#include "sstp/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sstp::flow {

int CapGraph::find_arc(int u, int v) const {
    for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].to == v) return a;
    return -1;
}

void CapGraph::add_arc(int u, int v, double cap) {
    if (u == v || cap <= kCapEps) return;
    int fwd = find_arc(u, v);
    if (fwd != -1) {
        arcs_[fwd].cap += cap;  // merge parallel arcs
        return;
    }
    // forward arc with the capacity, residual reverse with 0
    arcs_.push_back({v, cap, head_[u], static_cast<int>(arcs_.size()) + 1});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, 0.0, head_[v], static_cast<int>(arcs_.size()) - 1});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
}

struct Dinic {
    CapGraph& g;
    std::vector<int> level, iter;

    explicit Dinic(CapGraph& g_) : g(g_), level(g_.n_), iter(g_.n_) {}

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a = g.head_[u]; a != -1; a = g.arcs_[a].next) {
                const auto& arc = g.arcs_[a];
                if (arc.cap > kCapEps && level[arc.to] < 0) {
                    level[arc.to] = level[u] + 1;
                    q.push(arc.to);
                }
            }
        }
        return level[t] >= 0;
    }

    double dfs(int u, int t, double f) {
        if (u == t) return f;
        for (int& a = iter[u]; a != -1; a = g.arcs_[a].next) {
            auto& arc = g.arcs_[a];
            if (arc.cap > kCapEps && level[arc.to] == level[u] + 1) {
                double d = dfs(arc.to, t, std::min(f, arc.cap));
                if (d > kCapEps) {
                    arc.cap -= d;
                    g.arcs_[arc.rev].cap += d;
                    return d;
                }
            }
        }
        return 0.0;
    }

    double run(int s, int t) {
        double total = 0.0;
        while (bfs(s, t)) {
            for (int v = 0; v < g.n_; ++v) iter[v] = g.head_[v];
            while (true) {
                double f = dfs(s, t, std::numeric_limits<double>::infinity());
                if (f <= kCapEps) break;
                total += f;
            }
        }
        return total;
    }
};

MinCutResult max_flow_min_cut(CapGraph g, int s, int t) {
    // Remember original capacities to report crossing arcs afterwards.
    std::vector<double> original(g.arcs_.size());
    for (std::size_t i = 0; i < g.arcs_.size(); ++i) original[i] = g.arcs_[i].cap;

    MinCutResult r;
    Dinic dinic(g);
    r.value = dinic.run(s, t);

    // Residual reachability from s gives the minimal source-side cut.
    r.source_side.assign(g.vertex_count(), 0);
    std::queue<int> q;
    q.push(s);
    r.source_side[s] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int a = g.head_[u]; a != -1; a = g.arcs_[a].next)
            if (g.arcs_[a].cap > kCapEps && !r.source_side[g.arcs_[a].to]) {
                r.source_side[g.arcs_[a].to] = 1;
                q.push(g.arcs_[a].to);
            }
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!r.source_side[u]) continue;
        for (int a = g.head_[u]; a != -1; a = g.arcs_[a].next)
            if (original[a] > kCapEps && !r.source_side[g.arcs_[a].to])
                r.cut_arcs.emplace_back(u, g.arcs_[a].to);
    }
    return r;
}

}  // namespace sstp::flow
