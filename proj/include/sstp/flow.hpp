#pragma once

#include <utility>
#include <vector>

namespace sstp::flow {

// Capacities below this are treated as absent.
inline constexpr double kCapEps = 1e-9;

struct MinCutResult;

// Directed graph with float capacities; parallel (u,v) arcs are merged by
// summing their capacities at insertion.
class CapGraph {
  public:
    explicit CapGraph(int n) : n_(n), head_(n, -1) {}

    void add_arc(int u, int v, double cap);
    int vertex_count() const { return n_; }

  private:
    friend struct Dinic;
    friend MinCutResult max_flow_min_cut(CapGraph g, int s, int t);
    struct Arc {
        int to;
        double cap;      // remaining residual capacity
        int next;        // next arc out of the same tail
        int rev;         // index of the reverse arc
    };
    int n_;
    std::vector<int> head_;   // first arc per vertex
    std::vector<Arc> arcs_;
    int find_arc(int u, int v) const;
};

struct MinCutResult {
    double value = 0.0;
    std::vector<char> source_side;               // residual-reachable from s
    std::vector<std::pair<int, int>> cut_arcs;   // saturated (u,v), u in S, v not
};

// Exact max-flow (Dinic). The returned source_side is the unique minimal
// source-side min cut; cut_arcs lists the original arcs crossing it.
MinCutResult max_flow_min_cut(CapGraph g, int s, int t);

}  // namespace sstp::flow
