#pragma once

#include "sstp/instance.hpp"

namespace sstp::fixtures {

// 4-vertex path with alternating cheap/expensive stage costs, one scenario.
// Unrooted optimum 3 (stages interleave); rooted-at-0 optimum 12 (the first
// stage must be a connected tree, so it buys the whole path).
StochasticInstance path4();
StochasticInstance path4_rooted();

// Complete graph on 4 vertices, two equally likely scenarios whose cheap
// recourse edges differ. Optimum 12: first stage {0-1, 2-3}, scenario 0 adds
// edge 1-2, scenario 1 adds edge 1-3.
StochasticInstance k4_two_scenarios();

// 7-vertex rooted instance: relaxing first-stage integrality under the
// joint-cut tree model leaves a half-integral optimum of 4.5 while the
// linked-cut model stays integral at 5, exhibiting a 10/9 bound ratio.
StochasticInstance gap9over10();

// Triangle, all vertices terminals, one scenario. First-stage expensive
// (10 vs 1): undirected relaxations stop at 1.5, semi-directed reaches 2.
StochasticInstance triangle();
// Swapped costs (1 vs 10): semi-directed cuts stop at 1.5 and only the
// linked directed model reaches 2.
StochasticInstance triangle_swapped();

}  // namespace sstp::fixtures
