#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// K_a on {0..a-1} and K_b on {a..n-1}. Each clique's edges get distinct
/// colours in lexicographic order; the small clique reuses ids 0..C(b,2)-1, so
/// the colouring uses exactly C(a,2) colours and every cycle is rainbow.
struct TwoCliqueWitness {
    Graph graph;
    EdgeColoring coloring;
    int big = 0;
    int small = 0;
};

/// a = big_clique_size(n, e), b = n - a. Throws PreconditionError when
/// e is outside (n^2/4, C(n,2)], when a > n, or when C(a,2) + C(b,2) < e.
TwoCliqueWitness two_clique_graph(int n, long long e);

}  // namespace rainbow
