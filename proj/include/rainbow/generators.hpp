#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::gen {

Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);  // centre 0
Graph complete_bipartite(int a, int b);  // parts {0..a-1}, {a..a+b-1}

/// Vertex-disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph add_edges(const Graph& g, const std::vector<Edge>& extra);
Graph remove_edge(const Graph& g, Edge e);

/// Graph whose edge set is selected by `mask` over the lexicographic pair list of K_n
/// (bit i <-> i-th pair (0,1),(0,2),...,(n-2,n-1)). Requires C(n,2) <= 64.
Graph from_mask(int n, std::uint64_t mask);

/// Lexicographic list of all pairs of K_n.
std::vector<Edge> all_pairs(int n);

Graph gnp(int n, double p, std::mt19937_64& rng);

/// Uniform graph with exactly m edges.
Graph gnm(int n, std::size_t m, std::mt19937_64& rng);

}  // namespace rainbow::gen
