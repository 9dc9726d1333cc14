#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/preconditions.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Large set with pairwise distance <= 3
// ---------------------------------------------------------------------------

enum class CloseSetBranch { whole_graph, star_of_max_degree, high_degree_threshold };

std::string_view to_string(CloseSetBranch b);

/// A vertex set A with dist(a,b) <= 3 for all a,b in A and |A| >= c1.
///
/// c1 = n/2 + sqrt(e - n^2/4 + n/2) and c2 = n - c1 are the two roots of
/// x^2 - n x + C(n,2) - e = 0.
struct CloseSetCertificate {
    std::vector<Vertex> set;
    CloseSetBranch branch = CloseSetBranch::whole_graph;
    double c1 = 0.0;
    double c2 = 0.0;
    std::optional<int> threshold;    // X, threshold branch only
    std::optional<Vertex> centre;    // v0, star branch only
};

/// Requires e >= n^2/4 - n/2 (PreconditionError otherwise).
///
/// Tries, in order: the whole vertex set; the closed neighbourhood of the
/// smallest-id maximum-degree vertex when Delta >= c1 - 1; the set of
/// vertices whose degree exceeds
///   X = max{ d(x) : exists y with d(x) <= d(y) and dist(x,y) > 3 }.
/// The certificate is re-verified with independent BFS before it is returned;
/// a failed re-check throws VerificationFailure.
CloseSetCertificate find_close_set(const Graph& g);

/// Independent check of both certificate conclusions.
WitnessCheck verify_close_set(const Graph& g, const CloseSetCertificate& cert);

// ---------------------------------------------------------------------------
// Paths of length exactly 4
// ---------------------------------------------------------------------------

/// Path x-a-b-c-y with a, b, c outside `avoid`; the lexicographically first
/// (a, b, c) in ascending id order is returned.
///
/// Throws PreconditionError when x == y or either endpoint is in `avoid`, and
/// SearchFailure (stage "path4") when no such path exists. The failure carries
/// the path4 hypothesis report evaluated on G - avoid.
PathWitness find_path_len4(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> avoid = {});

/// Non-throwing variant over a block mask; nullopt when no path exists.
std::optional<PathWitness> try_path_len4(const Graph& g, Vertex x, Vertex y,
                                         const std::vector<bool>& blocked);

// ---------------------------------------------------------------------------
// Greedy extension
// ---------------------------------------------------------------------------

/// Path of exactly `len` edges from v avoiding S, always stepping to the
/// smallest-id unused neighbour.
///
/// Requires v not in S and |S| <= delta - len (PreconditionError). Under that
/// hypothesis the walk never gets stuck; StuckError is kept distinct so tests
/// can tell a broken invariant from a violated hypothesis.
PathWitness greedy_extend(const Graph& g, Vertex v, std::span<const Vertex> avoid, int len);

/// Unchecked greedy walk over a block mask; nullopt when it gets stuck.
std::optional<PathWitness> greedy_path(const Graph& g, Vertex v, const std::vector<bool>& blocked,
                                       int len);

// ---------------------------------------------------------------------------
// Books
// ---------------------------------------------------------------------------

/// An edge pq and its common neighbourhood.
struct BookWitness {
    Vertex p = 0;
    Vertex q = 0;
    std::vector<Vertex> common;
};

/// Edge maximising |N(p) ∩ N(q)|, ties to the lexicographically smallest edge
/// (p < q). Requires e > n^2/4; throws VerificationFailure if the maximum
/// width does not exceed n/6.
BookWitness find_book_edge(const Graph& g);

/// pq is an edge and `common` equals N(p) ∩ N(q) (the width bound is not checked).
WitnessCheck verify_book(const Graph& g, const BookWitness& book);

// ---------------------------------------------------------------------------
// Distance-4 extremal example
// ---------------------------------------------------------------------------

/// K_{n-2} on 0..n-3, plus u = n-2 joined to A = {0..s-1} and v = n-1 joined
/// to B = {s..2s-1}, with every A-B edge removed.
struct TightnessGraph {
    Graph graph;
    Vertex u = 0;
    Vertex v = 0;
    int set_size = 0;
};

/// Builds the example with s = ceil(n/2 - sqrt(e - n^2/4) + 2).
///
/// Feasible when e >= n^2/4 + 4, e <= C(n,2), 2s <= n - 3 (at least one clique
/// vertex outside A and B, otherwise u and v are disconnected) and the result
/// has more than e edges. Throws PreconditionError naming the failed condition.
TightnessGraph tightness_graph(int n, long long e);

/// Same construction with an explicit set size s; requires s >= 1 and 2s <= n - 3.
TightnessGraph tightness_graph_from_size(int n, int s);

}  // namespace rainbow
