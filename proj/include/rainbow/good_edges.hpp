#pragma once

#include <span>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/lemmas.hpp"

namespace rainbow {

/// Edges with at least one endpoint in A.
struct GoodEdgesCase1 {
    std::vector<std::size_t> edges;  // indices into g.edges(), ascending
    long long lower_bound = 0;       // e - C(n - |A|, 2)
};

/// Throws PreconditionError when A has an out-of-range or repeated vertex.
GoodEdgesCase1 good_edges_case1(const Graph& g, std::span<const Vertex> set);

/// Edges touching A = N(p) \ {q} with neither endpoint in {p, q}.
struct GoodEdgesCase2 {
    std::vector<Vertex> set;          // A
    std::vector<std::size_t> edges;
    double incidence_sum = 0.0;       // sum over z in A of (d(z) - 2)
    std::size_t inside_count = 0;     // good edges with both endpoints in A
    double half_sum_bound = 0.0;      // incidence_sum / 2
    double min_degree_bound = 0.0;    // |A| (delta - 2) / 2
};

/// Each z in A keeps at least d(z) - 2 good edges, and a good edge is seen
/// from at most two such z, so |good| >= incidence_sum - inside_count and
/// |good| >= half_sum_bound >= min_degree_bound. These are re-checked
/// (VerificationFailure). Throws PreconditionError for an invalid book.
GoodEdgesCase2 good_edges_case2(const Graph& g, const BookWitness& book);

}  // namespace rainbow
