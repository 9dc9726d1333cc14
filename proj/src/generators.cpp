#include "rainbow/generators.hpp"

#include <algorithm>

#include "rainbow/error.hpp"

namespace rainbow::gen {

Graph empty(int n) { return Graph(n, {}); }

Graph complete(int n) { return Graph(n, all_pairs(n)); }

Graph path(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (Vertex x = 0; x < a; ++x)
        for (Vertex y = a; y < a + b; ++y) edges.emplace_back(x, y);
    return Graph(a + b, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const Vertex shift = a.order();
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
    return Graph(a.order() + b.order(), std::move(edges));
}

Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return Graph(g.order(), std::move(edges));
}

Graph remove_edge(const Graph& g, Edge e) {
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != e) edges.push_back(f);
    return Graph(g.order(), std::move(edges));
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Graph from_mask(int n, std::uint64_t mask) {
    const auto pairs = all_pairs(n);
    if (pairs.size() > 64) throw PreconditionError("from_mask needs C(n,2) <= 64");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    return Graph(n, std::move(edges));
}

Graph gnp(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gnm(int n, std::size_t m, std::mt19937_64& rng) {
    auto pairs = all_pairs(n);
    if (m > pairs.size()) throw PreconditionError("gnm: too many edges requested");
    // partial Fisher-Yates
    for (std::size_t i = 0; i < m; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, pairs.size() - 1);
        std::swap(pairs[i], pairs[pick(rng)]);
    }
    pairs.resize(m);
    return Graph(n, std::move(pairs));
}

}  // namespace rainbow::gen
