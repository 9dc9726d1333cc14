#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

using Vertex = std::int32_t;

/// Unordered vertex pair, stored with u < v once normalised.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool touches(Vertex x) const noexcept { return u == x || v == x; }
    constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    constexpr bool shares_vertex(const Edge& e) const noexcept {
        return touches(e.u) || touches(e.v);
    }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Edges are kept sorted lexicographically and neighbour lists ascending, so
/// every traversal in the library visits vertices in ascending id order.
class Graph {
public:
    Graph() = default;

    /// Throws PreconditionError on loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Position of `e` in edges(), if present.
    std::optional<std::size_t> edge_index(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct GraphStats {
    int min_degree = 0;
    int max_degree = 0;
    std::size_t edge_count = 0;
    Vertex argmin = 0;
    Vertex argmax = 0;
};

/// Degree extremes; argmin/argmax are the smallest ids attaining them.
GraphStats stats(const Graph& g);
int min_degree(const Graph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Shortest-path distances from `s`; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, Vertex s);

/// BFS restricted to vertices with blocked[v] == false (s itself must be unblocked).
std::vector<int> bfs_distances(const Graph& g, Vertex s, const std::vector<bool>& blocked);

/// Shortest s-t path through unblocked vertices, ascending-id tie-break.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex s, Vertex t,
                                                 const std::vector<bool>& blocked);

/// N(u) ∩ N(v), ascending. Throws PreconditionError when u == v.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new id -> id in the parent graph
};

/// G[V \ S] with kept vertices relabelled densely in ascending order.
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

struct PathWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

struct CycleWitness {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }

    /// Rotate so the smallest id is first and orient so its smaller cycle neighbour is second.
    CycleWitness canonical() const;

    friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
    friend auto operator<=>(const CycleWitness&, const CycleWitness&) = default;
};

/// Outcome of a witness check; `reason` names the first violated condition.
struct WitnessCheck {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
    static WitnessCheck pass() { return {}; }
    static WitnessCheck fail(std::string why) { return {false, std::move(why)}; }
};

WitnessCheck verify_path(const Graph& g, const PathWitness& w,
                         std::span<const Edge> required_edges = {});
WitnessCheck verify_cycle(const Graph& g, const CycleWitness& w,
                          std::span<const Edge> required_edges = {});

std::string to_string(const Edge& e);
std::string to_string(const PathWitness& w);
std::string to_string(const CycleWitness& w);

}  // namespace rainbow
