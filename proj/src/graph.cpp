#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "rainbow/error.hpp"

namespace rainbow {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError(fmt::format("negative vertex count {}", n));
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw PreconditionError(fmt::format("loop at vertex {}", e.u));
        if (e.u < 0 || e.v >= n)
            throw PreconditionError(fmt::format("edge {} out of range for n={}", to_string(e), n));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw PreconditionError("duplicate edge " + to_string(*dup));

    adj_.resize(static_cast<std::size_t>(n));
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b) || a == b) return false;
    auto na = neighbors(a);
    auto nb = neighbors(b);
    if (na.size() > nb.size()) std::swap(na, nb), std::swap(a, b);
    return std::binary_search(na.begin(), na.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.edge_count = g.size();
    if (g.order() == 0) return s;
    s.min_degree = g.degree(0);
    s.max_degree = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d < s.min_degree) s.min_degree = d, s.argmin = v;
        if (d > s.max_degree) s.max_degree = d, s.argmax = v;
    }
    return s;
}

int min_degree(const Graph& g) { return stats(g).min_degree; }

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v))
        throw PreconditionError(fmt::format("vertex {} out of range for n={}", v, g.order()));
}

}  // namespace

std::vector<int> bfs_distances(const Graph& g, Vertex s, const std::vector<bool>& blocked) {
    check_vertex(g, s);
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(static_cast<std::size_t>(g.order()));
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            auto& dy = dist[static_cast<std::size_t>(y)];
            if (dy != kUnreachable) continue;
            if (!blocked.empty() && blocked[static_cast<std::size_t>(y)]) continue;
            dy = dist[static_cast<std::size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex s) { return bfs_distances(g, s, {}); }

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex s, Vertex t,
                                                 const std::vector<bool>& blocked) {
    check_vertex(g, s);
    check_vertex(g, t);
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<Vertex> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[static_cast<std::size_t>(t)]; ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            const auto yi = static_cast<std::size_t>(y);
            if (seen[yi] || (!blocked.empty() && blocked[yi])) continue;
            seen[yi] = true;
            parent[yi] = x;
            queue.push_back(y);
        }
    }
    if (!seen[static_cast<std::size_t>(t)]) return std::nullopt;
    std::vector<Vertex> path;
    for (Vertex x = t; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) throw PreconditionError("common_neighbors requires distinct vertices");
    std::vector<Vertex> out;
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<bool> gone(n, false);
    for (Vertex v : removed) {
        check_vertex(g, v);
        gone[static_cast<std::size_t>(v)] = true;
    }
    InducedSubgraph out;
    std::vector<Vertex> relabel(n, -1);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        const Vertex a = relabel[static_cast<std::size_t>(e.u)];
        const Vertex b = relabel[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    out.graph = Graph(static_cast<int>(out.original.size()), std::move(kept));
    return out;
}

CycleWitness CycleWitness::canonical() const {
    const auto len = vertices.size();
    if (len < 2) return *this;
    const auto start = static_cast<std::size_t>(
        std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    const Vertex next = vertices[(start + 1) % len];
    const Vertex prev = vertices[(start + len - 1) % len];
    CycleWitness out;
    out.vertices.reserve(len);
    if (next <= prev) {
        for (std::size_t i = 0; i < len; ++i) out.vertices.push_back(vertices[(start + i) % len]);
    } else {
        for (std::size_t i = 0; i < len; ++i) out.vertices.push_back(vertices[(start + len - i) % len]);
    }
    return out;
}

namespace {

WitnessCheck check_sequence(const Graph& g, std::span<const Vertex> seq, bool closed) {
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : seq) {
        if (!g.contains(v)) return WitnessCheck::fail(fmt::format("vertex {} out of range", v));
        if (seen[static_cast<std::size_t>(v)])
            return WitnessCheck::fail(fmt::format("repeated vertex {}", v));
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1]))
            return WitnessCheck::fail(fmt::format("non-edge {}-{}", seq[i], seq[i + 1]));
    if (closed && !g.adjacent(seq.back(), seq.front()))
        return WitnessCheck::fail(fmt::format("non-edge {}-{} (closing)", seq.back(), seq.front()));
    return WitnessCheck::pass();
}

bool walk_contains(std::span<const Vertex> seq, Edge e, bool closed) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (Edge(seq[i], seq[i + 1]) == e) return true;
    return closed && seq.size() >= 2 && Edge(seq.back(), seq.front()) == e;
}

}  // namespace

WitnessCheck verify_path(const Graph& g, const PathWitness& w, std::span<const Edge> required) {
    if (w.vertices.empty()) return WitnessCheck::fail("empty path");
    if (auto c = check_sequence(g, w.vertices, false); !c) return c;
    for (const Edge& e : required)
        if (!walk_contains(w.vertices, e, false))
            return WitnessCheck::fail("missing edge " + to_string(e));
    return WitnessCheck::pass();
}

WitnessCheck verify_cycle(const Graph& g, const CycleWitness& w, std::span<const Edge> required) {
    if (w.vertices.size() < 3)
        return WitnessCheck::fail(fmt::format("cycle of length {} < 3", w.vertices.size()));
    if (auto c = check_sequence(g, w.vertices, true); !c) return c;
    for (const Edge& e : required)
        if (!walk_contains(w.vertices, e, true))
            return WitnessCheck::fail("missing edge " + to_string(e));
    return WitnessCheck::pass();
}

std::string to_string(const Edge& e) { return fmt::format("{{{},{}}}", e.u, e.v); }
std::string to_string(const PathWitness& w) { return fmt::format("{}", fmt::join(w.vertices, "-")); }
std::string to_string(const CycleWitness& w) {
    if (w.vertices.empty()) return "()";
    return fmt::format("{}-{}", fmt::join(w.vertices, "-"), w.vertices.front());
}

}  // namespace rainbow
