#include "rainbow/lemmas.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rainbow/bitset.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(CloseSetBranch b) {
    switch (b) {
        case CloseSetBranch::whole_graph: return "whole-graph";
        case CloseSetBranch::star_of_max_degree: return "star-of-max-degree";
        case CloseSetBranch::high_degree_threshold: return "high-degree-threshold";
    }
    return "?";
}

namespace {

/// Vertices within distance 3 of s (s included).
Bitset ball3(const Graph& g, Vertex s) {
    Bitset seen(static_cast<std::size_t>(g.order()));
    std::vector<Vertex> frontier{s};
    seen.set(static_cast<std::size_t>(s));
    for (int depth = 0; depth < 3 && !frontier.empty(); ++depth) {
        std::vector<Vertex> next;
        for (Vertex x : frontier)
            for (Vertex y : g.neighbors(x))
                if (!seen.test(static_cast<std::size_t>(y))) {
                    seen.set(static_cast<std::size_t>(y));
                    next.push_back(y);
                }
        frontier = std::move(next);
    }
    return seen;
}

std::vector<bool> mask_of(const Graph& g, std::span<const Vertex> vs) {
    std::vector<bool> mask(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : vs) {
        if (!g.contains(v))
            throw PreconditionError(fmt::format("vertex {} out of range for n={}", v, g.order()));
        mask[static_cast<std::size_t>(v)] = true;
    }
    return mask;
}

void require_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v))
        throw PreconditionError(fmt::format("vertex {} out of range for n={}", v, g.order()));
}

}  // namespace

// ---------------------------------------------------------------------------

WitnessCheck verify_close_set(const Graph& g, const CloseSetCertificate& cert) {
    const double n = g.order();
    const double c1 = close_set_bound(g.order(), static_cast<double>(g.size()));
    if (std::abs(cert.c1 - c1) > 1e-6 || std::abs(cert.c2 - (n - c1)) > 1e-6)
        return WitnessCheck::fail("c1/c2 do not match n and e");
    const double e = static_cast<double>(g.size());
    for (double root : {cert.c1, cert.c2}) {
        const double residual = root * root - n * root + n * (n - 1) / 2 - e;
        if (std::abs(residual) > 1e-6 * std::max(1.0, n * n))
            return WitnessCheck::fail(fmt::format("root {} does not solve the quadratic", root));
    }
    if (!at_least(static_cast<double>(cert.set.size()), cert.c1))
        return WitnessCheck::fail(fmt::format("|A| = {} < c1 = {:.6f}", cert.set.size(), cert.c1));
    std::vector<bool> member(static_cast<std::size_t>(g.order()), false);
    for (Vertex a : cert.set) {
        if (!g.contains(a)) return WitnessCheck::fail(fmt::format("vertex {} out of range", a));
        if (member[static_cast<std::size_t>(a)])
            return WitnessCheck::fail(fmt::format("vertex {} listed twice", a));
        member[static_cast<std::size_t>(a)] = true;
    }
    for (Vertex a : cert.set) {
        const auto dist = bfs_distances(g, a);
        for (Vertex b : cert.set)
            if (dist[static_cast<std::size_t>(b)] > 3)
                return WitnessCheck::fail(fmt::format("dist({},{}) > 3", a, b));
    }
    return WitnessCheck::pass();
}

CloseSetCertificate find_close_set(const Graph& g) {
    const int n = g.order();
    const double e = static_cast<double>(g.size());
    auto report = check_preconditions(g, Context::close_set);
    if (!report.overall)
        throw PreconditionError("close set needs e >= n^2/4 - n/2", std::move(report));

    CloseSetCertificate cert;
    cert.c1 = close_set_bound(n, e);
    cert.c2 = n - cert.c1;

    std::vector<Bitset> balls;
    balls.reserve(static_cast<std::size_t>(n));
    bool all_close = true;
    for (Vertex v = 0; v < n; ++v) {
        balls.push_back(ball3(g, v));
        all_close = all_close && balls.back().count() == static_cast<std::size_t>(n);
    }

    const GraphStats st = stats(g);
    if (all_close) {
        cert.branch = CloseSetBranch::whole_graph;
        for (Vertex v = 0; v < n; ++v) cert.set.push_back(v);
    } else if (at_least(st.max_degree, cert.c1 - 1)) {
        cert.branch = CloseSetBranch::star_of_max_degree;
        cert.centre = st.argmax;
        auto nb = g.neighbors(st.argmax);
        cert.set.assign(nb.begin(), nb.end());
        cert.set.insert(std::lower_bound(cert.set.begin(), cert.set.end(), st.argmax), st.argmax);
    } else {
        cert.branch = CloseSetBranch::high_degree_threshold;
        int threshold = -1;
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y)
                if (!balls[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)) &&
                    g.degree(x) <= g.degree(y))
                    threshold = std::max(threshold, g.degree(x));
        cert.threshold = threshold;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) > threshold) cert.set.push_back(v);
    }

    if (auto check = verify_close_set(g, cert); !check)
        throw VerificationFailure(fmt::format("close-set certificate ({} branch) failed: {}",
                                              to_string(cert.branch), check.reason));
    return cert;
}

// ---------------------------------------------------------------------------

std::optional<PathWitness> try_path_len4(const Graph& g, Vertex x, Vertex y,
                                         const std::vector<bool>& blocked) {
    auto free = [&](Vertex v) { return blocked.empty() || !blocked[static_cast<std::size_t>(v)]; };
    for (Vertex a : g.neighbors(x)) {
        if (a == y || !free(a)) continue;
        for (Vertex b : g.neighbors(a)) {
            if (b == x || b == y || !free(b)) continue;
            for (Vertex c : g.neighbors(b)) {
                if (c == x || c == y || c == a || !free(c)) continue;
                if (g.adjacent(c, y)) return PathWitness{{x, a, b, c, y}};
            }
        }
    }
    return std::nullopt;
}

PathWitness find_path_len4(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> avoid) {
    require_vertex(g, x);
    require_vertex(g, y);
    if (x == y) throw PreconditionError("path4 endpoints must differ");
    const auto blocked = mask_of(g, avoid);
    if (blocked[static_cast<std::size_t>(x)] || blocked[static_cast<std::size_t>(y)])
        throw PreconditionError("path4 endpoints must not be in the avoided set");

    if (auto path = try_path_len4(g, x, y, blocked)) return *path;

    const auto sub = delete_vertices(g, avoid);
    throw SearchFailure("path4",
                        fmt::format("no path of length 4 between {} and {}", x, y),
                        check_preconditions(sub.graph, Context::path4));
}

// ---------------------------------------------------------------------------

std::optional<PathWitness> greedy_path(const Graph& g, Vertex v, const std::vector<bool>& blocked,
                                       int len) {
    std::vector<bool> used = blocked;
    used.resize(static_cast<std::size_t>(g.order()), false);
    PathWitness path{{v}};
    used[static_cast<std::size_t>(v)] = true;
    for (int step = 0; step < len; ++step) {
        const auto nb = g.neighbors(path.back());
        auto it = std::find_if(nb.begin(), nb.end(),
                               [&](Vertex w) { return !used[static_cast<std::size_t>(w)]; });
        if (it == nb.end()) return std::nullopt;
        used[static_cast<std::size_t>(*it)] = true;
        path.vertices.push_back(*it);
    }
    return path;
}

PathWitness greedy_extend(const Graph& g, Vertex v, std::span<const Vertex> avoid, int len) {
    require_vertex(g, v);
    if (len < 0) throw PreconditionError("greedy length must be non-negative");
    const auto blocked = mask_of(g, avoid);
    if (blocked[static_cast<std::size_t>(v)])
        throw PreconditionError(fmt::format("start vertex {} is in the avoided set", v));
    const auto distinct = static_cast<int>(std::count(blocked.begin(), blocked.end(), true));
    const int delta = min_degree(g);
    if (distinct > delta - len)
        throw PreconditionError(
            fmt::format("|S| = {} exceeds delta - len = {} - {}", distinct, delta, len));
    if (auto path = greedy_path(g, v, blocked, len)) return *path;
    throw StuckError("greedy", fmt::format("greedy walk from {} stuck before length {}", v, len));
}

// ---------------------------------------------------------------------------

WitnessCheck verify_book(const Graph& g, const BookWitness& book) {
    if (!g.contains(book.p) || !g.contains(book.q) || !g.adjacent(book.p, book.q))
        return WitnessCheck::fail(fmt::format("{}{} is not an edge", book.p, book.q));
    if (common_neighbors(g, book.p, book.q) != book.common)
        return WitnessCheck::fail("common set differs from N(p) ∩ N(q)");
    return WitnessCheck::pass();
}

BookWitness find_book_edge(const Graph& g) {
    auto report = check_preconditions(g, Context::book);
    if (!report.overall) throw PreconditionError("book edge needs e > n^2/4", std::move(report));

    std::size_t best_width = 0;
    Edge best = g.edges().front();
    bool first = true;
    for (const Edge& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::size_t width = 0;
        for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
            if (*i < *j) ++i;
            else if (*j < *i) ++j;
            else ++width, ++i, ++j;
        }
        if (first || width > best_width) best_width = width, best = e, first = false;
    }
    BookWitness book{best.u, best.v, common_neighbors(g, best.u, best.v)};
    if (6 * book.common.size() <= static_cast<std::size_t>(g.order()))
        throw VerificationFailure(fmt::format("widest book {} has only {} common neighbours",
                                              to_string(best), book.common.size()));
    return book;
}

// ---------------------------------------------------------------------------

TightnessGraph tightness_graph_from_size(int n, int s) {
    if (s < 1 || 2 * s > n - 3)
        throw PreconditionError(
            fmt::format("infeasible: need 1 <= s and 2s <= n - 3 (n={}, s={})", n, s));
    const int clique = n - 2;
    std::vector<Edge> edges;
    for (Vertex a = 0; a < clique; ++a)
        for (Vertex b = a + 1; b < clique; ++b) {
            const bool a_in_a = a < s;
            const bool b_in_b = b >= s && b < 2 * s;
            if (a_in_a && b_in_b) continue;
            edges.emplace_back(a, b);
        }
    const Vertex u = n - 2;
    const Vertex v = n - 1;
    for (Vertex a = 0; a < s; ++a) edges.emplace_back(u, a);
    for (Vertex b = s; b < 2 * s; ++b) edges.emplace_back(v, b);
    return {Graph(n, std::move(edges)), u, v, s};
}

TightnessGraph tightness_graph(int n, long long e) {
    const double nn = n;
    const double ee = static_cast<double>(e);
    if (!at_least(ee, nn * nn / 4 + 4))
        throw PreconditionError(fmt::format("infeasible: e = {} < n^2/4 + 4 = {}", e, nn * nn / 4 + 4));
    if (e > static_cast<long long>(n) * (n - 1) / 2)
        throw PreconditionError(fmt::format("infeasible: e = {} > C({},2)", e, n));
    const int s = static_cast<int>(std::ceil(path4_degree_bound(n, ee) - kSlack));
    if (2 * s > n - 3)
        throw PreconditionError(
            fmt::format("infeasible: set size s = {} gives 2s = {} > n - 3 = {}", s, 2 * s, n - 3));
    auto t = tightness_graph_from_size(n, s);
    if (static_cast<long long>(t.graph.size()) <= e)
        throw PreconditionError(fmt::format(
            "infeasible: construction with s = {} has {} edges, not more than e = {}", s,
            t.graph.size(), e));
    return t;
}

}  // namespace rainbow
