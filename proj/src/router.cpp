#include "rainbow/router.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "rainbow/preconditions.hpp"

namespace rainbow {

std::optional<PathWitness> try_connect_short(const Graph& g, Vertex x, Vertex y,
                                             const std::vector<bool>& blocked, ShortPathOrder order) {
    auto free = [&](Vertex v) {
        return v != x && v != y && (blocked.empty() || !blocked[static_cast<std::size_t>(v)]);
    };
    auto via = [&](Vertex a) -> std::optional<PathWitness> {
        for (Vertex b : g.neighbors(a))
            if (b != a && free(b) && g.adjacent(b, y)) return PathWitness{{x, a, b, y}};
        return std::nullopt;
    };
    if (order == ShortPathOrder::shortest_first) {
        for (Vertex a : g.neighbors(x))
            if (free(a) && g.adjacent(a, y)) return PathWitness{{x, a, y}};
        for (Vertex a : g.neighbors(x))
            if (free(a))
                if (auto p = via(a)) return p;
        return std::nullopt;
    }
    for (Vertex a : g.neighbors(x)) {
        if (!free(a)) continue;
        if (g.adjacent(a, y)) return PathWitness{{x, a, y}};
        if (auto p = via(a)) return p;
    }
    return std::nullopt;
}

PathWitness connect_short(const Graph& g, Vertex x, Vertex y, std::span<const Vertex> avoid,
                          ConnectOptions options, std::vector<std::string>* warnings) {
    if (!g.contains(x) || !g.contains(y))
        throw PreconditionError(fmt::format("endpoint out of range for n={}", g.order()));
    if (x == y) throw PreconditionError("connect_short endpoints must differ");
    std::vector<bool> blocked(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : avoid) {
        if (!g.contains(v)) throw PreconditionError(fmt::format("vertex {} out of range", v));
        blocked[static_cast<std::size_t>(v)] = true;
    }
    if (blocked[static_cast<std::size_t>(x)] || blocked[static_cast<std::size_t>(y)])
        throw PreconditionError("connect_short endpoints must not be avoided");
    const auto distinct = static_cast<long long>(std::count(blocked.begin(), blocked.end(), true));
    if (warnings && distinct > 5LL * options.k)
        warnings->push_back(fmt::format("|avoid| = {} exceeds 5k = {}", distinct, 5 * options.k));
    if (auto p = try_connect_short(g, x, y, blocked, options.order)) return *p;
    throw SearchFailure("connect", fmt::format("no path of length 2 or 3 between {} and {}", x, y));
}

std::string_view to_string(Recipe r) {
    switch (r) {
        case Recipe::case1: return "case1";
        case Recipe::claim1_disjoint: return "claim1-disjoint";
        case Recipe::claim1_adjacent: return "claim1-adjacent";
        case Recipe::case2_adjacent: return "case2-adjacent";
        case Recipe::case2_disjoint_common: return "case2-disjoint-common";
        case Recipe::case2_disjoint_nocommon: return "case2-disjoint-nocommon";
    }
    return "?";
}

std::string_view to_string(Adjuster a) {
    switch (a) {
        case Adjuster::none: return "none";
        case Adjuster::through_q: return "through-q";
        case Adjuster::skip_q: return "skip-q";
    }
    return "?";
}

namespace {

class Used {
public:
    explicit Used(int n) : bits_(static_cast<std::size_t>(n), false) {}
    void add(Vertex v) { bits_[static_cast<std::size_t>(v)] = true; }
    void add(const std::vector<Vertex>& vs) {
        for (Vertex v : vs) add(v);
    }
    bool has(Vertex v) const { return bits_[static_cast<std::size_t>(v)]; }
    const std::vector<bool>& bits() const { return bits_; }

private:
    std::vector<bool> bits_;
};

/// Smallest common neighbour of a and b accepted by `ok`.
std::optional<Vertex> first_common(const Graph& g, Vertex a, Vertex b,
                                   const std::function<bool(Vertex)>& ok) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    for (auto i = na.begin(), j = nb.begin(); i != na.end() && j != nb.end();) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else {
            if (ok(*i)) return *i;
            ++i, ++j;
        }
    }
    return std::nullopt;
}

/// try_connect_short with the |avoid| <= 5k bookkeeping of the checked form.
std::optional<PathWitness> short_link(const Graph& g, Vertex a, Vertex b, const Used& used,
                                      ShortPathOrder order, int k, RouteDiagnostics& diag) {
    const auto& bits = used.bits();
    const auto avoided = std::count(bits.begin(), bits.end(), true) - (used.has(a) ? 1 : 0) -
                         (used.has(b) ? 1 : 0);
    if (avoided > 5L * k)
        diag.warnings.push_back(fmt::format("|avoid| = {} exceeds 5k = {}", avoided, 5 * k));
    return try_connect_short(g, a, b, bits, order);
}

std::vector<Vertex> interior(const PathWitness& p) {
    if (p.vertices.size() < 2) return {};
    return {p.vertices.begin() + 1, p.vertices.end() - 1};
}

void validate_route_args(const Graph& g, int k, Edge e1, Edge e2, const RouteOptions& options) {
    if (k < 4 && !(options.allow_k3 && k == 3))
        throw PreconditionError(fmt::format("k = {} is below 4 (k = 3 needs the exploratory flag)", k));
    if (2 * k + 1 > g.order())
        throw PreconditionError(
            fmt::format("graph has {} vertices, fewer than 2k+1 = {}", g.order(), 2 * k + 1));
    for (const Edge& e : {e1, e2})
        if (!g.contains(e.u) || !g.contains(e.v) || !g.edge_index(e))
            throw PreconditionError(fmt::format("{} is not an edge of the graph", to_string(e)));
    if (e1 == e2) throw PreconditionError("the two edges must differ");
}

Route finish(const Graph& g, int k, Edge e1, Edge e2, RouteDiagnostics diag) {
    Route out;
    std::size_t stage_sum = 0;
    for (const auto& s : diag.stages) {
        stage_sum += s.length() + 1;
        out.cycle.vertices.insert(out.cycle.vertices.end(), s.vertices.begin(), s.vertices.end());
    }
    const auto len = static_cast<std::size_t>(2 * k + 1);
    if (stage_sum != len || out.cycle.length() != len)
        throw VerificationFailure(fmt::format("{} route has {} vertices, expected {}",
                                              to_string(diag.recipe), out.cycle.length(), len));
    const Edge required[] = {e1, e2};
    if (auto check = verify_cycle(g, out.cycle, required); !check)
        throw VerificationFailure(fmt::format("{} route {} failed verification: {}",
                                              to_string(diag.recipe), to_string(out.cycle),
                                              check.reason));
    out.diagnostics = std::move(diag);
    return out;
}

[[noreturn]] void fail(RouteDiagnostics diag, const std::string& what) {
    throw RoutingFailure(fmt::format("routing failed at stage {}: {}", diag.failed_stage, what),
                         std::move(diag));
}

}  // namespace

// ---------------------------------------------------------------------------

Route route_good_pair_case1(const Graph& g, int k, std::span<const Vertex> set, Edge e1, Edge e2,
                            RouteOptions options) {
    validate_route_args(g, k, e1, e2, options);
    const int n = g.order();
    Used in_a(n);
    for (Vertex a : set) {
        if (!g.contains(a)) throw PreconditionError(fmt::format("vertex {} of A out of range", a));
        in_a.add(a);
    }
    for (const Edge& e : {e1, e2})
        if (!in_a.has(e.u) && !in_a.has(e.v))
            throw PreconditionError(fmt::format("{} has no endpoint in A", to_string(e)));

    RouteDiagnostics base;
    base.recipe = Recipe::case1;
    base.hypotheses = check_preconditions(g, Context::case1, {k, options.eps});

    struct Pairing {
        Vertex x, y, z, w;
        std::vector<Vertex> p1;  // z .. x
    };
    const std::size_t max_p1 = static_cast<std::size_t>(std::min(3, 2 * k - 5));
    std::vector<Pairing> pairings;
    for (Vertex x : {e1.u, e1.v})
        for (Vertex z : {e2.u, e2.v}) {
            const Vertex y = e1.other(x);
            const Vertex w = e2.other(z);
            if (!in_a.has(x) || !in_a.has(z) || y == z || y == w || w == x) continue;
            std::vector<bool> blocked(static_cast<std::size_t>(n), false);
            blocked[static_cast<std::size_t>(y)] = true;
            blocked[static_cast<std::size_t>(w)] = true;
            auto sp = shortest_path(g, z, x, blocked);
            if (!sp || sp->size() - 1 > max_p1) continue;
            pairings.push_back({x, y, z, w, std::move(*sp)});
        }
    std::stable_sort(pairings.begin(), pairings.end(),
                     [](const Pairing& a, const Pairing& b) { return a.p1.size() < b.p1.size(); });
    if (pairings.empty()) {
        base.failed_stage = "P1";
        fail(std::move(base), fmt::format("no path of length <= {} joins the edges inside A", max_p1));
    }

    RouteDiagnostics last = base;
    for (const Pairing& pr : pairings) {
        RouteDiagnostics diag = base;
        Used used(n);
        used.add(pr.p1);
        used.add(pr.y);
        used.add(pr.w);
        const int len2 = 2 * k - 5 - static_cast<int>(pr.p1.size() - 1);
        auto p2 = greedy_path(g, pr.y, used.bits(), len2);
        if (!p2) {
            diag.failed_stage = "P2";
            last = std::move(diag);
            continue;
        }
        used.add(p2->vertices);
        auto p3 = try_path_len4(g, p2->back(), pr.w, used.bits());
        if (!p3) {
            diag.failed_stage = "P3";
            last = std::move(diag);
            continue;
        }
        diag.stages = {{"w", {pr.w}}, {"P1", pr.p1}, {"P2", p2->vertices}, {"P3", interior(*p3)}};
        return finish(g, k, e1, e2, std::move(diag));
    }
    fail(std::move(last), "every endpoint pairing got stuck");
}

// ---------------------------------------------------------------------------

Route route_in_dense_subgraph(const Graph& g, int k, Edge e1, Edge e2, RouteOptions options) {
    validate_route_args(g, k, e1, e2, options);
    const int n = g.order();
    RouteDiagnostics base;
    base.hypotheses = check_preconditions(g, Context::dense_claim, {k, options.eps});
    RouteDiagnostics last;

    if (e1.shares_vertex(e2)) {
        base.recipe = Recipe::claim1_adjacent;
        const Vertex p = e1.touches(e2.u) ? e2.u : e2.v;
        const std::pair<Vertex, Vertex> orientations[] = {{e1.other(p), e2.other(p)},
                                                          {e2.other(p), e1.other(p)}};
        for (auto [q, z] : orientations) {
            RouteDiagnostics diag = base;
            Used used(n);
            used.add(q);
            used.add(p);
            auto path = greedy_path(g, z, used.bits(), 2 * k - 3);
            if (!path) {
                diag.failed_stage = "P";
                last = std::move(diag);
                continue;
            }
            used.add(path->vertices);
            auto b = first_common(g, path->back(), q, [&](Vertex v) { return !used.has(v); });
            if (!b) {
                diag.failed_stage = "b";
                last = std::move(diag);
                continue;
            }
            diag.stages = {{"pq", {q, p}}, {"P", path->vertices}, {"b", {*b}}};
            return finish(g, k, e1, e2, std::move(diag));
        }
        fail(std::move(last), "no orientation closes the cycle");
    }

    base.recipe = Recipe::claim1_disjoint;
    for (Vertex p : {e1.u, e1.v})
        for (Vertex z : {e2.u, e2.v}) {
            const Vertex q = e1.other(p);
            const Vertex w = e2.other(z);
            RouteDiagnostics diag = base;
            Used used(n);
            for (Vertex v : {p, q, z, w}) used.add(v);
            auto a = first_common(g, p, z, [&](Vertex v) { return !used.has(v); });
            if (!a) {
                diag.failed_stage = "a";
                last = std::move(diag);
                continue;
            }
            used.add(*a);
            auto path = greedy_path(g, w, used.bits(), 2 * k - 5);
            if (!path) {
                diag.failed_stage = "P";
                last = std::move(diag);
                continue;
            }
            used.add(path->vertices);
            auto b = first_common(g, path->back(), q, [&](Vertex v) { return !used.has(v); });
            if (!b) {
                diag.failed_stage = "b";
                last = std::move(diag);
                continue;
            }
            diag.stages = {{"pq", {q, p}}, {"a", {*a}}, {"z", {z}}, {"P", path->vertices}, {"b", {*b}}};
            return finish(g, k, e1, e2, std::move(diag));
        }
    fail(std::move(last), "no orientation closes the cycle");
}

// ---------------------------------------------------------------------------

Route route_good_pair_case2(const Graph& g, int k, const BookWitness& book, Edge e1, Edge e2,
                            RouteOptions options) {
    validate_route_args(g, k, e1, e2, options);
    if (auto check = verify_book(g, book); !check)
        throw PreconditionError("invalid book: " + check.reason);
    const int n = g.order();
    const Vertex p = book.p;
    const Vertex q = book.q;
    Used in_a(n);
    for (Vertex z : g.neighbors(p))
        if (z != q) in_a.add(z);
    auto spine = [&](Vertex v) { return v == p || v == q; };
    for (const Edge& e : {e1, e2})
        if (spine(e.u) || spine(e.v) || (!in_a.has(e.u) && !in_a.has(e.v)))
            throw PreconditionError(
                fmt::format("{} is not good for the book {}{}", to_string(e), p, q));

    RouteDiagnostics base;
    base.hypotheses = check_preconditions(g, Context::case2, {k, options.eps});
    const auto order = options.short_order;
    auto first_in_book = [&](const std::function<bool(Vertex)>& ok) -> std::optional<Vertex> {
        for (Vertex r : book.common)
            if (ok(r)) return r;
        return std::nullopt;
    };
    RouteDiagnostics last;

    if (e1.shares_vertex(e2)) {
        base.recipe = Recipe::case2_adjacent;
        const Vertex x = e1.touches(e2.u) ? e2.u : e2.v;
        const std::pair<Vertex, Vertex> orientations[] = {{e1.other(x), e2.other(x)},
                                                          {e2.other(x), e1.other(x)}};
        for (auto [y, z] : orientations) {
            RouteDiagnostics diag = base;
            Used used(n);
            for (Vertex v : {p, q, x, y, z}) used.add(v);
            auto r = first_in_book([&](Vertex v) { return !used.has(v); });
            if (!r) {
                diag.failed_stage = "adjuster";
                last = std::move(diag);
                continue;
            }
            used.add(*r);
            auto p1 = short_link(g, p, z, used, order, k, diag);
            if (!p1 || static_cast<int>(p1->length()) > 2 * k - 5) {
                diag.failed_stage = "P1";
                last = std::move(diag);
                continue;
            }
            used.add(p1->vertices);
            auto p2 = greedy_path(g, y, used.bits(), 2 * k - 5 - static_cast<int>(p1->length()));
            if (!p2) {
                diag.failed_stage = "P2";
                last = std::move(diag);
                continue;
            }
            used.add(p2->vertices);
            auto p3 = short_link(g, p2->back(), *r, used, order, k, diag);
            if (!p3) {
                diag.failed_stage = "P3";
                last = std::move(diag);
                continue;
            }
            const bool through = p3->length() == 2;
            diag.adjuster = through ? Adjuster::through_q : Adjuster::skip_q;
            diag.stages = {{"adjuster", through ? std::vector<Vertex>{*r, q} : std::vector<Vertex>{*r}},
                           {"P1", p1->vertices},
                           {"x", {x}},
                           {"P2", p2->vertices},
                           {"P3", interior(*p3)}};
            return finish(g, k, e1, e2, std::move(diag));
        }
        fail(std::move(last), "no orientation closes the cycle");
    }

    // Disjoint edges: (x,y) from one edge, (z,w) from the other with z in A.
    struct Orientation {
        Vertex x, y, z, w;
    };
    std::vector<Orientation> orientations;
    for (auto [f, s] : {std::pair{e1, e2}, std::pair{e2, e1}})
        for (Vertex z : {s.u, s.v}) {
            if (!in_a.has(z)) continue;
            for (Vertex x : {f.u, f.v}) orientations.push_back({x, f.other(x), z, s.other(z)});
        }

    bool any_common = false;
    base.recipe = Recipe::case2_disjoint_common;
    for (const Orientation& o : orientations) {
        auto u = first_common(g, o.y, o.w,
                              [&](Vertex v) { return !spine(v) && v != o.x && v != o.z; });
        if (!u) continue;
        any_common = true;
        RouteDiagnostics diag = base;
        Used used(n);
        for (Vertex v : {p, q, o.x, o.y, o.z, o.w, *u}) used.add(v);
        auto r = first_in_book([&](Vertex v) { return !used.has(v); });
        if (!r) {
            diag.failed_stage = "adjuster";
            last = std::move(diag);
            continue;
        }
        used.add(*r);
        std::optional<PathWitness> p1;
        if (2 * k - 8 >= 0) p1 = greedy_path(g, o.x, used.bits(), 2 * k - 8);
        if (!p1) {
            diag.failed_stage = "P1";
            last = std::move(diag);
            continue;
        }
        used.add(p1->vertices);
        auto p2 = short_link(g, p1->back(), *r, used, order, k, diag);
        if (!p2) {
            diag.failed_stage = "P2";
            last = std::move(diag);
            continue;
        }
        const bool through = p2->length() == 2;
        diag.adjuster = through ? Adjuster::through_q : Adjuster::skip_q;
        diag.stages = {{"P1", p1->vertices},
                       {"P2", interior(*p2)},
                       {"adjuster", through ? std::vector<Vertex>{*r, q, p} : std::vector<Vertex>{*r, p}},
                       {"e2", {o.z, o.w}},
                       {"u", {*u}},
                       {"y", {o.y}}};
        return finish(g, k, e1, e2, std::move(diag));
    }
    if (any_common) fail(std::move(last), "no orientation with a common neighbour closes the cycle");

    // No common neighbour of y and w: r adjacent to y, in either role assignment.
    base.recipe = Recipe::case2_disjoint_nocommon;
    last = base;
    last.failed_stage = "adjuster";
    for (const Orientation& o : orientations) {
        RouteDiagnostics diag = base;
        auto r = first_in_book([&](Vertex v) {
            return v != o.x && v != o.y && v != o.z && v != o.w && g.adjacent(v, o.y);
        });
        if (!r) {
            diag.failed_stage = "adjuster";
            last = std::move(diag);
            continue;
        }
        Used used(n);
        for (Vertex v : {p, q, *r, o.x, o.y, o.z, o.w}) used.add(v);
        auto p1 = greedy_path(g, o.x, used.bits(), 2 * k - 7);
        if (!p1) {
            diag.failed_stage = "P1";
            last = std::move(diag);
            continue;
        }
        used.add(p1->vertices);
        auto p2 = short_link(g, p1->back(), o.w, used, order, k, diag);
        if (!p2) {
            diag.failed_stage = "P2";
            last = std::move(diag);
            continue;
        }
        const bool through = p2->length() == 2;
        diag.adjuster = through ? Adjuster::through_q : Adjuster::skip_q;
        diag.stages = {{"z", {o.z}},
                       {"adjuster", through ? std::vector<Vertex>{p, q, *r} : std::vector<Vertex>{p, *r}},
                       {"y", {o.y}},
                       {"P1", p1->vertices},
                       {"P2", interior(*p2)},
                       {"w", {o.w}}};
        return finish(g, k, e1, e2, std::move(diag));
    }
    fail(std::move(last), "no orientation closes the cycle");
}

// ---------------------------------------------------------------------------

RouteCase parse_route_case(std::string_view id) {
    if (id == "auto") return RouteCase::automatic;
    if (id == "case1") return RouteCase::case1;
    if (id == "claim1") return RouteCase::claim1;
    if (id == "case2") return RouteCase::case2;
    throw PreconditionError(fmt::format("unknown routing case '{}'", id));
}

Route route(const Graph& g, int k, RouteCase which, Edge e1, Edge e2,
            const std::optional<std::vector<Vertex>>& set, const std::optional<BookWitness>& book,
            RouteOptions options) {
    if (which == RouteCase::automatic) {
        if (book) which = RouteCase::case2;
        else if (set) which = RouteCase::case1;
        else {
            const double nn = g.order();
            const double dense = (0.25 + std::pow(options.eps, 6)) * nn * nn;
            which = at_least(static_cast<double>(g.size()), dense) ? RouteCase::case1 : RouteCase::case2;
        }
    }
    switch (which) {
        case RouteCase::case1: {
            const std::vector<Vertex> a = set ? *set : find_close_set(g).set;
            return route_good_pair_case1(g, k, a, e1, e2, options);
        }
        case RouteCase::claim1: return route_in_dense_subgraph(g, k, e1, e2, options);
        case RouteCase::case2: {
            const BookWitness b = book ? *book : find_book_edge(g);
            return route_good_pair_case2(g, k, b, e1, e2, options);
        }
        case RouteCase::automatic: break;
    }
    throw PreconditionError("unresolved routing case");
}

std::string to_string(const RouteDiagnostics& d) {
    std::string out = fmt::format("recipe {}\nadjuster {}\n", to_string(d.recipe), to_string(d.adjuster));
    for (const auto& s : d.stages) {
        out += fmt::format("stage {} (length {}):", s.name, s.length());
        for (Vertex v : s.vertices) out += fmt::format(" {}", v);
        out += '\n';
    }
    if (!d.failed_stage.empty()) out += fmt::format("failed at {}\n", d.failed_stage);
    for (const auto& w : d.warnings) out += fmt::format("warning: {}\n", w);
    out += to_string(d.hypotheses);
    return out;
}

}  // namespace rainbow
