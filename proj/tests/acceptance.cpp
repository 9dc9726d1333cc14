// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracles.hpp"
#include "rainbow/conflict.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/formulas.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/good_edges.hpp"
#include "rainbow/lemmas.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/router.hpp"

using namespace rainbow;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::size_t failures = 0;

    void fail(const std::string& why) {
        if (failures++ < 5) detail += (detail.empty() ? "" : "; ") + why;
        pass = false;
    }
};

int failed_criteria = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) o.fail(fmt::format("runtime {:.1f}s exceeds {:.0f}s", secs, budget_s));
    if (!o.pass) ++failed_criteria;
    fmt::print("{} [{:2}] {} ({:.2f}s){}{}\n", o.pass ? "PASS" : "FAIL", id, name, secs,
               o.detail.empty() ? "" : ": ", o.detail);
    std::fflush(stdout);
}

int min_degree_of(const Graph& g) { return g.order() == 0 ? 0 : min_degree(g); }

// 1
Outcome two_clique_witnesses() {
    Outcome o;
    int runs = 0;
    for (int k : {2, 3, 4}) {
        const int L = 2 * k + 1;
        for (int n = L; n <= 12; ++n) {
            const long long lo = turan_threshold(n);
            const long long hi = max_edges(n);
            for (long long e : {lo, (lo + hi) / 2, hi}) {
                TwoCliqueWitness w;
                try {
                    w = two_clique_graph(n, e);
                } catch (const PreconditionError&) {
                    continue;  // size inequality fails
                }
                const auto t0 = std::chrono::steady_clock::now();
                const auto r = verify_rainbow(w.graph, w.coloring, L);
                const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                ++runs;
                if (!r.pass) o.fail(fmt::format("n={} e={} L={} not rainbow", n, e, L));
                if (secs > 60) o.fail(fmt::format("n={} e={} L={} took {:.1f}s", n, e, L, secs));
            }
        }
    }
    if (o.pass) o.detail = fmt::format("{} witnesses verified", runs);
    return o;
}

// 2
Outcome oracle_values() {
    Outcome o;
    auto timed = [&](int n, long long e, int L, double budget) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = f_oracle(n, e, L);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > budget) o.fail(fmt::format("f({},{},{}) took {:.1f}s", n, e, L, secs));
        return r;
    };
    const auto a = timed(4, 5, 3, 10);
    if (a.value != 3) o.fail(fmt::format("f(4,5,3) = {}", a.value));
    const auto b = timed(5, 7, 3, 10);
    if (b.value != 3) o.fail(fmt::format("f(5,7,3) = {}", b.value));
    const auto c = timed(6, 10, 5, 600);
    if (c.graphs_examined + c.graphs_skipped != 3003)
        o.fail(fmt::format("f(6,10,5) covered {} graphs", c.graphs_examined + c.graphs_skipped));
    if (o.pass)
        o.detail = fmt::format("f(4,5,3)=3, f(5,7,3)=3, f(6,10,5)={} (large-n value 6, informational; "
                               "{} evaluated, {} pruned)",
                               c.value, c.graphs_examined, c.graphs_skipped);
    return o;
}

void check_close_set(const Graph& g, Outcome& o) {
    const auto c = find_close_set(g);
    const double n = g.order();
    const double e = static_cast<double>(g.size());
    const double bound = n / 2 + std::sqrt(e - n * n / 4 + n / 2);
    if (static_cast<double>(c.set.size()) < bound - 1e-9)
        o.fail(fmt::format("|A|={} < {:.3f}", c.set.size(), bound));
    const auto d = oracle::distances(g);
    for (Vertex a : c.set)
        for (Vertex b : c.set)
            if (d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 3)
                o.fail(fmt::format("dist({},{}) > 3", a, b));
}

// 3
Outcome close_set_lemma() {
    Outcome o;
    std::size_t exhaustive = 0;
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        const double need = std::ceil(n * n / 4.0 - n / 2.0);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            if (std::popcount(mask) < need) continue;
            check_close_set(gen::from_mask(n, mask), o);
            ++exhaustive;
        }
    }
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> density(0.5, 0.95);
    int resampled = 0;
    for (int t = 0; t < 10000; ++t) {
        const int n = t % 2 == 0 ? 20 : 50;
        // realised edge density >= 1/2 puts e above n^2/4 - n/2
        Graph g = gen::gnp(n, density(rng), rng);
        while (2 * g.size() < max_edges(n)) {
            g = gen::gnp(n, density(rng), rng);
            ++resampled;
        }
        check_close_set(g, o);
    }
    if (o.pass) o.detail = fmt::format("{} exhaustive graphs, 10000 random ({} resampled)", exhaustive, resampled);
    return o;
}

// 4
Outcome path4_lemma() {
    Outcome o;
    std::size_t graphs = 0;
    std::size_t paths = 0;
    for (int n = 2; n <= 7; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const double e = std::popcount(mask);
            if (e < n * n / 4.0 + 4) continue;
            const Graph g = gen::from_mask(n, mask);
            if (min_degree_of(g) < n / 2.0 - std::sqrt(e - n * n / 4.0) + 2) continue;
            ++graphs;
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = x + 1; y < n; ++y) {
                    const auto p = find_path_len4(g, x, y);
                    if (p.length() != 4 || !verify_path(g, p) || p.vertices.front() != x || p.vertices.back() != y)
                        o.fail(fmt::format("bad path for ({},{}) in mask {}", x, y, mask));
                    ++paths;
                }
        }
    }
    int tight = 0;
    for (int n = 20; n <= 60 && tight < 10; ++n)
        for (long long e = turan_threshold(n) + 3; e <= max_edges(n) && tight < 10; ++e) {
            TightnessGraph t;
            try {
                t = tightness_graph(n, e);
            } catch (const PreconditionError&) {
                continue;
            }
            ++tight;
            const int d = bfs_distances(t.graph, t.u)[static_cast<std::size_t>(t.v)];
            if (d != 4) o.fail(fmt::format("tightness ({},{}) has dist {}", n, e, d));
        }
    if (tight < 10) o.fail(fmt::format("only {} feasible tightness pairs", tight));
    if (o.pass) o.detail = fmt::format("{} graphs, {} pairs, {} tightness pairs at distance 4", graphs, paths, tight);
    return o;
}

// 5
Outcome book_lemma() {
    Outcome o;
    std::size_t graphs = 0;
    for (int n = 2; n <= 7; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            if (std::popcount(mask) <= n * n / 4.0) continue;
            const Graph g = gen::from_mask(n, mask);
            const auto b = find_book_edge(g);
            ++graphs;
            if (!(static_cast<double>(b.common.size()) > n / 6.0) || !verify_book(g, b) ||
                b.common != common_neighbors(g, b.p, b.q))
                o.fail(fmt::format("n={} mask={} book ({},{}) width {}", n, mask, b.p, b.q, b.common.size()));
        }
    }
    if (o.pass) o.detail = fmt::format("{} graphs", graphs);
    return o;
}

// 6
Outcome greedy_lemma() {
    Outcome o;
    std::mt19937_64 rng(6);
    int trials = 0;
    while (trials < 10000) {
        const int n = 6 + static_cast<int>(rng() % 25);
        const Graph g = gen::gnp(n, 0.3 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng);
        const int delta = min_degree_of(g);
        if (delta < 1) continue;
        const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(delta));
        const int s_size = static_cast<int>(rng() % static_cast<unsigned>(delta - len + 1));
        const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
        std::vector<Vertex> others;
        for (Vertex u = 0; u < n; ++u)
            if (u != v) others.push_back(u);
        std::shuffle(others.begin(), others.end(), rng);
        std::vector<Vertex> s(others.begin(), others.begin() + s_size);
        ++trials;
        const auto p = greedy_extend(g, v, s, len);
        bool ok = p.length() == static_cast<std::size_t>(len) && p.vertices.front() == v && verify_path(g, p);
        for (Vertex x : p.vertices)
            ok = ok && std::find(s.begin(), s.end(), x) == s.end();
        if (!ok) o.fail(fmt::format("trial {}: path {}", trials, to_string(p)));
    }
    if (o.pass) o.detail = "10000 trials";
    return o;
}

// 7
Outcome reduction_equivalence() {
    Outcome o;
    std::mt19937_64 rng(7);
    int rainbow_count = 0;
    for (int t = 0; t < 10000; ++t) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Graph g = gen::gnp(n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
        const int L = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        EdgeColoring c;
        const int palette = 1 + static_cast<int>(rng() % (g.size() + 1));
        for (std::size_t i = 0; i < g.size(); ++i) c.colors.push_back(static_cast<int>(rng() % static_cast<unsigned>(palette)));
        const bool a = verify_rainbow(g, c, L).pass;
        const bool b = is_proper_coloring(conflict_graph(g, L), c);
        rainbow_count += a;
        if (a != b) o.fail(fmt::format("trial {} n={} L={} disagrees", t, n, L));
    }
    if (o.pass) o.detail = fmt::format("10000 trials, {} rainbow", rainbow_count);
    return o;
}

// 8
Outcome exact_colors() {
    Outcome o;
    if (min_rainbow_colors(gen::complete(4), 3).colors != 3) o.fail("K4");
    for (int L : {5, 7, 9})
        if (min_rainbow_colors(gen::cycle(L), L).colors != L) o.fail(fmt::format("C{}", L));
    std::mt19937_64 rng(8);
    int checked = 0;
    while (checked < 2000) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const std::size_t m = std::min<std::size_t>(1 + rng() % 10, static_cast<std::size_t>(n * (n - 1) / 2));
        const Graph g = gen::gnm(n, m, rng);
        const int L = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        const auto r = min_rainbow_colors(g, L);
        const int ref = oracle::chromatic(oracle::conflicts(g, L));
        ++checked;
        if (r.colors != ref || !verify_rainbow(g, r.coloring, L).pass)
            o.fail(fmt::format("n={} m={} L={}: {} vs {}", n, m, L, r.colors, ref));
    }
    if (o.pass) o.detail = fmt::format("fixed examples plus {} random conflict graphs (<= 10 nodes)", checked);
    return o;
}

void check_route(const Graph& g, const Route& r, Edge e1, Edge e2, Outcome& o) {
    const Edge req[] = {e1, e2};
    if (r.cycle.vertices.size() != 9 || !verify_cycle(g, r.cycle, req))
        o.fail(fmt::format("bad cycle {} for {} {}", to_string(r.cycle), to_string(e1), to_string(e2)));
}

// 9
Outcome router_coverage() {
    Outcome o;
    std::size_t routes = 0;
    for (int n = 9; n <= 15; ++n) {
        const Graph kn = gen::complete(n);
        std::vector<Vertex> all;
        for (Vertex v = 0; v < n; ++v) all.push_back(v);
        const BookWitness book = find_book_edge(kn);
        const auto& es = kn.edges();
        auto good = [&](Edge e) { return e.u != book.p && e.u != book.q && e.v != book.p && e.v != book.q; };
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                const Edge a = es[i];
                const Edge b = es[j];
                try {
                    check_route(kn, route_good_pair_case1(kn, 4, all, a, b), a, b, o);
                    check_route(kn, route_in_dense_subgraph(kn, 4, a, b), a, b, o);
                    routes += 2;
                    if (good(a) && good(b)) {
                        check_route(kn, route_good_pair_case2(kn, 4, book, a, b), a, b, o);
                        ++routes;
                    }
                } catch (const SearchFailure& f) {
                    o.fail(fmt::format("K{} {} {}: {}", n, to_string(a), to_string(b), f.what()));
                }
            }
    }
    if (routes < 10000) o.fail(fmt::format("only {} K_n routes", routes));

    std::set<Adjuster> seen;
    std::size_t random_routes = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64 rng(900 + seed);
        const Graph g = gen::gnp(60, 0.55, rng);
        const BookWitness book = find_book_edge(g);
        std::vector<bool> in_a(60, false);
        for (Vertex z : g.neighbors(book.p))
            if (z != book.q) in_a[static_cast<std::size_t>(z)] = true;
        std::vector<Edge> good;
        for (const Edge& e : g.edges()) {
            if (e.u == book.p || e.u == book.q || e.v == book.p || e.v == book.q) continue;
            if (in_a[static_cast<std::size_t>(e.u)] || in_a[static_cast<std::size_t>(e.v)]) good.push_back(e);
        }
        int sampled = 0;
        while (sampled < 50) {
            const Edge a = good[rng() % good.size()];
            const Edge b = good[rng() % good.size()];
            if (a == b) continue;
            ++sampled;
            try {
                const auto r = route_good_pair_case2(g, 4, book, a, b);
                check_route(g, r, a, b, o);
                seen.insert(r.diagnostics.adjuster);
                ++random_routes;
            } catch (const SearchFailure& f) {
                o.fail(fmt::format("seed {} {} {}: {}", seed, to_string(a), to_string(b), f.what()));
            }
        }
    }
    if (!seen.count(Adjuster::through_q)) o.fail("through-q never used");
    if (!seen.count(Adjuster::skip_q)) o.fail("skip-q never used");
    if (o.pass)
        o.detail = fmt::format("{} K_n routes, {} random case-2 routes, both adjusters seen", routes, random_routes);
    return o;
}

// 10
Outcome good_edge_clique() {
    Outcome o;
    const int n = 12;
    const Graph k12 = gen::complete(n);
    const auto close = find_close_set(k12);
    const auto good = good_edges_case1(k12, close.set);
    const long long a = static_cast<long long>(close.set.size());
    const long long expected = static_cast<long long>(k12.size()) - (n - a) * (n - a - 1) / 2;
    if (static_cast<long long>(good.edges.size()) != expected)
        o.fail(fmt::format("|good| = {} but e - C(n-|A|,2) = {}", good.edges.size(), expected));
    const auto cg = conflict_graph(k12, 9);
    for (std::size_t i : good.edges)
        for (std::size_t j : good.edges)
            if (i != j && !cg.adjacent(i, j)) o.fail(fmt::format("good edges {} {} do not conflict", i, j));
    const auto mc = min_rainbow_colors(k12, 9, {k12.size(), -1});
    if (mc.colors < static_cast<int>(good.edges.size()))
        o.fail(fmt::format("min colours {} < {}", mc.colors, good.edges.size()));
    if (o.pass)
        o.detail = fmt::format("|A|={}, {} good edges pairwise conflicting, min colours {}", a, good.edges.size(),
                               mc.colors);
    return o;
}

// 11
Outcome bound_sandwich() {
    Outcome o;
    for (long long n : {100LL, 200LL, 500LL, 1000LL}) {
        const long long lo = turan_threshold(n);
        const long long hi = max_edges(n);
        const double nn = static_cast<double>(n);
        for (int i = 0; i < 20; ++i) {
            const long long e = lo + (hi - lo) * i / 19;
            const double diff = static_cast<double>(upper_bound_colors(n, e)) - asymptotic_value(n, e);
            if (diff < 0 || diff > 2 * std::pow(nn, 1.5) + 4 * nn)
                o.fail(fmt::format("n={} e={} diff {:.3f}", n, e, diff));
        }
        const double ratio = static_cast<double>(upper_bound_colors(n, lo)) / (nn * nn / 8);
        if (ratio < 1 || ratio > 1 + 5 / std::sqrt(nn)) o.fail(fmt::format("n={} ratio {:.6f}", n, ratio));
    }
    if (o.pass) o.detail = "4 x 20 grid and threshold ratios";
    return o;
}

}  // namespace

int main() {
    criterion(1, "two-clique witnesses are rainbow", 3600, two_clique_witnesses);
    criterion(2, "exact oracle values", 600, oracle_values);
    criterion(3, "close set lemma", 300, close_set_lemma);
    criterion(4, "length-4 path lemma and tightness", 600, path4_lemma);
    criterion(5, "book lemma", 300, book_lemma);
    criterion(6, "greedy path lemma", 600, greedy_lemma);
    criterion(7, "conflict reduction equivalence", 600, reduction_equivalence);
    criterion(8, "exact colour counts", 600, exact_colors);
    criterion(9, "router soundness and coverage", 900, router_coverage);
    criterion(10, "good-edge clique in K12, L=9", 120, good_edge_clique);
    criterion(11, "bound sandwich at scale", 1, bound_sandwich);
    fmt::print("{} of 11 criteria failed\n", failed_criteria);
    return failed_criteria == 0 ? 0 : 1;
}
