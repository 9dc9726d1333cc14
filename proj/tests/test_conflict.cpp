#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/chromatic.hpp"
#include "rainbow/conflict.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/cycles.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/good_edges.hpp"
#include "rainbow/lemmas.hpp"
#include "rainbow/oracle.hpp"

using namespace rainbow;

namespace {

std::uint64_t binom(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

EdgeColoring random_coloring(const Graph& g, int palette, std::mt19937_64& rng) {
    EdgeColoring c;
    std::uniform_int_distribution<int> pick(0, palette - 1);
    for (std::size_t i = 0; i < g.size(); ++i) c.colors.push_back(pick(rng));
    return c;
}

}  // namespace

TEST_CASE("enumerate_cycles examples") {
    CHECK(enumerate_cycles(gen::complete(5), 5).size() == 12);
    const auto c7 = enumerate_cycles(gen::cycle(7), 7);
    REQUIRE(c7.size() == 1);
    CHECK(c7[0].vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(enumerate_cycles(gen::complete(4), 5), PreconditionError);
    CHECK_THROWS_AS(enumerate_cycles(gen::complete(4), 2), PreconditionError);
    CHECK(count_cycles(gen::complete(5), 5) == 12);
}

TEST_CASE("enumerator matches the closed form on complete graphs") {
    for (int n = 5; n <= 10; ++n)
        for (int L = 5; L <= n; ++L) {
            const std::uint64_t expected = binom(n, L) * factorial(L - 1) / 2;
            CHECK(count_cycles(gen::complete(n), L) == expected);
            if (n <= 8) CHECK(enumerate_cycles(gen::complete(n), L).size() == expected);
        }
}

TEST_CASE("enumerator agrees with brute force and is sorted canonical") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const Graph g = gen::gnp(n, 0.55, rng);
        for (int L = 3; L <= n; ++L) {
            const auto got = enumerate_cycles(g, L);
            const auto ref = oracle::cycles(g, L);
            REQUIRE(got.size() == ref.size());
            std::size_t i = 0;
            for (const auto& c : ref) {
                CHECK(got[i].vertices == c);
                CHECK(verify_cycle(g, got[i]));
                ++i;
            }
            CHECK(count_cycles(g, L) == got.size());
        }
    }
}

TEST_CASE("conflict graph examples") {
    const auto c9 = conflict_graph(gen::cycle(9), 9);
    CHECK(c9.node_count() == 9);
    CHECK(c9.pair_count() == 36);

    const Graph k4 = gen::complete(4);
    const auto t = conflict_graph(k4, 3);
    CHECK(t.node_count() == 6);
    CHECK(t.pair_count() == 12);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            if (i == j) continue;
            const Edge a = k4.edges()[i];
            const Edge b = k4.edges()[j];
            const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            CHECK(t.adjacent(i, j) == share);
        }

    const auto none = conflict_graph(gen::empty(5), 3);
    CHECK(none.node_count() == 0);
    CHECK(none.pair_count() == 0);
}

TEST_CASE("conflict graph matches the oracle; stored witnesses verify") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        const int n = 5 + static_cast<int>(rng() % 3);
        const Graph g = gen::gnp(n, 0.6, rng);
        for (int L = 3; L <= n; ++L) {
            const auto cg = conflict_graph(g, L, true);
            const auto plain = conflict_graph(g, L, false);
            CHECK(cg.rows() == plain.rows());
            CHECK(oracle::to_matrix(cg.rows()) == oracle::conflicts(g, L));
            for (const auto& [i, j] : cg.pairs()) {
                const CycleWitness* w = cg.witness(i, j);
                REQUIRE(w != nullptr);
                CHECK(static_cast<int>(w->vertices.size()) == L);
                const Edge req[] = {g.edges()[i], g.edges()[j]};
                CHECK(verify_cycle(g, *w, req));
            }
        }
    }
}

TEST_CASE("verify_rainbow examples") {
    const Graph c9 = gen::cycle(9);
    EdgeColoring distinct;
    for (int i = 0; i < 9; ++i) distinct.colors.push_back(i);
    const auto ok = verify_rainbow(c9, distinct, 9);
    CHECK(ok.pass);
    CHECK(ok.cycles_examined == 1);

    // edges in order (0,1),(0,8),(1,2),...: give (0,1) and (1,2) colour 0
    EdgeColoring dup;
    dup.colors.assign(9, 0);
    int next = 1;
    for (std::size_t i = 0; i < 9; ++i) {
        const Edge e = c9.edges()[i];
        if (e == Edge(0, 1) || e == Edge(1, 2)) continue;
        dup.colors[i] = next++;
    }
    const auto bad = verify_rainbow(c9, dup, 9);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.violation);
    CHECK(bad.violation->repeated == 0);
    CHECK(bad.violation->cycle.vertices.size() == 9);
    CHECK(bad.violation->colors.size() == 9);

    const auto w = two_clique_graph(12, 37);
    CHECK(w.big == 10);
    CHECK(verify_rainbow(w.graph, w.coloring, 9).pass);
}

TEST_CASE("verify_rainbow reports the first violation deterministically") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        const Graph g = gen::gnp(8, 0.6, rng);
        const EdgeColoring c = random_coloring(g, 4, rng);
        const auto r = verify_rainbow(g, c, 5);
        if (r.pass) continue;
        const auto cycles = enumerate_cycles(g, 5);
        std::size_t first = 0;
        while (first < cycles.size()) {
            std::set<Color> seen;
            bool clash = false;
            const auto& v = cycles[first].vertices;
            for (std::size_t i = 0; i < v.size(); ++i)
                clash = clash || !seen.insert(c.of(g, Edge(v[i], v[(i + 1) % v.size()]))).second;
            if (clash) break;
            ++first;
        }
        REQUIRE(first < cycles.size());
        CHECK(r.violation->cycle == cycles[first]);
        CHECK(r.cycles_examined == first + 1);
    }
}

TEST_CASE("reduction: rainbow iff proper on the conflict graph") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 500; ++t) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const Graph g = gen::gnp(n, 0.5, rng);
        if (g.size() == 0) continue;
        const int L = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        const EdgeColoring c = random_coloring(g, 1 + static_cast<int>(rng() % g.size()), rng);
        const bool rainbow = verify_rainbow(g, c, L).pass;
        CHECK(rainbow == is_proper_coloring(conflict_graph(g, L), c));
        CHECK(rainbow == oracle::all_rainbow(g, c, L));
    }
}

TEST_CASE("min_rainbow_colors examples") {
    const auto k4 = min_rainbow_colors(gen::complete(4), 3);
    CHECK(k4.colors == 3);
    CHECK(k4.exact);
    CHECK(verify_rainbow(gen::complete(4), k4.coloring, 3).pass);
    CHECK(k4.coloring.color_count() == 3);

    for (int L = 3; L <= 9; ++L) CHECK(min_rainbow_colors(gen::cycle(L), L).colors == L);

    const Graph k4e = gen::remove_edge(gen::complete(4), Edge(2, 3));
    CHECK(min_rainbow_colors(k4e, 3).colors == 3);

    CHECK(min_rainbow_colors(gen::empty(4), 3).colors == 0);
    CHECK_THROWS_AS(min_rainbow_colors(gen::complete(12), 9), GuardExceeded);
    // the guard applies before any cycle work and can be raised
    CHECK_THROWS_AS(min_rainbow_colors(gen::complete(9), 5, {30, -1}), GuardExceeded);
}

TEST_CASE("min_rainbow_colors matches brute-force chromatic number") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        const int n = 5 + static_cast<int>(rng() % 2);
        const Graph g = gen::gnp(n, 0.55, rng);
        if (g.size() > 10) continue;
        for (int L : {3, 4, 5}) {
            if (L > n) continue;
            const auto r = min_rainbow_colors(g, L);
            CHECK(r.colors == oracle::chromatic(oracle::conflicts(g, L)));
            CHECK(verify_rainbow(g, r.coloring, L).pass);
            CHECK(static_cast<int>(r.coloring.color_count()) == r.colors);
        }
    }
}

TEST_CASE("exact chromatic search: cutoff and certificates") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        const Graph g = gen::gnp(9, 0.5, rng);
        std::vector<Bitset> adj(9, Bitset(9));
        for (const Edge& e : g.edges()) {
            adj[static_cast<std::size_t>(e.u)].set(static_cast<std::size_t>(e.v));
            adj[static_cast<std::size_t>(e.v)].set(static_cast<std::size_t>(e.u));
        }
        const auto r = exact_chromatic(adj);
        CHECK(r.exact);
        CHECK(r.clique_bound <= r.colors);
        CHECK(r.colors == oracle::chromatic(oracle::to_matrix(adj)));
        for (const Edge& e : g.edges())
            CHECK(r.assignment[static_cast<std::size_t>(e.u)] != r.assignment[static_cast<std::size_t>(e.v)]);
        if (r.colors > 1) {
            const auto cut = exact_chromatic(adj, r.colors - 1);
            CHECK_FALSE(cut.exact);
            CHECK(cut.colors > r.colors - 1);
        }
        CHECK(exact_chromatic(adj) .assignment == r.assignment);  // deterministic
    }
}

TEST_CASE("monotonicity under edge addition") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 150; ++t) {
        const int n = 5 + static_cast<int>(rng() % 2);
        const Graph big = gen::gnp(n, 0.5, rng);
        if (big.size() == 0 || big.size() > 12) continue;
        const Edge drop = big.edges()[rng() % big.size()];
        const Graph small = gen::remove_edge(big, drop);
        for (int L = 3; L <= n; ++L)
            CHECK(min_rainbow_colors(big, L).colors >= min_rainbow_colors(small, L).colors);
    }
}

TEST_CASE("oracle examples") {
    const auto a = f_oracle(4, 5, 3);
    CHECK(a.value == 3);
    CHECK(a.extremal_graph.size() == 5);
    CHECK(verify_rainbow(a.extremal_graph, a.optimal_coloring, 3).pass);

    const auto b = f_oracle(5, 7, 3);
    CHECK(b.value == 3);
    CHECK(b.graphs_examined == 120);

    const auto z = f_oracle(5, 0, 3);
    CHECK(z.value == 0);

    // at or below the Turan number for triangles one colour suffices
    CHECK(f_oracle(5, 6, 3).value == 1);

    CHECK_THROWS_AS(f_oracle(8, 10, 5), GuardExceeded);
    CHECK_THROWS_AS(f_oracle(5, 11, 3), PreconditionError);
    CHECK_THROWS_AS(f_oracle(5, 4, 6), PreconditionError);
}

TEST_CASE("oracle pruning does not change the value") {
    for (int n = 6; n <= 6; ++n)
        for (long long e : {7LL, 9LL, 10LL})
            for (int L : {3, 5}) {
                const auto pruned = f_oracle(n, e, L, {7, true});
                const auto full = f_oracle(n, e, L, {7, false});
                CHECK(pruned.value == full.value);
                CHECK(pruned.graphs_skipped > 0);
                CHECK(full.graphs_skipped == 0);
                CHECK(full.graphs_examined == binom(15, static_cast<int>(e)));
            }
}

TEST_CASE("good edges, close-set case") {
    const Graph k6 = gen::complete(6);
    const Vertex all[] = {0, 1, 2, 3, 4, 5};
    const auto g1 = good_edges_case1(k6, all);
    CHECK(g1.edges.size() == 15);
    CHECK(g1.lower_bound == 15);

    const Vertex four[] = {0, 1, 2, 3};
    const auto g2 = good_edges_case1(k6, four);
    CHECK(g2.edges.size() == 14);
    CHECK(g2.lower_bound == 14);

    const auto g3 = good_edges_case1(k6, {});
    CHECK(g3.edges.empty());
    CHECK(g3.lower_bound <= 0);

    const Vertex rep[] = {1, 1};
    CHECK_THROWS_AS(good_edges_case1(k6, rep), PreconditionError);
}

TEST_CASE("good edges, book case") {
    const Graph k6 = gen::complete(6);
    const auto g = good_edges_case2(k6, BookWitness{0, 1, {2, 3, 4, 5}});
    CHECK(g.set == std::vector<Vertex>{2, 3, 4, 5});
    CHECK(g.edges.size() == 6);
    CHECK(g.min_degree_bound == doctest::Approx(6.0));
    CHECK(g.inside_count == 6);

    const auto k20 = gen::complete(20);
    const auto gb = good_edges_case2(k20, find_book_edge(k20));
    CHECK(gb.edges.size() >= 153);

    // a hand-made book on a star: A = N(0) \ {1} has no edge avoiding the spine
    const Graph star = gen::star(5);
    const auto gs = good_edges_case2(star, BookWitness{0, 1, {}});
    CHECK(gs.edges.empty());
    CHECK_THROWS_AS(good_edges_case2(star, BookWitness{1, 2, {}}), PreconditionError);
}

TEST_CASE("good edges counts respect their bounds on random graphs") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        const Graph g = gen::gnp(14, 0.65, rng);
        if (g.size() == 0) continue;
        const Edge pq = g.edges()[rng() % g.size()];
        const auto r = good_edges_case2(g, BookWitness{pq.u, pq.v, common_neighbors(g, pq.u, pq.v)});
        CHECK(static_cast<double>(r.edges.size()) + 1e-9 >= r.half_sum_bound);
        CHECK(r.half_sum_bound + 1e-9 >= r.min_degree_bound);
        for (std::size_t idx : r.edges) {
            const Edge e = g.edges()[idx];
            CHECK(e.u != pq.u);
            CHECK(e.u != pq.v);
            CHECK(e.v != pq.u);
            CHECK(e.v != pq.v);
        }
    }
}

TEST_CASE("good edges in K12 pairwise conflict for L = 9") {
    const Graph k12 = gen::complete(12);
    const auto close = find_close_set(k12);
    const auto good = good_edges_case1(k12, close.set);
    const auto cg = conflict_graph(k12, 9);
    for (std::size_t i : good.edges)
        for (std::size_t j : good.edges)
            if (i != j) CHECK(cg.adjacent(i, j));
}
