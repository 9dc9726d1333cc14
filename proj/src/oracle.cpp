#include "rainbow/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <mutex>

#include <fmt/format.h>

#include "rainbow/conflict.hpp"
#include "rainbow/error.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

namespace {

/// Vertex invariant: degree, then neighbour degrees in descending order.
std::vector<std::vector<int>> invariants(const Graph& g) {
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        auto& row = inv[static_cast<std::size_t>(v)];
        row.push_back(g.degree(v));
        std::vector<int> nd;
        for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end(), std::greater<>());
        row.insert(row.end(), nd.begin(), nd.end());
    }
    return inv;
}

// Every isomorphism class has a labelling with non-increasing invariants, so
// restricting to those labellings keeps the minimum.
bool sorted_labelling(const Graph& g) {
    const auto inv = invariants(g);
    for (std::size_t v = 1; v < inv.size(); ++v)
        if (inv[v - 1] < inv[v]) return false;
    return true;
}

/// Next integer with the same popcount (Gosper).
std::uint64_t next_combination(std::uint64_t x) {
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

struct ShardBest {
    int value = INT_MAX;
    std::uint64_t mask = 0;
    EdgeColoring coloring;
    std::uint64_t examined = 0;
    std::uint64_t skipped = 0;
};

}  // namespace

OracleResult f_oracle(int n, long long e, int cycle_len, OracleOptions options) {
    if (n < 0) throw PreconditionError("n must be non-negative");
    if (n > options.max_n)
        throw GuardExceeded(fmt::format("n = {} exceeds the oracle guard max_n = {}", n, options.max_n));
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (pairs > 64) throw GuardExceeded(fmt::format("C({},2) = {} pairs exceed 64", n, pairs));
    if (e < 0 || e > pairs)
        throw PreconditionError(fmt::format("infeasible: e = {} outside [0, C({},2) = {}]", e, n, pairs));
    if (cycle_len < 3 || cycle_len > n)
        throw PreconditionError(fmt::format("cycle length {} outside [3, n = {}]", cycle_len, n));

    OracleResult out;
    out.n = n;
    out.e = e;
    out.cycle_len = cycle_len;
    if (e == 0) {
        out.extremal_graph = gen::empty(n);
        out.graphs_examined = 1;
        return out;
    }

    const bool prune = options.prune && n >= 6;
    const int m = static_cast<int>(pairs);
    const int k = static_cast<int>(e);
    // Shard f holds masks whose lowest set bit is f.
    const int shard_count = m - k + 1;
    std::vector<ShardBest> shards(static_cast<std::size_t>(shard_count));
    std::atomic<int> global_best{INT_MAX};

    parallel_for(static_cast<std::size_t>(shard_count), [&](std::size_t s, unsigned) {
        const int low = static_cast<int>(s);
        auto& best = shards[s];
        const int rest = k - 1;
        const int free_bits = m - low - 1;
        const std::uint64_t head = std::uint64_t{1} << low;
        std::uint64_t combo = rest == 0 ? 0 : (std::uint64_t{1} << rest) - 1;
        const std::uint64_t end = free_bits >= 64 ? 0 : (std::uint64_t{1} << free_bits);
        while (true) {
            if (rest > 0 && combo >= end) break;
            const std::uint64_t mask = head | (combo << (low + 1));
            const Graph g = gen::from_mask(n, mask);
            if (prune && !sorted_labelling(g)) {
                ++best.skipped;
            } else {
                ++best.examined;
                const int cutoff = global_best.load();
                MinColorsOptions mo;
                mo.max_edges = 64;
                mo.cutoff = cutoff == INT_MAX ? -1 : cutoff;
                const MinColorsResult r = min_rainbow_colors(g, cycle_len, mo);
                if (r.exact && r.colors < best.value) {
                    best.value = r.colors;
                    best.mask = mask;
                    best.coloring = r.coloring;
                    int cur = global_best.load();
                    while (r.colors < cur && !global_best.compare_exchange_weak(cur, r.colors)) {
                    }
                }
            }
            if (rest == 0) break;
            combo = next_combination(combo);
        }
    });

    const ShardBest* winner = nullptr;
    for (const auto& s : shards) {
        out.graphs_examined += s.examined;
        out.graphs_skipped += s.skipped;
        if (s.value != INT_MAX && (!winner || s.value < winner->value)) winner = &s;
    }
    if (!winner) throw VerificationFailure("oracle examined no graph");
    out.value = winner->value;
    out.extremal_graph = gen::from_mask(n, winner->mask);
    out.optimal_coloring = winner->coloring;
    if (out.optimal_coloring.color_count() != static_cast<std::size_t>(out.value) ||
        !verify_rainbow(out.extremal_graph, out.optimal_coloring, cycle_len).pass)
        throw VerificationFailure("oracle colouring failed re-verification");
    return out;
}

}  // namespace rainbow
