#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Largest vertex count the bitmask enumeration kernel accepts.
inline constexpr int kMaxEnumerationOrder = 64;
inline constexpr int kMaxCycleLength = 64;

/// Adjacency rows as 64-bit masks.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
};

/// Throws PreconditionError when g has more than kMaxEnumerationOrder vertices.
MaskGraph to_masks(const Graph& g);

/// Throws PreconditionError unless 3 <= L <= n and the graph fits the kernel.
void require_cycle_range(const Graph& g, int cycle_len);

/// Unit of parallel work: all canonical cycles starting anchor, second.
struct CycleShard {
    Vertex anchor;
    Vertex second;
};

/// Shards in lexicographic (anchor, second) order; visiting them in this
/// order yields cycles in lexicographic canonical order.
std::vector<CycleShard> cycle_shards(const MaskGraph& g, int cycle_len);

/// Enumerates canonical L-cycles (anchor = minimum vertex, second < last) of
/// one shard in lexicographic order. visit(const Vertex* seq) returns false to stop.
/// Returns false iff the visitor stopped the walk.
template <class Visit>
bool for_each_cycle_in_shard(const MaskGraph& g, int cycle_len, CycleShard shard, Visit&& visit) {
    const Vertex s = shard.anchor;
    const std::uint64_t above_anchor = (s >= 63) ? 0 : (~std::uint64_t{0} << (s + 1));
    const std::uint64_t above_second =
        (shard.second >= 63) ? 0 : (~std::uint64_t{0} << (shard.second + 1));
    std::array<Vertex, kMaxCycleLength> seq{};
    std::array<std::uint64_t, kMaxCycleLength> cand{};
    seq[0] = s;
    seq[1] = shard.second;
    std::uint64_t used = (std::uint64_t{1} << s) | (std::uint64_t{1} << shard.second);
    const std::uint64_t closing = g.adj[static_cast<std::size_t>(s)] & above_second;

    auto candidates = [&](int depth) {
        // depth = index of the vertex about to be placed
        std::uint64_t c = g.adj[static_cast<std::size_t>(seq[depth - 1])] & ~used & above_anchor;
        if (depth == cycle_len - 1) c &= closing;
        return c;
    };

    if (cycle_len == 2) return true;
    int depth = 2;
    cand[2] = candidates(2);
    while (depth >= 2) {
        if (cand[depth] == 0) {
            --depth;
            if (depth >= 2) used &= ~(std::uint64_t{1} << seq[depth]);
            continue;
        }
        const int v = std::countr_zero(cand[depth]);
        cand[depth] &= cand[depth] - 1;
        seq[depth] = v;
        if (depth == cycle_len - 1) {
            if (!visit(static_cast<const Vertex*>(seq.data()))) return false;
            continue;
        }
        used |= std::uint64_t{1} << v;
        ++depth;
        cand[depth] = candidates(depth);
    }
    return true;
}

/// Sequential walk over all canonical L-cycles in lexicographic order.
template <class Visit>
void for_each_cycle(const MaskGraph& g, int cycle_len, Visit&& visit) {
    for (const CycleShard& shard : cycle_shards(g, cycle_len))
        if (!for_each_cycle_in_shard(g, cycle_len, shard, visit)) return;
}

/// All L-cycles of g, canonical and sorted. Requires 3 <= L <= n <= 64.
std::vector<CycleWitness> enumerate_cycles(const Graph& g, int cycle_len);

/// Number of L-cycles; the shards run in parallel.
std::uint64_t count_cycles(const Graph& g, int cycle_len);

}  // namespace rainbow
